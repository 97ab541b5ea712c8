#include "mrwlab/quotes.hpp"
#include "mrwlab/csv.hpp"
#include "mrwlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mrwlab {

std::size_t SegmentStats::survival_count(int tau) const {
    std::size_t n = 0;
    for (int len : segment_lengths)
        if (len > tau) ++n;
    return n;
}

std::vector<TradingDay> load_quotes(const std::filesystem::path& path,
                                    SessionHours session) {
    if (session.length_seconds() <= 0)
        throw ValidationError("session close must be after open");
    CsvReader r(path, "timestamp,bid,ask");
    std::vector<TradingDay> days;
    std::vector<std::string> f;
    while (r.next(f)) {
        const std::size_t line = r.line_number();
        DateTime dt;
        try {
            dt = parse_datetime(f[0]);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line);
        }
        double bid = parse_double(f[1], line);
        double ask = parse_double(f[2], line);
        if (bid <= 0.0 || ask <= 0.0)
            throw ValidationError("non-positive quote at " + f[0] + " (line " +
                                  std::to_string(line) + ")");
        if (ask < bid)
            throw ValidationError("crossed book (ask < bid) at " + f[0] +
                                  " (line " + std::to_string(line) + ")");
        if (dt.tod_seconds < session.open_seconds ||
            dt.tod_seconds > session.close_seconds)
            throw ValidationError("tick outside session hours at " + f[0] +
                                  " (line " + std::to_string(line) + ")");

        if (days.empty() || !(days.back().date == dt.date)) {
            if (!days.empty() && dt.date < days.back().date)
                throw ParseError("dates out of order", line);
            days.push_back(TradingDay{dt.date, session, {}});
        }
        auto& ticks = days.back().ticks;
        if (!ticks.empty() && dt.tod_seconds < ticks.back().tod_seconds)
            throw ParseError("timestamps decrease within a day", line);
        ticks.push_back(QuoteTick{dt.tod_seconds, bid, ask});
    }
    return days;
}

std::vector<TradingDay> filter_late_days(std::vector<TradingDay> days,
                                         int max_delay_seconds) {
    if (max_delay_seconds < 0)
        throw ValidationError("max_delay must be nonnegative");
    std::erase_if(days, [&](const TradingDay& d) {
        return !d.ticks.empty() &&
               d.ticks.front().tod_seconds >
                   d.session.open_seconds + max_delay_seconds;
    });
    return days;
}

PriceSeries mid_quote_series(const TradingDay& day) {
    if (day.ticks.empty())
        throw ValidationError("day " + format_date(day.date) + " has no ticks");
    PriceSeries out;
    out.start_tod_seconds = day.ticks.front().tod_seconds;
    const int end = day.session.close_seconds;
    out.prices.reserve(std::size_t(end - out.start_tod_seconds + 1));
    std::size_t next_tick = 0;
    double price = 0.0;
    for (int t = out.start_tod_seconds; t <= end; ++t) {
        while (next_tick < day.ticks.size() &&
               day.ticks[next_tick].tod_seconds <= t)
            price = day.ticks[next_tick++].mid();
        out.prices.push_back(price);
    }
    return out;
}

SegmentStats constant_price_segments(std::span<const double> prices) {
    if (prices.empty())
        throw ValidationError("empty price series");
    SegmentStats stats;
    int run = 1;
    for (std::size_t i = 1; i < prices.size(); ++i) {
        if (prices[i] == prices[i - 1]) {
            ++run;
        } else {
            stats.segment_lengths.push_back(run);
            run = 1;
        }
    }
    stats.segment_lengths.push_back(run);
    stats.total_segments = stats.segment_lengths.size();
    return stats;
}

SampledDay sample_regular_day(const PriceSeries& prices, SessionHours session,
                              int step_seconds) {
    if (step_seconds < 1) throw ValidationError("step must be >= 1 second");
    if (step_seconds > session.length_seconds())
        throw ValidationError("step exceeds session length");
    if (prices.prices.empty()) throw ValidationError("empty price series");

    SampledDay out;
    out.first_bucket = -1;
    for (int k = 0;; ++k) {
        int t = session.open_seconds + k * step_seconds;
        if (t > session.close_seconds) break;
        if (t < prices.start_tod_seconds) continue;
        std::size_t idx = std::size_t(t - prices.start_tod_seconds);
        if (idx >= prices.prices.size()) break;
        if (out.first_bucket < 0) out.first_bucket = k;
        out.log_prices.push_back(std::log(prices.prices[idx]));
    }
    if (out.log_prices.empty())
        throw ValidationError("no grid point at or after the first tick");
    return out;
}

SampledSeries sample_regular(const std::vector<TradingDay>& days,
                             int step_seconds) {
    if (days.empty()) throw ValidationError("no trading days");
    SampledSeries s;
    s.kind = SeriesKind::LogPrice;
    s.dt_seconds = step_seconds;
    s.session_open_seconds = days.front().session.open_seconds;
    s.buckets_per_day =
        days.front().session.length_seconds() / step_seconds + 1;
    for (const auto& day : days) {
        SampledDay sd =
            sample_regular_day(mid_quote_series(day), day.session, step_seconds);
        s.day_boundaries.push_back(s.values.size());
        s.day_dates.push_back(day.date);
        s.day_first_bucket.push_back(sd.first_bucket);
        s.values.insert(s.values.end(), sd.log_prices.begin(),
                        sd.log_prices.end());
    }
    s.validate();
    return s;
}

SampledSeries log_returns(const SampledSeries& lp) {
    if (lp.kind != SeriesKind::LogPrice)
        throw ValidationError("log_returns expects a log-price series");
    if (lp.size() < 2) throw ValidationError("need at least 2 samples");

    SampledSeries r;
    r.kind = SeriesKind::LogReturn;
    r.dt_seconds = lp.dt_seconds;
    r.session_open_seconds = lp.session_open_seconds;
    r.buckets_per_day = lp.buckets_per_day - 1;
    r.day_dates = lp.day_dates;
    for (std::size_t d = 0; d < lp.day_count(); ++d) {
        std::size_t b = lp.day_begin(d), e = lp.day_end(d);
        if (e - b < 2)
            throw ValidationError("day with fewer than 2 samples");
        r.day_boundaries.push_back(r.values.size());
        if (!lp.day_first_bucket.empty())
            r.day_first_bucket.push_back(lp.day_first_bucket[d]);
        for (std::size_t i = b + 1; i < e; ++i)
            r.values.push_back(lp.values[i] - lp.values[i - 1]);
    }
    r.validate();
    return r;
}

SampledSeries cumulate(const SampledSeries& returns) {
    if (returns.kind != SeriesKind::LogReturn)
        throw ValidationError("cumulate expects a log-return series");
    SampledSeries x;
    x.kind = SeriesKind::LogPrice;
    x.dt_seconds = returns.dt_seconds;
    x.session_open_seconds = returns.session_open_seconds;
    x.buckets_per_day = returns.buckets_per_day + 1;
    x.day_boundaries = returns.day_boundaries;
    x.day_dates = returns.day_dates;
    x.day_first_bucket = returns.day_first_bucket;
    x.values.resize(returns.size() + 1);
    x.values[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < returns.size(); ++i) {
        acc += returns.values[i];
        x.values[i + 1] = acc;
    }
    return x;
}

void write_segment_survival_csv(const SegmentStats& stats,
                                const std::filesystem::path& path) {
    int max_len = 0;
    for (int len : stats.segment_lengths) max_len = std::max(max_len, len);
    CsvWriter w(path, "tau,count_greater");
    for (int tau = 0; tau <= max_len; ++tau)
        w.row({std::to_string(tau),
               std::to_string(stats.survival_count(tau))});
    w.close();
}

} // namespace mrwlab
