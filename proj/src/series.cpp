#include "mrwlab/series.hpp"
#include "mrwlab/csv.hpp"
#include "mrwlab/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace mrwlab {

void SampledSeries::validate() const {
    if (day_boundaries.empty() || day_boundaries.front() != 0)
        throw ValidationError("day_boundaries must start at 0");
    for (std::size_t d = 1; d < day_boundaries.size(); ++d)
        if (day_boundaries[d] <= day_boundaries[d - 1])
            throw ValidationError("day_boundaries must be strictly increasing");
    if (day_boundaries.back() >= values.size() && !values.empty())
        throw ValidationError("day boundary beyond series length");
    for (double v : values)
        if (!std::isfinite(v))
            throw ValidationError("non-finite value in series");
    if (!day_dates.empty() && day_dates.size() != day_boundaries.size())
        throw ValidationError("day_dates size mismatch");
    if (!day_first_bucket.empty() &&
        day_first_bucket.size() != day_boundaries.size())
        throw ValidationError("day_first_bucket size mismatch");
}

SampledSeries SampledSeries::synthetic(std::vector<double> values,
                                       int samples_per_day, double dt_seconds,
                                       SeriesKind kind, Date start) {
    if (samples_per_day <= 0)
        throw ValidationError("samples_per_day must be positive");
    if (values.size() % std::size_t(samples_per_day) != 0)
        throw ValidationError("length not a multiple of samples_per_day");
    SampledSeries s;
    s.values = std::move(values);
    s.dt_seconds = dt_seconds;
    s.kind = kind;
    s.buckets_per_day = samples_per_day;
    s.session_open_seconds = 9 * 3600;
    std::size_t days = s.values.size() / std::size_t(samples_per_day);
    auto serial = std::chrono::sys_days(
        std::chrono::year_month_day(std::chrono::year(start.year),
                                    std::chrono::month(unsigned(start.month)),
                                    std::chrono::day(unsigned(start.day))));
    for (std::size_t d = 0; d < days; ++d) {
        s.day_boundaries.push_back(d * std::size_t(samples_per_day));
        std::chrono::year_month_day ymd(serial + std::chrono::days(d));
        s.day_dates.push_back(Date{int(ymd.year()), int(unsigned(ymd.month())),
                                   int(unsigned(ymd.day()))});
        s.day_first_bucket.push_back(0);
    }
    return s;
}

void write_series_csv(const SampledSeries& s,
                      const std::filesystem::path& path) {
    CsvWriter w(path, "timestamp,value,day_index");
    const bool dated = !s.day_dates.empty();
    for (std::size_t d = 0; d < s.day_count(); ++d) {
        for (std::size_t i = s.day_begin(d); i < s.day_end(d); ++i) {
            std::string ts;
            if (dated)
                ts = format_datetime(s.day_dates[d], s.tod_seconds_of(d, i));
            else
                ts = std::to_string(i);
            w.row({ts, format_full(s.values[i]), std::to_string(d)});
        }
    }
    w.close();
}

SampledSeries read_series_csv(const std::filesystem::path& path,
                              SeriesKind kind) {
    CsvReader r(path, "timestamp,value,day_index");
    SampledSeries s;
    s.kind = kind;

    std::vector<std::string> f;
    std::vector<int> first_tod;   // per day
    std::vector<int> last_tod;    // per day
    std::size_t cur_day = std::numeric_limits<std::size_t>::max();
    double min_delta = std::numeric_limits<double>::infinity();
    int prev_tod = 0;

    while (r.next(f)) {
        DateTime dt = parse_datetime(f[0]);
        double v = parse_double(f[1], r.line_number());
        std::size_t day = std::size_t(std::stoll(f[2]));
        if (day != cur_day) {
            if (day != s.day_count())
                throw ParseError("day_index must increase by one",
                                 r.line_number());
            s.day_boundaries.push_back(s.values.size());
            s.day_dates.push_back(dt.date);
            first_tod.push_back(dt.tod_seconds);
            last_tod.push_back(dt.tod_seconds);
            cur_day = day;
        } else {
            if (dt.tod_seconds <= prev_tod)
                throw ParseError("timestamps must increase within a day",
                                 r.line_number());
            min_delta = std::min(min_delta, double(dt.tod_seconds - prev_tod));
            last_tod.back() = dt.tod_seconds;
        }
        prev_tod = dt.tod_seconds;
        s.values.push_back(v);
    }
    if (s.values.empty()) throw ValidationError("empty series file");

    s.dt_seconds = std::isfinite(min_delta) ? min_delta : 1.0;
    s.session_open_seconds = *std::min_element(first_tod.begin(), first_tod.end());
    int max_bucket = 0;
    for (std::size_t d = 0; d < s.day_count(); ++d) {
        int fb = int(std::llround(
            (first_tod[d] - s.session_open_seconds) / s.dt_seconds));
        s.day_first_bucket.push_back(fb);
        int lb = int(std::llround(
            (last_tod[d] - s.session_open_seconds) / s.dt_seconds));
        max_bucket = std::max(max_bucket, lb);
    }
    s.buckets_per_day = max_bucket + 1;
    s.validate();
    return s;
}

} // namespace mrwlab
