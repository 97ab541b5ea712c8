#ifndef MRWLAB_QUOTES_HPP
#define MRWLAB_QUOTES_HPP

#include "mrwlab/calendar.hpp"
#include "mrwlab/series.hpp"

#include <filesystem>
#include <span>
#include <vector>

namespace mrwlab {

struct QuoteTick {
    int tod_seconds = 0; // time of day, 1-second resolution
    double bid = 0.0;
    double ask = 0.0;

    double mid() const { return 0.5 * (bid + ask); }
};

struct SessionHours {
    int open_seconds = 0;
    int close_seconds = 0;

    int length_seconds() const { return close_seconds - open_seconds; }
};

struct TradingDay {
    Date date;
    SessionHours session;
    std::vector<QuoteTick> ticks;
};

/// Per-second mid-quote prices from the first tick to session close
/// (forward fill: the latest tick at or before each second applies).
struct PriceSeries {
    std::vector<double> prices;
    int start_tod_seconds = 0; // time of day of prices[0]
};

/// Run-length statistics of constant-price stretches.
struct SegmentStats {
    std::vector<int> segment_lengths; // seconds, in order of occurrence
    std::size_t total_segments = 0;

    /// Number of segments strictly longer than tau seconds.
    std::size_t survival_count(int tau) const;
};

/// Loads the quotes CSV (header `timestamp,bid,ask`, ISO-8601 timestamps),
/// grouping rows into one TradingDay per calendar date. Rows must be sorted
/// by timestamp. Throws ParseError (with line number) on malformed rows and
/// ValidationError on crossed or non-positive quotes.
std::vector<TradingDay> load_quotes(const std::filesystem::path& path,
                                    SessionHours session);

/// Removes days whose first tick is more than max_delay after the open.
std::vector<TradingDay> filter_late_days(std::vector<TradingDay> days,
                                         int max_delay_seconds = 15 * 60);

PriceSeries mid_quote_series(const TradingDay& day);

SegmentStats constant_price_segments(std::span<const double> prices);

/// Samples log-prices on the grid session_open + k*step for one day,
/// skipping grid points before the first tick. Returns sampled values and
/// the grid index of the first one.
struct SampledDay {
    std::vector<double> log_prices;
    int first_bucket = 0;
};
SampledDay sample_regular_day(const PriceSeries& prices, SessionHours session,
                              int step_seconds);

/// Samples all days onto a common grid, assembling the SampledSeries
/// (kind = log-price) with day boundaries and calendar metadata.
SampledSeries sample_regular(const std::vector<TradingDay>& days,
                             int step_seconds);

/// Within-day first differences; no return spans a day boundary.
SampledSeries log_returns(const SampledSeries& log_prices);

/// Cumulative sum X(t) = sum_{k<=t} x_k with X(0) = 0, one extra leading
/// sample. Day boundaries are carried over from the return series.
SampledSeries cumulate(const SampledSeries& returns);

/// Segment-stats CSV: header `tau,count_greater` (survival counts N(tau)).
void write_segment_survival_csv(const SegmentStats& stats,
                                const std::filesystem::path& path);

} // namespace mrwlab

#endif
