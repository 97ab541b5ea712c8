#ifndef MRWLAB_SERIES_HPP
#define MRWLAB_SERIES_HPP

#include "mrwlab/calendar.hpp"

#include <cstddef>
#include <filesystem>
#include <vector>

namespace mrwlab {

enum class SeriesKind { LogPrice, LogReturn };

/// Regular-grid intraday series. Values are log-prices or log-returns on a
/// grid anchored at session_open + k*dt. Days whose recording starts after
/// the open begin at a later grid slot, tracked by day_first_bucket; bucket
/// indices are therefore comparable across days (same time of day, same
/// bucket), which is what the seasonal profile conditions on.
///
/// For a log-return series a return occupies the bucket of its left-endpoint
/// sample, so a full day of B price samples yields B-1 returns in buckets
/// 0..B-2 and buckets_per_day drops by one relative to the price series.
struct SampledSeries {
    std::vector<double> values;
    double dt_seconds = 0.0;
    std::vector<std::size_t> day_boundaries; // start index per day; first = 0
    std::vector<Date> day_dates;             // one per day; empty if synthetic
    std::vector<int> day_first_bucket;       // grid offset of first value per day
    int buckets_per_day = 0;                 // bucket count of a complete day
    int session_open_seconds = 0;
    SeriesKind kind = SeriesKind::LogPrice;

    std::size_t size() const { return values.size(); }
    std::size_t day_count() const { return day_boundaries.size(); }

    std::size_t day_begin(std::size_t d) const { return day_boundaries[d]; }
    std::size_t day_end(std::size_t d) const {
        return d + 1 < day_boundaries.size() ? day_boundaries[d + 1]
                                             : values.size();
    }

    /// Bucket (grid slot within the day) of sample i belonging to day d.
    int bucket_of(std::size_t d, std::size_t i) const {
        return day_first_bucket.empty()
                   ? int(i - day_begin(d))
                   : day_first_bucket[d] + int(i - day_begin(d));
    }

    /// Time of day in seconds of sample i of day d.
    int tod_seconds_of(std::size_t d, std::size_t i) const {
        return session_open_seconds +
               int(double(bucket_of(d, i)) * dt_seconds);
    }

    /// Throws ValidationError if day boundaries are out of order or values
    /// are non-finite.
    void validate() const;

    /// Synthetic multi-day series with complete days, for simulations and
    /// tests. Dates are consecutive weekdays-agnostic calendar days starting
    /// at `start`.
    static SampledSeries synthetic(std::vector<double> values,
                                   int samples_per_day, double dt_seconds,
                                   SeriesKind kind,
                                   Date start = Date{2008, 1, 1});
};

/// Sampled-series CSV: header `timestamp,value,day_index`.
void write_series_csv(const SampledSeries& s, const std::filesystem::path& path);

/// Reads a series CSV back, inferring the grid step, session open and
/// per-day bucket offsets from the timestamps. The kind is not recorded in
/// the file and must be supplied by the caller.
SampledSeries read_series_csv(const std::filesystem::path& path,
                              SeriesKind kind);

} // namespace mrwlab

#endif
