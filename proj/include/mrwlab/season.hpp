#ifndef MRWLAB_SEASON_HPP
#define MRWLAB_SEASON_HPP

#include "mrwlab/series.hpp"

#include <filesystem>
#include <vector>

namespace mrwlab {

enum class ProfileStatistic { MeanAbsolute, Mean };

/// Per-time-of-day-bucket statistic of intraday returns. For
/// MeanAbsolute this is the "volatility smile" used to deseasonalize.
struct SeasonalProfile {
    int bucket_count = 0;
    std::vector<double> values;
    ProfileStatistic statistic = ProfileStatistic::MeanAbsolute;
};

/// Averages the statistic per bucket over all days. Requires >= 2 days and
/// at least one observation per bucket; a zero mean-absolute bucket is a
/// degenerate profile (division downstream would blow up) and is rejected.
SeasonalProfile fit_profile(const SampledSeries& returns,
                            ProfileStatistic statistic,
                            int smoothing_width = 0);

/// x_t = y_t / profile[bucket(t)]. Profile must be MeanAbsolute-fitted with
/// a matching bucket structure.
SampledSeries deseasonalize(const SampledSeries& returns,
                            const SeasonalProfile& profile);

/// Second pass: removes the weak residual periodicity in the signed returns
/// by centering each bucket at its mean. Idempotent up to rounding.
SampledSeries deseasonalize_mean(const SampledSeries& returns);

/// Profile CSV: header `bucket,time_of_day,value`.
void write_profile_csv(const SeasonalProfile& profile,
                       const SampledSeries& reference,
                       const std::filesystem::path& path);

} // namespace mrwlab

#endif
