#include "mrwlab/season.hpp"
#include "mrwlab/csv.hpp"
#include "mrwlab/errors.hpp"

#include <cmath>

namespace mrwlab {

SeasonalProfile fit_profile(const SampledSeries& returns,
                            ProfileStatistic statistic, int smoothing_width) {
    if (returns.kind != SeriesKind::LogReturn)
        throw ValidationError("fit_profile expects a log-return series");
    if (returns.day_count() < 2)
        throw ValidationError("profile fitting needs at least 2 days");
    const int buckets = returns.buckets_per_day;
    if (buckets <= 0) throw ValidationError("series has no bucket structure");

    std::vector<double> sum(std::size_t(buckets), 0.0);
    std::vector<std::size_t> count(std::size_t(buckets), 0);
    for (std::size_t d = 0; d < returns.day_count(); ++d) {
        for (std::size_t i = returns.day_begin(d); i < returns.day_end(d); ++i) {
            int b = returns.bucket_of(d, i);
            if (b < 0 || b >= buckets)
                throw ValidationError("bucket index out of range");
            double v = returns.values[i];
            sum[std::size_t(b)] +=
                statistic == ProfileStatistic::MeanAbsolute ? std::fabs(v) : v;
            ++count[std::size_t(b)];
        }
    }

    SeasonalProfile p;
    p.bucket_count = buckets;
    p.statistic = statistic;
    p.values.resize(std::size_t(buckets));
    for (int b = 0; b < buckets; ++b) {
        if (count[std::size_t(b)] == 0)
            throw ValidationError("bucket " + std::to_string(b) +
                                  " has no observations");
        p.values[std::size_t(b)] =
            sum[std::size_t(b)] / double(count[std::size_t(b)]);
    }

    if (smoothing_width > 1) {
        // centered moving average, shrunk near the edges
        std::vector<double> sm(p.values.size());
        int half = smoothing_width / 2;
        for (int b = 0; b < buckets; ++b) {
            int lo = std::max(0, b - half);
            int hi = std::min(buckets - 1, b + half);
            double s = 0.0;
            for (int j = lo; j <= hi; ++j) s += p.values[std::size_t(j)];
            sm[std::size_t(b)] = s / double(hi - lo + 1);
        }
        p.values = std::move(sm);
    }

    if (statistic == ProfileStatistic::MeanAbsolute)
        for (double v : p.values)
            if (v <= 0.0)
                throw NumericError("degenerate profile: zero mean-absolute bucket");
    return p;
}

SampledSeries deseasonalize(const SampledSeries& returns,
                            const SeasonalProfile& profile) {
    if (profile.statistic != ProfileStatistic::MeanAbsolute)
        throw ValidationError("deseasonalize needs a mean-absolute profile");
    if (profile.bucket_count != returns.buckets_per_day)
        throw ValidationError("profile bucket count does not match series");

    SampledSeries out = returns;
    for (std::size_t d = 0; d < returns.day_count(); ++d) {
        for (std::size_t i = returns.day_begin(d); i < returns.day_end(d); ++i) {
            double denom = profile.values[std::size_t(returns.bucket_of(d, i))];
            if (denom == 0.0) throw NumericError("division by zero profile value");
            out.values[i] = returns.values[i] / denom;
        }
    }
    return out;
}

SampledSeries deseasonalize_mean(const SampledSeries& returns) {
    SeasonalProfile mean = fit_profile(returns, ProfileStatistic::Mean);
    SampledSeries out = returns;
    for (std::size_t d = 0; d < returns.day_count(); ++d)
        for (std::size_t i = returns.day_begin(d); i < returns.day_end(d); ++i)
            out.values[i] =
                returns.values[i] -
                mean.values[std::size_t(returns.bucket_of(d, i))];
    return out;
}

void write_profile_csv(const SeasonalProfile& profile,
                       const SampledSeries& reference,
                       const std::filesystem::path& path) {
    CsvWriter w(path, "bucket,time_of_day,value");
    for (int b = 0; b < profile.bucket_count; ++b) {
        int tod = reference.session_open_seconds +
                  int(double(b) * reference.dt_seconds);
        w.row({std::to_string(b), format_time_of_day(tod),
               format_full(profile.values[std::size_t(b)])});
    }
    w.close();
}

} // namespace mrwlab
