#ifndef MRWLAB_SCALING_HPP
#define MRWLAB_SCALING_HPP

#include "mrwlab/series.hpp"

#include <filesystem>
#include <span>
#include <vector>

namespace mrwlab {

enum class AcfTransform { Identity, AbsoluteValue };

struct AcfResult {
    std::vector<int> lags;
    std::vector<double> values;
    double band = 0.0; // +-1.96/sqrt(n)
};

/// Sample autocorrelation with the biased (1/n) normalization (positive
/// semidefinite by construction). Throws NumericError on constant input.
AcfResult acf(std::span<const double> series, int max_lag,
              AcfTransform transform = AcfTransform::Identity);

struct Spectrum {
    std::vector<double> frequency; // cycles per sample, excludes DC
    std::vector<double> power;
};

/// Welch averaged periodogram: 8 half-overlapping, Hann-tapered,
/// mean-removed segments.
Spectrum psd(std::span<const double> series);

/// Log-log OLS slope of the spectrum restricted to [f_min, f_max].
double spectrum_slope(const Spectrum& s, double f_min, double f_max);

/// Wavelet coefficients W(t, tau) for the first-derivative-of-Gaussian
/// mother wavelet, one row per scale. Scales are in grid steps; edge
/// coefficients whose support (+-5 tau) leaves the series are excluded.
struct CwtResult {
    std::vector<double> scales;
    std::vector<std::vector<double>> coefficients; // per scale, valid t only
    std::vector<std::size_t> first_valid;          // t index of coefficients[s][0]
};

CwtResult cwt_dog1(std::span<const double> x, const std::vector<double>& scales);

enum class SfMethod { Wavelet, Difference };

struct StructureFunctions {
    SfMethod method = SfMethod::Wavelet;
    std::vector<double> q_grid;
    std::vector<double> scales;                 // grid steps
    std::vector<std::vector<double>> moments;   // [q][scale]
    double fit_min_scale = 0.0, fit_max_scale = 0.0;
};

/// Default q grid of the analysis: {0.1, 0.6, 1.1, ..., 4.1}.
std::vector<double> default_q_grid();

/// 20 log-spaced scales per decade over [4, n/10] grid steps.
std::vector<double> default_scales(std::size_t n);

StructureFunctions wavelet_structure_functions(std::span<const double> x,
                                               const std::vector<double>& q_grid,
                                               const std::vector<double>& scales);

StructureFunctions difference_structure_functions(
    std::span<const double> x, const std::vector<double>& q_grid,
    const std::vector<double>& scales);

struct ScalingReport {
    std::vector<double> q_grid;
    std::vector<double> zeta_hat;
    std::vector<double> stderr_;
    std::vector<double> r2;
};

/// Per-q log-log OLS slope over the fit range; the wavelet method subtracts
/// q/2 from the raw slope.
ScalingReport fit_scaling_function(const StructureFunctions& sf);

struct LambdaFit {
    double lambda = 0.0;
    bool degenerate = false; // fitted lambda^2 < 0, clamped to 0
};

/// Least-squares fit of the MRW scaling function to zeta_hat over the q
/// grid, weighted by 1/stderr^2 (equal weights when stderrs are absent or
/// degenerate). The model is linear in lambda^2, so the fit is closed-form.
LambdaFit fit_lambda_to_zeta(const ScalingReport& report);

void write_scaling_report_csv(const ScalingReport& r,
                              const std::filesystem::path& path);
void write_structure_functions_csv(const StructureFunctions& sf,
                                   const std::filesystem::path& path);
void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path);
void write_acf_csv(const AcfResult& r, const std::filesystem::path& path);

} // namespace mrwlab

#endif
