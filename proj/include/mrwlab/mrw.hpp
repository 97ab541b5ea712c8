#ifndef MRWLAB_MRW_HPP
#define MRWLAB_MRW_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

namespace mrwlab {

/// Parameter vector of the multifractal random walk: intermittency lambda,
/// volatility scale sigma (per sqrt grid step), decorrelation time T and the
/// grid step dt (both in seconds).
struct MrwParams {
    double lambda = 0.0;
    double sigma = 1.0;
    double T_seconds = 0.0;
    double dt_seconds = 1.0;

    double ratio() const { return T_seconds / dt_seconds; }

    /// Throws ValidationError when outside the admissible region
    /// (sigma > 0, T >= dt > 0, 0 <= lambda <= lambda_max).
    void validate(double lambda_max = 1.0) const;
};

/// Cov(h_t, h_{t+lag}) = lambda^2 * log+( T / ((lag+1) dt) ).
double log_vol_covariance(const MrwParams& p, std::int64_t lag);

/// c with 1/c = E[exp(h_t)], i.e. c = exp(-Var(h)/2); makes E[M_t] = 1.
double normalization_constant(const MrwParams& p);

/// zeta(q) = (1 + lambda^2/2) q/2 - lambda^2 q^2 / 8.
double theoretical_zeta(double lambda, double q);

/// Exact draw of the stationary centered Gaussian log-volatility vector.
/// Circulant embedding of the Toeplitz covariance when the embedding is
/// nonnegative definite (tolerance 1e-10 of the max eigenvalue), otherwise
/// an exact Durbin-Levinson innovations recursion. Reproducible from
/// (seed, stream).
std::vector<double> simulate_log_volatility(const MrwParams& p, std::size_t n,
                                            std::uint64_t seed,
                                            std::uint64_t stream = 0);

struct MrwPath {
    std::vector<double> returns;
    std::vector<double> log_vol; // empty when not retained
    MrwParams params;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// x_t = sigma sqrt(c e^{h_t}) eps_t with eps an independent Gaussian
/// stream (h uses sub-stream 2*stream, eps uses 2*stream+1).
MrwPath simulate_mrw(const MrwParams& p, std::size_t n, std::uint64_t seed,
                     std::uint64_t stream = 0, bool keep_log_vol = true);

/// Simulated-path CSV: header `index,x,h` (h column empty if not retained).
void write_path_csv(const MrwPath& path, const std::filesystem::path& file);

/// Parameter file: plain-text `lambda=`, `sigma=`, `T_seconds=`, `dt_seconds=`.
void write_params_file(const MrwParams& p, const std::filesystem::path& file);
MrwParams read_params_file(const std::filesystem::path& file);

} // namespace mrwlab

#endif
