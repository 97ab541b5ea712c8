#include "mrwlab/mrw.hpp"
#include "mrwlab/errors.hpp"
#include "mrwlab/fft.hpp"
#include "mrwlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>

namespace mrwlab {

void MrwParams::validate(double lambda_max) const {
    if (!(sigma > 0.0)) throw ValidationError("sigma must be positive");
    if (!(dt_seconds > 0.0)) throw ValidationError("dt must be positive");
    if (!(T_seconds >= dt_seconds))
        throw ValidationError("T must be at least dt");
    if (!(lambda >= 0.0 && lambda <= lambda_max))
        throw ValidationError("lambda outside [0, lambda_max]");
}

double log_vol_covariance(const MrwParams& p, std::int64_t lag) {
    if (lag < 0) throw ValidationError("lag must be nonnegative");
    double u = p.T_seconds / (double(lag + 1) * p.dt_seconds);
    return u > 1.0 ? p.lambda * p.lambda * std::log(u) : 0.0;
}

double normalization_constant(const MrwParams& p) {
    return std::exp(-0.5 * log_vol_covariance(p, 0));
}

double theoretical_zeta(double lambda, double q) {
    double l2 = lambda * lambda;
    return (1.0 + l2 / 2.0) * q / 2.0 - l2 * q * q / 8.0;
}

namespace {

// Durbin-Levinson innovations simulation: exact O(n^2) draw of a stationary
// Gaussian vector with autocovariance gamma(0..n-1).
std::vector<double> levinson_simulate(const std::vector<double>& gamma,
                                      std::size_t n, RngStream& rng) {
    std::vector<double> h(n);
    std::vector<double> phi(n, 0.0), phi_prev(n, 0.0);
    double v = gamma[0];
    h[0] = std::sqrt(v) * rng.gaussian();
    for (std::size_t t = 1; t < n; ++t) {
        double acc = gamma[t];
        for (std::size_t j = 1; j < t; ++j) acc -= phi_prev[j] * gamma[t - j];
        double k = acc / v;
        phi[t] = k;
        for (std::size_t j = 1; j < t; ++j)
            phi[j] = phi_prev[j] - k * phi_prev[t - j];
        v *= (1.0 - k * k);
        if (!(v > 0.0))
            throw NumericError(
                "Durbin-Levinson breakdown: covariance not positive definite "
                "(fallback after circulant embedding failed)");
        double mean = 0.0;
        for (std::size_t j = 1; j <= t; ++j) mean += phi[j] * h[t - j];
        h[t] = mean + std::sqrt(v) * rng.gaussian();
        std::copy(phi.begin(), phi.begin() + long(t) + 1, phi_prev.begin());
    }
    return h;
}

struct Embedding {
    std::vector<double> spectrum_sqrt; // sqrt(max(eigenvalue,0))
    bool valid = false;
};

// Circulant eigenvalues of the length-m embedding of gamma; negative
// eigenvalues within tol*max are clipped to zero.
Embedding build_embedding(const std::vector<double>& gamma, std::size_t m) {
    std::vector<std::complex<double>> e(m, 0.0);
    std::size_t n = gamma.size();
    e[0] = gamma[0];
    for (std::size_t j = 1; j < n; ++j) {
        e[j] += gamma[j];
        e[m - j] += gamma[j];
    }
    fft::forward(e);
    Embedding out;
    out.spectrum_sqrt.resize(m);
    double max_eig = 0.0, min_eig = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        double ev = e[k].real();
        max_eig = std::max(max_eig, ev);
        min_eig = std::min(min_eig, ev);
    }
    if (min_eig < -1e-10 * max_eig) return out; // not usable at this size
    for (std::size_t k = 0; k < m; ++k)
        out.spectrum_sqrt[k] = std::sqrt(std::max(e[k].real(), 0.0));
    out.valid = true;
    return out;
}

std::size_t next_pow2(std::size_t v) {
    std::size_t m = 1;
    while (m < v) m <<= 1;
    return m;
}

} // namespace

std::vector<double> simulate_log_volatility(const MrwParams& p, std::size_t n,
                                            std::uint64_t seed,
                                            std::uint64_t stream) {
    p.validate();
    if (n == 0) throw ValidationError("n must be positive");

    RngStream rng(seed, stream);
    if (log_vol_covariance(p, 0) == 0.0) return std::vector<double>(n, 0.0);

    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k)
        gamma[k] = log_vol_covariance(p, std::int64_t(k));

    if (n >= 2) {
        std::size_t m = next_pow2(2 * (n - 1));
        for (int attempt = 0; attempt < 2; ++attempt, m <<= 1) {
            Embedding emb = build_embedding(gamma, m);
            if (!emb.valid) continue;
            // w_k = sqrt(eig_k) (a_k + i b_k); Re DFT(w)/sqrt(m) has the
            // target covariance.
            std::vector<std::complex<double>> w(m);
            for (std::size_t k = 0; k < m; ++k) {
                double a = rng.gaussian();
                double b = rng.gaussian();
                w[k] = emb.spectrum_sqrt[k] * std::complex<double>(a, b);
            }
            fft::forward(w);
            double scale = 1.0 / std::sqrt(double(m));
            std::vector<double> h(n);
            for (std::size_t t = 0; t < n; ++t) h[t] = w[t].real() * scale;
            return h;
        }
    }
    return levinson_simulate(gamma, n, rng);
}

MrwPath simulate_mrw(const MrwParams& p, std::size_t n, std::uint64_t seed,
                     std::uint64_t stream, bool keep_log_vol) {
    p.validate();
    if (n == 0) throw ValidationError("n must be positive");

    MrwPath path;
    path.params = p;
    path.seed = seed;
    path.stream = stream;
    path.log_vol = simulate_log_volatility(p, n, seed, 2 * stream);

    RngStream eps(seed, 2 * stream + 1);
    double c = normalization_constant(p);
    double sqrt_c = std::sqrt(c);
    path.returns.resize(n);
    for (std::size_t t = 0; t < n; ++t)
        path.returns[t] =
            p.sigma * sqrt_c * std::exp(0.5 * path.log_vol[t]) * eps.gaussian();
    if (!keep_log_vol) path.log_vol.clear();
    return path;
}

void write_path_csv(const MrwPath& path, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ValidationError("cannot create '" + file.string() + "'");
    out << "index,x,h\n";
    const bool has_h = !path.log_vol.empty();
    for (std::size_t i = 0; i < path.returns.size(); ++i) {
        out << i << ',';
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", path.returns[i]);
        out << buf << ',';
        if (has_h) {
            std::snprintf(buf, sizeof buf, "%.17g", path.log_vol[i]);
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw ValidationError("write failure on '" + file.string() + "'");
}

void write_params_file(const MrwParams& p, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ValidationError("cannot create '" + file.string() + "'");
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "lambda=%.17g\nsigma=%.17g\nT_seconds=%.17g\ndt_seconds=%.17g\n",
                  p.lambda, p.sigma, p.T_seconds, p.dt_seconds);
    out << buf;
}

MrwParams read_params_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open '" + file.string() + "'");
    MrwParams p;
    bool got_lambda = false, got_sigma = false, got_T = false, got_dt = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("malformed parameter line '" + line + "'");
        std::string key = line.substr(0, eq);
        double v = std::stod(line.substr(eq + 1));
        if (key == "lambda") p.lambda = v, got_lambda = true;
        else if (key == "sigma") p.sigma = v, got_sigma = true;
        else if (key == "T_seconds") p.T_seconds = v, got_T = true;
        else if (key == "dt_seconds") p.dt_seconds = v, got_dt = true;
        else throw ValidationError("unknown parameter '" + key + "'");
    }
    if (!(got_lambda && got_sigma && got_T && got_dt))
        throw ValidationError("incomplete parameter file");
    return p;
}

} // namespace mrwlab
