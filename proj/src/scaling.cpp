#include "mrwlab/scaling.hpp"
#include "mrwlab/csv.hpp"
#include "mrwlab/errors.hpp"
#include "mrwlab/fft.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace mrwlab {

namespace {

// kernel half-width: +-5 standard deviations of the Gaussian
constexpr double kWaveletSupport = 5.0;

struct OlsFit {
    double slope = 0.0, intercept = 0.0, slope_stderr = 0.0, r2 = 0.0;
};

OlsFit ols(std::span<const double> x, std::span<const double> y) {
    std::size_t m = x.size();
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / double(m);
    double my = std::accumulate(y.begin(), y.end(), 0.0) / double(m);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    OlsFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = y[i] - f.intercept - f.slope * x[i];
        ss_res += r * r;
    }
    if (m > 2) f.slope_stderr = std::sqrt(ss_res / double(m - 2) / sxx);
    f.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return f;
}

} // namespace

AcfResult acf(std::span<const double> series, int max_lag,
              AcfTransform transform) {
    std::size_t n = series.size();
    if (max_lag < 0 || std::size_t(max_lag) >= n / 2)
        throw ValidationError("max_lag must be below half the series length");

    std::vector<double> z(series.begin(), series.end());
    if (transform == AcfTransform::AbsoluteValue)
        for (double& v : z) v = std::fabs(v);
    double mean = std::accumulate(z.begin(), z.end(), 0.0) / double(n);
    for (double& v : z) v -= mean;

    double c0 = 0.0;
    for (double v : z) c0 += v * v;
    c0 /= double(n);
    if (c0 == 0.0) throw NumericError("zero-variance series in acf");

    AcfResult out;
    out.band = 1.96 / std::sqrt(double(n));
    out.lags.resize(std::size_t(max_lag) + 1);
    out.values.resize(std::size_t(max_lag) + 1);
    for (int k = 0; k <= max_lag; ++k) {
        double ck = 0.0;
        for (std::size_t t = 0; t + std::size_t(k) < n; ++t)
            ck += z[t] * z[t + std::size_t(k)];
        ck /= double(n);
        out.lags[std::size_t(k)] = k;
        out.values[std::size_t(k)] = ck / c0;
    }
    return out;
}

Spectrum psd(std::span<const double> series) {
    std::size_t n = series.size();
    if (n < 256) throw ValidationError("psd needs at least 256 samples");

    const std::size_t segments = 8;
    std::size_t seg_len = 2 * n / (segments + 1);
    seg_len -= seg_len % 2; // even length, hop = seg_len/2
    std::size_t hop = seg_len / 2;

    std::vector<double> window(seg_len);
    double wss = 0.0;
    for (std::size_t j = 0; j < seg_len; ++j) {
        window[j] = 0.5 * (1.0 - std::cos(2.0 * M_PI * double(j) /
                                          double(seg_len - 1)));
        wss += window[j] * window[j];
    }

    std::size_t n_freq = seg_len / 2 + 1;
    std::vector<double> power(n_freq, 0.0);
    std::vector<double> buf(seg_len);
    std::size_t used = 0;
    for (std::size_t s = 0; s < segments; ++s) {
        std::size_t start = s * hop;
        if (start + seg_len > n) break;
        double mean = 0.0;
        for (std::size_t j = 0; j < seg_len; ++j) mean += series[start + j];
        mean /= double(seg_len);
        for (std::size_t j = 0; j < seg_len; ++j)
            buf[j] = (series[start + j] - mean) * window[j];
        auto spec = fft::real_forward(buf);
        for (std::size_t k = 0; k < n_freq; ++k)
            power[k] += std::norm(spec[k]);
        ++used;
    }
    for (double& p : power) p /= double(used) * wss;

    Spectrum out;
    out.frequency.reserve(n_freq - 1);
    out.power.reserve(n_freq - 1);
    for (std::size_t k = 1; k < n_freq; ++k) {
        out.frequency.push_back(double(k) / double(seg_len));
        out.power.push_back(power[k]);
    }
    return out;
}

double spectrum_slope(const Spectrum& s, double f_min, double f_max) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < s.frequency.size(); ++i) {
        if (s.frequency[i] < f_min || s.frequency[i] > f_max) continue;
        if (s.power[i] <= 0.0) continue;
        lx.push_back(std::log(s.frequency[i]));
        ly.push_back(std::log(s.power[i]));
    }
    if (lx.size() < 5)
        throw ValidationError("too few spectrum points in the fit range");
    return ols(lx, ly).slope;
}

CwtResult cwt_dog1(std::span<const double> x,
                   const std::vector<double>& scales) {
    std::size_t n = x.size();
    if (n < 16) throw ValidationError("series too short for cwt");

    // Mean removal: the wavelet has zero mean, so this changes nothing
    // analytically but makes coefficients of constants exactly zero.
    double mean = std::accumulate(x.begin(), x.end(), 0.0) / double(n);

    CwtResult out;
    out.scales = scales;
    out.coefficients.reserve(scales.size());
    out.first_valid.reserve(scales.size());

    for (double s : scales) {
        if (s < 2.0 || s > double(n) / 8.0)
            throw ValidationError("scale " + std::to_string(s) +
                                  " outside [2, n/8] grid steps");
        auto half = std::size_t(std::ceil(kWaveletSupport * s));
        // kernel g(m) = psi(m/s), psi(u) = -u exp(-u^2/2)
        std::size_t klen = 2 * half + 1;
        std::size_t m = 1;
        while (m < n + klen - 1) m <<= 1;

        std::vector<std::complex<double>> fx(m, 0.0), fk(m, 0.0);
        for (std::size_t t = 0; t < n; ++t) fx[t] = x[t] - mean;
        // kernel centered so output index t+half corresponds to time t
        for (std::size_t j = 0; j < klen; ++j) {
            double u = (double(j) - double(half)) / s;
            fk[j] = -u * std::exp(-0.5 * u * u);
        }
        fft::forward(fx);
        fft::forward(fk);
        for (std::size_t k = 0; k < m; ++k) fx[k] *= fk[k];
        fft::inverse(fx);

        // W(t) = (1/sqrt(s)) sum_j x_j psi((t-j)/s); the convolution above
        // computes sum_j x_j g(t-j) at output offset t+half.
        double norm = 1.0 / (std::sqrt(s) * double(m));
        std::size_t t_lo = half, t_hi = n - 1 - half; // inclusive valid range
        if (t_lo > t_hi)
            throw ValidationError("no valid coefficients at scale " +
                                  std::to_string(s));
        std::vector<double> row;
        row.reserve(t_hi - t_lo + 1);
        for (std::size_t t = t_lo; t <= t_hi; ++t)
            row.push_back(fx[t + half].real() * norm);
        out.coefficients.push_back(std::move(row));
        out.first_valid.push_back(t_lo);
    }
    return out;
}

std::vector<double> default_q_grid() {
    std::vector<double> q;
    for (double v = 0.1; v <= 4.1 + 1e-9; v += 0.5) q.push_back(v);
    return q;
}

std::vector<double> default_scales(std::size_t n) {
    const double lo = 4.0, hi = double(n) / 10.0;
    if (hi <= lo) throw ValidationError("series too short for default scales");
    const double per_decade = 20.0;
    std::vector<double> s;
    double log_lo = std::log10(lo), log_hi = std::log10(hi);
    auto steps = std::size_t(std::floor((log_hi - log_lo) * per_decade));
    for (std::size_t i = 0; i <= steps; ++i)
        s.push_back(std::pow(10.0, log_lo + double(i) / per_decade));
    return s;
}

namespace {

StructureFunctions make_sf(SfMethod method, const std::vector<double>& q_grid,
                           const std::vector<double>& scales) {
    if (q_grid.empty()) throw ValidationError("empty q grid");
    for (double q : q_grid)
        if (q < 0.0) throw ValidationError("q must be nonnegative");
    for (std::size_t i = 1; i < scales.size(); ++i)
        if (scales[i] <= scales[i - 1])
            throw ValidationError("scales must be strictly increasing");
    StructureFunctions sf;
    sf.method = method;
    sf.q_grid = q_grid;
    sf.scales = scales;
    sf.fit_min_scale = scales.front();
    sf.fit_max_scale = scales.back();
    sf.moments.assign(q_grid.size(), std::vector<double>(scales.size(), 0.0));
    return sf;
}

} // namespace

StructureFunctions wavelet_structure_functions(
    std::span<const double> x, const std::vector<double>& q_grid,
    const std::vector<double>& scales) {
    StructureFunctions sf = make_sf(SfMethod::Wavelet, q_grid, scales);
    CwtResult cwt = cwt_dog1(x, scales);
    for (std::size_t si = 0; si < scales.size(); ++si) {
        const auto& row = cwt.coefficients[si];
        if (row.empty())
            throw ValidationError("no valid coefficients at scale index " +
                                  std::to_string(si));
        for (std::size_t qi = 0; qi < q_grid.size(); ++qi) {
            double acc = 0.0;
            for (double w : row) acc += std::pow(std::fabs(w), q_grid[qi]);
            sf.moments[qi][si] = acc / double(row.size());
        }
    }
    return sf;
}

StructureFunctions difference_structure_functions(
    std::span<const double> x, const std::vector<double>& q_grid,
    const std::vector<double>& scales) {
    StructureFunctions sf = make_sf(SfMethod::Difference, q_grid, scales);
    std::size_t n = x.size();
    for (std::size_t si = 0; si < scales.size(); ++si) {
        auto tau = std::size_t(std::llround(scales[si]));
        if (tau < 1 || tau >= n)
            throw ValidationError("difference scale out of range");
        for (std::size_t qi = 0; qi < q_grid.size(); ++qi) {
            double acc = 0.0;
            for (std::size_t t = 0; t + tau < n; ++t)
                acc += std::pow(std::fabs(x[t + tau] - x[t]), q_grid[qi]);
            sf.moments[qi][si] = acc / double(n - tau);
        }
    }
    return sf;
}

ScalingReport fit_scaling_function(const StructureFunctions& sf) {
    std::vector<double> log_tau;
    std::vector<std::size_t> idx;
    for (std::size_t si = 0; si < sf.scales.size(); ++si) {
        if (sf.scales[si] < sf.fit_min_scale || sf.scales[si] > sf.fit_max_scale)
            continue;
        idx.push_back(si);
        log_tau.push_back(std::log(sf.scales[si]));
    }
    if (idx.size() < 5)
        throw ValidationError("fit range must contain at least 5 scales");

    ScalingReport rep;
    rep.q_grid = sf.q_grid;
    for (std::size_t qi = 0; qi < sf.q_grid.size(); ++qi) {
        std::vector<double> log_m;
        log_m.reserve(idx.size());
        for (std::size_t si : idx) {
            double m = sf.moments[qi][si];
            if (!(m > 0.0) || !std::isfinite(m))
                throw NumericError("non-positive structure-function moment");
            log_m.push_back(std::log(m));
        }
        OlsFit f = ols(log_tau, log_m);
        double zeta = sf.method == SfMethod::Wavelet
                          ? f.slope - sf.q_grid[qi] / 2.0
                          : f.slope;
        rep.zeta_hat.push_back(zeta);
        rep.stderr_.push_back(f.slope_stderr);
        rep.r2.push_back(f.r2);
    }
    return rep;
}

LambdaFit fit_lambda_to_zeta(const ScalingReport& report) {
    if (report.q_grid.size() < 4)
        throw ValidationError("lambda fit needs at least 4 q values");

    // zeta(q) = q/2 + lambda^2 (q/4 - q^2/8): linear in lambda^2.
    bool weighted = true;
    for (double se : report.stderr_)
        if (!(se > 1e-12)) weighted = false;
    if (report.stderr_.size() != report.q_grid.size()) weighted = false;

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < report.q_grid.size(); ++i) {
        double q = report.q_grid[i];
        double g = q / 4.0 - q * q / 8.0;
        double w = weighted ? 1.0 / (report.stderr_[i] * report.stderr_[i]) : 1.0;
        num += w * g * (report.zeta_hat[i] - q / 2.0);
        den += w * g * g;
    }
    if (den == 0.0) throw NumericError("degenerate q grid in lambda fit");

    LambdaFit fit;
    double l2 = num / den;
    if (l2 < 0.0) {
        fit.lambda = 0.0;
        fit.degenerate = true;
    } else {
        fit.lambda = std::sqrt(l2);
    }
    return fit;
}

void write_scaling_report_csv(const ScalingReport& r,
                              const std::filesystem::path& path) {
    CsvWriter w(path, "q,zeta,stderr,r2");
    for (std::size_t i = 0; i < r.q_grid.size(); ++i)
        w.row({format_full(r.q_grid[i]), format_full(r.zeta_hat[i]),
               format_full(r.stderr_[i]), format_full(r.r2[i])});
    w.close();
}

void write_structure_functions_csv(const StructureFunctions& sf,
                                   const std::filesystem::path& path) {
    CsvWriter w(path, "q,tau,moment");
    for (std::size_t qi = 0; qi < sf.q_grid.size(); ++qi)
        for (std::size_t si = 0; si < sf.scales.size(); ++si)
            w.row({format_full(sf.q_grid[qi]), format_full(sf.scales[si]),
                   format_full(sf.moments[qi][si])});
    w.close();
}

void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path) {
    CsvWriter w(path, "frequency,power");
    for (std::size_t i = 0; i < s.frequency.size(); ++i)
        w.row({format_full(s.frequency[i]), format_full(s.power[i])});
    w.close();
}

void write_acf_csv(const AcfResult& r, const std::filesystem::path& path) {
    CsvWriter w(path, "lag,value,band");
    for (std::size_t i = 0; i < r.lags.size(); ++i)
        w.row({std::to_string(r.lags[i]), format_full(r.values[i]),
               format_full(r.band)});
    w.close();
}

} // namespace mrwlab
