#include "mrwlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace mrwlab::fft {

namespace {

std::mutex plan_mutex;

enum class Kind { Forward, Inverse, RealForward };

fftw_plan get_plan(Kind kind, std::size_t n) {
    // Plans are created once per (kind, size) and reused via the new-array
    // interface. FFTW_UNALIGNED lets them run on any caller buffer.
    static std::map<std::pair<int, std::size_t>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(int(kind), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    fftw_plan p = nullptr;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    switch (kind) {
    case Kind::Forward:
    case Kind::Inverse: {
        std::vector<std::complex<double>> buf(n);
        auto* ptr = reinterpret_cast<fftw_complex*>(buf.data());
        p = fftw_plan_dft_1d(int(n), ptr, ptr,
                             kind == Kind::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                             flags);
        break;
    }
    case Kind::RealForward: {
        std::vector<double> in(n);
        std::vector<std::complex<double>> out(n / 2 + 1);
        p = fftw_plan_dft_r2c_1d(int(n), in.data(),
                                 reinterpret_cast<fftw_complex*>(out.data()),
                                 flags);
        break;
    }
    }
    cache.emplace(key, p);
    return p;
}

} // namespace

void forward(std::vector<std::complex<double>>& data) {
    if (data.empty()) return;
    fftw_plan p = get_plan(Kind::Forward, data.size());
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, ptr, ptr);
}

void inverse(std::vector<std::complex<double>>& data) {
    if (data.empty()) return;
    fftw_plan p = get_plan(Kind::Inverse, data.size());
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, ptr, ptr);
}

std::vector<std::complex<double>> real_forward(const std::vector<double>& in) {
    std::vector<std::complex<double>> out(in.size() / 2 + 1);
    if (in.empty()) return out;
    fftw_plan p = get_plan(Kind::RealForward, in.size());
    fftw_execute_dft_r2c(p, const_cast<double*>(in.data()),
                         reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace mrwlab::fft
