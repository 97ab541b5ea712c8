#ifndef MRWLAB_FFT_HPP
#define MRWLAB_FFT_HPP

#include <complex>
#include <vector>

namespace mrwlab {

/// Thin deterministic wrapper over FFTW. Plans use FFTW_ESTIMATE so the
/// algorithm choice (and hence rounding) never depends on timing, and plan
/// creation is serialized behind a global mutex (FFTW planning is not
/// thread-safe; execution on distinct buffers is).
namespace fft {

/// In-place forward complex DFT (unnormalized).
void forward(std::vector<std::complex<double>>& data);

/// In-place inverse complex DFT (unnormalized: inverse(forward(x)) = n*x).
void inverse(std::vector<std::complex<double>>& data);

/// Real-to-complex forward DFT; returns n/2+1 coefficients.
std::vector<std::complex<double>> real_forward(const std::vector<double>& in);

} // namespace fft

} // namespace mrwlab

#endif
