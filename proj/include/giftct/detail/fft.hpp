#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace giftct::detail {

// In-place iterative radix-2 FFT. Length must be a power of two; the ramp
// filter always pads to one. inverse=true applies the 1/N scaling.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

std::size_t next_pow2(std::size_t n);

}  // namespace giftct::detail
