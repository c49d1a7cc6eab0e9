// Deterministic discrete Fourier transforms: iterative radix-2 for powers of
// two, Bluestein chirp-z for arbitrary lengths. No external FFT dependency.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mixcdf::fft {

// In-place transform a_k -> sum_j a_j exp(sign * 2*pi*i * j*k / n), unscaled.
// n must be a power of two; sign is +1 or -1.
void transform_pow2(std::vector<std::complex<double>>& a, int sign);

// S_i = sum_{k=0}^{N-1} c_k exp(+2*pi*i * i*k / N), unscaled, for any N >= 1.
// Radix-2 when N is a power of two, Bluestein otherwise.
std::vector<std::complex<double>> inverse_sum(const std::vector<std::complex<double>>& c);

} // namespace mixcdf::fft
