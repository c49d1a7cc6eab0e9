// Empirical characteristic-function evaluation:
//   component: G_{aX}(nu) = (1/n) sum_i exp(-2*pi*i * a * X_i * nu)
//   mixture:   G(nu)      = prod_j G_{a_j X^[j]}(nu)
// and the spectral coefficient vector g_k = G(k * delta_nu) on a grid,
// computed by per-observation phasor recurrences in O(n*m*N).

#pragma once

#include <complex>
#include <cstddef>

#include "mixcdf/types.hpp"

namespace mixcdf {

std::complex<double> component_cf(const Sample& sample, double coefficient, double nu);

// Product over components in index order (bit-deterministic).
std::complex<double> mixture_cf(const MixtureSpec& spec, double nu);

// g_k = exp(2*pi*i * s * k * delta_nu) * G(k * delta_nu), k = 0..N-1, with
// g_0 set to 1 exactly. The k-range is processed in 512-aligned blocks whose
// phasors are seeded by direct trig, so results are independent of the
// worker count. workers == 0 resolves from MIXCDF_THREADS (or hardware).
SpectralCoefficients spectral_coefficients(const MixtureSpec& spec, const GridSpec& grid,
                                           unsigned workers = 0);

// Worker-count resolution used by spectral_coefficients (exposed for tests).
unsigned resolve_worker_count(unsigned requested);

} // namespace mixcdf
