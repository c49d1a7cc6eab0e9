// Inverse-transform reconstruction of density samples, smooth density values
// and the CDF from spectral coefficients, plus the periodic Dirichlet-type
// kernel R_{N,T} and its integral J_{N,T} used by the identity tests.
//
// Two CDF routes are provided on purpose:
//   cdf_algorithm1 : cyclic cumulative sum of the raw density samples
//   cdf_algorithm2 : same pipeline on phi_k-corrected coefficients; its
//                    outputs equal the exact integral F~(i*T/N) and it is
//                    the default
//   cdf_closed_form: direct O(N) summation of F~(x), the cross-check oracle
//                    for algorithm 2 and the off-grid evaluator.

#pragma once

#include <cstddef>
#include <vector>

#include "mixcdf/types.hpp"

namespace mixcdf {

struct KernelParams {
    std::size_t resolution = 0;   // N >= 2
    double period = 0.0;          // T > 0
};

// f~_i = f~(i*T/N) = 2*Re(h~_i) - 1/N via a length-N fast transform.
// The samples sum to 1 (up to rounding).
std::vector<double> density_samples(const SpectralCoefficients& coeffs);

// f~(x) for arbitrary centered x by direct O(N) summation.
double density_sample_at(const SpectralCoefficients& coeffs, double x_centered);

// Smooth density estimate f^(x) = (N/T) * f~(x - s) * 1_I(x - s) with
// I = [kappa*z_min, kappa*z_max]; x in observation units. 0 outside I.
double smooth_density(const SpectralCoefficients& coeffs, double x);

DistributionEstimate cdf_algorithm1(const SpectralCoefficients& coeffs);
DistributionEstimate cdf_algorithm2(const SpectralCoefficients& coeffs);

// F~(x) by direct summation; x in observation units, the centered value must
// lie in the period window [x0, x0 + T]. Throws std::domain_error outside.
double cdf_closed_form(const SpectralCoefficients& coeffs, double x);

// F~ at every grid abscissa by direct summation with exact integer phase
// reduction; the independent route checked against cdf_algorithm2.
std::vector<double> cdf_closed_form_grid(const SpectralCoefficients& coeffs);

// R_{N,T}(x) = (1/T) * sin(2*pi*(2N-1)/(2T)*x) / sin(2*pi*x/(2T)),
// continuously continued with value (2N-1)/T where the denominator argument
// is within 1e-9 of a multiple of pi. Periodic with period T.
double dirichlet_kernel(const KernelParams& params, double x);

// J_{N,T}(x) = int_0^x R_{N,T} = x/T + (1/pi) sum_{k=1}^{N-1} sin(2*pi*k*x/T)/k.
double kernel_integral(const KernelParams& params, double x);

// Exact one-step CDF for a degenerate spec (Z a point mass at grid.shift):
// N abscissae across [c-1, c+1], cdf = 1_{x >= c}, bound 0.
DistributionEstimate degenerate_estimate(const GridSpec& grid, Algorithm algorithm);

} // namespace mixcdf
