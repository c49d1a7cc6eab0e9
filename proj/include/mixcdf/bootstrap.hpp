// Bootstrap adapters: map i.i.d. mean bootstrap and fixed-design residual
// regression bootstrap onto mixture specs, so the conditional-on-data
// distribution of the bootstrap statistic comes out of the CDF machinery.

#pragma once

#include <cstddef>
#include <vector>

#include "mixcdf/types.hpp"

namespace mixcdf {

struct RegressionProblem {
    std::vector<std::vector<double>> design;   // rows = observations
    std::vector<double> response;
    std::size_t coefficient_index = 0;         // targeted coefficient
};

// Z = X-bar* conditional on the data: n components, each (1/n, sample).
MixtureSpec mean_bootstrap_spec(const Sample& sample);

// Fits least squares (Householder QR, rank tolerance 1e-10), centers the
// residuals, and returns components (w_j, centered-residual sample) with
// w = row coefficient_index of (X'X)^{-1} X'. Z is then distributed as
// beta*_l - beta^_l under residual resampling.
MixtureSpec residual_bootstrap_spec(const RegressionProblem& problem);

} // namespace mixcdf
