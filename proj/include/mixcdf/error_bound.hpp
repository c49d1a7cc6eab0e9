// Uniform error bound 2 * sqrt(M_2 / (2*pi)) * N^{-1/2} for the CDF estimate
// at continuity points, the balancing window parameter eps*, and practical
// M_2 estimates (exact from the atom oracle, or a density rule of thumb).

#pragma once

#include <cstddef>

#include "mixcdf/oracle.hpp"
#include "mixcdf/types.hpp"

namespace mixcdf {

enum class M2Source { exact_oracle, density_rule_of_thumb, user_supplied };

struct ErrorBoundReport {
    double m2 = 0.0;
    double epsilon_star = 0.0;
    double bound = 0.0;
    std::size_t n_resolution = 0;
    M2Source m2_source = M2Source::user_supplied;
};

// 2 * sqrt(m2 / (2*pi)) * N^{-1/2}. Rejects m2 < 0.
double error_bound(double m2, std::size_t n_resolution);

// eps* = sqrt(2 / (pi * N * m2)), the stationary point of the per-term error
// E2(eps) = m2*eps/2 + 1/(pi*N*eps); E2(eps*) equals error_bound(m2, N).
// Rejects m2 <= 0 (no interior minimizer).
double optimal_epsilon(double m2, std::size_t n_resolution);

// Rule of thumb M_2 := 2 * T * max_i density_i. Requires density samples on a
// non-degenerate grid. A window of half-width T*eps under a locally maximal
// density f* holds mass ~ 2*T*eps*f*, matching the form P <= M_2 * eps.
double estimate_m2_from_density(const DistributionEstimate& estimate, const GridSpec& grid);

ErrorBoundReport make_report(double m2, std::size_t n_resolution, M2Source source);

// Self-consistent (eps*, M_2) pair from the atom oracle: bisects
// eps * W(T*eps) = 2/(pi*N) (W = max window mass), so that the returned
// eps* equals optimal_epsilon(M_2, N) with M_2 = W/eps* exact at eps*.
ErrorBoundReport exact_bound_report(const oracle::AtomSet& atoms, double period,
                                    std::size_t n_resolution);

const char* to_string(M2Source source) noexcept;

} // namespace mixcdf
