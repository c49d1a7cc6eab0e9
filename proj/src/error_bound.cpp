#include "mixcdf/error_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixcdf {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
} // namespace

double error_bound(double m2, std::size_t n_resolution) {
    if (m2 < 0.0 || !std::isfinite(m2))
        throw std::invalid_argument("m2: must be finite and non-negative");
    if (n_resolution == 0)
        throw std::invalid_argument("N: must be positive");
    return 2.0 * std::sqrt(m2 / kTwoPi) / std::sqrt(static_cast<double>(n_resolution));
}

double optimal_epsilon(double m2, std::size_t n_resolution) {
    if (!(m2 > 0.0) || !std::isfinite(m2))
        throw std::invalid_argument("m2: must be finite and positive");
    if (n_resolution == 0)
        throw std::invalid_argument("N: must be positive");
    return std::sqrt(2.0 / (kPi * static_cast<double>(n_resolution) * m2));
}

double estimate_m2_from_density(const DistributionEstimate& estimate, const GridSpec& grid) {
    if (grid.degenerate)
        throw std::invalid_argument("grid: degenerate distribution has no density scale");
    if (estimate.density.empty())
        throw std::invalid_argument("density: estimate has no density samples");
    const double peak = *std::max_element(estimate.density.begin(), estimate.density.end());
    return 2.0 * grid.period * peak;
}

ErrorBoundReport make_report(double m2, std::size_t n_resolution, M2Source source) {
    ErrorBoundReport r;
    r.m2 = m2;
    r.epsilon_star = optimal_epsilon(m2, n_resolution);
    r.bound = error_bound(m2, n_resolution);
    r.n_resolution = n_resolution;
    r.m2_source = source;
    return r;
}

ErrorBoundReport exact_bound_report(const oracle::AtomSet& atoms, double period,
                                    std::size_t n_resolution) {
    if (atoms.atoms.empty())
        throw std::invalid_argument("atoms: empty atom set");
    if (!(period > 0.0))
        throw std::invalid_argument("period: must be positive");

    // eps * W(T*eps) is nondecreasing in eps and positive, so the balance
    // point eps*W = 2/(pi*N) is found by bisection; W is a step function, so
    // the iteration lands on the jump closest to exact balance.
    const double target = 2.0 / (kPi * static_cast<double>(n_resolution));
    auto balance = [&](double eps) {
        return eps * oracle::max_window_mass(atoms, period * eps) - target;
    };
    double lo = 1e-15;
    double hi = 1.0;
    while (balance(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (balance(mid) < 0.0 ? lo : hi) = mid;
    }
    const double eps = hi;
    const double m2 = oracle::max_window_mass(atoms, period * eps) / eps;
    return make_report(m2, n_resolution, M2Source::exact_oracle);
}

const char* to_string(M2Source source) noexcept {
    switch (source) {
        case M2Source::exact_oracle: return "exact-oracle";
        case M2Source::density_rule_of_thumb: return "density-rule-of-thumb";
        case M2Source::user_supplied: return "user-supplied";
    }
    return "unknown";
}

} // namespace mixcdf
