// Core data model for linear mixtures Z = sum_j a_j X^[j] of independent
// draws from empirical samples: samples, mixture specs, frequency grids and
// distribution estimates. All types are immutable after construction.

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace mixcdf {

// One-dimensional sample of real observations with cached extremes.
// Carries the empirical distribution (uniform mass 1/n per value).
class Sample {
public:
    explicit Sample(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    double min_value() const noexcept { return min_; }
    double max_value() const noexcept { return max_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
    double min_;
    double max_;
};

struct MixtureComponent {
    double coefficient = 0.0;                   // a_j
    std::shared_ptr<const Sample> sample;       // X^[j] source (may be shared)
};

// Ordered list of (a_j, sample) components defining Z.
// Components may reference the same sample object or distinct ones;
// the product form of the mixture CF only needs independence.
class MixtureSpec {
public:
    explicit MixtureSpec(std::vector<MixtureComponent> components);

    const std::vector<MixtureComponent>& components() const noexcept { return components_; }
    std::size_t component_count() const noexcept { return components_.size(); }

private:
    std::vector<MixtureComponent> components_;
};

struct SupportBounds {
    double z_min = 0.0;
    double z_max = 0.0;
};

// Exact support bounds of Z, resolved per component from the sample extremes
// and the coefficient sign (never by atom enumeration). min Z and max Z are
// attained, so the result is exact.
SupportBounds exact_support_bounds(const MixtureSpec& spec);

// Frequency/space grid for the inversion pipeline. Bounds are those of the
// *centered* Z (shift applied so that z_min < 0 < z_max); the shift is folded
// into the spectral coefficients and undone on the output abscissae.
struct GridSpec {
    std::size_t resolution = 0;   // N
    double kappa = 0.0;           // T / T_Z, > 1
    double z_min = 0.0;           // centered support minimum (= -T_Z/2)
    double z_max = 0.0;           // centered support maximum (= +T_Z/2)
    double t_z = 0.0;             // support width max Z - min Z
    double period = 0.0;          // T = kappa * T_Z
    long long i_min = 0;          // floor((N/T) * kappa * z_min)
    double shift = 0.0;           // s, centering offset (raw Z = centered Z + s)
    bool degenerate = false;      // T_Z == 0 (Z is a single point mass)

    double delta_nu() const noexcept { return 1.0 / period; }
    double step() const noexcept { return period / static_cast<double>(resolution); }
    double x0() const noexcept { return static_cast<double>(i_min) * step(); }
};

// Builds the grid for a spec: centers the support by its midpoint, pads the
// period by kappa > 1 and aligns x0 = i_min*T/N to the grid. Specs with
// T_Z = 0 come back flagged degenerate (no spectral work is meaningful).
GridSpec build_grid(const MixtureSpec& spec, std::size_t resolution, double kappa = 1.1);

// Spectral coefficient vector g_k = G(k * delta_nu) (shift phase folded in),
// bound to the grid it was sampled on. g[0] == 1 exactly.
struct SpectralCoefficients {
    std::vector<std::complex<double>> g;
    GridSpec grid;
};

enum class Algorithm { alg1 = 1, alg2 = 2 };

// Sampled distribution estimate: aligned abscissae (de-centered, observation
// units) and CDF values, optional density samples and uniform error bound.
struct DistributionEstimate {
    std::vector<double> x;
    std::vector<double> cdf;
    std::vector<double> density;        // empty unless computed
    std::optional<double> bound;
    Algorithm algorithm = Algorithm::alg2;
    GridSpec grid;
};

} // namespace mixcdf
