#include "mixcdf/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixcdf {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("sample: must contain at least one value");
    for (double v : values_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("sample: values must be finite");
    }
    auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
    min_ = *lo;
    max_ = *hi;
}

MixtureSpec::MixtureSpec(std::vector<MixtureComponent> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("components: mixture needs at least one component");
    for (const auto& c : components_) {
        if (!std::isfinite(c.coefficient))
            throw std::invalid_argument("coefficient: must be finite");
        if (!c.sample)
            throw std::invalid_argument("sample: component sample is null");
    }
}

SupportBounds exact_support_bounds(const MixtureSpec& spec) {
    // Rounding is monotone, so min_i rn(a*X_i) = rn(a * min X) per component
    // and the fold below reproduces the enumerated extremes bit for bit.
    SupportBounds b;
    for (const auto& c : spec.components()) {
        const double a = c.coefficient;
        if (a >= 0.0) {
            b.z_min += a * c.sample->min_value();
            b.z_max += a * c.sample->max_value();
        } else {
            b.z_min += a * c.sample->max_value();
            b.z_max += a * c.sample->min_value();
        }
    }
    return b;
}

GridSpec build_grid(const MixtureSpec& spec, std::size_t resolution, double kappa) {
    if (resolution < 2)
        throw std::invalid_argument("N: resolution must be at least 2");
    if (!(kappa > 1.0) || !std::isfinite(kappa))
        throw std::invalid_argument("kappa: padding factor must be finite and > 1");

    const SupportBounds raw = exact_support_bounds(spec);
    if (!std::isfinite(raw.z_min) || !std::isfinite(raw.z_max))
        throw std::invalid_argument("support bounds: not finite");

    GridSpec g;
    g.resolution = resolution;
    g.kappa = kappa;
    g.shift = (raw.z_min + raw.z_max) / 2.0;
    g.t_z = raw.z_max - raw.z_min;

    if (g.t_z == 0.0) {
        g.degenerate = true;
        return g;
    }

    // Midpoint centering makes the centered bounds exactly +-T_Z/2, so
    // i_min = floor(N * z_min / T_Z) = floor(-N/2); the integer form avoids
    // floor() flipping on the rounding of an exactly-integer ratio.
    g.z_min = -g.t_z / 2.0;
    g.z_max = g.t_z / 2.0;
    g.period = kappa * g.t_z;
    g.i_min = -static_cast<long long>((resolution + 1) / 2);
    g.degenerate = false;
    return g;
}

} // namespace mixcdf
