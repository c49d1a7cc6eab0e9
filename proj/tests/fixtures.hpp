// Shared test fixtures: seeded random mixture specs and small builders.

#pragma once

#include <memory>
#include <random>
#include <vector>

#include "mixcdf/types.hpp"

namespace fixtures {

inline std::shared_ptr<const mixcdf::Sample> make_sample(std::vector<double> values) {
    return std::make_shared<const mixcdf::Sample>(mixcdf::Sample(std::move(values)));
}

inline mixcdf::MixtureSpec make_spec(
    std::initializer_list<std::pair<double, std::vector<double>>> parts) {
    std::vector<mixcdf::MixtureComponent> comps;
    for (const auto& [a, values] : parts) comps.push_back({a, make_sample(values)});
    return mixcdf::MixtureSpec(std::move(comps));
}

// Deterministic random spec: n in {3..6} observations, m in {2,3} components,
// coefficients of magnitude in [0.3, 1.2] with random signs. Even seeds share
// one sample across components, odd seeds use distinct samples.
inline mixcdf::MixtureSpec seeded_spec(unsigned seed) {
    std::mt19937 rng(seed * 2654435761u + 12345u);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::uniform_real_distribution<double> magnitude(0.3, 1.2);
    const std::size_t n = 3 + seed % 4;
    const std::size_t m = 2 + seed % 2;
    const bool shared = seed % 2 == 0;

    auto draw_sample = [&] {
        std::vector<double> xs(n);
        for (auto& x : xs) x = value(rng);
        return make_sample(std::move(xs));
    };

    std::shared_ptr<const mixcdf::Sample> common;
    if (shared) common = draw_sample();
    std::vector<mixcdf::MixtureComponent> comps;
    for (std::size_t j = 0; j < m; ++j) {
        const double sign = (rng() & 1u) ? 1.0 : -1.0;
        comps.push_back({sign * magnitude(rng), shared ? common : draw_sample()});
    }
    return mixcdf::MixtureSpec(std::move(comps));
}

} // namespace fixtures
