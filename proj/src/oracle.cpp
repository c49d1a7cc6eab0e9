#include "mixcdf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixcdf/charfn.hpp"

namespace mixcdf::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr std::uint64_t kEnumerationLimit = 1000000;

} // namespace

AtomSet enumerate_atoms(const MixtureSpec& spec) {
    const auto& comps = spec.components();
    std::uint64_t total = 1;
    for (const auto& c : comps) {
        total *= static_cast<std::uint64_t>(c.sample->size());
        if (total > kEnumerationLimit)
            throw enumeration_limit_error(
                "atom multiset exceeds enumeration guard of " + std::to_string(kEnumerationLimit));
    }

    std::vector<double> values;
    values.reserve(total);
    std::vector<std::size_t> idx(comps.size(), 0);
    while (true) {
        double z = 0.0;
        for (std::size_t j = 0; j < comps.size(); ++j)
            z += comps[j].coefficient * comps[j].sample->values()[idx[j]];
        values.push_back(z);
        std::size_t j = comps.size();
        while (j > 0) {
            --j;
            if (++idx[j] < comps[j].sample->size()) break;
            idx[j] = 0;
            if (j == 0) goto done;
        }
    }
done:
    std::sort(values.begin(), values.end());

    // Merge values equal up to 1e-12 relative to the atom scale; association
    // order differences leave last-bit noise between equal tuples.
    const double scale = std::max({1.0, std::abs(values.front()), std::abs(values.back())});
    const double tol = 1e-12 * scale;

    AtomSet set;
    set.total_count = total;
    const double unit_mass = 1.0 / static_cast<double>(total);
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j] - values[j - 1] <= tol) {
            sum += values[j];
            ++j;
        }
        const double count = static_cast<double>(j - i);
        set.atoms.push_back({sum / count, count * unit_mass});
        i = j;
    }
    return set;
}

double exact_cdf(const AtomSet& atoms, double x) {
    double mass = 0.0;
    for (const auto& a : atoms.atoms) {
        if (a.value > x) break;
        mass += a.mass;
    }
    return mass;
}

double max_window_mass(const AtomSet& atoms, double half_width) {
    // The maximum over all closed windows is attained with the left edge at
    // an atom: sliding the window right until it hits one loses nothing.
    const auto& a = atoms.atoms;
    const double width = 2.0 * half_width;
    double best = 0.0;
    std::size_t r = 0;
    double mass = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) {
        if (r < l) {
            r = l;
            mass = 0.0;
        }
        while (r < a.size() && a[r].value <= a[l].value + width) {
            mass += a[r].mass;
            ++r;
        }
        best = std::max(best, mass);
        mass -= a[l].mass;
    }
    return best;
}

double exact_m2(const AtomSet& atoms, double period, double epsilon_star) {
    if (!(epsilon_star > 0.0))
        throw std::invalid_argument("epsilon_star: must be positive");
    return max_window_mass(atoms, period * epsilon_star) / epsilon_star;
}

LevyCdfResult levy_inversion_quadrature(const MixtureSpec& spec, const GridSpec& grid,
                                        double x, double nu_max, std::size_t steps) {
    if (grid.degenerate)
        throw std::invalid_argument("grid: degenerate grid");
    if (!(nu_max > 0.0) || steps == 0)
        throw std::invalid_argument("nu_max/steps: must be positive");

    const double x0 = grid.x0() + grid.shift;  // below min Z in raw units
    auto integrand = [&](double nu) -> double {
        if (nu == 0.0) return kTwoPi * (x - x0);
        const std::complex<double> osc =
            std::polar(1.0, kTwoPi * x * nu) - std::polar(1.0, kTwoPi * x0 * nu);
        return (osc * mixture_cf(spec, nu)).imag() / nu;
    };

    const double h = nu_max / static_cast<double>(steps);
    double acc = 0.5 * (integrand(0.0) + integrand(nu_max));
    for (std::size_t j = 1; j < steps; ++j)
        acc += integrand(static_cast<double>(j) * h);

    LevyCdfResult result;
    result.value = acc * h / kPi;
    result.tail_modulus = std::abs(mixture_cf(spec, nu_max));
    result.slow_decay = result.tail_modulus > 0.01;
    return result;
}

} // namespace mixcdf::oracle
