// Exact ground truth by enumeration of the finite atom multiset of Z:
// exact CDF, exact window-mass concentration M_2, and an independent
// Levy-type quadrature CDF for cross-validation. Deliberately naive;
// this module must stay obviously correct.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mixcdf/types.hpp"

namespace mixcdf::oracle {

struct Atom {
    double value = 0.0;
    double mass = 0.0;
};

// Sorted merged atoms of Z; total_count is the pre-merge multiset size
// prod_j n_j (every tuple carries mass 1/total_count).
struct AtomSet {
    std::vector<Atom> atoms;
    std::uint64_t total_count = 0;
};

class enumeration_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumerates all coefficient-weighted tuples (guard: prod n_j <= 10^6),
// sorts, and merges values equal within 1e-12 relative to the atom scale.
AtomSet enumerate_atoms(const MixtureSpec& spec);

// F_Z(x) = sum of masses of atoms <= x; right-continuous step function.
double exact_cdf(const AtomSet& atoms, double x);

// Largest probability mass caught by any closed window of the given
// half-width. Two-pointer sweep over windows with the left edge at an atom.
double max_window_mass(const AtomSet& atoms, double half_width);

// M_2(eps*) = max_{z0} P^Z([z0 - T*eps*, z0 + T*eps*]) / eps*.
double exact_m2(const AtomSet& atoms, double period, double epsilon_star);

struct LevyCdfResult {
    double value = 0.0;           // quadrature estimate of F_Z(x)
    double tail_modulus = 0.0;    // |G(nu_max)|
    bool slow_decay = false;      // tail_modulus > 0.01: truncation suspect
};

// Trapezoid quadrature of the inversion integral
//   F_Z(x) = (1/pi) int_0^inf Im[(e^{2 pi i x nu} - e^{2 pi i x0 nu}) G(nu)] / nu  d nu
// truncated at nu_max with `steps` panels; the integrand at nu = 0 is set to
// its limit 2*pi*(x - x0). x must be a continuity point of F_Z; x0 is the
// grid's x0 de-centered (below min Z).
LevyCdfResult levy_inversion_quadrature(const MixtureSpec& spec, const GridSpec& grid,
                                        double x, double nu_max, std::size_t steps);

} // namespace mixcdf::oracle
