#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "mixcdf/charfn.hpp"
#include "mixcdf/error_bound.hpp"
#include "mixcdf/fft.hpp"
#include "mixcdf/inversion.hpp"
#include "mixcdf/oracle.hpp"

using namespace mixcdf;

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Direct O(N^2) evaluation of the two-sided sum
//   f_i = (1/N) sum_{k=-N+1}^{N-1} g_k exp(2 pi i * i k / N),  g_{-k} = conj(g_k),
// the reference the fast transform path must reproduce.
std::vector<double> direct_density(const SpectralCoefficients& coeffs) {
    const std::size_t n = coeffs.grid.resolution;
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> acc = coeffs.g[0];
        for (std::size_t k = 1; k < n; ++k) {
            const double angle = kTwoPi * static_cast<double>(i * k % n) / static_cast<double>(n);
            acc += coeffs.g[k] * std::polar(1.0, angle);
            acc += std::conj(coeffs.g[k]) * std::polar(1.0, -angle);
        }
        f[i] = acc.real() / static_cast<double>(n);
    }
    return f;
}

// Independent cosine-sum route for the periodic kernel:
// R_{N,T}(x) = (1/T) (1 + 2 sum_{k=1}^{N-1} cos(2 pi k x / T)).
double kernel_by_cosine_sum(const KernelParams& p, double x) {
    double acc = 1.0;
    for (std::size_t k = 1; k < p.resolution; ++k)
        acc += 2.0 * std::cos(kTwoPi * static_cast<double>(k) * x / p.period);
    return acc / p.period;
}

SpectralCoefficients unit_coefficients(std::size_t n, double period) {
    SpectralCoefficients c;
    c.grid.resolution = n;
    c.grid.kappa = 2.0;
    c.grid.t_z = period / 2.0;
    c.grid.period = period;
    c.grid.z_min = -c.grid.t_z / 2.0;
    c.grid.z_max = c.grid.t_z / 2.0;
    c.grid.i_min = -static_cast<long long>((n + 1) / 2);
    c.grid.shift = 0.0;
    c.g.assign(n, {1.0, 0.0});
    return c;
}

} // namespace

TEST_CASE("transform sign convention (impulse tests)") {
    std::vector<std::complex<double>> e0{{1, 0}, {0, 0}, {0, 0}, {0, 0}};
    auto s = fft::inverse_sum(e0);
    for (const auto& v : s) CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-15);

    std::vector<std::complex<double>> e1{{0, 0}, {1, 0}, {0, 0}, {0, 0}};
    s = fft::inverse_sum(e1);
    CHECK(std::abs(s[0] - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(s[1] - std::complex<double>(0.0, 1.0)) < 1e-14);   // e^{+2 pi i /4} = +i
    CHECK(std::abs(s[2] - std::complex<double>(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("fast transform equals direct summation for pow2, prime and padded sizes") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {8, 100, 257, 1000, 1024}) {
        std::vector<std::complex<double>> c(n);
        for (auto& v : c) v = {u(rng), u(rng)};
        auto fast = fft::inverse_sum(c);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                acc += c[k] * std::polar(1.0, kTwoPi * static_cast<double>(i * k % n) /
                                                  static_cast<double>(n));
            worst = std::max(worst, std::abs(fast[i] - acc));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("density samples sum to one and match the direct route") {
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        auto spec = fixtures::seeded_spec(seed);
        for (std::size_t n : {256, 1000}) {
            auto coeffs = spectral_coefficients(spec, build_grid(spec, n, 1.1));
            auto f = density_samples(coeffs);
            const double total = std::accumulate(f.begin(), f.end(), 0.0);
            CHECK(std::abs(total - 1.0) <= 1e-10);

            auto ref = direct_density(coeffs);
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(f[i] - ref[i]));
            CHECK(worst <= 1e-10);
        }
    }
}

TEST_CASE("one-atom coefficients concentrate the full kernel peak at zero") {
    // g_k = 1 collapses the sum to f_0 = (2N-1)/N at the origin.
    for (std::size_t n : {16, 128}) {
        auto coeffs = unit_coefficients(n, 1.0);
        auto f = density_samples(coeffs);
        CHECK(f[0] == doctest::Approx((2.0 * n - 1.0) / n).epsilon(1e-12));
        const KernelParams params{n, coeffs.grid.period};
        CHECK(f[0] == doctest::Approx(coeffs.grid.period / n * dirichlet_kernel(params, 0.0))
                          .epsilon(1e-12));
    }
}

TEST_CASE("density equals the kernel-smoothed atomic density (identity test)") {
    for (unsigned seed : {1u, 5u, 8u}) {
        auto spec = fixtures::seeded_spec(seed);
        auto grid = build_grid(spec, 1024, 1.1);
        auto coeffs = spectral_coefficients(spec, grid);
        auto atoms = oracle::enumerate_atoms(spec);
        const KernelParams params{grid.resolution, grid.period};

        std::mt19937 rng(seed + 1000);
        std::uniform_real_distribution<double> u(grid.kappa * grid.z_min,
                                                 grid.kappa * grid.z_max);
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const double x = u(rng);
            double smoothed = 0.0;
            for (const auto& atom : atoms.atoms)
                smoothed += atom.mass * dirichlet_kernel(params, x - (atom.value - grid.shift));
            smoothed *= grid.period / static_cast<double>(grid.resolution);
            worst = std::max(worst, std::abs(density_sample_at(coeffs, x) - smoothed));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("smooth density: indicator support and unit integral") {
    auto spec = fixtures::seeded_spec(2);
    auto grid = build_grid(spec, 512, 1.1);
    auto coeffs = spectral_coefficients(spec, grid);

    CHECK(smooth_density(coeffs, grid.shift + grid.kappa * grid.z_min - 0.01) == 0.0);
    CHECK(smooth_density(coeffs, grid.shift + grid.kappa * grid.z_max + 0.01) == 0.0);

    // Trapezoid over 4N points across I.
    const std::size_t pts = 4 * grid.resolution;
    const double lo = grid.shift + grid.kappa * grid.z_min;
    const double hi = grid.shift + grid.kappa * grid.z_max;
    const double h = (hi - lo) / static_cast<double>(pts);
    double integral = 0.5 * (smooth_density(coeffs, lo) + smooth_density(coeffs, hi));
    for (std::size_t j = 1; j < pts; ++j)
        integral += smooth_density(coeffs, lo + static_cast<double>(j) * h);
    integral *= h;
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("smooth density peak for a single atom") {
    auto coeffs = unit_coefficients(64, 2.0);   // atom at 0, s = 0
    const double peak = smooth_density(coeffs, 0.0);
    CHECK(peak == doctest::Approx((2.0 * 64 - 1.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("algorithm 1: cyclic cumulative sum endpoints") {
    auto spec = fixtures::make_spec({{0.5, {0.0, 1.0}}, {0.5, {0.0, 1.0}}});
    auto grid = build_grid(spec, 4096, 1.1);
    auto coeffs = spectral_coefficients(spec, grid);
    auto est = cdf_algorithm1(coeffs);
    auto f = density_samples(coeffs);

    CHECK(est.cdf.front() == 0.0);
    const std::size_t last_index =
        static_cast<std::size_t>(((grid.i_min + static_cast<long long>(grid.resolution) - 1) %
                                      static_cast<long long>(grid.resolution) +
                                  static_cast<long long>(grid.resolution)) %
                                 static_cast<long long>(grid.resolution));
    CHECK(est.cdf.back() + f[last_index] == doctest::Approx(1.0).epsilon(1e-10));

    // Atoms at 0, 1/2, 1 with masses 1/4, 1/2, 1/4: F(0.75) = 3/4.
    const double target = 0.75;
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < est.x.size(); ++i)
        if (std::abs(est.x[i] - target) < std::abs(est.x[nearest] - target)) nearest = i;
    auto atoms = oracle::enumerate_atoms(spec);
    auto report = exact_bound_report(atoms, grid.period, grid.resolution);
    CHECK(std::abs(est.cdf[nearest] - 0.75) <= report.bound);
}

TEST_CASE("algorithm 2 equals the closed form at every grid point") {
    for (unsigned seed : {1u, 2u, 6u}) {
        auto spec = fixtures::seeded_spec(seed);
        for (std::size_t n : {256, 1000, 1024}) {   // covers the padded-length transform
            auto coeffs = spectral_coefficients(spec, build_grid(spec, n, 1.1));
            auto est = cdf_algorithm2(coeffs);
            auto closed = cdf_closed_form_grid(coeffs);
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(est.cdf[i] - closed[i]));
            CHECK(worst <= 1e-9);
        }
    }
}

TEST_CASE("algorithm 2 exactness holds at N = 2^14") {
    auto spec = fixtures::seeded_spec(3);
    auto coeffs = spectral_coefficients(spec, build_grid(spec, 1u << 14, 1.1));
    auto est = cdf_algorithm2(coeffs);
    auto closed = cdf_closed_form_grid(coeffs);
    double worst = 0.0;
    for (std::size_t i = 0; i < est.cdf.size(); ++i)
        worst = std::max(worst, std::abs(est.cdf[i] - closed[i]));
    CHECK(worst <= 1e-9);
}

TEST_CASE("algorithm 2: endpoints and increment normalization") {
    auto spec = fixtures::seeded_spec(8);
    auto grid = build_grid(spec, 1000, 1.1);
    const std::size_t n = grid.resolution;
    auto coeffs = spectral_coefficients(spec, grid);
    auto est = cdf_algorithm2(coeffs);

    CHECK(est.cdf.front() == 0.0);

    // Rebuild the corrected samples independently; the increments of the
    // emitted CDF are these values and a full cycle of them sums to 1.
    std::vector<std::complex<double>> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 0) {
            c[k] = coeffs.g[k];
        } else {
            const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
            const std::complex<double> phi =
                (std::polar(1.0, theta) - 1.0) / std::complex<double>(0.0, theta);
            c[k] = coeffs.g[k] * phi;
        }
    }
    auto h = fft::inverse_sum(c);
    std::vector<double> fc(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        fc[i] = (2.0 * h[i].real() - 1.0) / static_cast<double>(n);
        sum += fc[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));

    const long long m = static_cast<long long>(n);
    const std::size_t last =
        static_cast<std::size_t>((((grid.i_min + m - 1) % m) + m) % m);
    CHECK(est.cdf.back() + fc[last] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("algorithm 2 hits the enumerated CDF at a continuity point") {
    auto spec = fixtures::make_spec({{0.5, {0.0, 1.0}}, {0.5, {0.0, 1.0}}});
    auto grid = build_grid(spec, 4096, 1.1);
    auto coeffs = spectral_coefficients(spec, grid);
    auto est = cdf_algorithm2(coeffs);
    auto atoms = oracle::enumerate_atoms(spec);
    auto report = exact_bound_report(atoms, grid.period, grid.resolution);

    const double target = 0.25;
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < est.x.size(); ++i)
        if (std::abs(est.x[i] - target) < std::abs(est.x[nearest] - target)) nearest = i;
    CHECK(std::abs(est.cdf[nearest] - 0.25) <= report.bound);
}

TEST_CASE("closed form: window endpoints and domain check") {
    auto spec = fixtures::make_spec({{1.0, {-0.8, -0.1, 0.3, 0.9}}});   // symmetric grid, s != 0
    auto grid = build_grid(spec, 512, 1.2);
    auto coeffs = spectral_coefficients(spec, grid);

    const double x_left = grid.x0() + grid.shift;
    CHECK(std::abs(cdf_closed_form(coeffs, x_left)) <= 1e-12);
    CHECK(cdf_closed_form(coeffs, x_left + grid.period) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(cdf_closed_form(coeffs, x_left - 0.01 * grid.period), std::domain_error);
    CHECK_THROWS_AS(cdf_closed_form(coeffs, x_left + 1.01 * grid.period), std::domain_error);

    // Exact zero when the centered abscissa is bit-identical to x0 (s = 0).
    auto sym = fixtures::make_spec({{1.0, {-1.0, 1.0}}});
    auto sgrid = build_grid(sym, 64, 1.5);
    auto scoeffs = spectral_coefficients(sym, sgrid);
    CHECK(cdf_closed_form(scoeffs, sgrid.x0()) == 0.0);
}

TEST_CASE("cdf abscissae: strictly increasing with the grid step") {
    auto spec = fixtures::seeded_spec(10);
    auto grid = build_grid(spec, 777, 1.1);
    auto est = cdf_algorithm2(spectral_coefficients(spec, grid));
    for (std::size_t i = 1; i < est.x.size(); ++i) {
        CHECK(est.x[i] > est.x[i - 1]);
        CHECK(est.x[i] - est.x[i - 1] ==
              doctest::Approx(grid.step()).epsilon(1e-12));
    }
}

TEST_CASE("shift equivariance: translated observations translate the estimate") {
    auto base = fixtures::seeded_spec(12);
    const double c = 0.37;
    double coeff_sum = 0.0;
    std::vector<MixtureComponent> comps;
    for (const auto& comp : base.components()) {
        std::vector<double> shifted = comp.sample->values();
        for (double& v : shifted) v += c;
        comps.push_back({comp.coefficient, fixtures::make_sample(std::move(shifted))});
        coeff_sum += comp.coefficient;
    }
    MixtureSpec moved(std::move(comps));

    auto g0 = build_grid(base, 512, 1.1);
    auto g1 = build_grid(moved, 512, 1.1);
    auto e0 = cdf_algorithm2(spectral_coefficients(base, g0));
    auto e1 = cdf_algorithm2(spectral_coefficients(moved, g1));
    for (std::size_t i = 0; i < e0.x.size(); ++i) {
        CHECK(e1.x[i] - e0.x[i] == doctest::Approx(c * coeff_sum).epsilon(1e-12));
        CHECK(std::abs(e1.cdf[i] - e0.cdf[i]) <= 1e-12);
    }
}

TEST_CASE("dirichlet kernel: peaks, periodicity and trig identity") {
    const KernelParams p{64, 2.5};
    const double peak = (2.0 * 64 - 1.0) / 2.5;
    CHECK(dirichlet_kernel(p, 0.0) == peak);
    CHECK(dirichlet_kernel(p, 2.5) == doctest::Approx(peak).epsilon(1e-9));
    CHECK(dirichlet_kernel(p, -2.5) == doctest::Approx(peak).epsilon(1e-9));

    // Ratio form vs cosine-sum form on generic points.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng);
        CHECK(dirichlet_kernel(p, x) ==
              doctest::Approx(kernel_by_cosine_sum(p, x)).epsilon(1e-9).scale(peak));
    }

    // N = 2, T = 1, x = 1/4: numerator sin(3 pi/4), denominator sin(pi/4);
    // the cosine-sum form gives 1 + 2 cos(pi/2) = 1.
    const KernelParams small{2, 1.0};
    CHECK(dirichlet_kernel(small, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kernel_by_cosine_sum(small, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kernel integral: endpoints, midpoint and tail bound") {
    const KernelParams p{4096, 1.0};
    CHECK(kernel_integral(p, 0.0) == 0.0);
    CHECK(kernel_integral(p, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(kernel_integral(p, 0.5) == doctest::Approx(0.5).epsilon(1e-6));

    for (double period : {1.0, 3.7}) {
        for (std::size_t n : {256, 4096}) {
            const KernelParams params{n, period};
            for (double eps : {0.01, 0.05}) {
                const double cap = 1.0 / (3.14159265358979323846 * n * eps) + 1e-12;
                const double lo = period * eps;
                const double hi = period * (1.0 - eps);
                for (int j = 0; j < 1000; ++j) {
                    const double x = lo + (hi - lo) * j / 999.0;
                    const double err = std::abs(kernel_integral(params, x) - 0.5);
                    REQUIRE(err <= cap);
                }
            }
        }
    }
}

TEST_CASE("degenerate spec short-circuits to an exact step") {
    auto spec = fixtures::make_spec({{2.0, {1.5, 1.5}}});
    auto grid = build_grid(spec, 100, 1.1);
    REQUIRE(grid.degenerate);
    auto est = degenerate_estimate(grid, Algorithm::alg2);
    CHECK(est.x.size() == 100);
    CHECK(est.cdf.front() == 0.0);
    CHECK(est.cdf.back() == 1.0);
    CHECK(est.bound == 0.0);
    for (std::size_t i = 0; i < est.x.size(); ++i)
        CHECK(est.cdf[i] == (est.x[i] >= 3.0 ? 1.0 : 0.0));
}
