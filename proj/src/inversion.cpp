#include "mixcdf/inversion.hpp"

#include <cmath>
#include <stdexcept>

#include "mixcdf/fft.hpp"

namespace mixcdf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

std::size_t wrap_index(long long i, std::size_t n) {
    const long long m = static_cast<long long>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

// phi_k = (e^{2 pi i k/N} - 1) / (2 pi i k/N) = sinc(theta/2) e^{i theta/2},
// theta = 2 pi k/N; phi_0 = 1 (the k -> 0 limit).
std::complex<double> coefficient_correction(std::size_t k, std::size_t n) {
    if (k == 0) return {1.0, 0.0};
    const double half = kPi * static_cast<double>(k) / static_cast<double>(n);
    return std::polar(std::sin(half) / half, half);
}

void check_valid(const SpectralCoefficients& coeffs) {
    if (coeffs.grid.degenerate)
        throw std::invalid_argument("coeffs: degenerate grid");
    if (coeffs.g.size() != coeffs.grid.resolution || coeffs.g.empty())
        throw std::invalid_argument("coeffs: coefficient count does not match grid resolution");
}

// Cyclic cumulative sum F_{i'} = sum_{i'' = i_min}^{i'-1} f_{i'' mod N} over
// the grid window, plus the de-centered abscissae.
DistributionEstimate accumulate(const std::vector<double>& f, const GridSpec& grid,
                                Algorithm algorithm) {
    const std::size_t n = grid.resolution;
    DistributionEstimate est;
    est.algorithm = algorithm;
    est.grid = grid;
    est.x.resize(n);
    est.cdf.resize(n);
    const double dx = grid.step();
    double running = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const long long i = grid.i_min + static_cast<long long>(t);
        est.x[t] = static_cast<double>(i) * dx + grid.shift;
        est.cdf[t] = running;
        running += f[wrap_index(i, n)];
    }
    return est;
}

std::vector<double> samples_from(const std::vector<std::complex<double>>& c) {
    const std::size_t n = c.size();
    std::vector<std::complex<double>> h = fft::inverse_sum(c);
    std::vector<double> f(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        f[i] = (2.0 * h[i].real() - 1.0) * inv_n;
    return f;
}

} // namespace

std::vector<double> density_samples(const SpectralCoefficients& coeffs) {
    check_valid(coeffs);
    return samples_from(coeffs.g);
}

double density_sample_at(const SpectralCoefficients& coeffs, double x_centered) {
    check_valid(coeffs);
    const std::size_t n = coeffs.grid.resolution;
    const double q = x_centered / coeffs.grid.period;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k)
        acc += coeffs.g[k] * std::polar(1.0, kTwoPi * q * static_cast<double>(k));
    return (2.0 * acc.real() - 1.0) / static_cast<double>(n);
}

double smooth_density(const SpectralCoefficients& coeffs, double x) {
    check_valid(coeffs);
    const GridSpec& g = coeffs.grid;
    const double xc = x - g.shift;
    if (xc < g.kappa * g.z_min || xc > g.kappa * g.z_max) return 0.0;
    return static_cast<double>(g.resolution) / g.period * density_sample_at(coeffs, xc);
}

DistributionEstimate cdf_algorithm1(const SpectralCoefficients& coeffs) {
    check_valid(coeffs);
    return accumulate(density_samples(coeffs), coeffs.grid, Algorithm::alg1);
}

DistributionEstimate cdf_algorithm2(const SpectralCoefficients& coeffs) {
    check_valid(coeffs);
    const std::size_t n = coeffs.grid.resolution;
    std::vector<std::complex<double>> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = coeffs.g[k] * coefficient_correction(k, n);
    return accumulate(samples_from(c), coeffs.grid, Algorithm::alg2);
}

double cdf_closed_form(const SpectralCoefficients& coeffs, double x) {
    check_valid(coeffs);
    const GridSpec& g = coeffs.grid;
    const std::size_t n = g.resolution;
    const double x0 = g.x0();
    const double xc = x - g.shift;
    const double tol = 1e-9 * g.period;
    if (xc < x0 - tol || xc > x0 + g.period + tol)
        throw std::domain_error("x: outside the period window [x0, x0 + T]");

    const double q = xc / g.period;
    const double q0 = x0 / g.period;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const std::complex<double> de =
            std::polar(1.0, kTwoPi * q * kk) - std::polar(1.0, kTwoPi * q0 * kk);
        acc += coeffs.g[k] * de * std::complex<double>(0.0, -1.0 / (kTwoPi * kk));
    }
    return (xc - x0) / g.period + 2.0 * acc.real();
}

std::vector<double> cdf_closed_form_grid(const SpectralCoefficients& coeffs) {
    check_valid(coeffs);
    const GridSpec& g = coeffs.grid;
    const std::size_t n = g.resolution;
    const bool pow2 = (n & (n - 1)) == 0;
    const std::size_t mask = n - 1;

    std::vector<std::complex<double>> unit(n);
    for (std::size_t t = 0; t < n; ++t)
        unit[t] = std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(n));
    std::vector<std::complex<double>> w(n);
    for (std::size_t k = 1; k < n; ++k)
        w[k] = coeffs.g[k] * std::complex<double>(0.0, -1.0 / (kTwoPi * static_cast<double>(k)));

    const std::size_t m0 = wrap_index(g.i_min, n);
    std::complex<double> ref{0.0, 0.0};
    for (std::size_t k = 1; k < n; ++k)
        ref += w[k] * unit[pow2 ? (m0 * k) & mask : (m0 * k) % n];

    std::vector<double> out(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t mi = wrap_index(g.i_min + static_cast<long long>(t), n);
        double re = 0.0;
        if (pow2) {
            for (std::size_t k = 1; k < n; ++k) {
                const std::complex<double> e = unit[(mi * k) & mask];
                re += w[k].real() * e.real() - w[k].imag() * e.imag();
            }
        } else {
            for (std::size_t k = 1; k < n; ++k) {
                const std::complex<double> e = unit[(mi * k) % n];
                re += w[k].real() * e.real() - w[k].imag() * e.imag();
            }
        }
        out[t] = static_cast<double>(t) * inv_n + 2.0 * (re - ref.real());
    }
    return out;
}

namespace {
void check_kernel_params(const KernelParams& params) {
    if (params.resolution < 2 || !(params.period > 0.0) || !std::isfinite(params.period))
        throw std::invalid_argument("kernel params: need N >= 2 and finite T > 0");
}
} // namespace

double dirichlet_kernel(const KernelParams& params, double x) {
    check_kernel_params(params);
    const double n = static_cast<double>(params.resolution);
    const double t = params.period;
    const double r = x / t;
    const double rho = r - std::nearbyint(r);   // periodic reduction, |rho| <= 1/2
    const double den_arg = kPi * rho;           // distance of 2*pi*x/(2T) to pi*Z
    if (std::abs(den_arg) < 1e-9)
        return (2.0 * n - 1.0) / t;
    return std::sin((2.0 * n - 1.0) * den_arg) / std::sin(den_arg) / t;
}

double kernel_integral(const KernelParams& params, double x) {
    check_kernel_params(params);
    const double t = params.period;
    const double r = x / t;
    double acc = 0.0;
    for (std::size_t k = 1; k < params.resolution; ++k) {
        const double u = static_cast<double>(k) * r;
        const double frac = u - std::floor(u);
        acc += std::sin(kTwoPi * frac) / static_cast<double>(k);
    }
    return r + acc / kPi;
}

DistributionEstimate degenerate_estimate(const GridSpec& grid, Algorithm algorithm) {
    if (!grid.degenerate)
        throw std::invalid_argument("grid: degenerate_estimate needs a degenerate grid");
    const std::size_t n = grid.resolution;
    const double c = grid.shift;
    DistributionEstimate est;
    est.algorithm = algorithm;
    est.grid = grid;
    est.bound = 0.0;
    est.x.resize(n);
    est.cdf.resize(n);
    const double dx = 2.0 / static_cast<double>(n - 1);
    for (std::size_t t = 0; t < n; ++t) {
        est.x[t] = c - 1.0 + static_cast<double>(t) * dx;
        est.cdf[t] = est.x[t] >= c ? 1.0 : 0.0;
    }
    return est;
}

} // namespace mixcdf
