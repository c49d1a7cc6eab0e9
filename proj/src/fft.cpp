#include "mixcdf/fft.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mixcdf::fft {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// exp(sign * i*pi * t^2 / n) with the exponent reduced mod 2*pi exactly
// in integers (t^2 has period 2n).
std::complex<double> chirp(std::uint64_t t, std::size_t n, int sign) {
    const std::uint64_t r = (t * t) % (2 * static_cast<std::uint64_t>(n));
    const double angle = sign * kPi * static_cast<double>(r) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

} // namespace

void transform_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n))
        throw std::invalid_argument("transform_pow2: length must be a power of two");
    if (n == 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<std::complex<double>> w(n / 2);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double base = sign * 2.0 * kPi / static_cast<double>(len);
        const std::size_t half = len / 2;
        for (std::size_t j = 0; j < half; ++j)
            w[j] = std::polar(1.0, base * static_cast<double>(j));
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + half] * w[j];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
}

std::vector<std::complex<double>> inverse_sum(const std::vector<std::complex<double>>& c) {
    const std::size_t n = c.size();
    if (n == 0)
        throw std::invalid_argument("inverse_sum: empty input");
    if (n == 1) return c;

    if (is_pow2(n)) {
        std::vector<std::complex<double>> a = c;
        transform_pow2(a, +1);
        return a;
    }

    // Bluestein: 2*i*k = i^2 + k^2 - (i-k)^2 turns the sum into a linear
    // convolution of c_k * w^{k^2} with w^{-t^2}, done on a padded pow2 grid.
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> a(m, {0.0, 0.0});
    std::vector<std::complex<double>> b(m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k)
        a[k] = c[k] * chirp(k, n, +1);
    b[0] = {1.0, 0.0};
    for (std::size_t t = 1; t < n; ++t) {
        const std::complex<double> v = chirp(t, n, -1);
        b[t] = v;
        b[m - t] = v;
    }

    transform_pow2(a, -1);
    transform_pow2(b, -1);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    transform_pow2(a, +1);

    std::vector<std::complex<double>> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i] * scale * chirp(i, n, +1);
    return out;
}

} // namespace mixcdf::fft
