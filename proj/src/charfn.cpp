#include "mixcdf/charfn.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mixcdf {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// k-range block size; phasors are re-seeded from trig at every block start,
// which caps recurrence drift and makes any 512-aligned partition of the
// k-range produce identical bits.
constexpr std::size_t kBlock = 512;

std::complex<double> unit_phasor(double turns) {
    return std::polar(1.0, -kTwoPi * turns);
}

// Pairwise sum over observations [lo, hi) of the per-observation phasor rows
// e^{-2 pi i a X_i (k0+j) dnu}, j = 0..len-1, accumulated into out.
void accumulate_rows(const std::vector<double>& xs, std::size_t lo, std::size_t hi,
                     double coefficient, double inv_period, std::size_t k0,
                     std::vector<std::complex<double>>& out) {
    if (hi - lo == 1) {
        const double u = coefficient * xs[lo] * inv_period;  // a * X_i * dnu
        std::complex<double> p = unit_phasor(u * static_cast<double>(k0));
        const std::complex<double> step = unit_phasor(u);
        for (auto& o : out) {
            o = p;
            p *= step;
        }
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    accumulate_rows(xs, lo, mid, coefficient, inv_period, k0, out);
    std::vector<std::complex<double>> right(out.size());
    accumulate_rows(xs, mid, hi, coefficient, inv_period, k0, right);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += right[j];
}

// g_k over the block [k0, k0+len): product over components of the averaged
// phasor rows, then the centering shift phase.
void fill_block(const MixtureSpec& spec, const GridSpec& grid, std::size_t k0,
                std::size_t len, std::complex<double>* g) {
    std::vector<std::complex<double>> block(len, {0.0, 0.0});
    std::vector<std::complex<double>> comp(len);
    bool first = true;
    for (const auto& c : spec.components()) {
        const auto& xs = c.sample->values();
        auto& target = first ? block : comp;
        accumulate_rows(xs, 0, xs.size(), c.coefficient, 1.0 / grid.period, k0, target);
        const double inv_n = 1.0 / static_cast<double>(xs.size());
        if (first) {
            for (auto& v : block) v *= inv_n;
            first = false;
        } else {
            for (std::size_t j = 0; j < len; ++j) block[j] *= comp[j] * inv_n;
        }
    }
    const double shift_turns = grid.shift / grid.period;  // s * dnu
    for (std::size_t j = 0; j < len; ++j) {
        const double k = static_cast<double>(k0 + j);
        g[j] = block[j] * std::polar(1.0, kTwoPi * shift_turns * k);
    }
}

} // namespace

std::complex<double> component_cf(const Sample& sample, double coefficient, double nu) {
    if (!std::isfinite(nu))
        throw std::invalid_argument("nu: must be finite");
    const auto& xs = sample.values();
    // Pairwise summation over observations.
    auto sum = [&](auto&& self, std::size_t lo, std::size_t hi) -> std::complex<double> {
        if (hi - lo <= 4) {
            std::complex<double> s{0.0, 0.0};
            for (std::size_t i = lo; i < hi; ++i)
                s += unit_phasor(coefficient * xs[i] * nu);
            return s;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return self(self, lo, mid) + self(self, mid, hi);
    };
    return sum(sum, 0, xs.size()) / static_cast<double>(xs.size());
}

std::complex<double> mixture_cf(const MixtureSpec& spec, double nu) {
    std::complex<double> prod{1.0, 0.0};
    for (const auto& c : spec.components())
        prod *= component_cf(*c.sample, c.coefficient, nu);
    return prod;
}

unsigned resolve_worker_count(unsigned requested) {
    unsigned workers = requested;
    if (workers == 0) {
        if (const char* env = std::getenv("MIXCDF_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) workers = static_cast<unsigned>(v);
        }
    }
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    return workers > 256 ? 256u : workers;
}

SpectralCoefficients spectral_coefficients(const MixtureSpec& spec, const GridSpec& grid,
                                           unsigned workers) {
    if (grid.degenerate)
        throw std::invalid_argument("grid: degenerate grid has no spectral coefficients");
    if (!(grid.period > 0.0) || !std::isfinite(grid.period) || !std::isfinite(grid.shift))
        throw std::invalid_argument("grid: period/shift must be finite and positive");
    const std::size_t n = grid.resolution;

    SpectralCoefficients coeffs;
    coeffs.grid = grid;
    coeffs.g.assign(n, {0.0, 0.0});

    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    unsigned nw = resolve_worker_count(workers);
    if (nw > blocks) nw = static_cast<unsigned>(blocks);

    auto work = [&](std::atomic<std::size_t>& next) {
        for (std::size_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
            const std::size_t k0 = b * kBlock;
            const std::size_t len = std::min(kBlock, n - k0);
            fill_block(spec, grid, k0, len, coeffs.g.data() + k0);
        }
    };

    std::atomic<std::size_t> next{0};
    if (nw <= 1) {
        work(next);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (unsigned t = 0; t < nw; ++t) pool.emplace_back([&] { work(next); });
        for (auto& th : pool) th.join();
    }

    coeffs.g[0] = {1.0, 0.0};
    return coeffs;
}

} // namespace mixcdf
