#include "mixcdf/bootstrap.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace mixcdf {

namespace {

constexpr double kRankTolerance = 1e-10;

// Householder QR of an n x p matrix (column-major storage). Throws on rank
// deficiency relative to the largest diagonal scale.
struct HouseholderQR {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;        // packed R above the diagonal, v below
    std::vector<double> v_head;   // leading element of each reflector
    std::vector<double> r_diag;

    HouseholderQR(const std::vector<std::vector<double>>& design, std::size_t n, std::size_t p)
        : rows(n), cols(p), a(n * p), v_head(p), r_diag(p) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < p; ++j)
                a[j * n + i] = design[i][j];

        for (std::size_t j = 0; j < p; ++j) {
            double norm = 0.0;
            for (std::size_t i = j; i < n; ++i) norm = std::hypot(norm, a[j * n + i]);
            const double pivot = a[j * n + j];
            const double alpha = pivot >= 0.0 ? -norm : norm;
            r_diag[j] = alpha;

            v_head[j] = pivot - alpha;
            // reflector v = x - alpha*e1 kept in place below the diagonal
            double vnorm2 = v_head[j] * v_head[j];
            for (std::size_t i = j + 1; i < n; ++i) vnorm2 += a[j * n + i] * a[j * n + i];

            if (vnorm2 > 0.0) {
                for (std::size_t c = j + 1; c < p; ++c) {
                    double dot = v_head[j] * a[c * n + j];
                    for (std::size_t i = j + 1; i < n; ++i) dot += a[j * n + i] * a[c * n + i];
                    const double f = 2.0 * dot / vnorm2;
                    a[c * n + j] -= f * v_head[j];
                    for (std::size_t i = j + 1; i < n; ++i) a[c * n + i] -= f * a[j * n + i];
                }
            }
        }

        double scale = 0.0;
        for (std::size_t j = 0; j < p; ++j) scale = std::max(scale, std::abs(r_diag[j]));
        for (std::size_t j = 0; j < p; ++j)
            if (std::abs(r_diag[j]) <= kRankTolerance * std::max(scale, 1.0))
                throw std::invalid_argument("design: rank deficient (column " +
                                            std::to_string(j) + ")");
    }

    double r(std::size_t i, std::size_t j) const {   // i < j entries of R
        return i == j ? r_diag[i] : a[j * rows + i];
    }

    void apply_qt(std::vector<double>& y) const {    // y <- Q' y
        for (std::size_t j = 0; j < cols; ++j) {
            double vnorm2 = v_head[j] * v_head[j];
            for (std::size_t i = j + 1; i < rows; ++i) vnorm2 += a[j * rows + i] * a[j * rows + i];
            if (vnorm2 == 0.0) continue;
            double dot = v_head[j] * y[j];
            for (std::size_t i = j + 1; i < rows; ++i) dot += a[j * rows + i] * y[i];
            const double f = 2.0 * dot / vnorm2;
            y[j] -= f * v_head[j];
            for (std::size_t i = j + 1; i < rows; ++i) y[i] -= f * a[j * rows + i];
        }
    }

    void apply_q(std::vector<double>& y) const {     // y <- Q y
        for (std::size_t jj = cols; jj > 0; --jj) {
            const std::size_t j = jj - 1;
            double vnorm2 = v_head[j] * v_head[j];
            for (std::size_t i = j + 1; i < rows; ++i) vnorm2 += a[j * rows + i] * a[j * rows + i];
            if (vnorm2 == 0.0) continue;
            double dot = v_head[j] * y[j];
            for (std::size_t i = j + 1; i < rows; ++i) dot += a[j * rows + i] * y[i];
            const double f = 2.0 * dot / vnorm2;
            y[j] -= f * v_head[j];
            for (std::size_t i = j + 1; i < rows; ++i) y[i] -= f * a[j * rows + i];
        }
    }

    std::vector<double> solve_r(std::vector<double> rhs) const {   // R x = rhs
        std::vector<double> x(cols);
        for (std::size_t ii = cols; ii > 0; --ii) {
            const std::size_t i = ii - 1;
            double s = rhs[i];
            for (std::size_t j = i + 1; j < cols; ++j) s -= r(i, j) * x[j];
            x[i] = s / r_diag[i];
        }
        return x;
    }

    std::vector<double> solve_rt(std::vector<double> rhs) const {  // R' x = rhs
        std::vector<double> x(cols);
        for (std::size_t i = 0; i < cols; ++i) {
            double s = rhs[i];
            for (std::size_t j = 0; j < i; ++j) s -= r(j, i) * x[j];
            x[i] = s / r_diag[i];
        }
        return x;
    }
};

void validate(const RegressionProblem& problem) {
    const std::size_t n = problem.design.size();
    if (n == 0)
        throw std::invalid_argument("design: empty design matrix");
    const std::size_t p = problem.design.front().size();
    if (p == 0)
        throw std::invalid_argument("design: zero predictor columns");
    for (const auto& row : problem.design) {
        if (row.size() != p)
            throw std::invalid_argument("design: ragged rows");
        for (double v : row)
            if (!std::isfinite(v))
                throw std::invalid_argument("design: entries must be finite");
    }
    if (problem.response.size() != n)
        throw std::invalid_argument("response: length must match design rows");
    for (double v : problem.response)
        if (!std::isfinite(v))
            throw std::invalid_argument("response: entries must be finite");
    if (problem.coefficient_index >= p)
        throw std::invalid_argument("coefficient_index: out of range");
    if (n < p)
        throw std::invalid_argument("design: fewer rows than columns");
}

} // namespace

MixtureSpec mean_bootstrap_spec(const Sample& sample) {
    auto shared = std::make_shared<const Sample>(sample);
    const double weight = 1.0 / static_cast<double>(shared->size());
    std::vector<MixtureComponent> components(shared->size(), {weight, shared});
    return MixtureSpec(std::move(components));
}

MixtureSpec residual_bootstrap_spec(const RegressionProblem& problem) {
    validate(problem);
    const std::size_t n = problem.design.size();
    const std::size_t p = problem.design.front().size();

    HouseholderQR qr(problem.design, n, p);

    std::vector<double> qty = problem.response;
    qr.apply_qt(qty);
    qty.resize(p);
    const std::vector<double> beta = qr.solve_r(std::move(qty));

    std::vector<double> residuals(n);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fit = 0.0;
        for (std::size_t j = 0; j < p; ++j) fit += problem.design[i][j] * beta[j];
        residuals[i] = problem.response[i] - fit;
        mean += residuals[i];
    }
    mean /= static_cast<double>(n);
    for (double& r : residuals) r -= mean;

    // w' = e_l' (X'X)^{-1} X' = (R^{-T} e_l)' Q1'  =>  w = Q1 (R^{-T} e_l)
    std::vector<double> e(p, 0.0);
    e[problem.coefficient_index] = 1.0;
    const std::vector<double> v = qr.solve_rt(std::move(e));
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j < p; ++j) w[j] = v[j];
    qr.apply_q(w);

    auto shared = std::make_shared<const Sample>(Sample(std::move(residuals)));
    std::vector<MixtureComponent> components;
    components.reserve(n);
    for (std::size_t j = 0; j < n; ++j) components.push_back({w[j], shared});
    return MixtureSpec(std::move(components));
}

} // namespace mixcdf
