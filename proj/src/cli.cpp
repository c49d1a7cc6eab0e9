#include "mixcdf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mixcdf/bootstrap.hpp"
#include "mixcdf/charfn.hpp"
#include "mixcdf/error_bound.hpp"
#include "mixcdf/inversion.hpp"
#include "mixcdf/oracle.hpp"

namespace mixcdf::cli {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("input: cannot open '" + path + "'");
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument("trailing junk");
            values.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("input: line " + std::to_string(lineno) +
                                        " is not a number: '" + token + "'");
        }
    }
    if (values.empty())
        throw std::invalid_argument("input: no values in '" + path + "'");
    return values;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        out.push_back(cell);
    }
    return out;
}

RegressionProblem parse_regression_csv(const std::string& path, std::size_t coef_index) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("input: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("input: empty regression file");
    const auto header = split_csv(line);
    if (header.size() < 2)
        throw std::invalid_argument("input: regression header needs y plus predictors");

    RegressionProblem problem;
    problem.coefficient_index = coef_index;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw std::invalid_argument("input: line " + std::to_string(lineno) +
                                        " has " + std::to_string(cells.size()) +
                                        " fields, expected " + std::to_string(header.size()));
        std::vector<double> row(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            try {
                std::size_t used = 0;
                row[c] = std::stod(cells[c], &used);
                if (used != cells[c].size()) throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                throw std::invalid_argument("input: line " + std::to_string(lineno) +
                                            " field '" + cells[c] + "' is not a number");
            }
        }
        problem.response.push_back(row[0]);
        problem.design.emplace_back(row.begin() + 1, row.end());
    }
    if (problem.response.empty())
        throw std::invalid_argument("input: regression file has no data rows");
    return problem;
}

MixtureSpec build_spec(const RunConfig& config) {
    switch (config.mode) {
        case Mode::mixture: {
            if (config.coefficients.empty())
                throw std::invalid_argument("coeffs: required for --mode mixture");
            auto shared = std::make_shared<const Sample>(Sample(parse_sample_file(config.input_path)));
            std::vector<MixtureComponent> comps;
            comps.reserve(config.coefficients.size());
            for (double a : config.coefficients) comps.push_back({a, shared});
            return MixtureSpec(std::move(comps));
        }
        case Mode::mean_boot:
            return mean_bootstrap_spec(Sample(parse_sample_file(config.input_path)));
        case Mode::residual_boot:
            return residual_bootstrap_spec(
                parse_regression_csv(config.input_path, config.coef_index));
    }
    throw std::invalid_argument("mode: unknown mode");
}

DistributionEstimate compute_estimate(const MixtureSpec& spec, std::size_t resolution,
                                      double kappa, Algorithm algorithm, bool with_density) {
    const GridSpec grid = build_grid(spec, resolution, kappa);
    if (grid.degenerate)
        return degenerate_estimate(grid, algorithm);
    const SpectralCoefficients coeffs = spectral_coefficients(spec, grid);
    DistributionEstimate est =
        algorithm == Algorithm::alg1 ? cdf_algorithm1(coeffs) : cdf_algorithm2(coeffs);
    if (with_density) {
        const std::vector<double> f = density_samples(coeffs);
        est.density.resize(grid.resolution);
        const double scale = static_cast<double>(grid.resolution) / grid.period;
        const double lo = grid.kappa * grid.z_min;
        const double hi = grid.kappa * grid.z_max;
        for (std::size_t t = 0; t < grid.resolution; ++t) {
            const long long i = grid.i_min + static_cast<long long>(t);
            const double xc = est.x[t] - grid.shift;
            const long long m = static_cast<long long>(grid.resolution);
            const std::size_t wrapped = static_cast<std::size_t>(((i % m) + m) % m);
            est.density[t] = (xc >= lo && xc <= hi) ? scale * f[wrapped] : 0.0;
        }
    }
    return est;
}

void write_csv(std::ostream& out, const DistributionEstimate& est) {
    const bool with_density = !est.density.empty();
    out << (with_density ? "x,cdf,density\n" : "x,cdf\n");
    for (std::size_t i = 0; i < est.x.size(); ++i) {
        out << format_double(est.x[i]) << ',' << format_double(est.cdf[i]);
        if (with_density) out << ',' << format_double(est.density[i]);
        out << '\n';
    }
}

nlohmann::ordered_json to_json(const DistributionEstimate& est,
                               const std::optional<ErrorBoundReport>& report,
                               const std::vector<double>& probs,
                               const std::vector<double>& quantile_values,
                               const std::optional<nlohmann::ordered_json>& oracle_info) {
    nlohmann::ordered_json j;
    j["algorithm"] = est.algorithm == Algorithm::alg1 ? "alg1" : "alg2";
    j["resolution"] = est.grid.resolution;
    j["kappa"] = est.grid.kappa;
    j["degenerate"] = est.grid.degenerate;
    j["period"] = est.grid.period;
    j["shift"] = est.grid.shift;
    j["x"] = est.x;
    j["cdf"] = est.cdf;
    if (!est.density.empty()) j["density"] = est.density;
    if (est.bound) j["uniform_bound"] = *est.bound;
    if (report) {
        j["bound"] = {{"value", report->bound},
                      {"m2", report->m2},
                      {"epsilon_star", report->epsilon_star},
                      {"n_resolution", report->n_resolution},
                      {"source", to_string(report->m2_source)}};
    }
    if (!probs.empty()) {
        nlohmann::ordered_json q = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < probs.size(); ++i)
            q.push_back({{"p", probs[i]}, {"x", quantile_values[i]}});
        j["quantiles"] = q;
    }
    if (oracle_info) j["oracle"] = *oracle_info;
    return j;
}

} // namespace

std::vector<double> quantiles(const DistributionEstimate& estimate,
                              const std::vector<double>& probs) {
    for (double p : probs)
        if (!(p > 0.0) || !(p < 1.0))
            throw std::invalid_argument("quantiles: probabilities must lie in (0,1)");

    // Running-max repair; the stored estimate keeps its raw values.
    std::vector<double> repaired(estimate.cdf.size());
    double running = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < estimate.cdf.size(); ++i) {
        running = std::max(running, estimate.cdf[i]);
        repaired[i] = running;
    }

    std::vector<double> out;
    out.reserve(probs.size());
    for (double p : probs) {
        const auto it = std::lower_bound(repaired.begin(), repaired.end(), p);
        if (it == repaired.begin()) {
            out.push_back(estimate.x.front());
            continue;
        }
        if (it == repaired.end()) {
            out.push_back(estimate.x.back());
            continue;
        }
        const std::size_t i = static_cast<std::size_t>(it - repaired.begin());
        const double c0 = repaired[i - 1];
        const double c1 = repaired[i];
        const double x0 = estimate.x[i - 1];
        const double x1 = estimate.x[i];
        out.push_back(c1 > c0 ? x0 + (p - c0) / (c1 - c0) * (x1 - x0) : x1);
    }
    return out;
}

int run(const RunConfig& config) {
    try {
        if (config.resolution < 2)
            throw std::invalid_argument("N: resolution must be at least 2");
        if (!(config.kappa > 1.0))
            throw std::invalid_argument("kappa: must be > 1");
        for (double p : config.quantile_probs)
            if (!(p > 0.0) || !(p < 1.0))
                throw std::invalid_argument("quantiles: probabilities must lie in (0,1)");
        if (config.input_path.empty())
            throw std::invalid_argument("input: path is required");

        const MixtureSpec spec = build_spec(config);
        const bool need_density = config.emit_density || config.emit_bound;
        DistributionEstimate est = compute_estimate(spec, config.resolution, config.kappa,
                                                    config.algorithm, need_density);

        std::optional<oracle::AtomSet> atoms;
        if (config.run_oracle) atoms = oracle::enumerate_atoms(spec);

        std::optional<ErrorBoundReport> report;
        if (config.emit_bound && !est.grid.degenerate) {
            if (atoms) {
                report = exact_bound_report(*atoms, est.grid.period, est.grid.resolution);
            } else {
                const double m2 = estimate_m2_from_density(est, est.grid);
                report = make_report(m2, est.grid.resolution, M2Source::density_rule_of_thumb);
            }
            est.bound = report->bound;
        }
        if (!config.emit_density) est.density.clear();

        std::vector<double> qvalues;
        if (!config.quantile_probs.empty()) qvalues = quantiles(est, config.quantile_probs);

        std::optional<nlohmann::ordered_json> oracle_info;
        if (atoms) {
            double max_err = 0.0;
            for (std::size_t i = 0; i < est.x.size(); ++i)
                max_err = std::max(max_err,
                                   std::abs(est.cdf[i] - oracle::exact_cdf(*atoms, est.x[i])));
            nlohmann::ordered_json o;
            o["atom_count"] = atoms->atoms.size();
            o["multiset_size"] = atoms->total_count;
            o["max_abs_cdf_error"] = max_err;
            oracle_info = o;
            std::cout << "oracle: atoms=" << atoms->atoms.size()
                      << " max_abs_cdf_error=" << format_double(max_err) << "\n";
        }

        if (report) {
            std::cout << "bound"
                      << (report->m2_source == M2Source::density_rule_of_thumb
                              ? " (heuristic M2 rule of thumb)"
                              : "")
                      << ": " << format_double(report->bound)
                      << " m2=" << format_double(report->m2)
                      << " epsilon_star=" << format_double(report->epsilon_star)
                      << " source=" << to_string(report->m2_source) << "\n";
        }

        for (std::size_t i = 0; i < qvalues.size(); ++i)
            std::cout << "quantile p=" << format_double(config.quantile_probs[i])
                      << " x=" << format_double(qvalues[i]) << "\n";

        if (config.reference_check) {
            std::vector<double> probs = config.quantile_probs;
            if (probs.empty()) probs = {0.025, 0.975};
            DistributionEstimate ref = compute_estimate(spec, 16 * config.resolution,
                                                        config.kappa, config.algorithm, false);
            const std::vector<double> qa = quantiles(est, probs);
            const std::vector<double> qb = quantiles(ref, probs);
            const double cell = est.grid.degenerate
                                    ? est.x[1] - est.x[0]
                                    : est.grid.step();
            double worst = 0.0;
            for (std::size_t i = 0; i < probs.size(); ++i)
                worst = std::max(worst, std::abs(qa[i] - qb[i]) / cell);
            std::cout << "reference: max quantile deviation = " << format_double(worst)
                      << " grid cells (16x resolution rerun)\n";
        }

        std::ostringstream body;
        if (config.format == OutputFormat::csv) {
            write_csv(body, est);
        } else {
            body << to_json(est, report, config.quantile_probs, qvalues, oracle_info).dump(2)
                 << '\n';
        }

        if (config.output_path.empty() || config.output_path == "-") {
            std::cout << body.str();
        } else {
            std::ofstream out(config.output_path, std::ios::binary);
            if (!out)
                throw std::invalid_argument("output: cannot open '" + config.output_path + "'");
            out << body.str();
        }
        return 0;
    } catch (const oracle::enumeration_limit_error& e) {
        std::cerr << "error: oracle: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace mixcdf::cli
