// Command-line orchestration: data ingestion, pipeline configuration,
// quantile extraction and tabular/JSON output. The run() entry point is a
// library function so the whole surface is testable in-process.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mixcdf/types.hpp"

namespace mixcdf::cli {

enum class Mode { mixture, mean_boot, residual_boot };
enum class OutputFormat { csv, json };

struct RunConfig {
    std::string input_path;
    Mode mode = Mode::mixture;
    std::vector<double> coefficients;      // --coeffs (mixture mode)
    std::size_t coef_index = 0;            // --coef-index (residual-boot mode)
    std::size_t resolution = 1000;         // --N
    double kappa = 1.1;                    // --kappa
    Algorithm algorithm = Algorithm::alg2; // --algorithm
    std::vector<double> quantile_probs;    // --quantiles, each in (0,1)
    bool emit_density = false;             // --density
    bool emit_bound = false;               // --bound
    bool run_oracle = false;               // --oracle
    bool reference_check = false;          // --reference (rerun at 16x N)
    OutputFormat format = OutputFormat::csv;
    std::string output_path;               // empty or "-" writes to stdout
};

// Quantiles by linear interpolation of the running-max repaired CDF column;
// the stored estimate is never mutated. Results are clamped to the grid
// range and monotone in p.
std::vector<double> quantiles(const DistributionEstimate& estimate,
                              const std::vector<double>& probs);

// Executes the configured pipeline and writes the output file.
// Returns 0 on success, 2 on parse/validation failure (one-line diagnostic
// naming the offending field on stderr), 3 when --oracle hits the
// enumeration size guard.
int run(const RunConfig& config);

} // namespace mixcdf::cli
