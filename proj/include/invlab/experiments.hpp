#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "invlab/inversion.hpp"
#include "invlab/matgen.hpp"
#include "invlab/metrics.hpp"

namespace invlab {

enum class OutputFormat { Json, Csv };

struct ExperimentConfig {
    std::size_t n = 256;
    double sigma_1 = 1e4;
    double sigma_n = 1e-4;
    std::uint64_t seed = 0;
    InverseMethod method = InverseMethod::GetriStyle;
    /// Right-hand side used for the corrupted-inverse comparison (accuracy)
    /// and written by `gen`.
    RhsMode rhs_mode = RhsMode::RandomX;
    OutputFormat output_format = OutputFormat::Json;
    std::optional<std::string> output_path;
    /// Wall times vary run to run, so they are only recorded on request.
    bool record_timings = false;
};

/// x_V = V b next to the GEPP solution of the same system.
struct RhsRun {
    RhsMode mode;
    SolveReport via_inverse;
    SolveReport via_gepp;
    BoundComparison bounds;  ///< observed = forward error of x_V
};

struct PhaseTiming {
    std::string phase;
    double seconds = 0.0;
};

struct AccuracyRecord {
    ExperimentConfig config;
    double kappa = 1.0;
    int iterations = 0;
    bool converged = true;
    ResidualReport residuals;
    RhsRun random_b;
    RhsRun random_x;
    /// Accurate inverse plus an unstructured error of norm ||V - A^{-1}||,
    /// applied to the config.rhs_mode right-hand side.
    SolveReport bad_inverse;
    std::vector<PhaseTiming> timings;
};

/// Builds the problem, inverts with config.method, solves both right-hand
/// side modes by V b and by GEPP, and evaluates the corrupted inverse.
AccuracyRecord run_accuracy(const ExperimentConfig& config);

/// Same, with the computed inverse replaced by `v` (test hook).
AccuracyRecord run_accuracy(const ExperimentConfig& config, const TestProblem& problem,
                            const InverseResult& inverse);

/// Rows {0, n/2, n-1} of V - A^{-1} projected on the left singular vectors.
struct Fig1Data {
    std::vector<std::string> labels;  ///< first, middle, last
    std::vector<ProjectionSpectrum> spectra;
};

Fig1Data fig1_spectra(const TestProblem& problem, const Matrix& v);
Fig1Data run_fig1(const ExperimentConfig& config);

nlohmann::ordered_json to_json(const ExperimentConfig& c);
nlohmann::ordered_json to_json(const SolveReport& r);
nlohmann::ordered_json to_json(const AccuracyRecord& r);
nlohmann::ordered_json to_json(const Fig1Data& d);

/// Header "row_label,j,sigma_j,magnitude", j counted from 1, 3n data rows.
void write_fig1_csv(std::ostream& os, const Fig1Data& d);

/// "field,value" rows keyed by the JSON pointer of every scalar leaf.
void write_flat_csv(std::ostream& os, const nlohmann::ordered_json& j);

std::string_view to_string(OutputFormat f);

}  // namespace invlab
