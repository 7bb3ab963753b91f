#include "invlab/experiments.hpp"

#include <chrono>
#include <ostream>

#include "invlab/matrix_io.hpp"

namespace invlab {

namespace {

using json = nlohmann::ordered_json;

class PhaseClock {
public:
    explicit PhaseClock(std::vector<PhaseTiming>* sink) : sink_(sink) {}
    void mark(std::string phase) {
        const auto now = std::chrono::steady_clock::now();
        if (sink_) {
            sink_->push_back({std::move(phase), std::chrono::duration<double>(now - last_).count()});
        }
        last_ = now;
    }

private:
    std::vector<PhaseTiming>* sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

RhsRun run_rhs(const TestProblem& p, const Matrix& v, const LuFactors& lu, const RhsPair& rhs) {
    SolveReport inv = solve_report(p.a, rhs.b, matvec(v, rhs.b), rhs.x_ref);
    SolveReport gepp = solve_report(p.a, rhs.b, solve_lu(lu, rhs.b), rhs.x_ref);
    BoundComparison bounds = bound_comparison(p.kappa, *inv.forward_error_rel);
    return {rhs.mode, std::move(inv), std::move(gepp), bounds};
}

json bounds_json(const BoundComparison& b) {
    return json{{"kappa", b.kappa},
                {"loose_bound", b.loose_bound},
                {"tight_bound", b.tight_bound},
                {"observed_forward_error", b.observed_forward_error}};
}

json rhs_json(const RhsRun& r) {
    return json{{"mode", std::string(to_string(r.mode))},
                {"via_inverse", to_json(r.via_inverse)},
                {"via_gepp", to_json(r.via_gepp)},
                {"bounds", bounds_json(r.bounds)}};
}

void flatten_into(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten_into(value, prefix + "/" + key, os);
        return;
    }
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], prefix + "/" + std::to_string(i), os);
        return;
    }
    os << prefix << ',';
    if (j.is_number_float()) {
        os << format_double(j.get<double>());
    } else if (j.is_string()) {
        os << j.get<std::string>();
    } else if (!j.is_null()) {
        os << j.dump();
    }
    os << '\n';
}

}  // namespace

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

AccuracyRecord run_accuracy(const ExperimentConfig& config) {
    std::vector<PhaseTiming> timings;
    PhaseClock clock(config.record_timings ? &timings : nullptr);
    const TestProblem problem = build_problem(config.n, config.sigma_1, config.sigma_n, config.seed);
    clock.mark("generate");
    const InverseResult inverse = invert(problem.a, config.method);
    clock.mark("invert");
    AccuracyRecord rec = run_accuracy(config, problem, inverse);
    clock.mark("measure");
    if (config.record_timings) rec.timings = std::move(timings);
    return rec;
}

AccuracyRecord run_accuracy(const ExperimentConfig& config, const TestProblem& problem,
                            const InverseResult& inverse) {
    const Matrix& v = inverse.v;
    ResidualReport res = residuals(v, problem.a, problem.a_inv);

    Rng rng_b = problem_stream(config.seed, StreamId::RandomB);
    Rng rng_x = problem_stream(config.seed, StreamId::RandomX);
    const RhsPair rhs_b = make_rhs(problem, RhsMode::RandomB, rng_b);
    const RhsPair rhs_x = make_rhs(problem, RhsMode::RandomX, rng_x);

    const LuFactors lu = lu_gepp(problem.a);
    RhsRun run_b = run_rhs(problem, v, lu, rhs_b);
    RhsRun run_x = run_rhs(problem, v, lu, rhs_x);

    Rng rng_bad = problem_stream(config.seed, StreamId::BadInverse);
    const Matrix bad = bad_inverse(problem, v, rng_bad);
    const RhsPair& rhs_bad = config.rhs_mode == RhsMode::RandomB ? rhs_b : rhs_x;
    SolveReport bad_rep = solve_report(problem.a, rhs_bad.b, matvec(bad, rhs_bad.b), rhs_bad.x_ref);

    return AccuracyRecord{config,
                          problem.kappa,
                          inverse.iterations,
                          inverse.converged,
                          std::move(res),
                          std::move(run_b),
                          std::move(run_x),
                          std::move(bad_rep),
                          {}};
}

Fig1Data fig1_spectra(const TestProblem& problem, const Matrix& v) {
    const std::size_t n = problem.order();
    Fig1Data d;
    const std::pair<const char*, std::size_t> rows[] = {{"first", 0}, {"middle", n / 2}, {"last", n - 1}};
    for (const auto& [label, row] : rows) {
        d.labels.emplace_back(label);
        d.spectra.push_back(gamma_projection_spectrum(v, problem.a_inv, problem.svd, row));
    }
    return d;
}

Fig1Data run_fig1(const ExperimentConfig& config) {
    const TestProblem problem = build_problem(config.n, config.sigma_1, config.sigma_n, config.seed);
    const InverseResult inverse = invert(problem.a, config.method);
    return fig1_spectra(problem, inverse.v);
}

json to_json(const ExperimentConfig& c) {
    json j{{"n", c.n},
           {"sigma_1", c.sigma_1},
           {"sigma_n", c.sigma_n},
           {"seed", c.seed},
           {"method", std::string(to_string(c.method))},
           {"rhs", std::string(to_string(c.rhs_mode))}};
    return j;
}

json to_json(const SolveReport& r) {
    json j;
    if (r.forward_error_rel) j["forward_error"] = *r.forward_error_rel;
    j["backward_error"] = r.backward_error;
    j["residual_norm"] = r.residual_norm;
    return j;
}

json to_json(const AccuracyRecord& r) {
    json res{{"left_residual", r.residuals.left_residual},
             {"right_residual", r.residuals.right_residual}};
    if (r.residuals.gamma_rel) res["gamma_rel"] = *r.residuals.gamma_rel;

    json j{{"config", to_json(r.config)},
           {"kappa", r.kappa},
           {"inverse", json{{"method", std::string(to_string(r.config.method))},
                            {"iterations", r.iterations},
                            {"converged", r.converged}}},
           {"residuals", res},
           {"random_b", rhs_json(r.random_b)},
           {"random_x", rhs_json(r.random_x)},
           {"bad_inverse", json{{"rhs", std::string(to_string(r.config.rhs_mode))},
                                {"solve", to_json(r.bad_inverse)}}}};
    if (!r.timings.empty()) {
        json t = json::object();
        for (const auto& p : r.timings) t[p.phase] = p.seconds;
        j["timings_seconds"] = t;
    }
    return j;
}

json to_json(const Fig1Data& d) {
    json rows = json::array();
    for (std::size_t k = 0; k < d.spectra.size(); ++k) {
        rows.push_back(json{{"label", d.labels[k]},
                            {"row_index", d.spectra[k].row_index},
                            {"sigmas", d.spectra[k].sigmas},
                            {"magnitudes", d.spectra[k].magnitudes}});
    }
    return json{{"rows", rows}};
}

void write_fig1_csv(std::ostream& os, const Fig1Data& d) {
    os << "row_label,j,sigma_j,magnitude\n";
    for (std::size_t k = 0; k < d.spectra.size(); ++k) {
        const ProjectionSpectrum& s = d.spectra[k];
        for (std::size_t j = 0; j < s.sigmas.size(); ++j) {
            os << d.labels[k] << ',' << (j + 1) << ',' << format_double(s.sigmas[j]) << ','
               << format_double(s.magnitudes[j]) << '\n';
        }
    }
}

void write_flat_csv(std::ostream& os, const json& j) {
    os << "field,value\n";
    flatten_into(j, "", os);
}

}  // namespace invlab
