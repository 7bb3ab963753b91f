// invlab: experiments on solving Ax = b by multiplying with a computed inverse.
//
//   invlab accuracy [--n N] [--sigma1 S] [--sigman S] [--seed K] [--method M]
//                   [--rhs random-b|random-x] [--format json|csv] [--out PATH]
//   invlab fig1     [same generation flags] [--format csv|json] [--out PATH]
//   invlab gen      [generation flags] [--rhs MODE] --out A.txt
//                   [--rhs-out b.txt] [--xref-out x.txt] [--inverse-out Ainv.txt]
//   invlab invert   --matrix A.txt --method M [--out V.txt]
//   invlab solve    --matrix A.txt --rhs-file b.txt (--via-inverse --inverse V.txt
//                   | --via-lu | --via-qr) [--xref x.txt] [--format json|csv] [--out PATH]
//
// The seed falls back to $INVLAB_SEED, then 0. Paths may be "-" for
// stdin/stdout. Exit codes: 0 ok, 2 usage, 3 parse, 4 dimension, 5 singular,
// 6 non-convergence, 1 anything else (I/O). Failures print a JSON error record
// on stderr.

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "invlab/experiments.hpp"
#include "invlab/matrix_io.hpp"

namespace {

using namespace invlab;
using json = nlohmann::ordered_json;

enum ExitCode : int {
    kOk = 0,
    kOther = 1,
    kUsage = 2,
    kParse = 3,
    kDimension = 4,
    kSingular = 5,
    kNonConvergence = 6,
};

int report_error(const std::string& kind, const std::string& message, int code,
                 const std::string& where = {}) {
    json rec{{"error", kind}, {"message", message}, {"exit_code", code}};
    if (!where.empty()) rec["where"] = where;
    std::cerr << rec.dump() << '\n';
    return code;
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path || *path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + *path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + *path + "' failed");
}

std::string render(const json& j, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        write_flat_csv(os, j);
        return os.str();
    }
    return j.dump(2) + "\n";
}

// Enum-valued flags are collected as strings and mapped after parsing.
struct RawFlags {
    std::optional<std::uint64_t> seed;
    std::string method = "getri";
    std::string rhs = "random-x";
    std::string format = "json";
};

void add_generation_flags(CLI::App* cmd, ExperimentConfig& cfg, RawFlags& raw) {
    cmd->add_option("--n", cfg.n, "matrix order")->check(CLI::Range(2, 1 << 16));
    cmd->add_option("--sigma1", cfg.sigma_1, "largest singular value");
    cmd->add_option("--sigman", cfg.sigma_n, "smallest singular value");
    cmd->add_option("--seed", raw.seed, "RNG seed (default $INVLAB_SEED or 0)");
    cmd->add_option("--rhs", raw.rhs, "right-hand side mode")
        ->check(CLI::IsMember({"random-b", "random-x"}));
}

void add_method_flag(CLI::App* cmd, RawFlags& raw) {
    cmd->add_option("--method", raw.method, "inversion method")
        ->check(CLI::IsMember(
            {"rows-gepp", "cols-gepp", "getri", "newton-left", "newton-right", "strassen"}));
}

void add_output_flags(CLI::App* cmd, ExperimentConfig& cfg, RawFlags& raw) {
    cmd->add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.output_path, "output path (default stdout)");
}

void apply_raw_flags(const RawFlags& raw, ExperimentConfig& cfg) {
    cfg.method = parse_inverse_method(raw.method).value();
    cfg.rhs_mode = parse_rhs_mode(raw.rhs).value();
    cfg.output_format = raw.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
}

std::uint64_t resolve_seed(const RawFlags& gf) {
    if (gf.seed) return *gf.seed;
    if (const char* env = std::getenv("INVLAB_SEED"); env && *env) {
        std::uint64_t s = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), s);
        if (ec != std::errc() || *ptr != '\0') {
            throw InvalidArgument("INVLAB_SEED is not an unsigned integer: '" + std::string(env) + "'");
        }
        return s;
    }
    return 0;
}

int cmd_accuracy(ExperimentConfig cfg) {
    const AccuracyRecord rec = run_accuracy(cfg);
    write_output(cfg.output_path, render(to_json(rec), cfg.output_format));
    if (!rec.converged) {
        return report_error("non_convergence",
                            std::string(to_string(cfg.method)) + " did not converge in " +
                                std::to_string(rec.iterations) + " iterations",
                            kNonConvergence);
    }
    return kOk;
}

int cmd_fig1(const ExperimentConfig& cfg) {
    const Fig1Data d = run_fig1(cfg);
    if (cfg.output_format == OutputFormat::Json) {
        write_output(cfg.output_path, to_json(d).dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_fig1_csv(os, d);
        write_output(cfg.output_path, os.str());
    }
    return kOk;
}

struct GenPaths {
    std::optional<std::string> rhs_out, xref_out, inverse_out;
};

int cmd_gen(const ExperimentConfig& cfg, const GenPaths& paths) {
    const TestProblem p = build_problem(cfg.n, cfg.sigma_1, cfg.sigma_n, cfg.seed);
    save_matrix(cfg.output_path.value_or("-"), p.a);
    if (paths.rhs_out || paths.xref_out) {
        const StreamId id = cfg.rhs_mode == RhsMode::RandomB ? StreamId::RandomB : StreamId::RandomX;
        Rng rng = problem_stream(cfg.seed, id);
        const RhsPair rhs = make_rhs(p, cfg.rhs_mode, rng);
        if (paths.rhs_out) save_vector(*paths.rhs_out, rhs.b);
        if (paths.xref_out) save_vector(*paths.xref_out, rhs.x_ref);
    }
    if (paths.inverse_out) save_matrix(*paths.inverse_out, p.a_inv);
    return kOk;
}

int cmd_invert(const std::string& matrix_path, InverseMethod method,
               const std::optional<std::string>& out) {
    const Matrix a = load_matrix(matrix_path);
    const InverseResult r = invert(a, method);
    if (!r.converged) {
        throw NonConvergence(std::string(to_string(method)) + " did not converge in " +
                                 std::to_string(r.iterations) + " iterations",
                             0.0);
    }
    save_matrix(out.value_or("-"), r.v);
    return kOk;
}

struct SolveFlags {
    std::string matrix_path = "-";
    std::string rhs_path;
    std::optional<std::string> inverse_path;
    std::optional<std::string> xref_path;
    bool via_inverse = false, via_lu = false, via_qr = false;
};

int cmd_solve(const SolveFlags& f, const ExperimentConfig& cfg) {
    const int routes = int(f.via_inverse) + int(f.via_lu) + int(f.via_qr);
    if (routes != 1) {
        return report_error("usage", "choose exactly one of --via-inverse, --via-lu, --via-qr", kUsage);
    }
    if (f.via_inverse && !f.inverse_path) {
        return report_error("usage", "--via-inverse needs --inverse PATH", kUsage);
    }
    const Matrix a = load_matrix(f.matrix_path);
    const Vector b = load_vector(f.rhs_path);
    if (!a.is_square() || a.rows() != b.size()) {
        throw DimensionMismatch("solve: matrix is " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " but right-hand side has length " +
                                std::to_string(b.size()));
    }
    std::optional<Vector> x_ref;
    if (f.xref_path) x_ref = load_vector(*f.xref_path);

    std::string route;
    Vector x(a.rows());
    if (f.via_inverse) {
        const Matrix v = load_matrix(*f.inverse_path);
        if (v.rows() != a.rows() || v.cols() != a.cols()) {
            throw DimensionMismatch("solve: inverse has the wrong order");
        }
        x = matvec(v, b);
        route = "inverse";
    } else if (f.via_lu) {
        x = solve_lu(lu_gepp(a), b);
        route = "lu";
    } else {
        x = solve_qr(qr_householder(a), b);
        route = "qr";
    }
    const SolveReport rep = solve_report(a, b, std::move(x), x_ref);

    json j{{"via", route}};
    const json fields = to_json(rep);
    for (const auto& [k, v] : fields.items()) j[k] = v;
    j["x"] = std::vector<double>(rep.x_v.values().begin(), rep.x_v.values().end());
    write_output(cfg.output_path, render(j, cfg.output_format));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invlab: accuracy of solving linear systems with a computed inverse"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    RawFlags raw;
    GenPaths gen_paths;
    SolveFlags solve_flags;
    std::string invert_matrix = "-";
    bool timings = false;

    auto* accuracy = app.add_subcommand("accuracy", "run the full inv(A)*b experiment");
    add_generation_flags(accuracy, cfg, raw);
    add_method_flag(accuracy, raw);
    add_output_flags(accuracy, cfg, raw);
    accuracy->add_flag("--timings", timings, "record wall time per phase");

    auto* fig1 = app.add_subcommand("fig1", "projections of rows of V - A^{-1} on left singular vectors");
    add_generation_flags(fig1, cfg, raw);
    add_method_flag(fig1, raw);
    add_output_flags(fig1, cfg, raw);

    auto* gen = app.add_subcommand("gen", "write a generated test matrix and right-hand side");
    add_generation_flags(gen, cfg, raw);
    gen->add_option("--out", cfg.output_path, "matrix output path (default stdout)");
    gen->add_option("--rhs-out", gen_paths.rhs_out, "right-hand side output path");
    gen->add_option("--xref-out", gen_paths.xref_out, "reference solution output path");
    gen->add_option("--inverse-out", gen_paths.inverse_out, "accurate inverse output path");

    auto* inv = app.add_subcommand("invert", "compute an approximate inverse of a matrix file");
    inv->add_option("--matrix", invert_matrix, "matrix file ('-' for stdin)");
    add_method_flag(inv, raw);
    inv->add_option("--out", cfg.output_path, "output path (default stdout)");

    auto* solve = app.add_subcommand("solve", "solve A x = b and report errors");
    solve->add_option("--matrix", solve_flags.matrix_path, "matrix file ('-' for stdin)");
    solve->add_option("--rhs-file", solve_flags.rhs_path, "right-hand side file")->required();
    solve->add_option("--inverse", solve_flags.inverse_path, "inverse file for --via-inverse");
    solve->add_option("--xref", solve_flags.xref_path, "reference solution for the forward error");
    solve->add_flag("--via-inverse", solve_flags.via_inverse, "x = V b");
    solve->add_flag("--via-lu", solve_flags.via_lu, "GEPP solve");
    solve->add_flag("--via-qr", solve_flags.via_qr, "Householder QR solve");
    add_output_flags(solve, cfg, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return report_error("usage", e.what(), kUsage);
    }

    try {
        cfg.seed = resolve_seed(raw);
        apply_raw_flags(raw, cfg);
        cfg.record_timings = timings;
        if (*accuracy) return cmd_accuracy(cfg);
        if (*fig1) return cmd_fig1(cfg);
        if (*gen) return cmd_gen(cfg, gen_paths);
        if (*inv) return cmd_invert(invert_matrix, cfg.method, cfg.output_path);
        if (*solve) return cmd_solve(solve_flags, cfg);
    } catch (const SingularMatrix& e) {
        return report_error("singular_matrix", e.what(), kSingular, e.where());
    } catch (const NonConvergence& e) {
        return report_error("non_convergence", e.what(), kNonConvergence);
    } catch (const DimensionMismatch& e) {
        return report_error("dimension_mismatch", e.what(), kDimension);
    } catch (const ParseError& e) {
        return report_error("parse_error", e.what(), kParse);
    } catch (const InvalidArgument& e) {
        return report_error("invalid_argument", e.what(), kUsage);
    } catch (const std::exception& e) {
        return report_error("error", e.what(), kOther);
    }
    return kUsage;
}
