// fremder: command-line front end.
//
// Exit codes: 0 success or decided, 1 undecided (NotFound), 2 input error,
// 3 hypothesis error. The report goes to stdout, diagnostics to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fremder/core.hpp"
#include "fremder/general.hpp"
#include "fremder/kernels.hpp"
#include "fremder/matrix_io.hpp"
#include "fremder/report.hpp"
#include "fremder/structured.hpp"

namespace {

using namespace fremder;

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;

struct Options {
    std::string path;
    std::string format = "json";
    std::optional<double> residual_tol;
    std::optional<double> zero_tol;
    std::optional<int> restarts;
    std::optional<std::uint64_t> seed;
    std::optional<int> theta_samples;
    std::optional<std::string> z;
    bool region = false;
    bool dual = false;
};

void emit(const Report& r, const Options& opt) {
    if (opt.format == "text") {
        std::cout << render_text(r);
    } else {
        std::cout << to_json(r).dump(2) << '\n';
    }
}

int fail(Report r, const Options& opt, const std::string& status, const std::string& message, int code) {
    std::cerr << "fremder: " << message << '\n';
    r.status = status;
    r.diagnostics["error"] = message;
    emit(r, opt);
    return code;
}

SolverConfig make_config(const Options& opt) {
    SolverConfig cfg;
    if (opt.residual_tol) cfg.residual_tol = *opt.residual_tol;
    if (opt.zero_tol) cfg.zero_tol = *opt.zero_tol;
    if (opt.restarts) cfg.restarts = *opt.restarts;
    if (opt.theta_samples) cfg.theta_samples = *opt.theta_samples;
    if (opt.seed) {
        cfg.seed = *opt.seed;
    } else if (const char* env = std::getenv("FREMDER_SEED"); env != nullptr && *env != '\0') {
        std::size_t used = 0;
        try {
            cfg.seed = std::stoull(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != std::string(env).size()) throw PreconditionError("FREMDER_SEED is not an unsigned integer");
    }
    cfg.validate();
    return cfg;
}

void describe_config(Report& r, const SolverConfig& cfg) {
    r.diagnostics["residual_tol"] = format_real(cfg.residual_tol);
    r.diagnostics["zero_tol"] = format_real(cfg.zero_tol);
    r.diagnostics["restarts"] = std::to_string(cfg.restarts);
    r.diagnostics["seed"] = std::to_string(cfg.seed);
    r.diagnostics["theta_samples"] = std::to_string(cfg.theta_samples);
    r.diagnostics["kernel_isa"] = std::string(kernels::to_string(kernels::active()));
}

Complex parse_scalar(const std::string& text) {
    std::string s = text;
    for (char& c : s) {
        if (c == ',') c = ' ';
    }
    std::istringstream ss(s);
    double re = 0.0;
    double im = 0.0;
    std::string rest;
    if (!(ss >> re)) throw ParseError("--z expects 're,im'");
    if (!(ss >> im)) im = 0.0;
    if (ss >> rest) throw ParseError("--z expects 're,im'");
    return {re, im};
}

int record_outcome(Report& r, const SolveOutcome& out) {
    r.status = std::string(to_string(out.status));
    r.solution = out.solution;
    r.diagnostics["route"] = std::string(to_string(out.route));
    r.diagnostics["restarts_used"] = std::to_string(out.restarts_used);
    r.diagnostics["best_residual"] = format_real(out.best_residual);
    return out.status == SolveStatus::NotFound ? kExitNotFound : kExitOk;
}

int run_command(const std::string& command, const Options& opt) {
    Report r;
    r.command = command;

    SolverConfig cfg;
    std::optional<ComplexMatrix> a;
    try {
        cfg = make_config(opt);
        a = io::read_matrix_file(opt.path);
    } catch (const Error& e) {
        return fail(r, opt, "InputError", e.what(), kExitInput);
    }
    r.input_digest = io::matrix_digest(*a);
    r.diagnostics["dim"] = std::to_string(a->dim());
    describe_config(r, cfg);

    try {
        if (command == "classify") {
            const NecessaryConditionsReport nc = necessary_conditions(*a, cfg);
            r.status = "Classified";
            r.diagnostics["b_class"] = std::string(to_string(nc.b_class));
            r.diagnostics["c_class"] = std::string(to_string(nc.c_class));
            r.diagnostics["admissible"] = nc.admissible ? "true" : "false";
            r.diagnostics["hermitian"] = is_hermitian(*a) ? "true" : "false";
            r.diagnostics["skew_hermitian"] = is_skew_hermitian(*a) ? "true" : "false";
            r.diagnostics["normal"] = is_normal(*a) ? "true" : "false";
            emit(r, opt);
            return kExitOk;
        }
        if (command == "fremdervector") {
            const int code = record_outcome(r, solve_general(*a, cfg));
            emit(r, opt);
            return code;
        }
        if (command == "fremdervalue") {
            if (opt.region) {
                r.status = "Region";
                r.region = fremdervalue_region(*a, cfg);
                emit(r, opt);
                return kExitOk;
            }
            Complex z;
            try {
                z = parse_scalar(*opt.z);
            } catch (const Error& e) {
                return fail(r, opt, "InputError", e.what(), kExitInput);
            }
            r.diagnostics["z"] = format_real(z.real()) + "," + format_real(z.imag());
            const int code = record_outcome(r, is_fremdervalue(*a, z, cfg));
            emit(r, opt);
            return code;
        }
        // geneig
        const GeneigResult g = opt.dual ? solve_semidefinite_hermitian(*a, cfg) : solve_semidefinite_skew(*a, cfg);
        r.status = "Solved";
        r.pairs = g.pairs;
        r.diagnostics["projector_rank"] = std::to_string(g.projector_rank);
        r.diagnostics["route"] = opt.dual ? "hermitian-part" : "skew-part";
        emit(r, opt);
        return kExitOk;
    } catch (const HypothesisError& e) {
        return fail(r, opt, "HypothesisError", e.what(), kExitHypothesis);
    } catch (const Error& e) {
        return fail(r, opt, "InputError", e.what(), kExitInput);
    }
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("matrix", opt.path, "Matrix Market or minimal text file")->required();
    sub->add_option("--tol", opt.residual_tol, "relative residual tolerance (default 1e-10)");
    sub->add_option("--zero-tol", opt.zero_tol, "relative zero threshold (default 1e-10)");
    sub->add_option("--restarts", opt.restarts, "optimizer restarts (default 32)");
    sub->add_option("--seed", opt.seed, "random seed (default $FREMDER_SEED or 0)");
    sub->add_option("--theta-samples", opt.theta_samples, "numerical-range angle grid (default 720)");
    sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fremdervectors and fremdervalues of complex square matrices"};
    app.require_subcommand(1);
    Options opt;

    auto* classify = app.add_subcommand("classify", "definiteness of the Hermitian and skew parts");
    add_common(classify, opt);
    auto* vector = app.add_subcommand("fremdervector", "search for a nontrivial fremdervector");
    add_common(vector, opt);
    auto* value = app.add_subcommand("fremdervalue", "fremdervalue region or membership of a shift z");
    add_common(value, opt);
    auto* z_opt = value->add_option("--z", opt.z, "shift as 're,im'");
    auto* region_opt = value->add_flag("--region", opt.region, "report the bounding region");
    z_opt->excludes(region_opt);
    region_opt->excludes(z_opt);
    auto* geneig = app.add_subcommand("geneig", "projected eigenproblem on the kernel of a semi-definite part");
    add_common(geneig, opt);
    geneig->add_flag("--dual", opt.dual, "use the Hermitian part instead of the skew part");

    try {
        app.parse(argc, argv);
        if (value->parsed() && !opt.region && !opt.z) throw CLI::RequiredError("--z or --region");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    for (const auto* sub : app.get_subcommands()) return run_command(sub->get_name(), opt);
    return kExitInput;
}
