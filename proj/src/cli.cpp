#include "wedgent/cli.hpp"

#include "wedgent/errors.hpp"
#include "wedgent/ket.hpp"
#include "wedgent/lu_harness.hpp"
#include "wedgent/measures.hpp"
#include "wedgent/separability.hpp"
#include "wedgent/state_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace wedgent {

namespace {

using ojson = nlohmann::ordered_json;

struct InputOptions {
    std::string state_path;
    std::string expr;
    std::vector<std::size_t> dims;
    bool normalize = false;
};

struct Options {
    InputOptions input;
    std::string output = "text";
    std::string measure = "auto";
    double norm_constant = 2.0;
    double threshold = kDefaultSeparabilityThreshold;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

void add_input_flags(CLI::App* cmd, InputOptions& in, bool allow_state = true)
{
    CLI::Option* state = nullptr;
    if (allow_state)
        state = cmd->add_option("--state", in.state_path, "State file (JSON)");
    auto* expr = cmd->add_option("--expr", in.expr, "Ket expression, e.g. \"(1/sqrt(2))(|0,0>+|1,1>)\"");
    cmd->add_option("--dims", in.dims, "Local dimensions for --expr, e.g. 2,3")->delimiter(',')->needs(expr);
    if (state) {
        state->excludes(expr);
        cmd->require_option(1, 0);
        cmd->add_flag("--normalize", in.normalize, "Rescale the input to unit norm instead of rejecting it");
    } else {
        expr->required();
    }
}

void add_output_flag(CLI::App* cmd, std::string& output)
{
    cmd->add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "machine"}));
}

PureState load_input(const InputOptions& in)
{
    PureState state = in.state_path.empty()
                          ? evaluate(parse_ket(in.expr), in.dims.empty() ? std::nullopt : std::optional<Dims>(in.dims))
                          : load_state(in.state_path);
    return in.normalize ? normalize(state) : state;
}

ojson echo_inputs(const InputOptions& in)
{
    ojson j;
    if (!in.state_path.empty())
        j["state"] = in.state_path;
    else
        j["expr"] = in.expr;
    if (!in.dims.empty())
        j["dims"] = in.dims;
    j["normalize"] = in.normalize;
    return j;
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string fmt(const Complex& z)
{
    return fmt(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string dims_text(const Dims& dims)
{
    std::string s = "[";
    for (std::size_t j = 0; j < dims.size(); ++j)
        s += (j ? "," : "") + std::to_string(dims[j]);
    return s + "]";
}

MeasureKind pick_measure(const std::string& name, const PureState& state)
{
    if (name == "bipartite")
        return MeasureKind::BipartiteConcurrence;
    if (name == "multipartite")
        return MeasureKind::MultipartiteE;
    return state.arity() == 2 ? MeasureKind::BipartiteConcurrence : MeasureKind::MultipartiteE;
}

ojson result_json(const MeasureResult& r)
{
    return {{"kind", to_string(r.kind)},
            {"norm_constant", r.norm_constant},
            {"value", r.value},
            {"term_sum", r.term_sum}};
}

int run_measure(const Options& opt, std::ostream& out)
{
    const PureState state = load_input(opt.input);
    const MeasureKind kind = pick_measure(opt.measure, state);
    MeasureConfig cfg;
    cfg.norm_constant = opt.norm_constant;
    const MeasureResult r = evaluate_measure(state, kind, cfg);

    std::vector<std::string> notes;
    if (kind == MeasureKind::MultipartiteE && state.arity() == 2)
        notes.push_back("for two subsystems the multipartite measure equals twice the bipartite concurrence (E = 2C)");

    if (opt.output == "machine") {
        ojson doc;
        doc["command"] = "measure";
        doc["inputs"] = echo_inputs(opt.input);
        doc["inputs"]["measure"] = opt.measure;
        doc["inputs"]["norm_constant"] = opt.norm_constant;
        doc["dims"] = state.dims();
        doc["result"] = result_json(r);
        doc["notes"] = notes;
        out << doc.dump(2) << "\n";
    } else {
        out << "dims: " << dims_text(state.dims()) << "\n";
        out << to_string(r.kind) << ": " << fmt(r.value) << "\n";
        out << "norm constant: " << fmt(r.norm_constant) << "\n";
        out << "term sum: " << fmt(r.term_sum) << "\n";
        for (const auto& n : notes)
            out << "note: " << n << "\n";
    }
    return kExitOk;
}

int run_separability(const Options& opt, std::ostream& out)
{
    const PureState state = load_input(opt.input);
    const SeparabilityReport report = separability_report(state, opt.threshold);

    if (opt.output == "machine") {
        ojson doc;
        doc["command"] = "separability";
        doc["inputs"] = echo_inputs(opt.input);
        doc["inputs"]["threshold"] = opt.threshold;
        doc["dims"] = state.dims();
        ojson table = ojson::array();
        for (const auto& v : report.per_partition) {
            std::vector<std::size_t> left;
            for (std::size_t j : v.partition.left())
                left.push_back(j + 1);
            table.push_back({{"partition", left}, {"residual", v.residual}, {"separable", v.separable}});
        }
        doc["partitions"] = std::move(table);
        doc["fully_separable"] = report.fully_separable;
        if (report.certificate) {
            ojson factors = ojson::array();
            for (const auto& f : report.certificate->factors) {
                ojson vec = ojson::array();
                for (Eigen::Index i = 0; i < f.size(); ++i)
                    vec.push_back({f(i).real(), f(i).imag()});
                factors.push_back(std::move(vec));
            }
            doc["certificate"] = {{"factors", std::move(factors)},
                                  {"reconstruction_error", report.certificate->reconstruction_error}};
        } else {
            doc["certificate"] = nullptr;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "dims: " << dims_text(state.dims()) << "\n";
        for (const auto& v : report.per_partition)
            out << v.partition.to_string() << " | " << v.partition.complement().to_string()
                << "  residual " << fmt(v.residual) << "  " << (v.separable ? "separable" : "entangled") << "\n";
        out << "fully separable: " << (report.fully_separable ? "yes" : "no") << "\n";
        if (report.certificate) {
            for (std::size_t j = 0; j < report.certificate->factors.size(); ++j) {
                const auto& f = report.certificate->factors[j];
                out << "factor " << j + 1 << ":";
                for (Eigen::Index i = 0; i < f.size(); ++i)
                    out << " (" << fmt(f(i)) << ")";
                out << "\n";
            }
            out << "reconstruction error: " << fmt(report.certificate->reconstruction_error) << "\n";
        }
    }
    return kExitOk;
}

int run_invariance(const Options& opt, std::ostream& out)
{
    const PureState state = load_input(opt.input);
    const MeasureKind kind = pick_measure(opt.measure, state);
    MeasureConfig cfg;
    cfg.norm_constant = opt.norm_constant;
    const InvarianceRun run = invariance_experiment(state, opt.trials, opt.seed, kind, cfg, 0);

    if (opt.output == "machine") {
        ojson doc;
        doc["command"] = "invariance";
        doc["inputs"] = echo_inputs(opt.input);
        doc["inputs"]["measure"] = opt.measure;
        doc["inputs"]["norm_constant"] = opt.norm_constant;
        doc["inputs"]["trials"] = opt.trials;
        doc["inputs"]["seed"] = opt.seed;
        doc["dims"] = state.dims();
        doc["kind"] = to_string(run.kind);
        doc["baseline"] = run.baseline;
        doc["max_abs_deviation"] = run.max_abs_deviation;
        out << doc.dump(2) << "\n";
    } else {
        out << "dims: " << dims_text(state.dims()) << "\n";
        out << to_string(run.kind) << " baseline: " << fmt(run.baseline) << "\n";
        out << "trials: " << run.trials << "  seed: " << run.seed << "\n";
        out << "max |deviation| under local unitaries: " << fmt(run.max_abs_deviation) << "\n";
    }
    return kExitOk;
}

int run_parse(const Options& opt, std::ostream& out)
{
    const KetExpr expr = parse_ket(opt.input.expr);
    const PureState state =
        evaluate(expr, opt.input.dims.empty() ? std::nullopt : std::optional<Dims>(opt.input.dims));

    if (opt.output == "machine") {
        ojson doc;
        doc["command"] = "parse";
        doc["inputs"] = echo_inputs(opt.input);
        doc["canonical"] = to_string(expr);
        const auto file = state_to_json(state);
        doc["dims"] = file["dims"];
        doc["amplitudes"] = file["amplitudes"];
        doc["norm"] = std::sqrt(state.norm_sq());
        out << doc.dump(2) << "\n";
    } else {
        out << "expression: " << to_string(expr) << "\n";
        out << "dims: " << dims_text(state.dims()) << "\n";
        for (std::size_t f = 0; f < state.size(); ++f) {
            if (state.at(f) == Complex(0.0))
                continue;
            const auto idx = state.multi_index(f);
            out << "|";
            for (std::size_t j = 0; j < idx.size(); ++j)
                out << (j ? "," : "") << idx[j];
            out << ">  " << fmt(state.at(f)) << "\n";
        }
        out << "norm: " << fmt(std::sqrt(state.norm_sq())) << "\n";
    }
    return kExitOk;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ArityMismatch: return kExitParse;
    case ErrorCode::TooLarge:
    case ErrorCode::TooManyFactors: return kExitSizeGuard;
    default: return kExitValidation;
    }
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wedge-product entanglement measures for pure multipartite states", "wedgent"};
    app.require_subcommand(1);
    Options opt;

    auto* measure = app.add_subcommand("measure", "Evaluate an entanglement measure");
    add_input_flags(measure, opt.input);
    measure->add_option("--norm-constant", opt.norm_constant, "Normalization constant N")
        ->check(CLI::PositiveNumber);
    measure->add_option("--measure", opt.measure, "bipartite, multipartite or auto")
        ->check(CLI::IsMember({"bipartite", "multipartite", "auto"}));
    add_output_flag(measure, opt.output);

    auto* separability = app.add_subcommand("separability", "Test every bipartition for separability");
    add_input_flags(separability, opt.input);
    separability->add_option("--threshold", opt.threshold, "Residual at or below which a split counts as separable")
        ->check(CLI::NonNegativeNumber);
    add_output_flag(separability, opt.output);

    auto* invariance = app.add_subcommand("invariance", "Compare a measure before and after random local unitaries");
    add_input_flags(invariance, opt.input);
    invariance->add_option("--trials", opt.trials, "Number of random local-unitary trials")
        ->check(CLI::PositiveNumber);
    invariance->add_option("--seed", opt.seed, "Seed of the trial substreams");
    invariance->add_option("--measure", opt.measure, "bipartite, multipartite or auto")
        ->check(CLI::IsMember({"bipartite", "multipartite", "auto"}));
    invariance->add_option("--norm-constant", opt.norm_constant, "Normalization constant N")
        ->check(CLI::PositiveNumber);
    add_output_flag(invariance, opt.output);

    auto* parse = app.add_subcommand("parse", "Parse a ket expression and print its amplitudes");
    add_input_flags(parse, opt.input, false);
    add_output_flag(parse, opt.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (measure->parsed())
            return run_measure(opt, out);
        if (separability->parsed())
            return run_separability(opt, out);
        if (invariance->parsed())
            return run_invariance(opt, out);
        return run_parse(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

} // namespace wedgent
