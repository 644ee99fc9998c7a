// ftm_main.cpp - command line front end: validate and run machine files,
// debug them against the brute-force oracle, and apply the machine
// transforms. Reports go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ftm/constructions.hpp"
#include "ftm/engine.hpp"
#include "ftm/format.hpp"
#include "ftm/oracle.hpp"

#ifdef FTM_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool load_machine(const std::string& path, ftm::MachineSpec& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << path << ": cannot read file\n";
        return false;
    }
    ftm::ParseResult result = ftm::parse(text);
    for (const ftm::Diagnostic& d : result.diagnostics)
        std::cerr << path << ':' << d.line << ':' << d.column << ": " << d.message << '\n';
    if (!result.ok()) return false;
    out = std::move(*result.spec);
    return true;
}

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end == value || *end != '\0' || parsed == 0) {
        std::cerr << "ignoring " << name << "=" << value << " (want a positive integer)\n";
        return fallback;
    }
    return parsed;
}

std::string degree12(ftm::Degree d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", d.value());
    return buf;
}

struct RunArgs {
    std::string file;
    std::string input;
    bool input_given = false;
    std::string inputs_file;
    std::uint64_t max_levels = 0;
    std::uint64_t max_configs = 0;
    bool levels_given = false, configs_given = false;
    std::string format = "text";
    bool parallel = false;
};

int cmd_run(const RunArgs& args) {
    ftm::MachineSpec spec;
    if (!load_machine(args.file, spec)) return kExitInvalid;
    {
        const auto violations = ftm::validate(spec);
        for (const ftm::Violation& v : violations)
            std::cerr << args.file << ": " << v.subject << ": " << v.message << " ["
                      << v.clause << "]\n";
        if (!violations.empty()) return kExitInvalid;
    }

    ftm::SearchBudget budget;
    budget.max_levels =
        args.levels_given ? args.max_levels : env_or("FTM_MAX_LEVELS", budget.max_levels);
    budget.max_configurations =
        args.configs_given ? args.max_configs : env_or("FTM_MAX_CONFIGS", budget.max_configurations);
    ftm::RunOptions options;
    options.parallel = args.parallel;
    const ftm::ReportFormat fmt =
        args.format == "json" ? ftm::ReportFormat::Json : ftm::ReportFormat::Text;

    std::vector<std::string> raw_inputs;
    if (args.input_given) {
        raw_inputs.push_back(args.input);
    } else if (!args.inputs_file.empty()) {
        std::string text;
        if (!read_file(args.inputs_file, text)) {
            std::cerr << args.inputs_file << ": cannot read file\n";
            return kExitInvalid;
        }
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            raw_inputs.push_back(line);
        }
    } else {
        std::cerr << "run: need exactly one of --input or --inputs-file\n";
        return kExitInvalid;
    }

    // tokenize and check all inputs before running anything
    std::vector<std::vector<std::string>> inputs;
    inputs.reserve(raw_inputs.size());
    for (const std::string& raw : raw_inputs) {
        std::vector<std::string> toks = ftm::tokenize_input(spec, raw);
        for (const std::string& tok : toks) {
            if (!spec.has_input_symbol(tok)) {
                std::cerr << "input symbol outside the input alphabet: " << tok << '\n';
                return kExitInvalid;
            }
        }
        inputs.push_back(std::move(toks));
    }

    std::vector<std::string> outputs(inputs.size());
    std::vector<char> exhausted(inputs.size(), 0);
    const std::int64_t count = static_cast<std::int64_t>(inputs.size());
#ifdef FTM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (options.parallel && count > 1)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        ftm::RunReport rep = ftm::run(spec, inputs[i], budget, options);
        rep.input = raw_inputs[i];
        outputs[i] = ftm::report_emit(rep, fmt);
        exhausted[i] = rep.status == ftm::RunStatus::BudgetExhausted ? 1 : 0;
    }
    bool any_exhausted = false;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        std::cout << outputs[i] << '\n';
        any_exhausted = any_exhausted || exhausted[i];
    }
    return any_exhausted ? kExitBudget : kExitOk;
}

int cmd_oracle(const std::string& file, const std::string& input, std::uint64_t depth) {
    ftm::MachineSpec spec;
    if (!load_machine(file, spec)) return kExitInvalid;
    const std::vector<std::string> toks = ftm::tokenize_input(spec, input);
    const std::vector<ftm::PathRecord> paths = ftm::enumerate(spec, toks, depth);
    const ftm::OracleDegrees degrees = ftm::oracle_degrees(paths, spec);
    std::cout << "paths=" << paths.size() << '\n';
    std::cout << "e=" << degree12(degrees.accept_degree)
              << " e'=" << degree12(degrees.reject_degree) << '\n';
    for (const auto& [id, d] : degrees.indeterminacy_candidates)
        std::cout << "indet: " << id << " @ " << degree12(d) << '\n';
    return kExitOk;
}

int emit_machine(const ftm::MachineSpec& spec) {
    std::cout << ftm::serialize(spec);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy Turing machine workbench"};
    app.require_subcommand(1);

    std::string file, file2, input, hub = "qI";
    double degree = 0.5;
    std::uint64_t depth = 8;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a machine file");
    validate_cmd->add_option("file", file, "machine file")->required();

    RunArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "run a machine on inputs");
    run_cmd->add_option("file", run_args.file, "machine file")->required();
    CLI::Option* input_opt = run_cmd->add_option("--input", run_args.input, "input string");
    CLI::Option* inputs_opt =
        run_cmd->add_option("--inputs-file", run_args.inputs_file, "one input per line");
    input_opt->excludes(inputs_opt);
    CLI::Option* levels_opt =
        run_cmd->add_option("--max-levels", run_args.max_levels, "level budget");
    CLI::Option* configs_opt =
        run_cmd->add_option("--max-configs", run_args.max_configs, "expansion budget");
    run_cmd->add_option("--format", run_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    run_cmd->add_flag("--parallel", run_args.parallel, "parallel expansion and batch runs");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force path enumeration");
    oracle_cmd->add_option("file", file, "machine file")->required();
    oracle_cmd->add_option("--input", input, "input string");
    oracle_cmd->add_option("--depth", depth, "enumeration depth")->required();

    CLI::App* lift_loop_cmd =
        app.add_subcommand("lift-loopcatcher", "wrap a classical machine to catch cyclic loops");
    lift_loop_cmd->add_option("file", file, "machine file")->required();
    lift_loop_cmd->add_option("--degree", degree, "uniform transition degree")->required();
    lift_loop_cmd->add_option("--hub", hub, "indeterminacy hub name");

    CLI::App* lift_re_cmd = app.add_subcommand("lift-re", "lift a recognizer of a language");
    lift_re_cmd->add_option("file", file, "machine file")->required();
    lift_re_cmd->add_option("--degree", degree, "transition degree")->required();

    CLI::App* lift_core_cmd =
        app.add_subcommand("lift-core", "lift a recognizer of a complement");
    lift_core_cmd->add_option("file", file, "machine file")->required();
    lift_core_cmd->add_option("--degree", degree, "transition degree")->required();

    CLI::App* swap_cmd = app.add_subcommand("swap", "exchange accept and reject states");
    swap_cmd->add_option("file", file, "machine file")->required();

    CLI::App* union_cmd = app.add_subcommand("union", "side-tagged union of two machines");
    union_cmd->add_option("file1", file, "first machine file")->required();
    union_cmd->add_option("file2", file2, "second machine file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    run_args.input_given = input_opt->count() > 0;
    run_args.levels_given = levels_opt->count() > 0;
    run_args.configs_given = configs_opt->count() > 0;

    try {
        if (validate_cmd->parsed()) {
            ftm::MachineSpec spec;
            if (!load_machine(file, spec)) return kExitInvalid;
            const auto violations = ftm::validate(spec);
            for (const ftm::Violation& v : violations)
                std::cerr << file << ": " << v.subject << ": " << v.message << " [" << v.clause
                          << "]\n";
            if (!violations.empty()) return kExitInvalid;
            std::cout << "ok\n";
            return kExitOk;
        }
        if (run_cmd->parsed()) return cmd_run(run_args);
        if (oracle_cmd->parsed()) return cmd_oracle(file, input, depth);

        ftm::MachineSpec spec;
        if (!load_machine(file, spec)) return kExitInvalid;
        if (lift_loop_cmd->parsed())
            return emit_machine(
                ftm::lift_loop_catcher(spec, {ftm::Degree(degree), hub}));
        if (lift_re_cmd->parsed()) return emit_machine(ftm::lift_re(spec, ftm::Degree(degree)));
        if (lift_core_cmd->parsed())
            return emit_machine(ftm::lift_core(spec, ftm::Degree(degree)));
        if (swap_cmd->parsed()) return emit_machine(ftm::swap_roles(spec));
        if (union_cmd->parsed()) {
            ftm::MachineSpec spec2;
            if (!load_machine(file2, spec2)) return kExitInvalid;
            return emit_machine(ftm::union_conorm(spec, spec2));
        }
        std::cerr << "no subcommand\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << '\n';
        return kExitInvalid;
    } catch (const std::length_error& ex) {
        std::cerr << ex.what() << '\n';
        return kExitInvalid;
    } catch (const std::logic_error& ex) {
        std::cerr << "internal invariant breach: " << ex.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return kExitInternal;
    }
}
