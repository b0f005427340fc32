#include "evenodd/cli.hpp"

#include "evenodd/algorithms.hpp"
#include "evenodd/report.hpp"
#include "evenodd/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace evenodd::cli {

using nlohmann::json;

void validate(const RunConfig& config) {
    const bool needs_function =
        config.command == Command::Run || config.command == Command::Classify || config.command == Command::Dj;
    if (needs_function && !config.function) throw UsageError("a truth table argument is required");
    if (!needs_function && config.function) throw UsageError("this command takes no truth table");
    if (config.trace && config.command != Command::Run) throw UsageError("--trace is only valid for run");
    if (config.tolerance_override && !(*config.tolerance_override > 0.0 && std::isfinite(*config.tolerance_override))) {
        throw UsageError("tolerance must be a positive finite number");
    }
}

std::optional<double> parse_tolerance(const char* value) {
    if (value == nullptr || *value == '\0') return std::nullopt;
    std::size_t used = 0;
    double tol = 0.0;
    try {
        tol = std::stod(value, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string(kToleranceEnv) + " is not a number: '" + value + "'");
    }
    if (value[used] != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
        throw UsageError(std::string(kToleranceEnv) + " must be a positive finite number, got '" + value + "'");
    }
    return tol;
}

namespace {

void emit_run(const RunConfig& config, std::ostream& out) {
    const auto result = run_even_odd(*config.function);
    if (config.output_format == OutputFormat::Json) {
        json j{{"function", config.function->to_string()},
               {"verdict", to_string(result.verdict)},
               {"oracle_calls", result.oracle_calls},
               {"final_state", to_json(result.final_state)}};
        if (config.trace) {
            json steps = json::array();
            for (std::size_t i = 0; i < result.per_step_states.size(); ++i) {
                steps.push_back({{"step", i},
                                 {"gate", i == 0 ? std::string("initial") : std::string(kEvenOddGateLabels[i - 1])},
                                 {"state", to_json(result.per_step_states[i])}});
            }
            j["trace"] = std::move(steps);
        }
        out << dump_canonical(j);
        return;
    }
    out << "function      " << config.function->to_string() << "\n";
    if (config.trace) {
        for (std::size_t i = 0; i < result.per_step_states.size(); ++i) {
            const std::string gate = i == 0 ? "initial" : std::string(kEvenOddGateLabels[i - 1]);
            out << "step " << i << " " << gate << std::string(8 - std::min<std::size_t>(gate.size(), 7), ' ')
                << format_state(result.per_step_states[i]) << "\n";
        }
    }
    out << "verdict       " << to_string(result.verdict) << "\n"
        << "oracle calls  " << result.oracle_calls << "\n"
        << "final state   " << format_state(result.final_state) << "\n";
}

void emit_dj(const RunConfig& config, std::ostream& out) {
    const auto result = run_deutsch_jozsa_2bit(*config.function);
    if (config.output_format == OutputFormat::Json) {
        out << dump_canonical(json{{"function", config.function->to_string()},
                                   {"verdict", to_string(result.verdict)},
                                   {"oracle_calls", result.oracle_calls},
                                   {"final_state", to_json(result.final_state)}});
        return;
    }
    out << "function      " << config.function->to_string() << "\n"
        << "verdict       " << to_string(result.verdict) << "\n"
        << "oracle calls  " << result.oracle_calls << "\n"
        << "final state   " << format_state(result.final_state) << "\n";
}

void emit_table(const RunConfig& config, std::ostream& out) {
    const auto rows = class_table();
    if (config.output_format == OutputFormat::Json) {
        json classes = json::array();
        for (const auto& row : rows) classes.push_back(to_json(row));
        json functions = json::array();
        for (const auto& f : enumerate_functions()) functions.push_back(to_json(make_report(f)));
        out << dump_canonical(json{{"classes", std::move(classes)}, {"functions", std::move(functions)}});
        return;
    }
    out << render_table_text(rows);
}

int emit_verify(const RunConfig& config, std::ostream& out) {
    VerifyOptions options;
    if (config.tolerance_override) options.tolerance = *config.tolerance_override;
    const auto report = run_verification(options);
    if (config.output_format == OutputFormat::Json) {
        out << dump_canonical(to_json(report));
    } else {
        out << render_text(report);
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    switch (config.command) {
        case Command::Classify: {
            const auto report = make_report(*config.function);
            out << (config.output_format == OutputFormat::Json ? dump_canonical(to_json(report))
                                                               : render_text(report));
            return kExitOk;
        }
        case Command::Run: emit_run(config, out); return kExitOk;
        case Command::Dj: emit_dj(config, out); return kExitOk;
        case Command::Table: emit_table(config, out); return kExitOk;
        case Command::Verify: return emit_verify(config, out);
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* tolerance_env) {
    CLI::App app{"Two-qubit even/odd function classification: exact simulation and checks", "evenodd"};
    app.require_subcommand(1);

    RunConfig config;
    std::string bits;
    bool json_output = false;
    bool trace = false;

    auto* classify_cmd = app.add_subcommand("classify", "Full report for one truth table");
    auto* run_cmd = app.add_subcommand("run", "Run the two-call even/odd circuit");
    auto* dj_cmd = app.add_subcommand("dj", "Run the one-call Deutsch-Jozsa circuit");
    auto* table_cmd = app.add_subcommand("table", "Per-class summary of all 16 functions");
    auto* verify_cmd = app.add_subcommand("verify", "Check every invariant exhaustively");

    std::vector<CLI::Option*> bits_options;
    for (auto* sub : {classify_cmd, run_cmd, dj_cmd}) {
        bits_options.push_back(
            sub->add_option("bits", bits, "Truth table f(00)f(01)f(10)f(11), e.g. 0001")->required());
    }
    for (auto* sub : {classify_cmd, run_cmd, dj_cmd, table_cmd, verify_cmd}) {
        sub->add_flag("--json", json_output, "Emit JSON");
    }
    run_cmd->add_flag("--trace", trace, "Print the state after every gate");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) config.command = Command::Classify;
        if (run_cmd->parsed()) config.command = Command::Run;
        if (dj_cmd->parsed()) config.command = Command::Dj;
        if (table_cmd->parsed()) config.command = Command::Table;
        if (verify_cmd->parsed()) config.command = Command::Verify;
        const bool have_bits =
            std::any_of(bits_options.begin(), bits_options.end(), [](const CLI::Option* o) { return o->count() > 0; });
        if (have_bits) {
            try {
                config.function = TruthTable::parse(bits);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        config.output_format = json_output ? OutputFormat::Json : OutputFormat::Text;
        config.trace = trace;
        config.tolerance_override = parse_tolerance(tolerance_env);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return execute(config, out, err);
}

}  // namespace evenodd::cli
