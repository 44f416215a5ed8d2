#include "qgauge_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "qgauge/airy.hpp"
#include "qgauge/errors.hpp"
#include "qgauge/solutions.hpp"
#include "qgauge_cli/emit.hpp"
#include "qgauge_cli/scenario.hpp"
#include "qgauge_cli/verify.hpp"

namespace qgauge::cli {

namespace {

std::uint64_t seed_from_environment() {
    const char* raw = std::getenv("QGAUGE_SEED");
    if (raw == nullptr || *raw == '\0') return 42;
    try {
        std::size_t used = 0;
        const std::string text(raw);
        const unsigned long long value = std::stoull(text, &used);
        if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ConfigError(fmt::format("QGAUGE_SEED: \"{}\" is not a non-negative integer", raw));
    }
}

struct VerifyArgs {
    std::string suite = "all";
    std::string json_path;
    std::string fault;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const auto suite = parse_suite(args.suite);
    if (!suite) throw ConfigError(fmt::format("--suite: unknown suite \"{}\"", args.suite));
    VerifyOptions options;
    options.seed = seed_from_environment();
    options.fault = args.fault;
    if (!options.fault.empty() &&
        std::find(known_faults().begin(), known_faults().end(), options.fault) == known_faults().end()) {
        throw ConfigError(fmt::format("--inject-fault: unknown fault \"{}\"", options.fault));
    }

    const VerifyReport report = run_verify(*suite, options);
    const std::string body = to_json(report).dump(2) + "\n";
    if (args.json_path.empty()) {
        out << body;
    } else {
        std::ofstream file(args.json_path, std::ios::binary);
        if (!file) throw ConfigError(fmt::format("--json: cannot write {}", args.json_path));
        file << body;
        for (const auto& c : report.checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name << " measured=" << format_number(c.measured)
                << " tolerance=" << format_number(c.tolerance) << '\n';
        }
    }
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.pass; });
    err << fmt::format("verify {}: {} checks, {} failed\n", report.suite, report.checks.size(), failed);
    return report.passed() ? exit_ok : exit_check_failed;
}

int cmd_simulate(const std::string& config_path, std::ostream& out, std::ostream& err) {
    const ScenarioConfig config = load_scenario(config_path);

    const auto frame = std::holds_alternative<StaticGauge>(config.gauge) || std::holds_alternative<DynamicGauge>(config.gauge)
                           ? FrameLabel::Inertial
                           : FrameLabel::Accelerated;
    const WaveField initial = std::visit(
        [&](const auto& init) -> WaveField {
            using T = std::decay_t<decltype(init)>;
            if constexpr (std::is_same_v<T, GaussianInit>) {
                return gaussian_packet(config.grid, init.x0, init.p0, init.sigma, config.params.hbar(), config.gauge,
                                       frame);
            } else {
                return sample(init, config.grid, 0.0, config.params);
            }
        },
        config.initial);

    const bool want_snapshots = std::any_of(config.outputs.begin(), config.outputs.end(),
                                            [](const OutputSpec& o) { return o.content == OutputContent::Snapshots; });
    std::vector<WaveField> snapshots;
    SnapshotCallback keep;
    if (want_snapshots) keep = [&](const WaveField& wf) { snapshots.push_back(wf); };

    PropagationResult result = [&] {
        try {
            return crank_nicolson_propagate(initial, config.gauge, config.params, config.propagator, keep);
        } catch (const NumericalBreakdown& e) {
            err << fmt::format("simulate: aborted: {} (last good time t = {})\n", e.what(),
                               format_number(e.last_good_time()));
            throw;
        }
    }();
    for (const auto& w : result.warnings) err << "simulate: warning: " << w << '\n';

    if (config.outputs.empty()) {
        write_trace_csv(out, result.trace);
        return exit_ok;
    }
    for (const auto& spec : config.outputs) {
        std::ofstream file(spec.path, std::ios::binary);
        if (!file) throw ConfigError(fmt::format("outputs: cannot write {}", spec.path.string()));
        if (spec.format == OutputFormat::Csv) {
            if (spec.content == OutputContent::Trace) {
                write_trace_csv(file, result.trace);
            } else {
                write_snapshots_csv(file, snapshots);
            }
        } else {
            const auto doc = spec.content == OutputContent::Trace ? trace_json(result.trace) : snapshots_json(snapshots);
            file << doc.dump(2) << '\n';
        }
    }
    return exit_ok;
}

struct TableArgs {
    std::string function;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    double t = 0.0;
    double epsilon = 0.0;
    double p = 0.0;
    std::string sign = "plus";
    double mass = 1.0;
    double charge = 1.0;
    double field = 1.0;
    double hbar = 1.0;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
    for (double v : {args.from, args.to, args.step, args.t, args.epsilon, args.p}) {
        if (!std::isfinite(v)) throw ConfigError("table: arguments must be finite");
    }
    if (args.from > args.to) throw ConfigError("table: --from must not exceed --to");
    if (!(args.step > 0.0)) throw ConfigError("table: --step must be > 0");
    const auto rows = static_cast<std::size_t>(std::floor((args.to - args.from) / args.step + 1e-9)) + 1;
    if (rows > 10'000'000) throw ConfigError("table: more than 1e7 rows requested");

    if (args.function == "airy") {
        std::string body = "x,ai,ai_prime\n";
        for (std::size_t k = 0; k < rows; ++k) {
            const double x = args.from + static_cast<double>(k) * args.step;
            const AiryResult r = airy_ai(x);
            body += format_number(x) + ',' + format_number(r.ai) + ',' + format_number(r.ai_prime) + '\n';
        }
        out << body;
        return exit_ok;
    }

    const auto kind = parse_solution_kind(args.function);
    if (!kind) throw ConfigError(fmt::format("table: unknown function \"{}\"", args.function));
    if (args.sign != "plus" && args.sign != "minus") throw ConfigError("table: --sign must be plus or minus");
    const PhysicalParams params(args.mass, args.charge, args.field, args.hbar);
    const SolutionId sol{*kind, args.epsilon, args.p, args.sign == "plus" ? Sign::Plus : Sign::Minus};
    const AnalyticField field = analytic_field(sol, params);
    std::string body = "x,re,im,abs2\n";
    for (std::size_t k = 0; k < rows; ++k) {
        const double x = args.from + static_cast<double>(k) * args.step;
        const complex v = field(x, args.t);
        body += format_number(x) + ',' + format_number(v.real()) + ',' + format_number(v.imag()) + ',' +
                format_number(std::norm(v)) + '\n';
    }
    out << body;
    return exit_ok;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qgauge: gauge transformations and accelerated frames for a charge in a uniform field"};
    app.name("qgauge");
    app.require_subcommand(1);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; exit 1 if any check fails");
    verify_cmd->add_option("--suite", verify.suite, "solutions, theorem, pde or all")->capture_default_str();
    verify_cmd->add_option("--json", verify.json_path, "Write the JSON report here instead of stdout");
    verify_cmd->add_option("--inject-fault", verify.fault)->group("");

    std::string config_path;
    auto* simulate_cmd = app.add_subcommand("simulate", "Propagate a scenario with Crank-Nicolson");
    simulate_cmd->add_option("--config", config_path, "JSON scenario file")->required();

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Tabulate Ai or a closed-form solution as CSV");
    table_cmd->add_option("--function", table.function, "airy or a solution id")->required();
    table_cmd->add_option("--from", table.from)->required();
    table_cmd->add_option("--to", table.to)->required();
    table_cmd->add_option("--step", table.step)->required();
    table_cmd->add_option("--t", table.t, "Time")->capture_default_str();
    table_cmd->add_option("--epsilon", table.epsilon)->capture_default_str();
    table_cmd->add_option("--p", table.p)->capture_default_str();
    table_cmd->add_option("--sign", table.sign, "plus or minus")->capture_default_str();
    table_cmd->add_option("--mass", table.mass)->capture_default_str();
    table_cmd->add_option("--charge", table.charge)->capture_default_str();
    table_cmd->add_option("--field", table.field)->capture_default_str();
    table_cmd->add_option("--hbar", table.hbar)->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "qgauge: " << e.what() << '\n';
        return exit_config_error;
    }

    try {
        if (*verify_cmd) return cmd_verify(verify, out, err);
        if (*simulate_cmd) return cmd_simulate(config_path, out, err);
        return cmd_table(table, out);
    } catch (const ConfigError& e) {
        err << "qgauge: " << e.what() << '\n';
        return exit_config_error;
    } catch (const NumericalBreakdown&) {
        return exit_numerical_abort;
    } catch (const SolverBreakdown& e) {
        err << "qgauge: " << e.what() << '\n';
        return exit_numerical_abort;
    } catch (const Error& e) {
        err << "qgauge: " << e.what() << '\n';
        return exit_config_error;
    }
}

}  // namespace qgauge::cli
