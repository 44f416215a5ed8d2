#include "qgauge_cli/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <fmt/core.h>

#include "qgauge/errors.hpp"

namespace qgauge::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (auto key : allowed) known = known || it.key() == key;
        if (!known) throw ConfigError(fmt::format("{}: unknown key \"{}\"", where, it.key()));
    }
}

const json& require_object(const json& parent, std::string_view where, const std::string& key) {
    if (!parent.contains(key)) throw ConfigError(fmt::format("{}: missing required field \"{}\"", where, key));
    const json& v = parent.at(key);
    if (!v.is_object()) throw ConfigError(fmt::format("{}.{}: expected an object", where, key));
    return v;
}

double number(const json& obj, std::string_view where, const std::string& key, std::optional<double> fallback) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(fmt::format("{}: missing required field \"{}\"", where, key));
    }
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(fmt::format("{}.{}: expected a number", where, key));
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(fmt::format("{}.{}: must be finite", where, key));
    return d;
}

std::size_t count(const json& obj, std::string_view where, const std::string& key, std::optional<std::size_t> fallback) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(fmt::format("{}: missing required field \"{}\"", where, key));
    }
    const json& v = obj.at(key);
    if (!v.is_number_unsigned()) throw ConfigError(fmt::format("{}.{}: expected a non-negative integer", where, key));
    return v.get<std::size_t>();
}

std::string text(const json& obj, std::string_view where, const std::string& key, std::optional<std::string> fallback) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(fmt::format("{}: missing required field \"{}\"", where, key));
    }
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(fmt::format("{}.{}: expected a string", where, key));
    return v.get<std::string>();
}

PhysicalParams parse_params(const json& j) {
    reject_unknown(j, "params", {"mass", "charge", "field", "hbar"});
    const double mass = number(j, "params", "mass", 1.0);
    const double charge = number(j, "params", "charge", 1.0);
    const double field = number(j, "params", "field", std::nullopt);
    const double hbar = number(j, "params", "hbar", 1.0);
    try {
        return PhysicalParams(mass, charge, field, hbar);
    } catch (const Error& e) {
        throw ConfigError(fmt::format("params: {}", e.what()));
    }
}

SpatialGrid parse_grid(const json& j) {
    reject_unknown(j, "grid", {"x_min", "x_max", "n"});
    const double lo = number(j, "grid", "x_min", std::nullopt);
    const double hi = number(j, "grid", "x_max", std::nullopt);
    const std::size_t n = count(j, "grid", "n", std::nullopt);
    try {
        return SpatialGrid(lo, hi, n);
    } catch (const Error& e) {
        throw ConfigError(fmt::format("grid: {}", e.what()));
    }
}

FrameTrajectory parse_trajectory(const json& j) {
    reject_unknown(j, "gauge.trajectory", {"a", "v0", "x0"});
    return {number(j, "gauge.trajectory", "a", std::nullopt), number(j, "gauge.trajectory", "v0", 0.0),
            number(j, "gauge.trajectory", "x0", 0.0)};
}

GaugeSpec parse_gauge(const json& j, const PhysicalParams& params) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "accelerated") return AcceleratedFrame{FrameTrajectory::canonical(params)};
        if (name == "moving-free") return MovingFreeFrame{FrameTrajectory::canonical(params)};
        return parse_gauge_name(name);
    }
    if (!j.is_object()) throw ConfigError("gauge: expected a string or an object");
    reject_unknown(j, "gauge", {"kind", "trajectory"});
    const std::string kind = text(j, "gauge", "kind", std::nullopt);
    if (kind == "accelerated" || kind == "moving-free") {
        const FrameTrajectory traj = j.contains("trajectory")
                                         ? parse_trajectory(require_object(j, "gauge", "trajectory"))
                                         : FrameTrajectory::canonical(params);
        if (kind == "accelerated") return AcceleratedFrame{traj};
        return MovingFreeFrame{traj};
    }
    if (j.contains("trajectory")) throw ConfigError("gauge.trajectory: only allowed for accelerated frames");
    return parse_gauge_name(kind);
}

InitialState parse_initial(const json& j) {
    reject_unknown(j, "initial", {"gaussian", "solution"});
    if (j.contains("gaussian") == j.contains("solution")) {
        throw ConfigError("initial: exactly one of \"gaussian\" or \"solution\" is required");
    }
    if (j.contains("gaussian")) {
        const json& g = require_object(j, "initial", "gaussian");
        reject_unknown(g, "initial.gaussian", {"x0", "p0", "sigma"});
        GaussianInit init{number(g, "initial.gaussian", "x0", std::nullopt), number(g, "initial.gaussian", "p0", 0.0),
                          number(g, "initial.gaussian", "sigma", std::nullopt)};
        if (!(init.sigma > 0.0)) throw ConfigError("initial.gaussian.sigma: must be > 0");
        return init;
    }
    const json& s = require_object(j, "initial", "solution");
    reject_unknown(s, "initial.solution", {"id", "epsilon", "p", "sign"});
    const std::string id = text(s, "initial.solution", "id", std::nullopt);
    const auto kind = parse_solution_kind(id);
    if (!kind) throw ConfigError(fmt::format("initial.solution.id: unknown solution \"{}\"", id));
    const std::string sign = text(s, "initial.solution", "sign", std::string("plus"));
    if (sign != "plus" && sign != "minus") throw ConfigError("initial.solution.sign: expected \"plus\" or \"minus\"");
    return SolutionId{*kind, number(s, "initial.solution", "epsilon", 0.0), number(s, "initial.solution", "p", 0.0),
                      sign == "plus" ? Sign::Plus : Sign::Minus};
}

PropagatorConfig parse_propagator(const json& j) {
    reject_unknown(j, "propagator", {"dt", "n_steps", "boundary", "record_every"});
    PropagatorConfig cfg;
    cfg.dt = number(j, "propagator", "dt", std::nullopt);
    cfg.n_steps = count(j, "propagator", "n_steps", std::nullopt);
    const std::string boundary = text(j, "propagator", "boundary", std::string("dirichlet"));
    if (boundary == "dirichlet") {
        cfg.boundary = Boundary::Dirichlet;
    } else if (boundary == "periodic") {
        cfg.boundary = Boundary::Periodic;
    } else {
        throw ConfigError("propagator.boundary: expected \"dirichlet\" or \"periodic\"");
    }
    cfg.record_every = count(j, "propagator", "record_every", std::size_t{1});
    try {
        cfg.validate();
    } catch (const Error& e) {
        throw ConfigError(fmt::format("propagator: {}", e.what()));
    }
    return cfg;
}

std::vector<OutputSpec> parse_outputs(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_array()) throw ConfigError("outputs: expected an array");
    std::vector<OutputSpec> outputs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = fmt::format("outputs[{}]", i);
        const json& o = j[i];
        if (!o.is_object()) throw ConfigError(where + ": expected an object");
        reject_unknown(o, where, {"path", "format", "content"});
        OutputSpec spec;
        spec.path = text(o, where, "path", std::nullopt);
        if (spec.path.empty()) throw ConfigError(where + ".path: must not be empty");
        if (spec.path.is_relative()) spec.path = base_dir / spec.path;
        const std::string format = text(o, where, "format", std::string("csv"));
        if (format == "csv") {
            spec.format = OutputFormat::Csv;
        } else if (format == "json") {
            spec.format = OutputFormat::Json;
        } else {
            throw ConfigError(where + ".format: expected \"csv\" or \"json\"");
        }
        const std::string content = text(o, where, "content", std::string("trace"));
        if (content == "trace") {
            spec.content = OutputContent::Trace;
        } else if (content == "snapshots") {
            spec.content = OutputContent::Snapshots;
        } else {
            throw ConfigError(where + ".content: expected \"trace\" or \"snapshots\"");
        }
        const auto parent = spec.path.parent_path();
        if (!parent.empty() && !std::filesystem::is_directory(parent)) {
            throw ConfigError(fmt::format("{}.path: directory {} does not exist", where, parent.string()));
        }
        outputs.push_back(std::move(spec));
    }
    return outputs;
}

}  // namespace

GaugeSpec parse_gauge_name(const std::string& name) {
    if (name == "static") return StaticGauge{};
    if (name == "dynamic") return DynamicGauge{};
    if (name == "free") return FreeFrame{};
    throw ConfigError(fmt::format("gauge: unknown gauge \"{}\" (static, dynamic, free, accelerated, moving-free)", name));
}

ScenarioConfig parse_scenario(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    reject_unknown(doc, "config", {"params", "grid", "gauge", "initial", "propagator", "outputs"});
    PhysicalParams params = parse_params(require_object(doc, "config", "params"));
    SpatialGrid grid = parse_grid(require_object(doc, "config", "grid"));
    if (!doc.contains("gauge")) throw ConfigError("config: missing required field \"gauge\"");
    GaugeSpec gauge = parse_gauge(doc.at("gauge"), params);
    InitialState initial = parse_initial(require_object(doc, "config", "initial"));
    PropagatorConfig propagator = parse_propagator(require_object(doc, "config", "propagator"));
    std::vector<OutputSpec> outputs;
    if (doc.contains("outputs")) outputs = parse_outputs(doc.at("outputs"), base_dir);

    if (const auto* sol = std::get_if<SolutionId>(&initial)) {
        const auto [tag, frame] = solution_tags(sol->kind);
        (void)frame;
        if (!(tag == gauge)) {
            throw ConfigError(fmt::format("initial.solution: {} is a {} solution but the gauge is {}",
                                          solution_name(sol->kind), gauge_name(tag), gauge_name(gauge)));
        }
        if (uses_airy(sol->kind) && !(params.force() > 0.0)) {
            throw ConfigError("initial.solution: Airy-based solutions need charge * field > 0");
        }
    }
    return {params, grid, std::move(gauge), initial, propagator, std::move(outputs)};
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("config: cannot open {}", path.string()));
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string body = buffer.str();
    if (body.find_first_not_of(" \t\r\n") == std::string::npos) body = "{}";
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("config: {} is not valid JSON: {}", path.string(), e.what()));
    }
    return parse_scenario(doc, path.parent_path());
}

}  // namespace qgauge::cli
