#include "ferry/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ferry {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known) fail(where, "unknown key \"" + item.key() + "\"");
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing required key \"" + std::string(key) + "\"");
    return *it;
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

Point as_point(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) fail(where, "expected [x, y]");
    return {as_number(v[0], where + "[0]"), as_number(v[1], where + "[1]")};
}

RateModel parse_rate_model(const json& obj, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    reject_unknown(obj, {"r_max", "eta", "c"}, where);
    RateModel m;
    if (obj.contains("r_max")) m.r_max = as_number(obj["r_max"], where + ".r_max");
    if (obj.contains("eta")) m.eta = as_number(obj["eta"], where + ".eta");
    if (obj.contains("c")) m.c = as_number(obj["c"], where + ".c");
    validate(m);
    return m;
}

FlowSpec parse_flow(const json& obj, std::size_t index, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    reject_unknown(obj, {"lambda", "src", "sink", "pair_distance"}, where);
    FlowSpec f;
    f.lambda = as_number(require(obj, "lambda", where), where + ".lambda");
    if (!(std::isfinite(f.lambda) && f.lambda >= 0.0))
        fail(where, "lambda must be finite and >= 0");
    const bool has_points = obj.contains("src") || obj.contains("sink");
    const bool has_dist = obj.contains("pair_distance");
    if (has_points && has_dist)
        fail(where, "give either src+sink or pair_distance, not both");
    if (has_points) {
        if (!obj.contains("src") || !obj.contains("sink"))
            fail(where, "src and sink must be given together");
        f.src = as_point(obj["src"], where + ".src");
        f.sink = as_point(obj["sink"], where + ".sink");
    } else if (has_dist) {
        const double d = as_number(obj["pair_distance"], where + ".pair_distance");
        if (!(std::isfinite(d) && d >= 0.0)) fail(where, "pair_distance must be finite and >= 0");
        const double y = 50.0 * static_cast<double>(index + 1);
        f.src = {0.0, y};
        f.sink = {d, y};
    } else {
        fail(where, "flow needs src+sink points or a pair_distance");
    }
    return f;
}

SchedulerSpec parse_scheduler(const json& v, const std::string& where) {
    SchedulerSpec s;
    if (v.is_string()) {
        const std::string name = v.get<std::string>();
        if (name == "cbmf") {
            s.kind = SchedulerKind::cbmf;
            return s;
        }
        fail(where, "unknown scheduler \"" + name + "\" (only \"cbmf\" has a shorthand form)");
    }
    if (!v.is_object()) fail(where, "expected \"cbmf\" or an object with a \"type\" key");
    const std::string type = as_string(require(v, "type", where), where + ".type");
    if (type == "cbmf") {
        reject_unknown(v, {"type"}, where);
        s.kind = SchedulerKind::cbmf;
    } else if (type == "static") {
        reject_unknown(v, {"type", "program_file"}, where);
        s.kind = SchedulerKind::static_program;
        s.program_file = as_string(require(v, "program_file", where), where + ".program_file");
    } else if (type == "oracle") {
        reject_unknown(v, {"type", "target_rates", "denom_cap"}, where);
        s.kind = SchedulerKind::oracle;
        const json& rates = require(v, "target_rates", where);
        if (!rates.is_array() || rates.empty()) fail(where, "target_rates must be a nonempty array");
        for (std::size_t i = 0; i < rates.size(); ++i)
            s.target_rates.push_back(
                as_number(rates[i], where + ".target_rates[" + std::to_string(i) + "]"));
        if (v.contains("denom_cap")) {
            s.denom_cap = as_int(v["denom_cap"], where + ".denom_cap");
            if (s.denom_cap < 1) fail(where, "denom_cap must be >= 1");
        }
    } else {
        fail(where, "scheduler type must be one of cbmf, static, oracle");
    }
    return s;
}

SweepSpec parse_sweep(const json& obj, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    reject_unknown(obj, {"variable", "values"}, where);
    SweepSpec s;
    const std::string var = as_string(require(obj, "variable", where), where + ".variable");
    if (var == "lambda_scale")
        s.variable = SweepVariable::lambda_scale;
    else if (var == "v")
        s.variable = SweepVariable::velocity;
    else if (var == "T")
        s.variable = SweepVariable::epoch_len;
    else
        fail(where, "sweep variable must be one of lambda_scale, v, T");
    const json& values = require(obj, "values", where);
    if (!values.is_array() || values.empty())
        fail(where, "sweep values must be a nonempty array");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string label = where + ".values[" + std::to_string(i) + "]";
        const double x = as_number(values[i], label);
        switch (s.variable) {
            case SweepVariable::lambda_scale:
                if (!(std::isfinite(x) && x >= 0.0)) fail(label, "lambda_scale must be >= 0");
                break;
            case SweepVariable::velocity:
                if (!(std::isfinite(x) && x > 0.0)) fail(label, "velocity must be > 0");
                break;
            case SweepVariable::epoch_len:
                if (!(x >= 1.0 && x == std::floor(x)))
                    fail(label, "T must be an integer >= 1");
                break;
        }
        s.values.push_back(x);
    }
    return s;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }
    if (!doc.is_object()) fail(origin, "top level must be an object");
    reject_unknown(doc,
                   {"network", "scheduler", "horizon_epochs", "warmup_fraction", "output_path",
                    "sweep"},
                   origin);

    ExperimentConfig cfg;
    const json& net = require(doc, "network", origin);
    const std::string net_where = origin + ": network";
    if (!net.is_object()) fail(net_where, "expected an object");
    reject_unknown(net,
                   {"flows", "n_robots", "velocity", "epoch_len", "rate_model", "robot_start"},
                   net_where);

    const json& flows = require(net, "flows", net_where);
    if (!flows.is_array() || flows.empty()) fail(net_where, "flows must be a nonempty array");
    for (std::size_t i = 0; i < flows.size(); ++i)
        cfg.flows.push_back(
            parse_flow(flows[i], i, net_where + ".flows[" + std::to_string(i) + "]"));

    cfg.n_robots = as_int(require(net, "n_robots", net_where), net_where + ".n_robots");
    if (net.contains("velocity"))
        cfg.velocity = as_number(net["velocity"], net_where + ".velocity");
    if (net.contains("epoch_len"))
        cfg.epoch_len = as_int(net["epoch_len"], net_where + ".epoch_len");
    if (net.contains("rate_model"))
        cfg.rate = parse_rate_model(net["rate_model"], net_where + ".rate_model");

    if (net.contains("robot_start")) {
        const json& rs = net["robot_start"];
        const std::string rs_where = net_where + ".robot_start";
        if (rs.is_string()) {
            const std::string mode = rs.get<std::string>();
            if (mode == "first_source")
                cfg.robot_start = RobotStart::first_source;
            else if (mode == "random")
                cfg.robot_start = RobotStart::random_box;
            else
                fail(rs_where, "must be \"first_source\", \"random\", or a list of [x,y]");
        } else if (rs.is_array()) {
            cfg.robot_start = RobotStart::explicit_list;
            for (std::size_t j = 0; j < rs.size(); ++j)
                cfg.robot_start_points.push_back(
                    as_point(rs[j], rs_where + "[" + std::to_string(j) + "]"));
            if (static_cast<int>(cfg.robot_start_points.size()) != cfg.n_robots)
                fail(rs_where, "needs exactly n_robots entries");
        } else {
            fail(rs_where, "must be \"first_source\", \"random\", or a list of [x,y]");
        }
    }

    if (doc.contains("scheduler"))
        cfg.scheduler = parse_scheduler(doc["scheduler"], origin + ": scheduler");
    if (doc.contains("horizon_epochs")) {
        const json& h = doc["horizon_epochs"];
        if (!h.is_number_integer()) fail(origin + ": horizon_epochs", "expected an integer");
        cfg.horizon_epochs = h.get<std::int64_t>();
    }
    if (cfg.horizon_epochs < 4)
        fail(origin, "horizon_epochs must be >= 4 (the stability verdict needs that much)");
    if (doc.contains("warmup_fraction")) {
        cfg.warmup_fraction = as_number(doc["warmup_fraction"], origin + ": warmup_fraction");
        if (!(cfg.warmup_fraction >= 0.0 && cfg.warmup_fraction < 1.0))
            fail(origin, "warmup_fraction must be in [0, 1)");
    }
    if (doc.contains("output_path")) {
        if (!doc["output_path"].is_string()) fail(origin + ": output_path", "expected a string");
        cfg.output_path = doc["output_path"].get<std::string>();
    }
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc["sweep"], origin + ": sweep");

    // Build the network once to surface structural violations at load time
    // (N <= 2K and friends), with a fixed seed so random placement cannot
    // mask an error.
    make_network(cfg, 0);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

NetworkSpec make_network(const ExperimentConfig& cfg, unsigned seed) {
    NetworkSpec net;
    net.flows = cfg.flows;
    net.n_robots = cfg.n_robots;
    net.velocity = cfg.velocity;
    net.epoch_len = cfg.epoch_len;
    net.rate = cfg.rate;
    switch (cfg.robot_start) {
        case RobotStart::first_source:
            if (cfg.flows.empty()) throw std::invalid_argument("make_network: no flows");
            net.initial_robot_pos.assign(static_cast<std::size_t>(cfg.n_robots),
                                         cfg.flows[0].src);
            break;
        case RobotStart::explicit_list:
            net.initial_robot_pos = cfg.robot_start_points;
            break;
        case RobotStart::random_box: {
            double lo_x = cfg.flows[0].src.x, hi_x = lo_x;
            double lo_y = cfg.flows[0].src.y, hi_y = lo_y;
            for (const FlowSpec& f : cfg.flows) {
                for (const Point& p : {f.src, f.sink}) {
                    lo_x = std::min(lo_x, p.x);
                    hi_x = std::max(hi_x, p.x);
                    lo_y = std::min(lo_y, p.y);
                    hi_y = std::max(hi_y, p.y);
                }
            }
            std::mt19937 rng(seed);
            std::uniform_real_distribution<double> ux(lo_x, hi_x), uy(lo_y, hi_y);
            for (int j = 0; j < cfg.n_robots; ++j) {
                const double x = ux(rng);
                net.initial_robot_pos.push_back({x, uy(rng)});
            }
            break;
        }
    }
    validate(net);
    return net;
}

std::unique_ptr<Scheduler> build_scheduler(const SchedulerSpec& spec, const NetworkSpec& net) {
    switch (spec.kind) {
        case SchedulerKind::cbmf:
            return std::make_unique<CbmfScheduler>();
        case SchedulerKind::static_program:
            return std::make_unique<StaticScheduler>(
                load_program(spec.program_file, net.n_flows(), net.n_robots));
        case SchedulerKind::oracle: {
            if (static_cast<int>(spec.target_rates.size()) != net.n_flows())
                throw std::invalid_argument(
                    "oracle scheduler: target_rates size must equal the flow count");
            const auto alpha =
                decompose(spec.target_rates, net.n_flows(), net.n_robots, net.rate.r_max);
            if (!alpha)
                throw std::invalid_argument(
                    "oracle scheduler: target rates fall outside the achievable rate hull");
            const auto basis = enumerate_basis(net.n_flows(), net.n_robots, net.rate.r_max);
            return std::make_unique<StaticScheduler>(
                synthesize_schedule(*alpha, basis, net, spec.denom_cap));
        }
    }
    throw std::logic_error("build_scheduler: unhandled scheduler kind");
}

ScheduleProgram load_program(const std::string& path, int n_flows, int n_robots) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("program file not found: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    const std::string where = path;
    if (!doc.is_object()) fail(where, "top level must be an object");
    reject_unknown(doc, {"entries"}, where);
    const json& entries = require(doc, "entries", where);
    if (!entries.is_array() || entries.empty()) fail(where, "entries must be a nonempty array");

    ScheduleProgram program;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string ew = where + ".entries[" + std::to_string(e) + "]";
        const json& entry = entries[e];
        if (!entry.is_object()) fail(ew, "expected an object");
        reject_unknown(entry, {"robot_slots", "epochs"}, ew);
        const json& slots = require(entry, "robot_slots", ew);
        if (!slots.is_array() || static_cast<int>(slots.size()) != n_robots)
            fail(ew, "robot_slots needs exactly n_robots entries");
        std::vector<int> robot_slot;
        for (std::size_t j = 0; j < slots.size(); ++j)
            robot_slot.push_back(as_int(slots[j], ew + ".robot_slots[" + std::to_string(j) + "]"));
        const int epochs = as_int(require(entry, "epochs", ew), ew + ".epochs");
        if (epochs < 1) fail(ew, "epochs must be >= 1");
        program.entries.emplace_back(allocation_from_slots(robot_slot, n_flows), epochs);
    }
    return program;
}

void save_program(const ScheduleProgram& program, const std::string& path) {
    json entries = json::array();
    for (const auto& [alloc, epochs] : program.entries) {
        json slots = json::array();
        for (int j = 0; j < alloc.n_robots; ++j) {
            int slot = -1;
            for (int i = 0; i < alloc.n_flows; ++i) {
                if (alloc.at(i, j) == +1) slot = i;
                if (alloc.at(i, j) == -1) slot = alloc.n_flows + i;
            }
            slots.push_back(slot);
        }
        entries.push_back({{"robot_slots", slots}, {"epochs", epochs}});
    }
    const json doc = {{"entries", entries}};
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open program file for writing: " + path);
    out << doc.dump(2) << "\n";
}

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::lambda_scale: return "lambda_scale";
        case SweepVariable::velocity: return "v";
        case SweepVariable::epoch_len: return "T";
    }
    return "?";
}

}  // namespace ferry
