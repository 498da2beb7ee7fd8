#include "beamrange/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace beamrange {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

struct Context {
    const std::string& path;
    int line;

    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError(path + ":" + std::to_string(line) + ": " + message);
    }
};

double parse_number(const Context& ctx, const std::string& text) {
    try {
        size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) ctx.fail("trailing characters after number '" + text + "'");
        return value;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        ctx.fail("expected a number, got '" + text + "'");
    }
}

long long parse_integer(const Context& ctx, const std::string& text) {
    const double value = parse_number(ctx, text);
    if (value != std::floor(value)) ctx.fail("expected an integer, got '" + text + "'");
    return static_cast<long long>(value);
}

std::vector<double> parse_list(const Context& ctx, const std::string& text) {
    const std::string body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        ctx.fail("expected a [..] list, got '" + text + "'");
    }
    std::vector<double> out;
    std::stringstream ss(body.substr(1, body.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) ctx.fail("empty list element");
        out.push_back(parse_number(ctx, item));
    }
    if (out.empty()) ctx.fail("empty list");
    return out;
}

}  // namespace

ExperimentSpec parse_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("cannot open config file '" + path + "'");

    ExperimentSpec spec;
    RunConfig& cfg = spec.config;
    std::map<std::string, bool> seen;
    std::vector<double> theta_d_deg, theta_u_deg;
    std::string constraint_name;
    double gamma_p_db = 0.0;

    std::string raw;
    int line_no = 0;
    while (std::getline(file, raw)) {
        ++line_no;
        const Context ctx{path, line_no};
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') ctx.fail("unterminated section header");
            continue;  // sections are organizational only
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) ctx.fail("expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) ctx.fail("empty key");
        if (value.empty()) ctx.fail("empty value for key '" + key + "'");
        if (seen[key] && key != "theta_d" && key != "theta_u") {
            ctx.fail("duplicate key '" + key + "'");
        }
        seen[key] = true;

        if (key == "mt") {
            cfg.mt = static_cast<int>(parse_integer(ctx, value));
        } else if (key == "n") {
            cfg.n = static_cast<int>(parse_integer(ctx, value));
        } else if (key == "constraint") {
            constraint_name = value;
        } else if (key == "gamma_p_db") {
            gamma_p_db = parse_number(ctx, value);
        } else if (key == "alphabet_size") {
            cfg.constraint.alphabet_size = static_cast<int>(parse_integer(ctx, value));
        } else if (key == "eta") {
            spec.etas = value.front() == '[' ? parse_list(ctx, value)
                                             : std::vector<double>{parse_number(ctx, value)};
        } else if (key == "zeta") {
            cfg.zeta = parse_number(ctx, value);
        } else if (key == "max_sweeps") {
            cfg.max_sweeps = static_cast<int>(parse_integer(ctx, value));
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_integer(ctx, value));
        } else if (key == "trials") {
            spec.trials = static_cast<int>(parse_integer(ctx, value));
        } else if (key == "init_alphabet") {
            cfg.init_alphabet = static_cast<int>(parse_integer(ctx, value));
        } else if (key == "dt_over_lambda") {
            cfg.scenario.dt_over_lambda = parse_number(ctx, value);
        } else if (key == "output_dir") {
            spec.output_dir = value;
        } else if (key == "theta_d" || key == "theta_u") {
            const std::vector<double> triple = parse_list(ctx, value);
            if (triple.size() != 3) ctx.fail(key + " expects [lo_deg, hi_deg, step_deg]");
            auto& grid = (key == "theta_d") ? theta_d_deg : theta_u_deg;
            for (double deg : expand_angle_grid_deg(triple[0], triple[1], triple[2])) {
                grid.push_back(deg);
            }
        } else {
            ctx.fail("unknown key '" + key + "'");
        }
    }

    for (const char* required : {"mt", "n", "constraint", "eta", "theta_d", "theta_u"}) {
        if (!seen[required]) {
            throw ConfigError(path + ": missing required key '" + std::string(required) + "'");
        }
    }

    if (constraint_name == "energy") {
        cfg.constraint.kind = ConstraintKind::Energy;
    } else if (constraint_name == "par") {
        cfg.constraint.kind = ConstraintKind::Par;
        if (!seen["gamma_p_db"]) {
            throw ConfigError(path + ": missing required key 'gamma_p_db' (constraint = par)");
        }
        cfg.constraint.gamma_p = std::pow(10.0, gamma_p_db / 10.0);
    } else if (constraint_name == "continuous") {
        cfg.constraint.kind = ConstraintKind::ContinuousPhase;
    } else if (constraint_name == "discrete") {
        cfg.constraint.kind = ConstraintKind::DiscretePhase;
        if (!seen["alphabet_size"]) {
            throw ConfigError(path +
                              ": missing required key 'alphabet_size' (constraint = discrete)");
        }
    } else {
        throw ConfigError(path + ": unknown constraint '" + constraint_name + "'");
    }

    if (spec.trials < 1) throw ConfigError(path + ": trials must be >= 1");
    for (double eta : spec.etas) {
        if (!(eta >= 0.0 && eta <= 1.0)) throw ConfigError(path + ": eta out of [0,1]");
    }
    for (double deg : theta_d_deg) cfg.scenario.theta_d.push_back(deg_to_rad(deg));
    for (double deg : theta_u_deg) cfg.scenario.theta_u.push_back(deg_to_rad(deg));

    cfg.eta = spec.etas.front();
    spec.config = validate_config(cfg);
    return spec;
}

}  // namespace beamrange
