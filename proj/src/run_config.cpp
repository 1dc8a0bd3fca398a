#include "liqshock/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "liqshock/errors.hpp"

namespace liqshock {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("config key " + key +
                              " has a non-numeric value: " + value);
    }
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e12)
        throw ValidationError("config key " + key +
                              " must be a nonnegative integer");
    return static_cast<std::size_t>(v);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineNo) +
                                  " is not of the form key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ValidationError("config line " + std::to_string(lineNo) +
                                  " has an empty key or value");
        if (!seen.insert(key).second)
            throw ValidationError("duplicate config key: " + key);

        if (key == "model.sigma") cfg.sigma = parse_number(key, value);
        else if (key == "model.mu") cfg.mu = parse_number(key, value);
        else if (key == "model.nu01") cfg.nu01 = parse_number(key, value);
        else if (key == "model.nu10") cfg.nu10 = parse_number(key, value);
        else if (key == "model.gamma") cfg.gamma = parse_number(key, value);
        else if (key == "model.T") cfg.horizon = parse_number(key, value);
        else if (key == "payoff.kind") cfg.payoffKind = value;
        else if (key == "payoff.strike") {
            cfg.strike = parse_number(key, value);
            cfg.hasStrike = true;
        } else if (key == "payoff.level") {
            cfg.level = parse_number(key, value);
            cfg.hasLevel = true;
        } else if (key == "payoff.table") cfg.tablePath = value;
        else if (key == "payoff.floorN") {
            cfg.floorN = parse_number(key, value);
            cfg.hasFloorN = true;
        } else if (key == "payoff.xiEpsilon") {
            cfg.xiEpsilon = parse_number(key, value);
            cfg.hasXiEpsilon = true;
        } else if (key == "payoff.growthA") {
            cfg.growthA = parse_number(key, value);
            cfg.hasGrowthA = true;
        } else if (key == "payoff.growthAlpha") cfg.growthAlpha = parse_number(key, value);
        else if (key == "grid.xMin") cfg.xMin = parse_number(key, value);
        else if (key == "grid.xMax") cfg.xMax = parse_number(key, value);
        else if (key == "grid.nSpace") cfg.nSpace = parse_count(key, value);
        else if (key == "grid.nTime") cfg.nTime = parse_count(key, value);
        else if (key == "solver.scheme") cfg.scheme = value;
        else if (key == "solver.tolIter") cfg.tolIter = parse_number(key, value);
        else if (key == "solver.maxIter") cfg.maxIter = parse_count(key, value);
        else if (key == "solver.N") {
            cfg.shiftN = parse_number(key, value);
            cfg.hasShiftN = true;
        } else if (key == "solver.M") {
            cfg.bracketM = parse_number(key, value);
            cfg.hasBracketM = true;
        } else if (key == "weight.exponent") cfg.weightExponent = parse_number(key, value);
        else if (key == "output.directory") cfg.outputDirectory = value;
        else if (key == "output.formats") cfg.outputFormats = value;
        else throw ValidationError("unknown config key: " + key);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ModelParams to_params(const RunConfig& cfg) {
    return derive_constants(cfg.sigma, cfg.mu, cfg.nu01, cfg.nu10, cfg.gamma,
                            cfg.horizon);
}

static std::vector<std::pair<double, double>> load_table(
    const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open payoff.table file: " + path);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        line = trim(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ValidationError("payoff.table line " +
                                  std::to_string(lineNo) +
                                  " is not two comma-separated columns");
        const std::string a = trim(line.substr(0, comma));
        const std::string b = trim(line.substr(comma + 1));
        if (lineNo == 1 && (a == "S" || a == "s")) continue;  // header row
        rows.emplace_back(parse_number("payoff.table S", a),
                          parse_number("payoff.table h", b));
    }
    return rows;
}

PayoffSpec to_payoff(const RunConfig& cfg) {
    PayoffSpec spec;
    if (cfg.payoffKind == "call") {
        if (!cfg.hasStrike)
            throw ValidationError("payoff.strike is required for kind call");
        spec = make_call(cfg.strike);
    } else if (cfg.payoffKind == "put") {
        if (!cfg.hasStrike)
            throw ValidationError("payoff.strike is required for kind put");
        spec = make_put(cfg.strike);
    } else if (cfg.payoffKind == "constant") {
        if (!cfg.hasLevel)
            throw ValidationError("payoff.level is required for kind constant");
        spec = make_constant(cfg.level);
    } else if (cfg.payoffKind == "tabulated") {
        if (cfg.tablePath.empty())
            throw ValidationError("payoff.table is required for kind tabulated");
        spec = make_tabulated(load_table(cfg.tablePath));
    } else if (cfg.payoffKind.empty()) {
        throw ValidationError("payoff.kind is required");
    } else {
        throw ValidationError("payoff.kind must be one of call, put, "
                              "constant, tabulated");
    }
    if (cfg.hasGrowthA) {
        if (!(cfg.growthA > 0.0))
            throw ValidationError("payoff.growthA must be > 0");
        spec.growthA = cfg.growthA;
    }
    if (!(cfg.growthAlpha > 0.0))
        throw ValidationError("payoff.growthAlpha must be > 0");
    spec.growthAlpha = cfg.growthAlpha;
    if (cfg.hasXiEpsilon) {
        if (!(cfg.xiEpsilon > 0.0 && cfg.xiEpsilon < 1.0))
            throw ValidationError("payoff.xiEpsilon must lie in (0, 1)");
        spec.xiEps = cfg.xiEpsilon;
    }
    if (cfg.hasFloorN) {
        if (!(cfg.floorN > 0.0))
            throw ValidationError("payoff.floorN must be > 0");
        if (!(cfg.gamma > 0.0))
            throw ValidationError("model.gamma must be > 0");
        spec = truncate_below(spec, cfg.floorN, cfg.gamma);
    }
    return spec;
}

Grid to_grid(const RunConfig& cfg) {
    return build_grid(cfg.xMin, cfg.xMax, cfg.nSpace, cfg.horizon, cfg.nTime);
}

SolverConfig to_solver_config(const RunConfig& cfg) {
    SolverConfig sc;
    if (cfg.scheme == "direct") sc.scheme = Scheme::DirectIMEX;
    else if (cfg.scheme == "monotone") sc.scheme = Scheme::MonotoneIteration;
    else throw ValidationError("solver.scheme must be direct or monotone");
    if (!(cfg.tolIter > 0.0))
        throw ValidationError("solver.tolIter must be > 0");
    if (cfg.maxIter < 1) throw ValidationError("solver.maxIter must be >= 1");
    sc.tolIter = cfg.tolIter;
    sc.maxIter = cfg.maxIter;
    if (cfg.hasShiftN) {
        if (!(cfg.shiftN >= 0.0))
            throw ValidationError("solver.N must be >= 0");
        sc.shiftN = cfg.shiftN;
    }
    if (cfg.hasBracketM) {
        if (!(cfg.bracketM >= 0.0))
            throw ValidationError("solver.M must be >= 0");
        sc.bracketM = cfg.bracketM;
    }
    return sc;
}

WeightSpec to_weight(const RunConfig& cfg) {
    return make_power_weight(cfg.weightExponent);
}

std::string resolved_config_json(const RunConfig& cfg, std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["model.sigma"] = cfg.sigma;
    j["model.mu"] = cfg.mu;
    j["model.nu01"] = cfg.nu01;
    j["model.nu10"] = cfg.nu10;
    j["model.gamma"] = cfg.gamma;
    j["model.T"] = cfg.horizon;
    j["payoff.kind"] = cfg.payoffKind;
    if (cfg.hasStrike) j["payoff.strike"] = cfg.strike;
    if (cfg.hasLevel) j["payoff.level"] = cfg.level;
    if (!cfg.tablePath.empty()) j["payoff.table"] = cfg.tablePath;
    if (cfg.hasFloorN) j["payoff.floorN"] = cfg.floorN;
    if (cfg.hasXiEpsilon) j["payoff.xiEpsilon"] = cfg.xiEpsilon;
    if (cfg.hasGrowthA) j["payoff.growthA"] = cfg.growthA;
    j["payoff.growthAlpha"] = cfg.growthAlpha;
    j["grid.xMin"] = cfg.xMin;
    j["grid.xMax"] = cfg.xMax;
    j["grid.nSpace"] = cfg.nSpace;
    j["grid.nTime"] = cfg.nTime;
    j["solver.scheme"] = cfg.scheme;
    j["solver.tolIter"] = cfg.tolIter;
    j["solver.maxIter"] = cfg.maxIter;
    if (cfg.hasShiftN) j["solver.N"] = cfg.shiftN;
    if (cfg.hasBracketM) j["solver.M"] = cfg.bracketM;
    j["weight.exponent"] = cfg.weightExponent;
    j["output.directory"] = cfg.outputDirectory;
    j["output.formats"] = cfg.outputFormats;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

}  // namespace liqshock
