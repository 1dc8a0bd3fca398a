#pragma once

#include <cstdint>
#include <string>

#include "liqshock/analysis.hpp"
#include "liqshock/grid.hpp"
#include "liqshock/params.hpp"
#include "liqshock/payoff.hpp"
#include "liqshock/solver.hpp"

namespace liqshock {

// Flat dotted-key config: one "section.key = value" per line, '#' comments.
// Unknown keys are rejected so typos cannot silently fall back to defaults.
struct RunConfig {
    double sigma = 0.0;
    double mu = 0.0;
    double nu01 = 0.0;
    double nu10 = 0.0;
    double gamma = 1.0;
    double horizon = 1.0;

    std::string payoffKind;
    double strike = 0.0;
    bool hasStrike = false;
    double level = 0.0;
    bool hasLevel = false;
    std::string tablePath;
    double floorN = 0.0;
    bool hasFloorN = false;
    double xiEpsilon = 0.0;
    bool hasXiEpsilon = false;
    double growthA = 0.0;
    bool hasGrowthA = false;
    double growthAlpha = 0.25;

    double xMin = -4.0;
    double xMax = 4.0;
    std::size_t nSpace = 201;
    std::size_t nTime = 200;

    std::string scheme = "direct";
    double tolIter = 1e-8;
    std::size_t maxIter = 200;
    double shiftN = -1.0;
    bool hasShiftN = false;
    double bracketM = -1.0;
    bool hasBracketM = false;

    double weightExponent = -4.0;

    std::string outputDirectory = "out";
    std::string outputFormats = "csv,json";
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Builders; each throws ValidationError naming the offending config key.
ModelParams to_params(const RunConfig& cfg);
PayoffSpec to_payoff(const RunConfig& cfg);
Grid to_grid(const RunConfig& cfg);
SolverConfig to_solver_config(const RunConfig& cfg);
WeightSpec to_weight(const RunConfig& cfg);

// Full resolved state (defaults filled in, seed included) as JSON, written
// next to every output set for reproducibility.
std::string resolved_config_json(const RunConfig& cfg, std::uint64_t seed);

}  // namespace liqshock
