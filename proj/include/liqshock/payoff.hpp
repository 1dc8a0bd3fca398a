#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace liqshock {

enum class PayoffKind { Call, Put, Constant, Tabulated };

// Terminal payoff h(S). Tabulated payoffs interpolate linearly and
// extrapolate flat outside their table. floorValue implements the lower
// truncation max{h, floor}; -inf means no floor.
struct PayoffSpec {
    PayoffKind kind = PayoffKind::Constant;
    double strike = 0.0;   // Call/Put
    double level = 0.0;    // Constant
    std::vector<std::pair<double, double>> table;  // Tabulated, S increasing
    double floorValue = -std::numeric_limits<double>::infinity();
    double xiEps = 0.0;  // > 0 multiplies h by the smooth cutoff xi_eps
    // Growth-envelope metadata |h(S)| <= A exp(alpha ln^2 S). Reporting
    // only; NaN amplitude means "derive from the sampled nodes".
    double growthA = std::numeric_limits<double>::quiet_NaN();
    double growthAlpha = 0.25;
};

PayoffSpec make_call(double strike);
PayoffSpec make_put(double strike);
PayoffSpec make_constant(double level);
// Throws ValidationError unless table S values are strictly increasing.
PayoffSpec make_tabulated(std::vector<std::pair<double, double>> table);

double evaluate(const PayoffSpec& spec, double S);

// h sampled on a node set; the solver's initial datum is gamma * this.
std::vector<double> evaluate_on(const PayoffSpec& spec,
                                const std::vector<double>& sNodes);

struct GrowthReport {
    bool pass = false;
    double worstRatio = 0.0;
    double worstS = 0.0;
    double amplitude = 0.0;  // A actually used
    double exponent = 0.0;   // alpha actually used
};

// Reports max |h(S)| / (A exp(alpha ln^2 S)) over the samples; pass iff <= 1.
// Unset amplitude defaults to 1 + max sample |h|.
GrowthReport growth_check(const PayoffSpec& spec,
                          const std::vector<double>& samples);

struct TruncationParams {
    double epsilon = 0.0;  // in (0, 1)
    double floorN = 0.0;   // > 0
};

// Smooth cutoff: 1 on [eps, 1/eps], 0 outside [eps/2, 2/eps], C^2 quintic
// ramps between. Values always in [0, 1].
double xi_epsilon(const TruncationParams& trunc, double S);

// Floors the initial datum: returns a payoff evaluating to max{h, -N/gamma}.
PayoffSpec truncate_below(const PayoffSpec& spec, double N, double gamma);

}  // namespace liqshock
