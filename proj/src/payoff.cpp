#include "liqshock/payoff.hpp"

#include <algorithm>
#include <cmath>

#include "liqshock/errors.hpp"

namespace liqshock {

PayoffSpec make_call(double strike) {
    if (!(strike > 0.0)) throw ValidationError("payoff.strike must be > 0");
    PayoffSpec s;
    s.kind = PayoffKind::Call;
    s.strike = strike;
    return s;
}

PayoffSpec make_put(double strike) {
    if (!(strike > 0.0)) throw ValidationError("payoff.strike must be > 0");
    PayoffSpec s;
    s.kind = PayoffKind::Put;
    s.strike = strike;
    return s;
}

PayoffSpec make_constant(double level) {
    if (!std::isfinite(level))
        throw ValidationError("payoff.level must be finite");
    PayoffSpec s;
    s.kind = PayoffKind::Constant;
    s.level = level;
    return s;
}

PayoffSpec make_tabulated(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2)
        throw ValidationError("payoff.table needs at least two rows");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(table[i].first > 0.0) || !std::isfinite(table[i].second))
            throw ValidationError("payoff.table entries must be finite, S > 0");
        if (i > 0 && !(table[i].first > table[i - 1].first))
            throw ValidationError("payoff.table S column must be strictly increasing");
    }
    PayoffSpec s;
    s.kind = PayoffKind::Tabulated;
    s.table = std::move(table);
    return s;
}

static double raw_value(const PayoffSpec& spec, double S) {
    switch (spec.kind) {
        case PayoffKind::Call:
            return std::max(S - spec.strike, 0.0);
        case PayoffKind::Put:
            return std::max(spec.strike - S, 0.0);
        case PayoffKind::Constant:
            return spec.level;
        case PayoffKind::Tabulated: {
            const auto& t = spec.table;
            if (S <= t.front().first) return t.front().second;
            if (S >= t.back().first) return t.back().second;
            auto it = std::upper_bound(
                t.begin(), t.end(), S,
                [](double s, const auto& row) { return s < row.first; });
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double f = (S - lo.first) / (hi.first - lo.first);
            return lo.second + f * (hi.second - lo.second);
        }
    }
    throw DomainError("unreachable payoff kind");
}

double evaluate(const PayoffSpec& spec, double S) {
    if (!(S > 0.0)) throw DomainError("payoff evaluation needs S > 0");
    double v = raw_value(spec, S);
    if (spec.xiEps > 0.0) v *= xi_epsilon({spec.xiEps, 1.0}, S);
    return std::max(v, spec.floorValue);
}

std::vector<double> evaluate_on(const PayoffSpec& spec,
                                const std::vector<double>& sNodes) {
    std::vector<double> h(sNodes.size());
    for (std::size_t i = 0; i < sNodes.size(); ++i) h[i] = evaluate(spec, sNodes[i]);
    return h;
}

GrowthReport growth_check(const PayoffSpec& spec,
                          const std::vector<double>& samples) {
    if (samples.empty())
        throw ValidationError("growth_check needs at least one sample");
    GrowthReport rep;
    rep.exponent = spec.growthAlpha;
    double A = spec.growthA;
    if (!(A > 0.0)) {
        double hMax = 0.0;
        for (double S : samples) hMax = std::max(hMax, std::abs(evaluate(spec, S)));
        A = 1.0 + hMax;
    }
    rep.amplitude = A;
    for (double S : samples) {
        const double lnS = std::log(S);
        const double envelope = A * std::exp(rep.exponent * lnS * lnS);
        const double ratio = std::abs(evaluate(spec, S)) / envelope;
        if (ratio > rep.worstRatio) {
            rep.worstRatio = ratio;
            rep.worstS = S;
        }
    }
    rep.pass = rep.worstRatio <= 1.0;
    return rep;
}

// Quintic smoothstep ramp: 0 on (-inf, 1/2], 1 on [1, inf), C^2 across both
// joints so x xi'(x) stays bounded.
static double base_ramp(double x) {
    if (x <= 0.5) return 0.0;
    if (x >= 1.0) return 1.0;
    const double t = (x - 0.5) * 2.0;
    return ((6.0 * t - 15.0) * t + 10.0) * t * t * t;
}

double xi_epsilon(const TruncationParams& trunc, double S) {
    if (!(trunc.epsilon > 0.0 && trunc.epsilon < 1.0))
        throw ValidationError("truncation epsilon must lie in (0, 1)");
    if (!(S > 0.0)) throw DomainError("xi_epsilon needs S > 0");
    return base_ramp(S / trunc.epsilon) * (1.0 - base_ramp(S * trunc.epsilon / 2.0));
}

PayoffSpec truncate_below(const PayoffSpec& spec, double N, double gamma) {
    if (!(N > 0.0)) throw ValidationError("truncation floor N must be > 0");
    if (!(gamma > 0.0)) throw ValidationError("model.gamma must be > 0");
    PayoffSpec out = spec;
    out.floorValue = std::max(out.floorValue, -N / gamma);
    return out;
}

}  // namespace liqshock
