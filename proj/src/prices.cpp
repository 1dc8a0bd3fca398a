#include "liqshock/prices.hpp"

#include <cmath>

#include "liqshock/errors.hpp"
#include "liqshock/memory.hpp"

namespace liqshock {

std::pair<std::vector<double>, std::vector<double>> r_from_u(
    const Surface& surface, const ModelParams& params) {
    const Grid& g = surface.grid;
    const std::size_t n = g.nSpace;
    std::vector<double> r0(surface.u.size());
    std::vector<double> r1(surface.u.size());
    for (std::size_t lvl = 0; lvl < surface.levels(); ++lvl) {
        const double tau = static_cast<double>(lvl) * g.dtau;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t k = lvl * n + i;
            r0[k] = surface.at(lvl, i) + params.nu10 * tau;
            // The datum gamma h is the surface's own initial level.
            const double gh = surface.at(0, i);
            const double arg =
                params.nu10 * surface.memory_at(lvl, i) + std::exp(-gh);
            if (!(arg > 0.0))
                throw DomainError("r1 logarithm argument underflowed to 0");
            r1[k] = params.nu10 * tau - std::log(arg);
        }
    }
    return {std::move(r0), std::move(r1)};
}

PriceSurfaces indifference_prices(const Surface& surface,
                                  const ModelParams& params,
                                  const MertonFactors& factors) {
    const Grid& g = surface.grid;
    if (std::abs(g.horizon - factors.horizon) > 1e-12 * (1.0 + g.horizon))
        throw ValidationError("surface horizon does not match the factors");
    PriceSurfaces out;
    out.nSpace = g.nSpace;
    out.levels = surface.levels();
    out.p.resize(surface.u.size());
    out.q.resize(surface.u.size());
    auto rr = r_from_u(surface, params);
    out.r0 = std::move(rr.first);
    out.r1 = std::move(rr.second);
    for (std::size_t lvl = 0; lvl < out.levels; ++lvl) {
        const double tau = static_cast<double>(lvl) * g.dtau;
        const double t = g.horizon - tau;
        const FactorValues fv = evaluate_factors(factors, std::min(std::max(t, 0.0), factors.horizon));
        if (!(fv.f0 > 0.0) || !(fv.f1 > 0.0))
            throw DomainError("Merton factor must stay positive on [0, T]");
        for (std::size_t i = 0; i < g.nSpace; ++i) {
            const std::size_t k = lvl * g.nSpace + i;
            out.p[k] = (params.nu10 * tau + std::log(fv.f0) +
                        surface.at(lvl, i)) /
                       params.gamma;
            // gamma q = r1 + ln F1 re-expressed through the memory integral.
            out.q[k] = (out.r1[k] + std::log(fv.f1)) / params.gamma;
        }
    }
    return out;
}

double value_function(double R, double X, double gamma) {
    if (std::abs(gamma * X) > kDefaultUCap || std::abs(gamma * R) > kDefaultUCap)
        throw OverflowError("value function exponent exceeds the cap");
    return -std::exp(-gamma * X) * std::exp(-gamma * R);
}

}  // namespace liqshock
