#pragma once

#include <utility>
#include <vector>

#include "liqshock/grid.hpp"
#include "liqshock/params.hpp"

namespace liqshock {

// Buyer's indifference prices and certainty-equivalent exponents rebuilt
// from a solved surface. Arrays share the surface layout (level, node);
// level n carries calendar time t = T - tau_n.
struct PriceSurfaces {
    std::vector<double> p;
    std::vector<double> q;
    std::vector<double> r0;
    std::vector<double> r1;
    std::size_t nSpace = 0;
    std::size_t levels = 0;
};

// r0 = u + nu10 tau;  r1 = nu10 tau - ln(nu10 I + e^{-gamma h}) with gamma h
// read off the surface's own initial level. The r1 formula is the explicit
// solution of the linear ODE in e^{-r1}; the log argument is positive
// whenever the datum respects the exponent cap.
std::pair<std::vector<double>, std::vector<double>> r_from_u(
    const Surface& surface, const ModelParams& params);

// gamma p = nu10 tau + ln F0(T - tau) + u
// gamma q = nu10 tau + ln F1(T - tau) - ln(nu10 I + e^{-gamma h})
PriceSurfaces indifference_prices(const Surface& surface,
                                  const ModelParams& params,
                                  const MertonFactors& factors);

// Uhat = -e^{-gamma X} e^{-gamma R}.
double value_function(double R, double X, double gamma);

}  // namespace liqshock
