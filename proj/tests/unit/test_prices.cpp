#include <cmath>
#include <vector>

#include "doctest.h"
#include "liqshock/errors.hpp"
#include "liqshock/prices.hpp"
#include "liqshock/solver.hpp"

using namespace liqshock;

namespace {

ModelParams reference_params() {
    return derive_constants(0.3, 0.06, 1.0, 2.0, 1.0, 1.0);
}

std::pair<Surface, ModelParams> solved_constant(double level) {
    const ModelParams p = reference_params();
    const Grid g = build_grid(-3.0, 3.0, 61, 1.0, 50);
    SolverConfig sc;
    auto [surf, rep] = solve_direct(p, make_constant(level), g, sc);
    return {std::move(surf), p};
}

}  // namespace

TEST_CASE("certainty equivalents collapse to gamma h at tau = 0") {
    auto [surf, p] = solved_constant(0.7);
    auto [r0, r1] = r_from_u(surf, p);
    for (std::size_t i = 0; i < surf.grid.nSpace; ++i) {
        CHECK(r0[i] == doctest::Approx(0.7).epsilon(1e-14));
        CHECK(r1[i] == doctest::Approx(0.7).epsilon(1e-14));
    }
}

TEST_CASE("nu10 = 0 pins the frozen-state equivalent at gamma h") {
    // r1 = nu10 tau - ln(nu10 I + e^{-gamma h}) = gamma h when nu10 = 0.
    const ModelParams p = derive_constants(0.3, 0.06, 1.0, 0.0, 1.0, 1.0);
    const Grid g = build_grid(-3.0, 3.0, 41, 1.0, 20);
    SolverConfig sc;
    auto [surf, rep] = solve_direct(p, make_constant(0.4), g, sc);
    auto [r0, r1] = r_from_u(surf, p);
    for (double v : r1) CHECK(v == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("indifference prices: terminal identity is exact") {
    auto [surf, p] = solved_constant(0.7);
    const MertonFactors f = merton_spectrum(p);
    const PriceSurfaces prices = indifference_prices(surf, p, f);
    // Level 0 is tau = 0, i.e. t = T: F0(T) = F1(T) = 1 and u = gamma h.
    for (std::size_t i = 0; i < prices.nSpace; ++i) {
        CHECK(std::abs(prices.p[i] - 0.7) <= 1e-10);
        CHECK(std::abs(prices.q[i] - 0.7) <= 1e-10);
    }
}

TEST_CASE("indifference prices stay flat for constant payoffs") {
    auto [surf, p] = solved_constant(0.7);
    const MertonFactors f = merton_spectrum(p);
    const PriceSurfaces prices = indifference_prices(surf, p, f);
    for (double v : prices.p) CHECK(v == doctest::Approx(0.7).epsilon(2e-4));
    for (double v : prices.q) CHECK(v == doctest::Approx(0.7).epsilon(2e-4));
}

TEST_CASE("prices are shift covariant") {
    // Adding a cash amount c to the payoff moves both prices by c: the
    // reaction term is invariant under (u, h) -> (u + gamma c, h + c).
    auto [s0, p] = solved_constant(0.4);
    auto [s1, p1] = solved_constant(0.4 + 0.25);
    const MertonFactors f = merton_spectrum(p);
    const PriceSurfaces a = indifference_prices(s0, p, f);
    const PriceSurfaces b = indifference_prices(s1, p, f);
    for (std::size_t k = 0; k < a.p.size(); ++k) {
        CHECK(b.p[k] - a.p[k] == doctest::Approx(0.25).epsilon(1e-10));
        CHECK(b.q[k] - a.q[k] == doctest::Approx(0.25).epsilon(1e-10));
    }
}

TEST_CASE("bounded payoffs give bounded prices") {
    // 0 <= h <= h_max sandwiches both prices inside [0, h_max] up to the
    // discretization error.
    const ModelParams p = reference_params();
    const Grid g = build_grid(-3.0, 3.0, 61, 1.0, 50);
    SolverConfig sc;
    const PayoffSpec capped =
        make_tabulated({{std::exp(-3.0), 0.0},
                        {1.0, 0.0},
                        {2.5, 1.5},
                        {std::exp(3.0), 1.5}});
    auto [surf, rep] = solve_direct(p, capped, g, sc);
    const MertonFactors f = merton_spectrum(p);
    const PriceSurfaces prices = indifference_prices(surf, p, f);
    for (double v : prices.p) {
        CHECK(v >= -1e-3);
        CHECK(v <= 1.5 + 1e-3);
    }
    for (double v : prices.q) {
        CHECK(v >= -1e-3);
        CHECK(v <= 1.5 + 1e-3);
    }
}

TEST_CASE("value function: pinned values and monotonicity") {
    CHECK(value_function(0.0, 0.0, 1.0) == -1.0);
    CHECK(value_function(2.0, 0.0, 1.0) ==
          doctest::Approx(-std::exp(-2.0)).epsilon(1e-15));
    CHECK(value_function(1.0, 1.0, 2.0) ==
          doctest::Approx(-std::exp(-4.0)).epsilon(1e-15));
    // Increasing in both wealth and the certainty equivalent.
    CHECK(value_function(0.5, 1.0, 1.0) > value_function(0.5, 0.5, 1.0));
    CHECK(value_function(1.0, 0.5, 1.0) > value_function(0.5, 0.5, 1.0));
    CHECK(value_function(0.0, 0.0, 2.0) == -1.0);
}

TEST_CASE("price reconstruction rejects mismatched factor horizons") {
    auto [surf, p] = solved_constant(0.7);
    const ModelParams other = derive_constants(0.3, 0.06, 1.0, 2.0, 1.0, 2.0);
    const MertonFactors f = merton_spectrum(other);
    CHECK_THROWS_AS(indifference_prices(surf, p, f), ValidationError);
}
