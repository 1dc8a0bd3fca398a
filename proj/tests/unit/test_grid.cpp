#include <cmath>
#include <vector>

#include "doctest.h"
#include "liqshock/errors.hpp"
#include "liqshock/grid.hpp"

using namespace liqshock;

TEST_CASE("build_grid pins both endpoints and exponentiates") {
    const Grid g = build_grid(-4.0, 4.0, 201, 1.0, 200);
    CHECK(g.xNodes.front() == -4.0);
    CHECK(g.xNodes.back() == 4.0);  // pinned, not accumulated
    CHECK(g.dx == doctest::Approx(0.04).epsilon(1e-15));
    CHECK(g.dtau == doctest::Approx(0.005).epsilon(1e-15));
    for (std::size_t i = 0; i < g.nSpace; ++i)
        CHECK(g.sNodes[i] == std::exp(g.xNodes[i]));
    for (std::size_t i = 0; i + 1 < g.nSpace; ++i)
        CHECK(g.sNodes[i] < g.sNodes[i + 1]);
}

TEST_CASE("build_grid validates") {
    CHECK_THROWS_AS(build_grid(1.0, 1.0, 201, 1.0, 200), ValidationError);
    CHECK_THROWS_AS(build_grid(2.0, 1.0, 201, 1.0, 200), ValidationError);
    CHECK_THROWS_AS(build_grid(-4.0, 4.0, 2, 1.0, 200), ValidationError);
    CHECK_THROWS_AS(build_grid(-4.0, 4.0, 201, 1.0, 0), ValidationError);
    CHECK_THROWS_AS(build_grid(-4.0, 4.0, 201, 0.0, 200), ValidationError);
}

TEST_CASE("central_nodes covers the middle two quarters") {
    const Grid g = build_grid(-4.0, 4.0, 201, 1.0, 1);
    const std::vector<std::size_t> c = central_nodes(g);
    CHECK(c.front() == 50);  // x = -2
    CHECK(c.back() == 150);  // x = +2
    CHECK(c.size() == 101);
}

TEST_CASE("surface layout: time-major with tau level stride") {
    const Grid g = build_grid(-1.0, 1.0, 5, 1.0, 2);
    Surface s = make_surface(g);
    CHECK(s.levels() == 3);
    CHECK(s.u.size() == 15);
    s.at(2, 3) = 7.0;
    CHECK(s.u[2 * 5 + 3] == 7.0);
    CHECK(s.memory_at(0, 0) == 0.0);
}

TEST_CASE("pricing operator is exact on affine log-price data") {
    const Grid g = build_grid(-3.0, 3.0, 121, 1.0, 1);
    const double sigma = 0.3;
    std::vector<double> constant(g.nSpace, 2.5), linear(g.nSpace);
    for (std::size_t i = 0; i < g.nSpace; ++i) linear[i] = g.xNodes[i];
    const std::vector<double> Lc = apply_bs_operator(g, sigma, constant);
    const std::vector<double> Lx = apply_bs_operator(g, sigma, linear);
    const double a = 0.5 * sigma * sigma;
    for (std::size_t i = 0; i < g.nSpace; ++i) {
        CHECK(Lc[i] == 0.0);  // exact, boundary closure included
        CHECK(Lx[i] == doctest::Approx(-a).epsilon(1e-12));
    }
}

TEST_CASE("pricing operator is exact on quadratics inside") {
    const Grid g = build_grid(-3.0, 3.0, 121, 1.0, 1);
    const double sigma = 0.3;
    std::vector<double> quad(g.nSpace);
    for (std::size_t i = 0; i < g.nSpace; ++i)
        quad[i] = g.xNodes[i] * g.xNodes[i];
    const std::vector<double> Lq = apply_bs_operator(g, sigma, quad);
    const double a = 0.5 * sigma * sigma;
    for (std::size_t i = 1; i + 1 < g.nSpace; ++i)
        CHECK(Lq[i] ==
              doctest::Approx(a * (2.0 - 2.0 * g.xNodes[i])).epsilon(1e-11));
}

TEST_CASE("pricing operator is second order on smooth data") {
    const double sigma = 0.3;
    const double a = 0.5 * sigma * sigma;
    std::vector<double> errs;
    for (std::size_t n : {81, 161, 321}) {
        const Grid g = build_grid(-3.0, 3.0, n, 1.0, 1);
        std::vector<double> u(g.nSpace);
        for (std::size_t i = 0; i < g.nSpace; ++i)
            u[i] = std::sin(g.xNodes[i]);
        const std::vector<double> Lu = apply_bs_operator(g, sigma, u);
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < g.nSpace; ++i) {
            const double exact =
                a * (-std::sin(g.xNodes[i]) - std::cos(g.xNodes[i]));
            worst = std::max(worst, std::abs(Lu[i] - exact));
        }
        errs.push_back(worst);
    }
    CHECK(std::log2(errs[0] / errs[1]) >= 1.9);
    CHECK(std::log2(errs[1] / errs[2]) >= 1.9);
}

TEST_CASE("barrier profile: ridge value and domain guard") {
    const BarrierParams bp{2.0, 0.3};
    const double theta = 1.25;  // tau = 0.75
    const double ridgeS = std::exp(-0.5 * bp.sigma * bp.sigma * theta);
    CHECK(barrier_omega(bp, ridgeS, bp.T1 - theta) ==
          doctest::Approx(1.0 / std::sqrt(theta)).epsilon(1e-14));
    // The exponent is a perfect square: every other S sits above the ridge.
    for (int i = -10; i <= 10; ++i)
        CHECK(barrier_omega(bp, std::exp(0.3 * i), bp.T1 - theta) >=
              1.0 / std::sqrt(theta));
    CHECK_THROWS_AS(barrier_omega(bp, 1.0, bp.T1), DomainError);
    CHECK_THROWS_AS(barrier_omega(bp, 1.0, bp.T1 + 0.1), DomainError);
    CHECK_THROWS_AS(barrier_omega(bp, 0.0, 0.5), DomainError);
}

TEST_CASE("barrier profile solves the pricing equation to second order") {
    // Centered tau difference against the discrete operator; the residual
    // of the true solution shrinks at the scheme order.
    const BarrierParams bp{2.0, 0.3};
    const double tau = 1.0;
    std::vector<double> errs;
    for (int lev = 0; lev < 3; ++lev) {
        const std::size_t n = 100 * (std::size_t{1} << lev) + 1;
        const Grid g = build_grid(-4.0, 4.0, n, bp.T1, 1);
        const double dt = 0.02 / (1 << lev);
        std::vector<double> w0(n), wp(n), wm(n);
        for (std::size_t i = 0; i < n; ++i) {
            w0[i] = barrier_omega(bp, g.sNodes[i], tau);
            wp[i] = barrier_omega(bp, g.sNodes[i], tau + dt);
            wm[i] = barrier_omega(bp, g.sNodes[i], tau - dt);
        }
        const std::vector<double> Lw = apply_bs_operator(g, bp.sigma, w0);
        double worst = 0.0;
        for (std::size_t i : central_nodes(g)) {
            const double res = (wp[i] - wm[i]) / (2.0 * dt) - Lw[i];
            worst = std::max(worst, std::abs(res) / std::max(1.0, w0[i]));
        }
        errs.push_back(worst);
    }
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
    CHECK(std::log2(errs[1] / errs[2]) >= 1.8);
}
