#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "liqshock/errors.hpp"
#include "liqshock/solver.hpp"

using namespace liqshock;

namespace {

ModelParams reference_params() {
    return derive_constants(0.3, 0.06, 1.0, 2.0, 1.0, 1.0);
}

}  // namespace

TEST_CASE("reaction term: pinned special cases") {
    const ModelParams p = reference_params();
    const std::vector<double> zero{0.0}, I0{0.0};
    // tau = 0, u = gamma h = 0: F = kappa - nu01.
    CHECK(f_rhs(p, zero, I0, zero)[0] ==
          doctest::Approx(p.kappa - p.nu01).epsilon(1e-15));
    // nu01 = 0 freezes the reaction at kappa whatever the state.
    const ModelParams q = derive_constants(0.3, 0.06, 0.0, 2.0, 1.0, 1.0);
    const std::vector<double> u{0.37}, I{1.4}, gh{-0.2};
    CHECK(f_rhs(q, u, I, gh)[0] == doctest::Approx(q.kappa).epsilon(1e-15));
    // Constant state u = gamma h = c with I = tau e^{-c}:
    // F = kappa - nu01 (1 + nu10 tau), independent of c.
    const double c = 0.7, tau = 0.6;
    const std::vector<double> uc{c}, Ic{tau * std::exp(-c)}, ghc{c};
    CHECK(f_rhs(p, uc, Ic, ghc)[0] ==
          doctest::Approx(p.kappa - p.nu01 * (1.0 + p.nu10 * tau))
              .epsilon(1e-14));
}

TEST_CASE("reaction term reports blow-up against the cap") {
    const ModelParams p = reference_params();
    const std::vector<double> I0{0.0}, zero{0.0};
    CHECK_THROWS_AS(f_rhs(p, {501.0}, I0, zero, 500.0), OverflowError);
    CHECK_THROWS_AS(f_rhs(p, {-501.0}, I0, zero, 500.0), OverflowError);
    CHECK_THROWS_AS(f_rhs(p, zero, I0, {501.0}, 500.0), OverflowError);
}

TEST_CASE("parabolic step: constants are fixed points") {
    const Grid g = build_grid(-3.0, 3.0, 61, 1.0, 10);
    const std::vector<double> c(g.nSpace, 0.8), zeroG(g.nSpace, 0.0);
    // No shift, no source: L c = 0 so c persists exactly (to solver tol).
    std::vector<double> next =
        linear_parabolic_step(g, 0.3, 0.0, c, zeroG, g.dtau);
    for (double v : next) CHECK(v == doctest::Approx(0.8).epsilon(1e-13));
    // Shift N with the matching source g = N c: same fixed point.
    const double N = 7.0;
    std::vector<double> src(g.nSpace, N * 0.8);
    next = linear_parabolic_step(g, 0.3, N, c, src, g.dtau);
    for (double v : next) CHECK(v == doctest::Approx(0.8).epsilon(1e-13));
}

TEST_CASE("parabolic step: far-field rows follow the pure reaction ODE") {
    // The diffusion rows are zeroed at both ends, so the boundary nodes
    // obey (1/dtau + N/2) next = (1/dtau - N/2) prev + g exactly.
    const Grid g = build_grid(-3.0, 3.0, 61, 1.0, 10);
    const double N = 3.0;
    std::vector<double> u(g.nSpace), src(g.nSpace);
    for (std::size_t i = 0; i < g.nSpace; ++i) {
        u[i] = std::sin(1.7 * g.xNodes[i]);
        src[i] = 0.3 * g.xNodes[i];
    }
    const std::vector<double> next =
        linear_parabolic_step(g, 0.3, N, u, src, g.dtau);
    const double a = 1.0 / g.dtau + 0.5 * N;
    const double b = 1.0 / g.dtau - 0.5 * N;
    CHECK(next.front() ==
          doctest::Approx((b * u.front() + src.front()) / a).epsilon(1e-13));
    CHECK(next.back() ==
          doctest::Approx((b * u.back() + src.back()) / a).epsilon(1e-13));
}

TEST_CASE("parabolic step is monotone in the right-hand side") {
    // The step matrix is an M-matrix for every N >= 0, so a node-wise
    // larger source can never produce a smaller solution anywhere.
    const Grid g = build_grid(-3.0, 3.0, 41, 1.0, 20);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int draw = 0; draw < 200; ++draw) {
        const double N = 10.0 * uni(rng);
        std::vector<double> base(g.nSpace), lo(g.nSpace), hi(g.nSpace);
        for (std::size_t i = 0; i < g.nSpace; ++i) {
            base[i] = -1.0 + 2.0 * uni(rng);
            lo[i] = -1.0 + 2.0 * uni(rng);
            hi[i] = lo[i] + uni(rng);  // hi >= lo node-wise
        }
        const std::vector<double> a =
            linear_parabolic_step(g, 0.3, N, base, lo, g.dtau);
        const std::vector<double> b =
            linear_parabolic_step(g, 0.3, N, base, hi, g.dtau);
        for (std::size_t i = 0; i < g.nSpace; ++i)
            CHECK(b[i] >= a[i] - 1e-12);
    }
}

TEST_CASE("bracket derivation: flat payoff reference") {
    // h = 0, kappa = 0 (mu = 0, nu01 = nu10): c0 = 0 and
    // M = |kappa| + nu01 (1 + nu10) + 1.
    const ModelParams p = derive_constants(0.3, 0.0, 0.5, 0.5, 1.0, 1.0);
    const Grid g = build_grid(-2.0, 2.0, 41, 1.0, 10);
    const Bracket b = derive_bracket(p, make_constant(0.0), g);
    CHECK(b.c0 == 0.0);
    CHECK(b.M == doctest::Approx(0.5 * 1.5 + 1.0).epsilon(1e-15));
    CHECK(b.N > 0.0);
    // M always dominates |kappa|, so the supersolution really is one.
    const ModelParams q = reference_params();
    CHECK(derive_bracket(q, make_constant(0.7), g).M >= std::abs(q.kappa));
}

TEST_CASE("closed forms: constant payoff and the terminal datum") {
    const ModelParams p = reference_params();
    const MertonFactors f = merton_spectrum(p);
    CHECK(constant_payoff_solution(p, f, 0.7, 0.0) ==
          doctest::Approx(0.7).epsilon(1e-14));  // gamma h at tau = 0
    // Frozen references: gamma h* - nu10 tau - ln F0(T - tau).
    CHECK(constant_payoff_solution(p, f, 0.7, 1.0) ==
          doctest::Approx(-1.2845691678939517).epsilon(1e-13));
    CHECK(constant_payoff_solution(p, f, 0.7, 0.5) ==
          doctest::Approx(-0.29161042891975786).epsilon(1e-13));
}

TEST_CASE("closed forms: the nu01 = 0 reduction") {
    const ModelParams p = derive_constants(0.3, 0.06, 0.0, 2.0, 1.0, 1.0);
    // tau -> 0 recovers the intrinsic value.
    CHECK(linear_reduction_solution(p, 1.0, 2.0, 0.0) ==
          doctest::Approx(p.gamma * 1.0).epsilon(1e-12));
    CHECK(linear_reduction_solution(p, 1.0, 0.5, 0.0) == 0.0);
    // Frozen at-the-money reference: kappa tau + gamma BS(S, K, sigma, tau).
    CHECK(linear_reduction_solution(p, 1.0, 1.0, 0.5) ==
          doctest::Approx(-0.9055299733767719).epsilon(1e-13));
    const ModelParams bad = reference_params();
    CHECK_THROWS_AS(linear_reduction_solution(bad, 1.0, 1.0, 0.5),
                    DomainError);
}

TEST_CASE("direct scheme reproduces the constant-payoff closed form") {
    const ModelParams p = reference_params();
    const MertonFactors f = merton_spectrum(p);
    const Grid g = build_grid(-4.0, 4.0, 101, 1.0, 100);
    SolverConfig sc;
    auto [surf, rep] = solve_direct(p, make_constant(0.7), g, sc);
    CHECK(rep.iterations == g.nTime);
    CHECK(rep.estimateRatio > 0.0);
    for (std::size_t n = 0; n <= g.nTime; ++n) {
        const double oracle =
            constant_payoff_solution(p, f, 0.7, n * g.dtau);
        for (std::size_t i = 0; i < g.nSpace; ++i)
            CHECK(surf.at(n, i) == doctest::Approx(oracle).epsilon(5e-4));
    }
}

TEST_CASE("monotone scheme agrees with the direct one") {
    // Mild intensities keep the Lipschitz shift small enough for the
    // 200-iteration budget.
    const ModelParams p = derive_constants(0.3, 0.06, 0.25, 0.25, 1.0, 1.0);
    const Grid g = build_grid(-3.0, 3.0, 61, 1.0, 40);
    const PayoffSpec h = make_constant(0.5);
    SolverConfig direct;
    SolverConfig mono;
    mono.scheme = Scheme::MonotoneIteration;
    auto [ud, rd] = solve_direct(p, h, g, direct);
    auto [um, rm] = solve_monotone(p, h, g, mono);
    CHECK(rm.iterations <= 200);
    CHECK(rm.finalIncrement <= mono.tolIter);
    CHECK(rm.maxIterateIncrease <= 1e-12);
    CHECK(rm.bracketViolation <= 1e-12);
    double gap = 0.0;
    for (std::size_t k = 0; k < ud.u.size(); ++k)
        gap = std::max(gap, std::abs(ud.u[k] - um.u[k]));
    CHECK(gap <= 1e-3);
}

TEST_CASE("monotone scheme reports non-convergence honestly") {
    const ModelParams p = derive_constants(0.3, 0.06, 0.25, 0.25, 1.0, 1.0);
    const Grid g = build_grid(-3.0, 3.0, 41, 1.0, 20);
    SolverConfig sc;
    sc.scheme = Scheme::MonotoneIteration;
    sc.maxIter = 2;  // starved on purpose
    CHECK_THROWS_AS(solve_monotone(p, make_constant(0.5), g, sc),
                    NoConvergenceError);
}

TEST_CASE("solve dispatches on the scheme tag") {
    const ModelParams p = derive_constants(0.3, 0.06, 0.25, 0.25, 1.0, 1.0);
    const Grid g = build_grid(-3.0, 3.0, 41, 1.0, 20);
    SolverConfig sc;
    auto [s1, r1] = solve(p, make_constant(0.5), g, sc);
    CHECK(r1.scheme == "DirectIMEX");
    sc.scheme = Scheme::MonotoneIteration;
    auto [s2, r2] = solve(p, make_constant(0.5), g, sc);
    CHECK(r2.scheme == "MonotoneIteration");
}

TEST_CASE("memory surface is consistent with its own solution") {
    // I(., n) must be the trapezoid of e^{-u} along the stored levels.
    const ModelParams p = reference_params();
    const Grid g = build_grid(-3.0, 3.0, 41, 1.0, 20);
    SolverConfig sc;
    auto [surf, rep] = solve_direct(p, make_constant(0.7), g, sc);
    for (std::size_t i = 0; i < g.nSpace; ++i) {
        CHECK(surf.memory_at(0, i) == 0.0);
        double acc = 0.0;
        for (std::size_t n = 1; n <= g.nTime; ++n) {
            acc += 0.5 * g.dtau *
                   (std::exp(-surf.at(n - 1, i)) + std::exp(-surf.at(n, i)));
            CHECK(surf.memory_at(n, i) == doctest::Approx(acc).epsilon(1e-12));
        }
    }
}

TEST_CASE("truncation ladder: levels must make sense") {
    const ModelParams p = derive_constants(0.3, 0.06, 0.25, 0.25, 1.0, 1.0);
    const Grid g = build_grid(-3.0, 3.0, 41, 1.0, 20);
    SolverConfig sc;
    CHECK_THROWS_AS(solve_unbounded(p, make_call(1.0), g, sc, {}),
                    ValidationError);
    CHECK_THROWS_AS(solve_unbounded(p, make_call(1.0), g, sc, {2.0, 1.0}),
                    ValidationError);
    CHECK_THROWS_AS(solve_unbounded(p, make_call(1.0), g, sc, {0.0, 1.0}),
                    ValidationError);
}

TEST_CASE("truncation ladder: bounded payoffs saturate immediately") {
    // A call is bounded below by 0, so every floor -N is inactive and the
    // ladder is constant.
    const ModelParams p = derive_constants(0.3, 0.06, 0.25, 0.25, 1.0, 1.0);
    const Grid g = build_grid(-3.0, 3.0, 41, 1.0, 20);
    SolverConfig sc;
    auto [surf, ladder] =
        solve_unbounded(p, make_call(1.0), g, sc, {1.0, 2.0, 4.0});
    CHECK(ladder.worstIncrease == 0.0);
    for (double d : ladder.supDiffs) CHECK(d == 0.0);
}
