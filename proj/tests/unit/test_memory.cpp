#include <cmath>
#include <vector>

#include "doctest.h"
#include "liqshock/errors.hpp"
#include "liqshock/memory.hpp"

using namespace liqshock;

TEST_CASE("trapezoid update: frozen two-step reference") {
    // u(s) = s sampled at s = 0, 1/2, 1:
    // I = (e^0 + e^-1/2)/4 + (e^-1/2 + e^-1)/4 = 0.6452351901491773.
    HistoryState st = make_history(1);
    const std::vector<double> u0{0.0}, u1{0.5}, u2{1.0};
    advance(st, u0, u1, 0.5);
    advance(st, u1, u2, 0.5);
    CHECK(st.level == 2);
    CHECK(st.I[0] == doctest::Approx(0.6452351901491773).epsilon(1e-15));
}

TEST_CASE("u = 0 integrates time exactly") {
    HistoryState st = make_history(3);
    const std::vector<double> z(3, 0.0);
    for (int k = 0; k < 10; ++k) advance(st, z, z, 0.1);
    for (double v : st.I) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trapezoid update is second order in dtau") {
    // int_0^1 e^{-s} ds and int_0^1 e^{-sin s} ds, against analytic /
    // fine-grid references.
    auto integrate = [](auto u, std::size_t steps) {
        HistoryState st = make_history(1);
        const double dt = 1.0 / static_cast<double>(steps);
        for (std::size_t k = 0; k < steps; ++k) {
            const std::vector<double> a{u(k * dt)}, b{u((k + 1) * dt)};
            advance(st, a, b, dt);
        }
        return st.I[0];
    };
    auto rate = [&](auto u, double ref) {
        const double e1 = std::abs(integrate(u, 40) - ref);
        const double e2 = std::abs(integrate(u, 80) - ref);
        return std::log2(e1 / e2);
    };
    const double refLinear = 1.0 - std::exp(-1.0);
    CHECK(rate([](double s) { return s; }, refLinear) >= 1.9);
    const double refSin = integrate([](double s) { return std::sin(s); },
                                    1 << 16);
    CHECK(rate([](double s) { return std::sin(s); }, refSin) >= 1.9);
}

TEST_CASE("memory is nonnegative and nondecreasing per node") {
    HistoryState st = make_history(2);
    std::vector<double> prev{0.0, -1.0};
    double last0 = 0.0, last1 = 0.0;
    for (int k = 1; k <= 20; ++k) {
        std::vector<double> next{0.1 * k, -1.0 + 0.05 * k};
        advance(st, prev, next, 0.05);
        CHECK(st.I[0] > last0);
        CHECK(st.I[1] > last1);
        last0 = st.I[0];
        last1 = st.I[1];
        prev = next;
    }
}

TEST_CASE("blow-up is reported, never clamped") {
    HistoryState st = make_history(1, 10.0);
    const std::vector<double> ok{1.0}, hot{10.5};
    CHECK_THROWS_AS(advance(st, ok, hot, 0.1), OverflowError);
    CHECK_THROWS_AS(advance(st, hot, ok, 0.1), OverflowError);
    const std::vector<double> cold{-10.5};
    CHECK_THROWS_AS(advance(st, ok, cold, 0.1), OverflowError);
}

TEST_CASE("advance validates shapes and the step") {
    HistoryState st = make_history(2);
    const std::vector<double> two(2, 0.0), three(3, 0.0);
    CHECK_THROWS_AS(advance(st, two, three, 0.1), ValidationError);
    CHECK_THROWS_AS(advance(st, three, two, 0.1), ValidationError);
    CHECK_THROWS_AS(advance(st, two, two, 0.0), ValidationError);
    CHECK_THROWS_AS(advance(st, two, two, -0.1), ValidationError);
}
