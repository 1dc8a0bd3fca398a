#pragma once

#include <cstddef>
#include <vector>

namespace liqshock {

inline constexpr double kDefaultUCap = 500.0;

// Running Volterra integral I(S_i, tau) = int_0^tau e^{-u(S_i, s)} ds,
// advanced one time level at a time by the trapezoid rule. Only the
// current level is stored; I is nonnegative and nondecreasing per node.
struct HistoryState {
    std::vector<double> I;
    std::size_t level = 0;  // time-level index of the stored I
    double uCap = kDefaultUCap;
};

HistoryState make_history(std::size_t nSpace, double uCap = kDefaultUCap);

// I += dtau (e^{-uPrev} + e^{-uNext}) / 2 per node. Throws OverflowError
// if any |u| exceeds uCap: blow-up is reported, never clamped, because a
// clamped integrand would silently change the equation being solved.
void advance(HistoryState& state, const std::vector<double>& uPrev,
             const std::vector<double>& uNext, double dtau);

}  // namespace liqshock
