#include "liqshock/memory.hpp"

#include <cmath>

#include "liqshock/errors.hpp"

namespace liqshock {

HistoryState make_history(std::size_t nSpace, double uCap) {
    HistoryState s;
    s.I.assign(nSpace, 0.0);
    s.uCap = uCap;
    return s;
}

static void check_capped(const std::vector<double>& u, double cap,
                         const char* what) {
    for (double v : u) {
        if (!(std::abs(v) <= cap))
            throw OverflowError(std::string(what) +
                                " exceeds the exponent cap; solver blow-up");
    }
}

void advance(HistoryState& state, const std::vector<double>& uPrev,
             const std::vector<double>& uNext, double dtau) {
    if (!(dtau > 0.0)) throw ValidationError("dtau must be > 0");
    if (uPrev.size() != state.I.size() || uNext.size() != state.I.size())
        throw ValidationError("nodal vector length does not match history");
    check_capped(uPrev, state.uCap, "|u| at the previous level");
    check_capped(uNext, state.uCap, "|u| at the next level");
    for (std::size_t i = 0; i < state.I.size(); ++i)
        state.I[i] += 0.5 * dtau * (std::exp(-uPrev[i]) + std::exp(-uNext[i]));
    ++state.level;
}

}  // namespace liqshock
