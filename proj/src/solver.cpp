#include "liqshock/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "liqshock/analysis.hpp"
#include "liqshock/errors.hpp"

namespace liqshock {

namespace {

// Bands of the discrete BS operator L = 0.5 sigma^2 (d_xx - d_x) on the
// log grid. The two far-field rows are identically zero: L annihilates the
// a e^x + b far field, and zero rows keep I/dtau + N/2 - L/2 an M-matrix
// (nonpositive off-diagonal, dominant diagonal), which the monotone
// iteration's comparison structure needs.
struct OperatorBands {
    std::vector<double> lo, di, up;
};

OperatorBands bs_bands(const Grid& grid, double sigma) {
    const std::size_t n = grid.nSpace;
    const double a = 0.5 * sigma * sigma;
    const double dx = grid.dx;
    OperatorBands b;
    b.lo.assign(n, 0.0);
    b.di.assign(n, 0.0);
    b.up.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        b.lo[i] = a * (1.0 / (dx * dx) + 1.0 / (2.0 * dx));
        b.di[i] = -2.0 * a / (dx * dx);
        b.up[i] = a * (1.0 / (dx * dx) - 1.0 / (2.0 * dx));
    }
    return b;
}

std::vector<double> apply_bands(const OperatorBands& b,
                                const std::vector<double>& u) {
    const std::size_t n = u.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = b.lo[i] * u[i - 1] + b.di[i] * u[i] + b.up[i] * u[i + 1];
    return out;
}

// Prefactored Thomas solve of the constant step matrix
// A = 1/dtau + N/2 - L/2.
struct StepFactor {
    std::vector<double> lo;    // A sub-diagonal
    std::vector<double> cp;    // eliminated super-diagonal
    std::vector<double> invd;  // inverse pivots
};

StepFactor factor_step(const OperatorBands& b, double N, double dtau) {
    const std::size_t n = b.di.size();
    StepFactor f;
    f.lo.resize(n);
    f.cp.resize(n);
    f.invd.resize(n);
    std::vector<double> diag(n), up(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.lo[i] = -0.5 * b.lo[i];
        diag[i] = 1.0 / dtau + 0.5 * N - 0.5 * b.di[i];
        up[i] = -0.5 * b.up[i];
    }
    double piv = diag[0];
    for (std::size_t i = 0;; ++i) {
        if (!(std::abs(piv) > 1e-300))
            throw SingularMatrixError("zero pivot in the tridiagonal solve");
        f.invd[i] = 1.0 / piv;
        f.cp[i] = up[i] * f.invd[i];
        if (i + 1 == n) break;
        piv = diag[i + 1] - f.lo[i + 1] * f.cp[i];
    }
    return f;
}

std::vector<double> solve_factored(const StepFactor& f,
                                   const std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    std::vector<double> y(n);
    y[0] = rhs[0] * f.invd[0];
    for (std::size_t i = 1; i < n; ++i)
        y[i] = (rhs[i] - f.lo[i] * y[i - 1]) * f.invd[i];
    for (std::size_t i = n - 1; i-- > 0;) y[i] -= f.cp[i] * y[i + 1];
    return y;
}

// One theta = 1/2 step given the prefactored matrix:
// rhs = uPrev/dtau - N/2 uPrev + L/2 uPrev + g.
std::vector<double> step_with(const StepFactor& f, const OperatorBands& b,
                              double N, double dtau,
                              const std::vector<double>& uPrev,
                              const std::vector<double>& g) {
    const std::vector<double> Lu = apply_bands(b, uPrev);
    std::vector<double> rhs(uPrev.size());
    for (std::size_t i = 0; i < uPrev.size(); ++i)
        rhs[i] = uPrev[i] / dtau - 0.5 * N * uPrev[i] + 0.5 * Lu[i] + g[i];
    return solve_factored(f, rhs);
}

void check_finite(const std::vector<double>& u, const char* where) {
    for (double v : u)
        if (!std::isfinite(v))
            throw NonFiniteError(std::string("non-finite value in ") + where);
}

double sup_abs(const std::vector<double>& u) {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

// Energy diagnostic for the a-priori estimate: the constant is never
// asserted, only recorded.
double estimate_ratio(const Surface& surf) {
    const WeightSpec ws = make_power_weight(-4.0);
    const Grid& g = surf.grid;
    std::vector<double> level(g.nSpace);
    auto fetch = [&](std::size_t lvl) {
        for (std::size_t i = 0; i < g.nSpace; ++i) level[i] = surf.at(lvl, i);
    };
    fetch(0);
    const Norms n0 = weighted_norms(level, ws, g);
    double maxH1 = n0.n1;
    double rate2 = 0.0;
    std::vector<double> prev = level;
    for (std::size_t lvl = 1; lvl < surf.levels(); ++lvl) {
        fetch(lvl);
        const Norms nl = weighted_norms(level, ws, g);
        maxH1 = std::max(maxH1, nl.n1);
        std::vector<double> dot(g.nSpace);
        for (std::size_t i = 0; i < g.nSpace; ++i)
            dot[i] = (level[i] - prev[i]) / g.dtau;
        const Norms nd = weighted_norms(dot, ws, g);
        rate2 += g.dtau * nd.n0 * nd.n0;
        prev = level;
    }
    return (std::sqrt(rate2) + maxH1) / (n0.n1 + 1.0);
}

std::vector<double> initial_datum(const ModelParams& params,
                                  const PayoffSpec& payoff, const Grid& grid) {
    std::vector<double> gh = evaluate_on(payoff, grid.sNodes);
    for (double& v : gh) v *= params.gamma;
    return gh;
}

class WallClock {
  public:
    WallClock() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<double> f_rhs(const ModelParams& params,
                          const std::vector<double>& uNow,
                          const std::vector<double>& I,
                          const std::vector<double>& gammaH, double uCap) {
    const std::size_t n = uNow.size();
    if (I.size() != n || gammaH.size() != n)
        throw ValidationError("f_rhs inputs must share one grid");
    std::vector<double> F(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::abs(uNow[i]) <= uCap) || !(std::abs(gammaH[i]) <= uCap))
            throw OverflowError("|u| exceeds the exponent cap in f_rhs");
        if (params.nu01 == 0.0) {
            F[i] = params.kappa;
        } else {
            F[i] = -params.nu01 * std::exp(uNow[i]) *
                       (params.nu10 * I[i] + std::exp(-gammaH[i])) +
                   params.kappa;
        }
    }
    return F;
}

std::vector<double> linear_parabolic_step(const Grid& grid, double sigma,
                                          double N,
                                          const std::vector<double>& uPrev,
                                          const std::vector<double>& g,
                                          double dtau) {
    if (uPrev.size() != grid.nSpace || g.size() != grid.nSpace)
        throw ValidationError("nodal vector length does not match grid");
    if (!(dtau > 0.0)) throw ValidationError("dtau must be > 0");
    if (!(N >= 0.0)) throw ValidationError("shift N must be >= 0");
    const OperatorBands b = bs_bands(grid, sigma);
    const StepFactor f = factor_step(b, N, dtau);
    return step_with(f, b, N, dtau, uPrev, g);
}

Bracket derive_bracket(const ModelParams& params, const PayoffSpec& payoff,
                       const Grid& grid) {
    const std::vector<double> gh = initial_datum(params, payoff, grid);
    Bracket br;
    br.c0 = sup_abs(gh);
    br.M = std::abs(params.kappa) + params.nu01 * (1.0 + params.nu10) + 1.0;
    const double peak = std::exp(br.c0 + br.M * params.horizon);
    br.N = params.nu01 * peak *
           (params.nu10 * params.horizon * peak + std::exp(br.c0));
    return br;
}

std::pair<Surface, SolveReport> solve_direct(const ModelParams& params,
                                             const PayoffSpec& payoff,
                                             const Grid& grid,
                                             const SolverConfig& config) {
    const WallClock clock;
    const std::vector<double> gh = initial_datum(params, payoff, grid);
    if (sup_abs(gh) > config.uCap)
        throw OverflowError("initial datum exceeds the exponent cap");
    Surface surf = make_surface(grid);
    const std::size_t n = grid.nSpace;
    for (std::size_t i = 0; i < n; ++i) surf.at(0, i) = gh[i];

    const OperatorBands b = bs_bands(grid, params.sigma);
    const StepFactor f = factor_step(b, 0.0, grid.dtau);
    HistoryState hist = make_history(n, config.uCap);
    std::vector<double> uPrev = gh;
    double lastInc = 0.0;
    for (std::size_t lvl = 0; lvl < grid.nTime; ++lvl) {
        const std::vector<double> Fn = f_rhs(params, uPrev, hist.I, gh, config.uCap);
        // Predictor: freeze F at level n.
        const std::vector<double> uStar =
            step_with(f, b, 0.0, grid.dtau, uPrev, Fn);
        check_finite(uStar, "predictor");
        HistoryState histStar = hist;
        advance(histStar, uPrev, uStar, grid.dtau);
        const std::vector<double> Fs =
            f_rhs(params, uStar, histStar.I, gh, config.uCap);
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = 0.5 * (Fn[i] + Fs[i]);
        std::vector<double> uNext = step_with(f, b, 0.0, grid.dtau, uPrev, g);
        check_finite(uNext, "corrector");
        advance(hist, uPrev, uNext, grid.dtau);
        lastInc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            surf.at(lvl + 1, i) = uNext[i];
            surf.I[(lvl + 1) * n + i] = hist.I[i];
            lastInc = std::max(lastInc, std::abs(uNext[i] - uPrev[i]));
        }
        uPrev = std::move(uNext);
    }
    SolveReport rep;
    rep.scheme = "DirectIMEX";
    rep.iterations = grid.nTime;
    rep.finalIncrement = lastInc;
    rep.maxAbsU = sup_abs(surf.u);
    rep.estimateRatio = estimate_ratio(surf);
    rep.wallTimeMs = clock.ms();
    return {std::move(surf), std::move(rep)};
}

std::pair<Surface, SolveReport> solve_monotone(const ModelParams& params,
                                               const PayoffSpec& payoff,
                                               const Grid& grid,
                                               const SolverConfig& config) {
    const WallClock clock;
    const std::vector<double> gh = initial_datum(params, payoff, grid);
    if (sup_abs(gh) > config.uCap)
        throw OverflowError(
            "initial datum exceeds the exponent cap; truncate the payoff "
            "(truncate_below / xi_epsilon) before the monotone scheme");
    Bracket br = derive_bracket(params, payoff, grid);
    if (config.bracketM >= 0.0) br.M = config.bracketM;
    if (config.shiftN >= 0.0) br.N = config.shiftN;
    SolveReport rep;
    rep.scheme = "MonotoneIteration";
    if (br.N > 1e8)
        rep.warnings.push_back(
            "shift N exceeds 1e8; iteration will converge slowly, shrink "
            "the bracket by truncating the payoff");

    const std::size_t n = grid.nSpace;
    const std::size_t levels = grid.nTime + 1;
    // Iterate u_0 = ubar at every level; later iterates keep the datum gh
    // at level 0, so the whole sequence stays a supersolution family.
    std::vector<std::vector<double>> uk(levels, std::vector<double>(n));
    for (std::size_t lvl = 0; lvl < levels; ++lvl) {
        const double ubar = br.c0 + br.M * (static_cast<double>(lvl) * grid.dtau);
        for (std::size_t i = 0; i < n; ++i) uk[lvl][i] = ubar;
    }
    const OperatorBands b = bs_bands(grid, params.sigma);
    const StepFactor f = factor_step(b, br.N, grid.dtau);

    std::vector<std::vector<double>> Ik(levels, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> Fk(levels);
    std::vector<std::vector<double>> unew(levels, std::vector<double>(n));
    bool converged = false;
    for (std::size_t k = 0; k < config.maxIter && !converged; ++k) {
        // Memory and source of the current iterate.
        HistoryState hist = make_history(n, config.uCap);
        Ik[0] = hist.I;
        for (std::size_t lvl = 0; lvl + 1 < levels; ++lvl) {
            advance(hist, uk[lvl], uk[lvl + 1], grid.dtau);
            Ik[lvl + 1] = hist.I;
        }
        for (std::size_t lvl = 0; lvl < levels; ++lvl)
            Fk[lvl] = f_rhs(params, uk[lvl], Ik[lvl], gh, config.uCap);

        unew[0] = gh;
        for (std::size_t lvl = 0; lvl + 1 < levels; ++lvl) {
            std::vector<double> g(n);
            for (std::size_t i = 0; i < n; ++i)
                g[i] = 0.5 * br.N * (uk[lvl][i] + uk[lvl + 1][i]) +
                       0.5 * (Fk[lvl][i] + Fk[lvl + 1][i]);
            unew[lvl + 1] = step_with(f, b, br.N, grid.dtau, unew[lvl], g);
            check_finite(unew[lvl + 1], "monotone iterate");
        }

        double inc = 0.0;
        for (std::size_t lvl = 0; lvl < levels; ++lvl) {
            const double tau = static_cast<double>(lvl) * grid.dtau;
            const double hi = br.c0 + br.M * tau;
            for (std::size_t i = 0; i < n; ++i) {
                const double delta = unew[lvl][i] - uk[lvl][i];
                inc = std::max(inc, std::abs(delta));
                rep.maxIterateIncrease = std::max(rep.maxIterateIncrease, delta);
                const double excursion =
                    std::max(unew[lvl][i] - hi, -hi - unew[lvl][i]);
                rep.bracketViolation = std::max(rep.bracketViolation, excursion);
            }
        }
        rep.incrementHistory.push_back(inc);
        uk.swap(unew);
        ++rep.iterations;
        converged = inc < config.tolIter;
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "monotone iteration did not reach tolIter=" << config.tolIter
            << " in " << config.maxIter << " iterations; increments";
        const std::size_t tail = std::min<std::size_t>(5, rep.incrementHistory.size());
        for (std::size_t i = rep.incrementHistory.size() - tail;
             i < rep.incrementHistory.size(); ++i)
            msg << " " << rep.incrementHistory[i];
        throw NoConvergenceError(msg.str());
    }

    Surface surf = make_surface(grid);
    for (std::size_t lvl = 0; lvl < levels; ++lvl)
        for (std::size_t i = 0; i < n; ++i) {
            surf.at(lvl, i) = uk[lvl][i];
            surf.I[lvl * n + i] = Ik[lvl][i];
        }
    rep.finalIncrement = rep.incrementHistory.back();
    rep.maxAbsU = sup_abs(surf.u);
    rep.estimateRatio = estimate_ratio(surf);
    rep.wallTimeMs = clock.ms();
    return {std::move(surf), std::move(rep)};
}

std::pair<Surface, SolveReport> solve(const ModelParams& params,
                                      const PayoffSpec& payoff,
                                      const Grid& grid,
                                      const SolverConfig& config) {
    if (config.scheme == Scheme::MonotoneIteration)
        return solve_monotone(params, payoff, grid, config);
    return solve_direct(params, payoff, grid, config);
}

double constant_payoff_solution(const ModelParams& params,
                                const MertonFactors& factors, double hStar,
                                double tau) {
    const FactorValues fv = evaluate_factors(factors, params.horizon - tau);
    return params.gamma * hStar - params.nu10 * tau - std::log(fv.f0);
}

static double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double linear_reduction_solution(const ModelParams& params, double strike,
                                 double S, double tau) {
    if (params.nu01 != 0.0)
        throw DomainError("linear reduction oracle needs nu01 = 0");
    double call;
    if (tau <= 0.0) {
        call = std::max(S - strike, 0.0);
    } else {
        const double sq = params.sigma * std::sqrt(tau);
        const double d1 =
            (std::log(S / strike) + 0.5 * params.sigma * params.sigma * tau) / sq;
        call = S * std_normal_cdf(d1) - strike * std_normal_cdf(d1 - sq);
    }
    return params.kappa * tau + params.gamma * call;
}

std::pair<Surface, LadderReport> solve_unbounded(
    const ModelParams& params, const PayoffSpec& payoff, const Grid& grid,
    const SolverConfig& config, const std::vector<double>& levels) {
    if (levels.empty())
        throw ValidationError("truncation ladder needs at least one level");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] > 0.0))
            throw ValidationError("truncation levels must be > 0");
        if (i > 0 && !(levels[i] > levels[i - 1]))
            throw ValidationError("truncation levels must be strictly increasing");
    }
    LadderReport lrep;
    lrep.levels = levels;
    const std::vector<std::size_t> central = central_nodes(grid);
    Surface prev;
    Surface last;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const PayoffSpec hk = truncate_below(payoff, levels[k], params.gamma);
        auto [surf, rep] = solve(params, hk, grid, config);
        if (k > 0) {
            // Larger N lowers the floored datum, so the comparison
            // principle forces the new solution under the previous one.
            double supDiff = 0.0;
            for (std::size_t lvl = 0; lvl < surf.levels(); ++lvl) {
                for (std::size_t i = 0; i < grid.nSpace; ++i) {
                    const double delta = surf.at(lvl, i) - prev.at(lvl, i);
                    lrep.worstIncrease = std::max(lrep.worstIncrease, delta);
                }
                for (std::size_t i : central)
                    supDiff = std::max(
                        supDiff, std::abs(surf.at(lvl, i) - prev.at(lvl, i)));
            }
            lrep.supDiffs.push_back(supDiff);
            if (lrep.worstIncrease > 1e-6)
                throw MonotonicityViolationError(
                    "truncation ladder increased somewhere; grid too coarse "
                    "for the comparison structure");
        }
        prev = std::move(surf);
        if (k + 1 == levels.size()) last = prev;
    }
    return {std::move(last), std::move(lrep)};
}

}  // namespace liqshock
