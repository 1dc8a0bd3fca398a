#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liqshock/grid.hpp"
#include "liqshock/memory.hpp"
#include "liqshock/params.hpp"
#include "liqshock/payoff.hpp"

namespace liqshock {

enum class Scheme { DirectIMEX, MonotoneIteration };

struct SolverConfig {
    Scheme scheme = Scheme::DirectIMEX;
    double tolIter = 1e-8;   // sup-norm stop for the monotone iteration
    std::size_t maxIter = 200;
    double shiftN = -1.0;    // < 0 means derive from the bracket
    double bracketM = -1.0;  // < 0 means derive
    double uCap = kDefaultUCap;
};

struct SolveReport {
    std::string scheme;
    std::size_t iterations = 0;
    double finalIncrement = 0.0;
    double maxAbsU = 0.0;
    double estimateRatio = 0.0;  // a-priori energy diagnostic, recorded only
    double wallTimeMs = 0.0;
    // Monotone-scheme diagnostics; zero for the direct scheme.
    double maxIterateIncrease = 0.0;  // worst signed u_{k+1}-u_k over all k
    double bracketViolation = 0.0;    // worst excursion outside the bracket
    std::vector<double> incrementHistory;
    std::vector<std::string> warnings;
};

// Sub/supersolution bracket u in [-c0 - M tau, c0 + M tau] and the
// monotonizing shift N dominating the Lipschitz constant of F over it.
struct Bracket {
    double c0 = 0.0;
    double M = 0.0;
    double N = 0.0;
};

// F[tau; u, gamma h] = -nu01 e^{u} (nu10 I + e^{-gamma h}) + kappa, nodal.
// Throws OverflowError when any |u| or |gamma h| exceeds uCap.
std::vector<double> f_rhs(const ModelParams& params,
                          const std::vector<double>& uNow,
                          const std::vector<double>& I,
                          const std::vector<double>& gammaH,
                          double uCap = kDefaultUCap);

// One theta-scheme step (theta = 1/2 on both the diffusion L and the shift
// N) of  u_tau - L u + N u = g:
//   (1/dtau + N/2 - L/2) uNext = (1/dtau - N/2 + L/2) uPrev + g.
// L uses the interior central stencil with far-field rows zeroed: the two
// boundary nodes follow the reaction-only ODE, which is the continuum
// behavior where u is affine in S, and zero rows keep the step matrix an
// M-matrix, which the monotone iteration relies on.
std::vector<double> linear_parabolic_step(const Grid& grid, double sigma,
                                          double N,
                                          const std::vector<double>& uPrev,
                                          const std::vector<double>& g,
                                          double dtau);

Bracket derive_bracket(const ModelParams& params, const PayoffSpec& payoff,
                       const Grid& grid);

std::pair<Surface, SolveReport> solve_direct(const ModelParams& params,
                                             const PayoffSpec& payoff,
                                             const Grid& grid,
                                             const SolverConfig& config);

std::pair<Surface, SolveReport> solve_monotone(const ModelParams& params,
                                               const PayoffSpec& payoff,
                                               const Grid& grid,
                                               const SolverConfig& config);

std::pair<Surface, SolveReport> solve(const ModelParams& params,
                                      const PayoffSpec& payoff,
                                      const Grid& grid,
                                      const SolverConfig& config);

// Closed form for a constant payoff h*: u = gamma h* - nu10 tau - ln F0(T-tau).
// The factor identity F0(T) = 1 makes the initial condition consistent.
double constant_payoff_solution(const ModelParams& params,
                                const MertonFactors& factors, double hStar,
                                double tau);

// nu01 = 0 reduction: u = kappa tau + gamma C(S, tau) with C the zero-rate
// driftless lognormal call expectation.
double linear_reduction_solution(const ModelParams& params, double strike,
                                 double S, double tau);

struct LadderReport {
    std::vector<double> levels;
    std::vector<double> supDiffs;      // central-region sup |u_k - u_{k+1}|
    double worstIncrease = 0.0;        // max signed u_{next} - u_{prev}
};

// Theorem-5 Step-3 ladder: solves with initial data floored at -N/gamma for
// each level in order, verifying node-wise monotone decrease (comparison
// principle) within 1e-6. Returns the last level's surface.
std::pair<Surface, LadderReport> solve_unbounded(
    const ModelParams& params, const PayoffSpec& payoff, const Grid& grid,
    const SolverConfig& config, const std::vector<double>& levels);

}  // namespace liqshock
