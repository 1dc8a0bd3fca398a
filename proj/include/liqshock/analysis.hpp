#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "liqshock/grid.hpp"
#include "liqshock/payoff.hpp"

namespace liqshock {

enum class WeightKind { Power, Custom };

// Spatial weight w(S) for the L^2_w / H^1_w machinery. The power family
// (1+S)^p with p < -3 is the workhorse; Custom carries tabulated
// (w, w', w'') for audit experiments.
struct WeightSpec {
    WeightKind kind = WeightKind::Power;
    double exponent = -4.0;
    double C = 0.0;      // bound for |S w'/w| and |S^2 w''/w|
    double theta = 0.0;  // total mass of w over (0, inf); analytic for Power
    std::vector<double> wTab, dwTab, ddwTab;  // Custom, aligned to a grid
};

// Fills the analytic constants: C = max(|p|, |p(p-1)|), theta = -1/(p+1).
// Throws ValidationError unless p < -3.
WeightSpec make_power_weight(double exponent);

WeightSpec make_custom_weight(std::vector<double> w, std::vector<double> dw,
                              std::vector<double> ddw);

double weight_at(const WeightSpec& ws, const Grid& grid, std::size_t node);

struct Norms {
    double n0 = 0.0;  // ||u||_{L^2_w}
    double n1 = 0.0;  // (n0^2 + ||S u'||_{L^2_w}^2)^{1/2}
};

// Trapezoid quadrature in S over the grid; S u' by central differences in
// x (S d_S = d_x), one-sided at the ends.
Norms weighted_norms(const std::vector<double>& u, const WeightSpec& ws,
                     const Grid& grid);

struct WeightReport {
    double cMeasured = 0.0;
    double thetaMeasured = 0.0;
    bool pass = false;
};

// Checks the ratio bounds |S w'/w|, |S^2 w''/w| <= C node-wise and that the
// grid quadrature of w approaches the finite mass theta. Custom weights can
// fail; the power family passes by construction.
WeightReport weight_check(const WeightSpec& ws, const Grid& grid);

// a(u,v) = 0.5 sigma^2 int w Su' [Sv' + (S w'/w + 2) v] dS.
double bilinear_form(const std::vector<double>& u, const std::vector<double>& v,
                     const WeightSpec& ws, const Grid& grid, double sigma);

struct CoercivityConstants {
    double alpha = 0.0;  // sigma^2 / 4
    double beta = 0.0;   // sigma^2 ((C+2)^2 + 1) / 4
};

CoercivityConstants coercivity_constants(const WeightSpec& ws, double sigma);

struct CoercivityReport {
    bool pass = false;
    double worstMargin = 0.0;     // min over draws of a(u,u) - alpha n1^2 + beta n0^2
    double continuityFit = 0.0;   // max |a(u,v)| / (n1(u) n1(v)) observed
    std::size_t worstDraw = 0;
    std::vector<double> worstFunction;  // serialized offender (or worst case)
};

// Draws `trials` random nodal functions from three families (white noise,
// smoothed noise, localized bumps) and checks
//   a(u,u) >= alpha ||u||_1^2 - beta ||u||_0^2 - 1e-10 ||u||_1^2.
CoercivityReport coercivity_audit(const WeightSpec& ws, const Grid& grid,
                                  double sigma, std::size_t trials,
                                  std::uint64_t seed);

// Lemma-3 profile constant: max over nodes of
//   |u(S)|^2 S e^{-C |ln S|} / ||u||_1^2.
// Scale-invariant in u; audited for boundedness across families, never
// against a pinned value (the embedding constant is not quantified).
double pointwise_bound_audit(const std::vector<double>& u, const WeightSpec& ws,
                             const Grid& grid);

struct ComparisonReport {
    bool pass = false;
    double lowerBound = 0.0;  // gamma inf(h1 - h0) over grid nodes
    double upperBound = 0.0;  // gamma sup(h1 - h0)
    double worstViolation = 0.0;
    std::size_t worstLevel = 0;
    std::size_t worstNode = 0;
};

// Sandwich test gamma inf(h1-h0) <= u1-u0 <= gamma sup(h1-h0) at every
// (node, time level), within tol.
ComparisonReport comparison_check(const Surface& u1, const Surface& u0,
                                  const PayoffSpec& h1, const PayoffSpec& h0,
                                  double gamma, double tol);

}  // namespace liqshock
