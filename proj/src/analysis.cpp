#include "liqshock/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "liqshock/errors.hpp"

namespace liqshock {

WeightSpec make_power_weight(double exponent) {
    if (!(exponent < -3.0))
        throw ValidationError("weight.exponent must be < -3");
    WeightSpec ws;
    ws.kind = WeightKind::Power;
    ws.exponent = exponent;
    // Suprema of |pS/(1+S)| and |p(p-1)S^2/(1+S)^2| over S > 0.
    ws.C = std::max(std::abs(exponent), std::abs(exponent * (exponent - 1.0)));
    ws.theta = -1.0 / (exponent + 1.0);
    return ws;
}

WeightSpec make_custom_weight(std::vector<double> w, std::vector<double> dw,
                              std::vector<double> ddw) {
    if (w.size() != dw.size() || w.size() != ddw.size())
        throw ValidationError("custom weight tables must have equal length");
    for (double v : w)
        if (!(v > 0.0)) throw ValidationError("custom weight must be > 0");
    WeightSpec ws;
    ws.kind = WeightKind::Custom;
    ws.wTab = std::move(w);
    ws.dwTab = std::move(dw);
    ws.ddwTab = std::move(ddw);
    // C and theta for Custom weights are measured by weight_check against
    // a concrete grid; nothing analytic is available here.
    ws.C = 0.0;
    ws.theta = 0.0;
    return ws;
}

double weight_at(const WeightSpec& ws, const Grid& grid, std::size_t node) {
    if (ws.kind == WeightKind::Power)
        return std::pow(1.0 + grid.sNodes[node], ws.exponent);
    if (node >= ws.wTab.size())
        throw ValidationError("custom weight not aligned to grid");
    return ws.wTab[node];
}

// Ratio S w'/w at a node; enters the bilinear form's first-order term.
static double log_deriv_ratio(const WeightSpec& ws, const Grid& grid,
                              std::size_t node) {
    if (ws.kind == WeightKind::Power) {
        const double S = grid.sNodes[node];
        return ws.exponent * S / (1.0 + S);
    }
    return grid.sNodes[node] * ws.dwTab[node] / ws.wTab[node];
}

static double second_ratio(const WeightSpec& ws, const Grid& grid,
                           std::size_t node) {
    const double S = grid.sNodes[node];
    if (ws.kind == WeightKind::Power)
        return ws.exponent * (ws.exponent - 1.0) * S * S /
               ((1.0 + S) * (1.0 + S));
    return S * S * ws.ddwTab[node] / ws.wTab[node];
}

// Trapezoid integral of nodal f against dS (grid is uniform in x, so
// nonuniform in S).
static double integrate_s(const std::vector<double>& f, const Grid& grid) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < grid.nSpace; ++i)
        acc += 0.5 * (f[i] + f[i + 1]) * (grid.sNodes[i + 1] - grid.sNodes[i]);
    return acc;
}

// S u' = u_x on the log grid; central interior, one-sided ends.
static std::vector<double> log_slope(const std::vector<double>& u,
                                     const Grid& grid) {
    const std::size_t n = grid.nSpace;
    std::vector<double> d(n);
    d[0] = (u[1] - u[0]) / grid.dx;
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = (u[i + 1] - u[i - 1]) / (2.0 * grid.dx);
    d[n - 1] = (u[n - 1] - u[n - 2]) / grid.dx;
    return d;
}

Norms weighted_norms(const std::vector<double>& u, const WeightSpec& ws,
                     const Grid& grid) {
    if (u.size() != grid.nSpace)
        throw ValidationError("nodal vector length does not match grid");
    const std::size_t n = grid.nSpace;
    std::vector<double> f0(n), f1(n);
    const std::vector<double> d = log_slope(u, grid);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weight_at(ws, grid, i);
        f0[i] = u[i] * u[i] * w;
        f1[i] = d[i] * d[i] * w;
    }
    Norms out;
    const double m0 = integrate_s(f0, grid);
    const double m1 = integrate_s(f1, grid);
    out.n0 = std::sqrt(m0);
    out.n1 = std::sqrt(m0 + m1);
    return out;
}

WeightReport weight_check(const WeightSpec& ws, const Grid& grid) {
    WeightReport rep;
    std::vector<double> w(grid.nSpace);
    for (std::size_t i = 0; i < grid.nSpace; ++i) {
        w[i] = weight_at(ws, grid, i);
        const double r1 = std::abs(log_deriv_ratio(ws, grid, i));
        const double r2 = std::abs(second_ratio(ws, grid, i));
        rep.cMeasured = std::max(rep.cMeasured, std::max(r1, r2));
    }
    rep.thetaMeasured = integrate_s(w, grid);
    if (ws.kind == WeightKind::Power) {
        rep.pass = rep.cMeasured <= ws.C + 1e-12;
    } else {
        // A Custom weight passes when its ratios stay bounded and the grid
        // mass looks convergent: the last decade of the grid must
        // contribute a vanishing share, else theta is effectively infinite.
        double tail = 0.0;
        const std::size_t cut = grid.nSpace - grid.nSpace / 5;
        for (std::size_t i = cut; i + 1 < grid.nSpace; ++i)
            tail += 0.5 * (w[i] + w[i + 1]) * (grid.sNodes[i + 1] - grid.sNodes[i]);
        rep.pass = std::isfinite(rep.cMeasured) && rep.thetaMeasured > 0.0 &&
                   tail <= 0.05 * rep.thetaMeasured;
    }
    return rep;
}

double bilinear_form(const std::vector<double>& u, const std::vector<double>& v,
                     const WeightSpec& ws, const Grid& grid, double sigma) {
    if (u.size() != grid.nSpace || v.size() != grid.nSpace)
        throw ValidationError("nodal vector length does not match grid");
    const std::size_t n = grid.nSpace;
    const std::vector<double> du = log_slope(u, grid);
    const std::vector<double> dv = log_slope(v, grid);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weight_at(ws, grid, i);
        const double q = log_deriv_ratio(ws, grid, i) + 2.0;
        f[i] = w * du[i] * (dv[i] + q * v[i]);
    }
    return 0.5 * sigma * sigma * integrate_s(f, grid);
}

CoercivityConstants coercivity_constants(const WeightSpec& ws, double sigma) {
    CoercivityConstants c;
    c.alpha = 0.25 * sigma * sigma;
    const double b = ws.C + 2.0;
    c.beta = 0.25 * sigma * sigma * (b * b + 1.0);
    return c;
}

// Random nodal draws for the audits: cycles white noise, smoothed noise,
// and gaussian bumps in x.
static std::vector<double> random_function(std::mt19937_64& rng,
                                           const Grid& grid,
                                           std::size_t family) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const std::size_t n = grid.nSpace;
    std::vector<double> u(n);
    if (family == 0) {
        for (auto& v : u) v = uni(rng);
        return u;
    }
    if (family == 1) {
        for (auto& v : u) v = uni(rng);
        // Three smoothing sweeps of a 1-2-1 kernel.
        for (int pass = 0; pass < 3; ++pass) {
            std::vector<double> s(u);
            for (std::size_t i = 1; i + 1 < n; ++i)
                s[i] = 0.25 * u[i - 1] + 0.5 * u[i] + 0.25 * u[i + 1];
            u.swap(s);
        }
        return u;
    }
    const double span = grid.xMax - grid.xMin;
    const double center = grid.xMin + 0.5 * span + 0.25 * span * uni(rng);
    const double width = 0.05 * span * (1.5 + uni(rng));
    const double amp = 0.3 + 1.7 * std::abs(uni(rng));
    for (std::size_t i = 0; i < n; ++i) {
        const double z = (grid.xNodes[i] - center) / width;
        u[i] = amp * std::exp(-0.5 * z * z);
    }
    return u;
}

CoercivityReport coercivity_audit(const WeightSpec& ws, const Grid& grid,
                                  double sigma, std::size_t trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw ValidationError("coercivity trials must be >= 1");
    std::mt19937_64 rng(seed);
    const CoercivityConstants cc = coercivity_constants(ws, sigma);
    CoercivityReport rep;
    rep.pass = true;
    bool first = true;
    std::vector<double> prev;
    for (std::size_t k = 0; k < trials; ++k) {
        std::vector<double> u = random_function(rng, grid, k % 3);
        const Norms nu = weighted_norms(u, ws, grid);
        if (nu.n1 == 0.0) continue;
        const double a = bilinear_form(u, u, ws, grid, sigma);
        const double margin = a - cc.alpha * nu.n1 * nu.n1 +
                              cc.beta * nu.n0 * nu.n0;
        if (first || margin < rep.worstMargin) {
            rep.worstMargin = margin;
            rep.worstDraw = k;
            rep.worstFunction = u;
            first = false;
        }
        if (margin < -1e-10 * nu.n1 * nu.n1) rep.pass = false;
        if (!prev.empty()) {
            const Norms nv = weighted_norms(prev, ws, grid);
            if (nv.n1 > 0.0) {
                const double cross =
                    std::abs(bilinear_form(u, prev, ws, grid, sigma));
                rep.continuityFit =
                    std::max(rep.continuityFit, cross / (nu.n1 * nv.n1));
            }
        }
        prev = std::move(u);
    }
    return rep;
}

double pointwise_bound_audit(const std::vector<double>& u, const WeightSpec& ws,
                             const Grid& grid) {
    const Norms n = weighted_norms(u, ws, grid);
    if (!(n.n1 > 0.0))
        throw ValidationError("pointwise audit needs a nonzero function");
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.nSpace; ++i) {
        const double S = grid.sNodes[i];
        const double profile =
            u[i] * u[i] * S * std::exp(-ws.C * std::abs(grid.xNodes[i]));
        worst = std::max(worst, profile);
    }
    return worst / (n.n1 * n.n1);
}

ComparisonReport comparison_check(const Surface& u1, const Surface& u0,
                                  const PayoffSpec& h1, const PayoffSpec& h0,
                                  double gamma, double tol) {
    const Grid& g = u1.grid;
    if (g.nSpace != u0.grid.nSpace || g.nTime != u0.grid.nTime)
        throw ValidationError("comparison surfaces must share one grid");
    ComparisonReport rep;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < g.nSpace; ++i) {
        const double d = evaluate(h1, g.sNodes[i]) - evaluate(h0, g.sNodes[i]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    rep.lowerBound = gamma * lo;
    rep.upperBound = gamma * hi;
    rep.worstViolation = 0.0;
    for (std::size_t lvl = 0; lvl < u1.levels(); ++lvl) {
        for (std::size_t i = 0; i < g.nSpace; ++i) {
            const double d = u1.at(lvl, i) - u0.at(lvl, i);
            const double viol =
                std::max(rep.lowerBound - d, d - rep.upperBound);
            if (viol > rep.worstViolation) {
                rep.worstViolation = viol;
                rep.worstLevel = lvl;
                rep.worstNode = i;
            }
        }
    }
    rep.pass = rep.worstViolation <= tol;
    return rep;
}

}  // namespace liqshock
