#include "liqshock/grid.hpp"

#include <cmath>

#include "liqshock/errors.hpp"

namespace liqshock {

Grid build_grid(double xMin, double xMax, std::size_t nSpace, double horizon,
                std::size_t nTime) {
    if (!(xMin < xMax)) throw ValidationError("grid.xMin must be < grid.xMax");
    if (nSpace < 3) throw ValidationError("grid.nSpace must be >= 3");
    if (nTime < 1) throw ValidationError("grid.nTime must be >= 1");
    if (!(horizon > 0.0)) throw ValidationError("grid horizon must be > 0");
    Grid g;
    g.xMin = xMin;
    g.xMax = xMax;
    g.nSpace = nSpace;
    g.nTime = nTime;
    g.horizon = horizon;
    g.dx = (xMax - xMin) / static_cast<double>(nSpace - 1);
    g.dtau = horizon / static_cast<double>(nTime);
    g.xNodes.resize(nSpace);
    g.sNodes.resize(nSpace);
    for (std::size_t i = 0; i < nSpace; ++i) {
        // Pin the last node to xMax so the bounds are hit exactly.
        g.xNodes[i] = (i + 1 == nSpace)
                          ? xMax
                          : xMin + static_cast<double>(i) * g.dx;
        g.sNodes[i] = std::exp(g.xNodes[i]);
    }
    return g;
}

Surface make_surface(const Grid& grid) {
    Surface s;
    s.grid = grid;
    s.u.assign((grid.nTime + 1) * grid.nSpace, 0.0);
    s.I.assign((grid.nTime + 1) * grid.nSpace, 0.0);
    return s;
}

std::vector<std::size_t> central_nodes(const Grid& grid) {
    const double quarter = 0.25 * (grid.xMax - grid.xMin);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < grid.nSpace; ++i)
        if (grid.xNodes[i] >= grid.xMin + quarter &&
            grid.xNodes[i] <= grid.xMax - quarter)
            idx.push_back(i);
    return idx;
}

std::vector<double> apply_bs_operator(const Grid& grid, double sigma,
                                      const std::vector<double>& u) {
    if (u.size() != grid.nSpace)
        throw ValidationError("nodal vector length does not match grid");
    const std::size_t n = grid.nSpace;
    const double a = 0.5 * sigma * sigma;
    const double dx = grid.dx;
    std::vector<double> out(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double uxx = (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (dx * dx);
        const double ux = (u[i + 1] - u[i - 1]) / (2.0 * dx);
        out[i] = a * (uxx - ux);
    }
    // Far field: u_xx := 0, one-sided first derivative.
    out[0] = a * (0.0 - (u[1] - u[0]) / dx);
    out[n - 1] = a * (0.0 - (u[n - 1] - u[n - 2]) / dx);
    return out;
}

double barrier_omega(const BarrierParams& bp, double S, double tau) {
    if (!(bp.T1 > 0.0)) throw ValidationError("barrier T1 must be > 0");
    if (!(bp.sigma > 0.0)) throw ValidationError("barrier sigma must be > 0");
    if (!(S > 0.0)) throw DomainError("barrier_omega needs S > 0");
    if (!(tau >= 0.0) || !(tau < bp.T1))
        throw DomainError("barrier_omega needs 0 <= tau < T1");
    const double theta = bp.T1 - tau;
    const double s2 = bp.sigma * bp.sigma;
    const double z = std::log(S) + 0.5 * s2 * theta;
    return std::exp(z * z / (2.0 * s2 * theta)) / std::sqrt(theta);
}

}  // namespace liqshock
