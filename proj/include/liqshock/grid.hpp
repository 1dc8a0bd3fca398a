#pragma once

#include <cstddef>
#include <vector>

namespace liqshock {

// Uniform tensor grid in log-price x = ln S and time-to-maturity tau.
// All PDE work happens in x, where the pricing operator has constant
// coefficients 0.5 sigma^2 (d_xx - d_x).
struct Grid {
    double xMin = 0.0;
    double xMax = 0.0;
    std::size_t nSpace = 0;  // node count, >= 3
    std::size_t nTime = 0;   // step count, >= 1
    double horizon = 0.0;    // final tau
    double dx = 0.0;
    double dtau = 0.0;
    std::vector<double> xNodes;
    std::vector<double> sNodes;  // exp(xNodes), strictly increasing
};

Grid build_grid(double xMin, double xMax, std::size_t nSpace, double horizon,
                std::size_t nTime);

// Solution container: u and the memory integral I at every (time level,
// node). Level 0 is tau = 0; level n is tau = n * dtau. I(., 0) = 0 and I
// is nondecreasing in the level index at every node.
struct Surface {
    Grid grid;
    std::vector<double> u;  // (nTime+1) * nSpace, time-major
    std::vector<double> I;  // same layout

    double& at(std::size_t level, std::size_t node) {
        return u[level * grid.nSpace + node];
    }
    double at(std::size_t level, std::size_t node) const {
        return u[level * grid.nSpace + node];
    }
    double memory_at(std::size_t level, std::size_t node) const {
        return I[level * grid.nSpace + node];
    }
    std::size_t levels() const { return grid.nTime + 1; }
};

Surface make_surface(const Grid& grid);

// Indices of the central half of the x-range (middle two quarters).
// Acceptance-style error measurements happen here, away from the
// truncated far field.
std::vector<std::size_t> central_nodes(const Grid& grid);

// Nodal 0.5 sigma^2 S^2 u_SS via the log-coordinate identity. Interior
// nodes: second-order central differences. Boundary nodes: far-field
// closure u_xx := 0 with a one-sided first derivative. Annihilates
// constants exactly at every node.
std::vector<double> apply_bs_operator(const Grid& grid, double sigma,
                                      const std::vector<double>& u);

struct BarrierParams {
    double T1 = 0.0;  // blow-up time, > 0
    double sigma = 0.0;
};

// Explicit solution of omega_tau = 0.5 sigma^2 S^2 omega_SS blowing up at
// T1. With theta = T1 - tau:
//   omega = theta^{-1/2} exp( (ln S + 0.5 sigma^2 theta)^2 / (2 sigma^2 theta) ).
// Strictly increasing in tau on [T1 - 4/sigma^2, T1) at every S; ridge
// (minimum over S) at S = exp(-0.5 sigma^2 theta) where omega = theta^{-1/2}.
// Throws DomainError at tau >= T1.
double barrier_omega(const BarrierParams& bp, double S, double tau);

}  // namespace liqshock
