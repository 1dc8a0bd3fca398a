#pragma once

#include <cstdint>

namespace liqshock {

// Model constants for the two-state liquidity regime. The derived pair
// (d0, kappa) is fixed by the primitives and carried along so downstream
// code never recomputes it inconsistently:
//   d0    = mu^2 / (2 sigma^2)
//   kappa = d0 + nu01 - nu10
struct ModelParams {
    double sigma = 0.0;    // diffusion volatility, > 0
    double mu = 0.0;       // drift of the tradable
    double nu01 = 0.0;     // intensity liquid -> frozen, >= 0
    double nu10 = 0.0;     // intensity frozen -> liquid, >= 0
    double gamma = 0.0;    // absolute risk aversion, > 0
    double horizon = 0.0;  // terminal time T, > 0
    double d0 = 0.0;
    double kappa = 0.0;
};

// Validates primitives and fills the derived constants.
// Throws ValidationError naming the offending field.
ModelParams derive_constants(double sigma, double mu, double nu01,
                             double nu10, double gamma, double horizon);

// Spectrum of the constant-payoff ODE system. lam2 <= lam1 always;
// both weights c1, c2 are nonnegative, so f0 > 0 on [0, T].
struct MertonFactors {
    double lam1 = 0.0;
    double lam2 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double horizon = 0.0;
    double d0 = 0.0;
    double nu01 = 0.0;
    double nu10 = 0.0;
};

// Computes the exponents and weights from the model constants.
// Requires nu01 > 0 (the frozen-state factor f1 divides by it).
MertonFactors merton_spectrum(const ModelParams& params);

struct FactorValues {
    double f0 = 0.0;
    double f1 = 0.0;
    double df0 = 0.0;  // f0'(t)
    double df1 = 0.0;  // f1'(t)
};

// Evaluates both factors and their derivatives at calendar time t.
// Throws DomainError outside [0, horizon].
FactorValues evaluate_factors(const MertonFactors& factors, double t);

}  // namespace liqshock
