#include "liqshock/params.hpp"

#include <cmath>

#include "liqshock/errors.hpp"

namespace liqshock {

ModelParams derive_constants(double sigma, double mu, double nu01,
                             double nu10, double gamma, double horizon) {
    if (!(sigma > 0.0)) throw ValidationError("model.sigma must be > 0");
    if (!std::isfinite(mu)) throw ValidationError("model.mu must be finite");
    if (!(nu01 >= 0.0)) throw ValidationError("model.nu01 must be >= 0");
    if (!(nu10 >= 0.0)) throw ValidationError("model.nu10 must be >= 0");
    if (!(gamma > 0.0)) throw ValidationError("model.gamma must be > 0");
    if (!(horizon > 0.0)) throw ValidationError("model.horizon must be > 0");
    ModelParams p;
    p.sigma = sigma;
    p.mu = mu;
    p.nu01 = nu01;
    p.nu10 = nu10;
    p.gamma = gamma;
    p.horizon = horizon;
    p.d0 = mu * mu / (2.0 * sigma * sigma);
    p.kappa = p.d0 + nu01 - nu10;
    return p;
}

MertonFactors merton_spectrum(const ModelParams& params) {
    if (!(params.nu01 > 0.0))
        throw ValidationError(
            "model.nu01 must be > 0 to form the frozen-state factor");
    const double s = params.d0 + params.nu01 + params.nu10;
    // Discriminant = (d0 - nu10)^2 + nu01 (nu01 + 2 d0 + 2 nu10) >= 0,
    // so the roots are always real.
    const double disc = s * s - 4.0 * params.d0 * params.nu10;
    const double root = std::sqrt(disc);
    MertonFactors f;
    f.lam1 = 0.5 * (s + root);
    f.lam2 = 0.5 * (s - root);
    f.horizon = params.horizon;
    f.d0 = params.d0;
    f.nu01 = params.nu01;
    f.nu10 = params.nu10;
    const double T = params.horizon;
    if (f.lam1 == f.lam2) {
        // Needs d0 = nu10 and nu01 = 0, excluded above.
        throw DomainError("degenerate factor spectrum");
    }
    f.c1 = (f.lam2 - params.d0) / (f.lam2 - f.lam1) * std::exp(-f.lam1 * T);
    f.c2 = (f.lam1 - params.d0) / (f.lam1 - f.lam2) * std::exp(-f.lam2 * T);
    return f;
}

FactorValues evaluate_factors(const MertonFactors& factors, double t) {
    if (!(t >= 0.0) || !(t <= factors.horizon))
        throw DomainError("factor evaluation time outside [0, horizon]");
    const double e1 = std::exp(factors.lam1 * t);
    const double e2 = std::exp(factors.lam2 * t);
    FactorValues v;
    v.f0 = factors.c1 * e1 + factors.c2 * e2;
    v.df0 = factors.c1 * factors.lam1 * e1 + factors.c2 * factors.lam2 * e2;
    const double a1 = factors.d0 + factors.nu01 - factors.lam1;
    const double a2 = factors.d0 + factors.nu01 - factors.lam2;
    v.f1 = (factors.c1 * a1 * e1 + factors.c2 * a2 * e2) / factors.nu01;
    v.df1 = (factors.c1 * a1 * factors.lam1 * e1 +
             factors.c2 * a2 * factors.lam2 * e2) /
            factors.nu01;
    return v;
}

}  // namespace liqshock
