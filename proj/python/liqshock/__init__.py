"""Python bindings for the liquidity-shock indifference pricing engine."""

from ._core import (
    FactorValues,
    Grid,
    MertonFactors,
    ModelParams,
    PayoffSpec,
    PriceSurfaces,
    Scheme,
    SolveReport,
    SolverConfig,
    SolverError,
    Surface,
    ValidationError,
    build_grid,
    constant_payoff_solution,
    derive_constants,
    evaluate_factors,
    evaluate_payoff,
    indifference_prices,
    linear_reduction_solution,
    make_payoff,
    merton_spectrum,
    solve,
    truncate_below,
    value_function,
)

__all__ = [
    "FactorValues",
    "Grid",
    "MertonFactors",
    "ModelParams",
    "PayoffSpec",
    "PriceSurfaces",
    "Scheme",
    "SolveReport",
    "SolverConfig",
    "SolverError",
    "Surface",
    "ValidationError",
    "build_grid",
    "constant_payoff_solution",
    "derive_constants",
    "evaluate_factors",
    "evaluate_payoff",
    "indifference_prices",
    "linear_reduction_solution",
    "make_payoff",
    "merton_spectrum",
    "solve",
    "truncate_below",
    "value_function",
]
