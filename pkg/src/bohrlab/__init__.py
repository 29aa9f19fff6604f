"""Numerical laboratory for refined Bohr inequalities with Schwarz functions."""

from .analytic import (
    BlaschkeProduct,
    BlaschkeTimesMonomial,
    CoefficientSeries,
    Constant,
    Lacunary,
    LacunaryFStar,
    MobiusF,
    MobiusPhi,
    Monomial,
    evaluate,
    evaluate_schwarz,
    majorant_sum,
    quadratic_norm,
    random_member,
    refined_term,
    taylor_coefficients,
)
from .radii import NoRootFound, RadiusQuery, RadiusResult, Theorem, radius_R5, solve

__version__ = "0.1.0"
