"""Exact toolkit for the big -1 Jacobi polynomials.

Rational arithmetic throughout, except in :mod:`bigjacobi.quad`, which builds
floating-point Gauss rules from the exact recurrence.
"""

from .errors import (
    BigJacobiError,
    ConvergenceFailure,
    DegenerateParams,
    DomainError,
    EigenFailure,
    NonzeroRemainder,
    NotPolynomialRegime,
    PositivityViolation,
    SingularResidue,
    ZeroAtNode,
)
from .exact import LaurentPoly, Poly, Rational, format_rational, parse_rational, proportionality
from .family import (
    MonicPolySeq,
    Params,
    PolynomialSequence,
    b_coeff,
    build_L,
    exact_moment,
    family,
    inner_product,
    lambda_n,
    mu_n,
    u_coeff,
)
from .jordan import build_jpm, build_v, build_xyz, j_action, structure_u, verify_jordan
from .ladder import (
    ChristoffelTransform,
    LadderReport,
    build_lowering,
    build_raising,
    christoffel,
    double_christoffel,
    kappa_n,
    nu_n,
)
from .operators import DunklOperator, anticommutator, apply, commutator, compose
from .report import ActionCheck, IdentityCheck

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
