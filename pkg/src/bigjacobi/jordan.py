"""Jordan-algebra realization: X, Y, Z, the intertwiners J+ and J-, and V.

The generators satisfy the linear anticommutation relations

    {X, Y} = Z + w3,    {Y, Z} = w1,    {Z, X} = Y + w2,

with w1 = -8c, w2 = 2(alpha - beta c), w3 = 2(beta - alpha c), and the
Casimir Z^2 + Y^2 is the scalar 4(c^2 + 1).  Everything here is checked as an
exact identity between normal-form operators at instantiated rational
parameters.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import DegenerateParams
from .exact import LaurentPoly, proportionality
from .family import MonicPolySeq, Params, build_L, family, mu_n
from .operators import DunklOperator, anticommutator, commutator
from .report import ActionCheck, IdentityCheck

log = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

J_PLUS = "J+"
J_MINUS = "J-"
U1 = "U1"
U2 = "U2"


@dataclass(frozen=True)
class JordanConstants:
    omega1: Fraction
    omega2: Fraction
    omega3: Fraction

    @classmethod
    def from_params(cls, p: Params) -> "JordanConstants":
        return cls(p.omega1, p.omega2, p.omega3)


@dataclass(frozen=True)
class StructureConstant:
    """Predicted action ``op P_n = value * P_{target_degree}``."""

    n: int
    kind: str
    value: Fraction
    target_degree: int


def build_xyz(p: Params) -> Tuple[DunklOperator, DunklOperator, DunklOperator]:
    X = (build_L(p) + (p.alpha + p.beta + 1)) * HALF
    Y = DunklOperator.multiplication(LaurentPoly.monomial(1, 2))
    c = p.c
    Z = DunklOperator(
        {
            (0, 0): LaurentPoly.monomial(-1, -2 * c),
            # -2(x-1)(x+c)/x
            (0, 1): LaurentPoly({1: -2, 0: -2 * (c - 1), -1: 2 * c}),
        }
    )
    return X, Y, Z


def verify_jordan(p: Params) -> List[IdentityCheck]:
    """Residuals of the three anticommutation relations, each expected zero."""
    X, Y, Z = build_xyz(p)
    residuals = [
        ("anticommutator_xy", anticommutator(X, Y) - Z - p.omega3),
        ("anticommutator_yz", anticommutator(Y, Z) - p.omega1),
        ("anticommutator_zx", anticommutator(Z, X) - Y - p.omega2),
    ]
    pj = p.to_json_obj()
    return [IdentityCheck(name, pj, r.is_zero(), detail="" if r.is_zero() else str(r)) for name, r in residuals]


def casimir(p: Params) -> DunklOperator:
    _, Y, Z = build_xyz(p)
    return Z * Z + Y * Y


def casimir_value(p: Params) -> Fraction:
    return 4 * (p.c**2 + 1)


def build_jpm(p: Params) -> Tuple[DunklOperator, DunklOperator]:
    X, Y, Z = build_xyz(p)
    jp = (Y + Z) * (X - HALF) - (p.omega2 + p.omega3) / 2
    jm = (Y - Z) * (X + HALF) + (p.omega2 - p.omega3) / 2
    return jp, jm


def _den(value: Fraction, p: Params, n: int) -> Fraction:
    if not value:
        raise DegenerateParams(f"alpha+beta+2n vanishes for n={n} at {p}")
    return value


def j_action(n: int, p: Params, which: str) -> StructureConstant:
    """Closed-form block action of J+ or J- on the monic P_n."""
    a, b, c = p.alpha, p.beta, p.c
    even = n % 2 == 0
    if which == J_PLUS:
        if even:
            value = 2 * (c - 1) ** 2 * n * (a + b + n) / _den(a + b + 2 * n, p, n)
            return StructureConstant(n, which, value, n - 1)
        return StructureConstant(n, which, -2 * (a + b + 2 * (n + 1)), n + 1)
    if which == J_MINUS:
        if even:
            return StructureConstant(n, which, 2 * (a + b + 2 * (n + 1)), n + 1)
        value = -2 * (c + 1) ** 2 * (a + n) * (b + n) / _den(a + b + 2 * n, p, n)
        return StructureConstant(n, which, value, n - 1)
    raise ValueError(f"unknown intertwiner {which!r}")


def u_operator(n: int, p: Params, which: str) -> DunklOperator:
    """The n-dependent structure operator: U1 lowers, U2 raises the degree."""
    jp, jm = build_jpm(p)
    even = n % 2 == 0
    if which == U1:
        return jp if even else jm
    if which == U2:
        return jm if even else jp
    raise ValueError(f"unknown structure operator {which!r}")


def structure_u(n: int, p: Params, which: str) -> StructureConstant:
    """Structure constant of U1 (lowering) or U2 (raising) on P_n.

    The raising constant is +2(alpha+beta+2n+2) for even n and
    -2(alpha+beta+2n+2) for odd n, i.e. the J- / J+ block constants it is
    made of.
    """
    even = n % 2 == 0
    if which == U1:
        sc = j_action(n, p, J_PLUS if even else J_MINUS)
    elif which == U2:
        sc = j_action(n, p, J_MINUS if even else J_PLUS)
    else:
        raise ValueError(f"unknown structure operator {which!r}")
    return StructureConstant(n, which, sc.value, sc.target_degree)


def check_action(op: DunklOperator, seq: MonicPolySeq, predicted: StructureConstant) -> ActionCheck:
    """Apply ``op`` to P_n and compare with the predicted multiple of P_target."""
    n = predicted.n
    image = op(seq[n])
    if predicted.target_degree < 0:
        proportional = image.is_zero()
        observed = Fraction(0) if proportional else None
    else:
        observed = proportionality(image, seq[predicted.target_degree])
        proportional = observed is not None
    return ActionCheck(
        n=n,
        kind=predicted.kind,
        target_degree=predicted.target_degree,
        predicted=predicted.value,
        observed=observed,
        proportional=proportional,
        constant_match=proportional and observed == predicted.value,
    )


def build_v(p: Params) -> DunklOperator:
    X, _, _ = build_xyz(p)
    jp, jm = build_jpm(p)
    return jp * (X + HALF) + jm * (X - HALF)


def build_v_multiplicative(p: Params) -> DunklOperator:
    """The same V written through Y and X only: 2Y(X^2 - 1/4) - w3 X - w2/2."""
    X, Y, _ = build_xyz(p)
    return (Y * (X * X - QUARTER)) * 2 - X * p.omega3 - p.omega2 / 2


def v_multiplier(n: int, p: Params) -> LaurentPoly:
    """V acts on P_n as multiplication by this linear polynomial.

    Since Y multiplies by 2x, the slope is 2 * 2 * (mu_n^2 - 1/4).
    """
    mu = mu_n(n, p)
    return LaurentPoly({1: 4 * (mu * mu - QUARTER), 0: -p.omega3 * mu - p.omega2 / 2})


def v_two_term(n: int, p: Params) -> Tuple[Fraction, Fraction]:
    """Coefficients (of P_{n-1}, of P_{n+1}) in V P_n, from the J+/J- block constants."""
    mu = mu_n(n, p)
    cp = j_action(n, p, J_PLUS).value
    cm = j_action(n, p, J_MINUS).value
    if n % 2 == 0:
        lower, upper = (mu + HALF) * cp, (mu - HALF) * cm
    else:
        lower, upper = (mu - HALF) * cm, (mu + HALF) * cp
    log.debug("V two-term n=%d: lower=%s upper=%s", n, lower, upper)
    return lower, upper


def recurrence_from_v(n: int, p: Params) -> Tuple[Fraction, Fraction]:
    """Recover (b_n, u_n) by matching the two evaluations of V P_n.

    Writing x P_n = P_{n+1} + b_n P_n + u_n P_{n-1} inside the multiplicative
    form and comparing with the two-term form gives
    ``slope * b_n = w3 mu_n + w2/2`` and ``slope * u_n = lower``.
    u_0 is returned as 0.
    """
    mu = mu_n(n, p)
    slope = 4 * (mu * mu - QUARTER)
    if not slope:
        raise DegenerateParams(f"mu_n = +-1/2 for n={n} at {p}")
    lower, upper = v_two_term(n, p)
    if upper != slope:
        log.debug("V upper coefficient %s differs from slope %s at n=%d", upper, slope, n)
    b = (p.omega3 * mu + p.omega2 / 2) / slope
    u = lower / slope
    return b, u


def intertwiner_residuals(p: Params) -> List[Tuple[str, DunklOperator]]:
    """{X,J+} - J+, {X,J-} + J-, [X,J+^2], [X,J-^2]; all should vanish."""
    X, _, _ = build_xyz(p)
    jp, jm = build_jpm(p)
    return [
        ("x_jplus_anticommutator", anticommutator(X, jp) - jp),
        ("x_jminus_anticommutator", anticommutator(X, jm) + jm),
        ("x_jplus_squared_commutator", commutator(X, jp * jp)),
        ("x_jminus_squared_commutator", commutator(X, jm * jm)),
    ]


def eigen_shift_ok(n: int, p: Params) -> bool:
    """X(J+ P_n) = (1 - mu_n) J+ P_n and X(J- P_n) = (-1 - mu_n) J- P_n."""
    X, _, _ = build_xyz(p)
    jp, jm = build_jpm(p)
    pn = family(p)[n]
    mu = mu_n(n, p)
    a = jp(pn)
    b = jm(pn)
    return X(a) == a.scale(1 - mu) and X(b) == b.scale(-1 - mu)


__all__ = [
    "JordanConstants",
    "StructureConstant",
    "build_xyz",
    "verify_jordan",
    "casimir",
    "casimir_value",
    "build_jpm",
    "j_action",
    "structure_u",
    "u_operator",
    "check_action",
    "build_v",
    "build_v_multiplicative",
    "v_multiplier",
    "recurrence_from_v",
    "intertwiner_residuals",
    "eigen_shift_ok",
]
