"""Parameter-shifting ladder operators and Christoffel transforms.

The lowering operator sends P_n^(alpha,beta) to a multiple of
P_{n-1}^(alpha+2,beta); it is a generalized Dunkl operator and reduces to the
ordinary one when c = 0.  The raising operator sends P_n^(alpha,beta) to a
multiple of P_{n+1}^(alpha-2,beta).  Lowering is also the composite of two
Christoffel transforms, at x = 1 and x = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from .errors import ZeroAtNode
from .exact import LaurentPoly, Poly, format_rational, proportionality
from .family import Params, PolynomialSequence, build_L, family, lambda_n
from .operators import DERIVATIVE, DunklOperator

_X = LaurentPoly.monomial(1)
_XINV = LaurentPoly.monomial(-1)


@dataclass(frozen=True)
class LadderReport:
    n: int
    shift: int
    predicted_constant: Fraction
    exact_match: bool
    observed: Optional[Fraction] = None

    def to_json_obj(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "shift": self.shift,
            "predicted_constant": format_rational(self.predicted_constant),
            "observed_constant": None if self.observed is None else format_rational(self.observed),
            "exact_match": self.exact_match,
        }


# ---------------------------------------------------------------- lowering


def lowering_coefficients(p: Params):
    """A, B, C of the lowering operator A (I - R) + B D + C D R."""
    b, c = p.beta, p.c
    A = LaurentPoly({-3: c * c, -2: -c * (c - 1) / 2, -1: b * (c + 1) / 2})
    B = LaurentPoly({0: 1, -2: -c * c})
    C = (_X + c) * (1 - _X) * _XINV**2 * c
    return A, B, C


def build_lowering(p: Params) -> DunklOperator:
    A, B, C = lowering_coefficients(p)
    return DunklOperator({(0, 0): A, (0, 1): -A, (1, 0): B, (1, 1): C})


def little_dunkl(p: Params) -> DunklOperator:
    """D + (beta / 2x)(I - R): the classical Dunkl operator."""
    k = LaurentPoly.monomial(-1, p.beta / 2)
    return DERIVATIVE + DunklOperator({(0, 0): k, (0, 1): -k})


def nu_n(n: int, p: Params) -> Fraction:
    if n % 2 == 0:
        return (1 - p.c) * n
    return (p.c + 1) * (p.beta + n)


def lowered_eigenvalue(n: int, p: Params) -> Fraction:
    """Eigenvalue of L^(alpha+2) on the lowered eigenfunction of L^(alpha)."""
    return -lambda_n(n, p) - 2 * (p.alpha + p.beta + 2)


def check_lowering_intertwiner(p: Params) -> DunklOperator:
    """L^(alpha+2) Dl + Dl L^(alpha) + 2(alpha+beta+2) Dl, in normal form."""
    low = build_lowering(p)
    return build_L(p.shifted(2)) * low + low * build_L(p) + low * (2 * (p.alpha + p.beta + 2))


def hahn_check(n: int, p: Params) -> LadderReport:
    if n < 1:
        raise ValueError("the lowering check needs n >= 1")
    image = build_lowering(p)(family(p)[n])
    target = family(p.shifted(2))[n - 1]
    observed = proportionality(image, target)
    predicted = nu_n(n, p)
    return LadderReport(n, 2, predicted, observed is not None and observed == predicted, observed)


# ---------------------------------------------------------------- raising


def raising_coefficients(p: Params):
    """S1, S2, T1, T2 of the raising operator S1 + S2 R + T1 D + T2 D R."""
    a, b, c = p.alpha, p.beta, p.c
    S1 = LaurentPoly(
        {
            1: b * c - b - 2 * a,
            0: -(c + 2) * (c - 1),
            -1: b - 2 * c * c + 2 * c * c * a - b * c,
            -2: -c * (c - 1),
            -3: 2 * c * c,
        }
    )
    S2 = LaurentPoly(
        {
            1: b * c - b + 2 * c * a,
            0: (c - 1) * (2 * c * a - c - 2 * b),
            -1: -b - 2 * c * c * a + b * c + 2 * c * c,
            -2: c * (c - 1),
            -3: -2 * c * c,
        }
    )
    inv2 = _XINV**2
    T1 = (_X**2 - 1) * (c * c - _X**2) * inv2 * 2
    T2 = (1 + _X) * (_X - 1) ** 2 * (_X + c) * inv2 * (2 * c)
    return S1, S2, T1, T2


def build_raising(p: Params) -> DunklOperator:
    S1, S2, T1, T2 = raising_coefficients(p)
    return DunklOperator({(0, 0): S1, (0, 1): S2, (1, 0): T1, (1, 1): T2})


def little_raising(p: Params) -> DunklOperator:
    """Raising operator at c = 0, written in closed form.

    2(1 - x^2) D - beta (x - 1)^2 / x R + (2 + beta/x - (beta + 2 alpha) x) I.
    The derivative term carries no reflection: this is what the general
    operator reduces to, and it is the form that intertwines L^(alpha) with
    L^(alpha-2).
    """
    a, b = p.alpha, p.beta
    return DunklOperator(
        {
            (1, 0): (1 - _X**2) * 2,
            (0, 1): (_X - 1) ** 2 * _XINV * (-b),
            (0, 0): LaurentPoly({0: 2, -1: b, 1: -(b + 2 * a)}),
        }
    )


def kappa_n(n: int, p: Params) -> Fraction:
    if n % 2 == 0:
        return 2 * (p.c - 1) * (p.alpha + p.beta + n)
    return -2 * (p.c + 1) * (p.alpha + n)


def check_raising_intertwiner(p: Params) -> DunklOperator:
    """L^(alpha-2) Ra + Ra L^(alpha) + 2(alpha+beta) Ra, in normal form."""
    up = build_raising(p)
    return build_L(p.shifted(-2)) * up + up * build_L(p) + up * (2 * (p.alpha + p.beta))


def raising_check(n: int, p: Params) -> LadderReport:
    image = build_raising(p)(family(p)[n])
    target = family(p.shifted(-2))[n + 1]
    observed = proportionality(image, target)
    predicted = kappa_n(n, p)
    return LadderReport(n, -2, predicted, observed is not None and observed == predicted, observed)


# ---------------------------------------------------------------- Christoffel


class ChristoffelTransform(PolynomialSequence):
    """Monic kernel polynomials (P_{n+1} - P_{n+1}(a)/P_n(a) P_n) / (x - a).

    Orthogonal for the weight (x - a) w whenever the source is orthogonal for w.
    """

    def __init__(self, source: PolynomialSequence, a):
        super().__init__()
        self.source = source
        self.a = Fraction(a)
        self._divisor = Poly((-self.a, 1))

    def _compute(self, n: int) -> Poly:
        pn, pn1 = self.source[n], self.source[n + 1]
        at = pn(self.a)
        if not at:
            raise ZeroAtNode(f"P_{n}({format_rational(self.a)}) = 0")
        numerator = pn1 - pn * (pn1(self.a) / at)
        return numerator.exact_div(self._divisor)


def christoffel(seq: PolynomialSequence, a) -> ChristoffelTransform:
    return ChristoffelTransform(seq, a)


def double_christoffel(seq: PolynomialSequence, a1=1, a2=-1) -> ChristoffelTransform:
    return christoffel(christoffel(seq, a1), a2)


__all__ = [
    "LadderReport",
    "build_lowering",
    "little_dunkl",
    "nu_n",
    "lowered_eigenvalue",
    "check_lowering_intertwiner",
    "hahn_check",
    "build_raising",
    "little_raising",
    "kappa_n",
    "check_raising_intertwiner",
    "raising_check",
    "ChristoffelTransform",
    "christoffel",
    "double_christoffel",
]
