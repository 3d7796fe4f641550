"""The big -1 Jacobi family: eigenvalue operator, recurrence, weight, moments.

Parameters are exact rationals.  Orthogonality is checked exactly only when
``alpha`` and ``beta`` are odd positive integers, because then the weight is a
signed polynomial on the two intervals and every moment is rational.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

from .errors import DegenerateParams, DomainError, NotPolynomialRegime
from .exact import LaurentPoly, Poly, as_rational, format_rational, parse_rational
from .operators import DunklOperator

_ONE = Fraction(1)


@dataclass(frozen=True)
class Params:
    """The triple (alpha, beta, c), stored as Fractions."""

    alpha: Fraction
    beta: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def from_strings(cls, alpha: str, beta: str, c: str) -> "Params":
        return cls(parse_rational(alpha), parse_rational(beta), parse_rational(c))

    @property
    def omega1(self) -> Fraction:
        return -8 * self.c

    @property
    def omega2(self) -> Fraction:
        return 2 * (self.alpha - self.beta * self.c)

    @property
    def omega3(self) -> Fraction:
        return 2 * (self.beta - self.alpha * self.c)

    def shifted(self, dalpha: int) -> "Params":
        return Params(self.alpha + dalpha, self.beta, self.c)

    def in_positivity_window(self) -> bool:
        return self.alpha > -1 and self.beta > -1 and 0 < self.c < 1

    def is_polynomial_regime(self) -> bool:
        return _odd_positive(self.alpha) and _odd_positive(self.beta)

    def to_json_obj(self) -> Dict[str, str]:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "c": format_rational(self.c),
        }

    def __str__(self) -> str:
        a, b, c = (format_rational(v) for v in (self.alpha, self.beta, self.c))
        return f"(alpha={a}, beta={b}, c={c})"


def _odd_positive(q: Fraction) -> bool:
    return q.denominator == 1 and q > 0 and q.numerator % 2 == 1


def _check_denominator(value: Fraction, what: str, p: Params) -> Fraction:
    if not value:
        raise DegenerateParams(f"{what} vanishes at {p}")
    return value


# ---------------------------------------------------------------- operator L


def g0(p: Params) -> LaurentPoly:
    a, b, c = p.alpha, p.beta, p.c
    return LaurentPoly({0: a + b + 1, -1: c * a - b, -2: c})


def g1(p: Params) -> LaurentPoly:
    c = p.c
    # 2(x-1)(x+c)/x
    return LaurentPoly({1: 2, 0: 2 * (c - 1), -1: -2 * c})


def build_L(p: Params) -> DunklOperator:
    """g0(x) (R - I) + g1(x) D R."""
    a0 = g0(p)
    return DunklOperator({(0, 1): a0, (0, 0): -a0, (1, 1): g1(p)})


def lambda_n(n: int, p: Params) -> Fraction:
    if n % 2 == 0:
        return Fraction(2 * n)
    return -2 * (p.alpha + p.beta + n + 1)


def mu_n(n: int, p: Params) -> Fraction:
    """Eigenvalue of X = (L + alpha + beta + 1)/2 on P_n."""
    sign = 1 if n % 2 == 0 else -1
    return sign * (n + (p.alpha + p.beta + 1) / 2)


def eta_n(n: int, p: Params) -> Fraction:
    """Subdiagonal entry of L in the Phi basis."""
    if n % 2 == 0:
        return 2 * (p.c - 1) * n
    return 2 * (p.c + 1) * (p.beta + n)


def phi_basis(n: int, c) -> Poly:
    """(x^2 - c^2)^(n/2) for even n, (x + c)(x^2 - c^2)^((n-1)/2) for odd n."""
    return _phi_basis(n, as_rational(c))


@lru_cache(maxsize=1024)
def _phi_basis(n: int, c: Fraction) -> Poly:
    if n >= 2:
        return _phi_basis(n - 2, c) * Poly((-c * c, 0, 1))
    return Poly((c, 1)) if n else Poly.one()


# ---------------------------------------------------------------- recurrence


def u_coeff(n: int, p: Params) -> Fraction:
    if n < 1:
        raise ValueError("u_n is defined for n >= 1")
    a, b, c = p.alpha, p.beta, p.c
    den = _check_denominator(a + b + 2 * n, f"alpha+beta+2n (n={n})", p)
    if n % 2 == 0:
        return (1 - c) ** 2 * n * (a + b + n) / den**2
    return (1 + c) ** 2 * (a + n) * (b + n) / den**2


def b_coeff(n: int, p: Params) -> Fraction:
    if n < 0:
        raise ValueError("b_n is defined for n >= 0")
    a, b, c = p.alpha, p.beta, p.c
    d0 = _check_denominator(a + b + 2 * n, f"alpha+beta+2n (n={n})", p)
    d1 = _check_denominator(a + b + 2 * n + 2, f"alpha+beta+2n+2 (n={n})", p)
    if n % 2 == 0:
        return -c + (c - 1) * n / d0 + (1 + c) * (b + n + 1) / d1
    return c + (1 - c) * (n + 1) / d1 - (c + 1) * (b + n) / d0


class PolynomialSequence:
    """Lazily extended list of polynomials, indexed by degree.

    Extension is serialized by a lock, so concurrent readers always observe a
    consistent prefix.  Subclasses implement :meth:`_compute`.
    """

    def __init__(self):
        self._polys: List[Poly] = []
        self._lock = threading.Lock()

    def _compute(self, n: int) -> Poly:
        raise NotImplementedError

    def __getitem__(self, n: int) -> Poly:
        if n < 0:
            raise IndexError(n)
        if n < len(self._polys):
            return self._polys[n]
        with self._lock:
            while len(self._polys) <= n:
                self._polys.append(self._compute(len(self._polys)))
            return self._polys[n]

    def take(self, count: int) -> List[Poly]:
        if count > 0:
            self[count - 1]
        return list(self._polys[:count])

    def recurrence(self, n: int):
        """Read (b_n, u_n) back from the polynomials: x P_n - P_{n+1} = b_n P_n + u_n P_{n-1}."""
        rest = self[n].shift_up() - self[n + 1]
        b = rest[n]
        rest = rest - self[n] * b
        u = rest[n - 1] if n >= 1 else Fraction(0)
        if n >= 1:
            rest = rest - self[n - 1] * u
        if rest:
            raise ValueError(f"sequence does not satisfy a three-term recurrence at n={n}")
        return b, u


class MonicPolySeq(PolynomialSequence):
    """Monic big -1 Jacobi polynomials P_n built from the three-term recurrence."""

    def __init__(self, params: Params):
        super().__init__()
        self.params = params
        self._norms: List[Fraction] = []

    def _compute(self, n: int) -> Poly:
        if n == 0:
            return Poly.one()
        p = self.params
        prev = self._polys[n - 1]
        nxt = prev.shift_up() - prev * b_coeff(n - 1, p)
        if n >= 2:
            nxt = nxt - self._polys[n - 2] * u_coeff(n - 1, p)
        return nxt

    def norm(self, n: int) -> Fraction:
        """h_n = <P_n, P_n>, via h_n = u_n h_{n-1} with h_0 the total mass."""
        with self._lock:
            if not self._norms:
                self._norms.append(exact_moment(0, self.params))
            while len(self._norms) <= n:
                k = len(self._norms)
                self._norms.append(u_coeff(k, self.params) * self._norms[-1])
            return self._norms[n]


def monic_pn(seq: MonicPolySeq, n: int) -> Poly:
    return seq[n]


@lru_cache(maxsize=256)
def family(p: Params) -> MonicPolySeq:
    """Shared sequence per parameter point (sequences are append-only)."""
    return MonicPolySeq(p)


# ---------------------------------------------------------------- weight


def _require_polynomial_regime(p: Params):
    if not p.is_polynomial_regime():
        raise NotPolynomialRegime(
            f"(alpha-1)/2 and (beta-1)/2 must be nonnegative integers, got {p}"
        )


def weight_poly_part(p: Params) -> Poly:
    """W(x) = (x+1)(x-c)(1-x^2)^((alpha-1)/2)(x^2-c^2)^((beta-1)/2); w = sign(x) W."""
    _require_polynomial_regime(p)
    ka = (p.alpha.numerator - 1) // 2
    kb = (p.beta.numerator - 1) // 2
    c = p.c
    return Poly((1, 1)) * Poly((-c, 1)) * Poly((1, 0, -1)) ** ka * Poly((-c * c, 0, 1)) ** kb


@lru_cache(maxsize=64)
def _weight_cached(p: Params) -> Poly:
    return weight_poly_part(p)


def exact_moment(k: int, p: Params) -> Fraction:
    """Integral of x^k w(x) over [-1,-c] U [c,1], exactly."""
    if not (0 <= p.c < 1):
        raise DomainError(f"need 0 <= c < 1, got {p}")
    return _moment(k, p)


@lru_cache(maxsize=4096)
def _moment(k: int, p: Params) -> Fraction:
    F = _weight_cached(p).shift_up(k).antiderivative()
    c = p.c
    right = F(_ONE) - F(c)
    left = F(-c) - F(-_ONE)
    # sign(x) flips the left interval
    return right - left


def inner_product(f: Poly, g: Poly, p: Params) -> Fraction:
    _require_polynomial_regime(p)
    prod = f * g
    return sum((coef * exact_moment(k, p) for k, coef in enumerate(prod.coeffs) if coef), Fraction(0))


def weight_eval(x: float, p) -> float:
    """Floating-point weight at x, for any real alpha, beta > -1 and 0 < c < 1."""
    alpha, beta, c = float(p.alpha), float(p.beta), float(p.c)
    if not (alpha > -1 and beta > -1 and 0 < c < 1):
        raise DomainError(f"parameters outside alpha,beta > -1, 0 < c < 1: {p}")
    ax = abs(x)
    if not (c < ax < 1):
        raise DomainError(f"x={x} is outside (-1,-c) U (c,1) for c={c}")
    sign = 1.0 if x > 0 else -1.0
    return (
        sign
        * (x + 1)
        * (x - c)
        * math.pow(1 - x * x, (alpha - 1) / 2)
        * math.pow(x * x - c * c, (beta - 1) / 2)
    )


def eigen_residual(seq: MonicPolySeq, n: int) -> LaurentPoly:
    p = seq.params
    return build_L(p)(seq[n]) - seq[n].to_laurent() * lambda_n(n, p)


def phi_action_residual(n: int, p: Params) -> LaurentPoly:
    res = build_L(p)(phi_basis(n, p.c)) - phi_basis(n, p.c).to_laurent() * lambda_n(n, p)
    if n >= 1:
        res = res - phi_basis(n - 1, p.c).to_laurent() * eta_n(n, p)
    return res


__all__ = [
    "Params",
    "MonicPolySeq",
    "PolynomialSequence",
    "build_L",
    "lambda_n",
    "mu_n",
    "eta_n",
    "phi_basis",
    "u_coeff",
    "b_coeff",
    "monic_pn",
    "family",
    "weight_poly_part",
    "exact_moment",
    "inner_product",
    "weight_eval",
    "g0",
    "g1",
]
