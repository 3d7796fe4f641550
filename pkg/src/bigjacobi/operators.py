"""Differential-difference operators with reflection, in normal form.

An operator is a finite sum ``sum a_{d,e}(x) * D^d * R^e`` with Laurent
coefficients on the left, ``D = d/dx`` in the middle and the reflection
``(Rf)(x) = f(-x)`` on the right (``e`` in {0, 1}).  Products are reduced back
to this form with

    R a(x) = a(-x) R,      R D = -D R,      D^d a = sum_k C(d,k) a^(k) D^(d-k),

so two operators are equal exactly when their term tables coincide.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, Mapping, Tuple, Union

from .exact import LaurentPoly, Poly, Scalar, format_rational, parse_rational, poly_from_laurent

Key = Tuple[int, int]
Coefficient = Union[LaurentPoly, Poly, int, Fraction]


class DunklOperator:
    """Immutable element of the algebra generated by Laurent multipliers, D and R.

    ``A * B`` is composition (apply B first), ``A(f)`` applies the operator to
    a Laurent polynomial or polynomial.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, Coefficient] | None = None):
        clean: Dict[Key, LaurentPoly] = {}
        for (d, e), a in (terms or {}).items():
            if d < 0 or e not in (0, 1):
                raise ValueError(f"bad term index {(d, e)}")
            a = LaurentPoly.coerce(a)
            if a:
                clean[(int(d), int(e))] = a
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Key, LaurentPoly]) -> "DunklOperator":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def multiplication(cls, a: Coefficient) -> "DunklOperator":
        return cls({(0, 0): a})

    @property
    def terms(self) -> Dict[Key, LaurentPoly]:
        return dict(self._terms)

    def coeff(self, d: int, e: int) -> LaurentPoly:
        return self._terms.get((d, e), LaurentPoly())

    def items(self) -> Iterator[Tuple[Key, LaurentPoly]]:
        return iter(sorted(self._terms.items()))

    @property
    def order(self) -> int:
        """Highest power of D; -1 for the zero operator."""
        return max((d for d, _ in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = DunklOperator.multiplication(other)
        if not isinstance(other, DunklOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _coerce(value) -> "DunklOperator":
        if isinstance(value, DunklOperator):
            return value
        return DunklOperator.multiplication(value)

    def __add__(self, other) -> "DunklOperator":
        try:
            other = DunklOperator._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, a in other._terms.items():
            s = out[k] + a if k in out else a
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return DunklOperator._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "DunklOperator":
        return DunklOperator._raw({k: -a for k, a in self._terms.items()})

    def __sub__(self, other) -> "DunklOperator":
        try:
            other = DunklOperator._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "DunklOperator":
        return (-self) + other

    def __mul__(self, other) -> "DunklOperator":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            s = Fraction(other)
            if not s:
                return DunklOperator._raw({})
            return DunklOperator._raw({k: a.scale(s) for k, a in self._terms.items()})
        if isinstance(other, (LaurentPoly, Poly)):
            other = DunklOperator.multiplication(other)
        if not isinstance(other, DunklOperator):
            return NotImplemented
        return compose(self, other)

    def __rmul__(self, other) -> "DunklOperator":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        if isinstance(other, (LaurentPoly, Poly)):
            return compose(DunklOperator.multiplication(other), self)
        return NotImplemented

    def __pow__(self, e: int) -> "DunklOperator":
        if e < 0:
            raise ValueError("negative operator power")
        result = IDENTITY
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, f) -> LaurentPoly:
        return apply(self, f)

    def apply_poly(self, f) -> Poly:
        """Apply and demand a polynomial result (raises SingularResidue otherwise)."""
        return poly_from_laurent(apply(self, f))

    def to_json_obj(self) -> Dict[str, Dict[str, str]]:
        return {
            f"{d},{e}": {str(k): format_rational(v) for k, v in a.items()}
            for (d, e), a in sorted(self._terms.items())
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Mapping[str, str]]) -> "DunklOperator":
        terms = {}
        for key, coeffs in obj.items():
            d, e = (int(t) for t in key.split(","))
            terms[(d, e)] = LaurentPoly({int(k): parse_rational(v) for k, v in coeffs.items()})
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "DunklOperator":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:
        return f"DunklOperator({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (d, e), a in sorted(self._terms.items()):
            tail = ("D" if d == 1 else f"D^{d}" if d else "") + ("R" if e else "")
            parts.append(f"({a})" + (f"*{tail}" if tail else ""))
        return " + ".join(parts)


def compose(a: DunklOperator, b: DunklOperator) -> DunklOperator:
    """Normal form of ``a o b``."""
    out: Dict[Key, LaurentPoly] = {}
    for (d1, e1), ca in a._terms.items():
        for (d2, e2), cb in b._terms.items():
            # move R^e1 past cb and D^d2
            moved = cb.reflect() if e1 else cb
            if e1 and d2 & 1:
                moved = -moved
            e = e1 ^ e2
            deriv = moved
            for k in range(d1 + 1):
                if k:
                    deriv = deriv.derivative()
                if not deriv:
                    break
                term = ca * deriv
                c = comb(d1, k)
                if c != 1:
                    term = term.scale(c)
                key = (d1 - k + d2, e)
                out[key] = out[key] + term if key in out else term
    return DunklOperator._raw({k: v for k, v in out.items() if v})


def anticommutator(a: DunklOperator, b: DunklOperator) -> DunklOperator:
    return compose(a, b) + compose(b, a)


def commutator(a: DunklOperator, b: DunklOperator) -> DunklOperator:
    return compose(a, b) - compose(b, a)


def apply(op: DunklOperator, f) -> LaurentPoly:
    """Exact action on a Laurent polynomial (or Poly, or constant)."""
    f = LaurentPoly.coerce(f)
    reflected = f.reflect()
    out = LaurentPoly()
    cache: Dict[Key, LaurentPoly] = {}
    for (d, e), a in op._terms.items():
        g = cache.get((d, e))
        if g is None:
            g = (reflected if e else f).derivative(d)
            cache[(d, e)] = g
        out = out + a * g
    return out


def op_equal(a: DunklOperator, b: DunklOperator) -> bool:
    return a == b


op_apply = apply
op_compose = compose
op_anticommutator = anticommutator

IDENTITY = DunklOperator({(0, 0): 1})
REFLECTION = DunklOperator({(0, 1): 1})
DERIVATIVE = DunklOperator({(1, 0): 1})
X_OP = DunklOperator({(0, 0): LaurentPoly.monomial(1)})


def scalar(value: Scalar) -> DunklOperator:
    return DunklOperator.multiplication(value)
