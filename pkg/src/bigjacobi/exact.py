"""Exact scalars, Laurent polynomials and dense polynomials over Q.

Everything symbolic in the package is built from these three value types.
``Rational`` is :class:`fractions.Fraction`, which is always stored reduced
with a positive denominator.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import NonzeroRemainder, SingularResidue

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a reduced Fraction.

    Decimal and exponent notation are rejected so that no binary float can
    sneak into an exact computation.

    Raises
    ------
    ValueError
        With the 0-based character position of the first offending character.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        pos = _first_bad_position(text)
        raise ValueError(f"invalid rational {text!r}: unexpected character at position {pos}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"invalid rational {text!r}: zero denominator at position {text.index('/') + 1}")
    return Fraction(num, den)


def _first_bad_position(text: str) -> int:
    state = "sign"
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if state == "sign":
            if ch in "+-":
                state = "num0"
                continue
            state = "num0"
        if state == "num0":
            if not ch.isdigit():
                return i
            state = "num"
            continue
        if state == "num":
            if ch.isdigit():
                continue
            if ch == "/":
                state = "den0"
                continue
            return i
        if state == "den0":
            if not ch.isdigit():
                return i
            state = "den"
            continue
        if state == "den":
            if not ch.isdigit():
                return i
    return len(text)


def format_rational(q: Scalar) -> str:
    """Inverse of :func:`parse_rational`."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class LaurentPoly:
    """Finite sum of c_k x^k over Q with k allowed to be negative.

    Immutable. Zero coefficients are never stored, so the empty mapping is the
    zero element and ``==`` is mathematical equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: Dict[int, Fraction] = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    clean[int(k)] = v
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, Fraction]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({k: coeff})

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, Poly):
            return value.to_laurent()
        return cls.constant(as_rational(value))

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no exponent range")
        return min(self._terms)

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no exponent range")
        return max(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Poly):
            return self._terms == other.to_laurent()._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -v for k, v in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def scale(self, s: Scalar) -> "LaurentPoly":
        s = Fraction(s)
        if not s:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({k: v * s for k, v in self._terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if isinstance(other, Poly):
            other = other.to_laurent()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (k, v), = self._terms.items()
            return LaurentPoly({k * e: Fraction(1) / v ** (-e)})
        result = LaurentPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self, order: int = 1) -> "LaurentPoly":
        out = self._terms
        for _ in range(order):
            out = {k - 1: k * v for k, v in out.items() if k != 0}
        return LaurentPoly._raw(dict(out))

    def reflect(self) -> "LaurentPoly":
        """Return f(-x)."""
        return LaurentPoly._raw({k: (-v if k & 1 else v) for k, v in self._terms.items()})

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        if not x and any(k < 0 for k in self._terms):
            raise ZeroDivisionError("Laurent polynomial with negative powers evaluated at 0")
        return sum((v * x ** k for k, v in self._terms.items()), Fraction(0))

    def to_poly(self) -> "Poly":
        return poly_from_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, v in sorted(self._terms.items(), reverse=True):
            c = format_rational(v)
            if k == 0:
                parts.append(c)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                if v == 1:
                    parts.append(mono)
                elif v == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


X = LaurentPoly.monomial(1)


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def laurent_derivative(a: LaurentPoly) -> LaurentPoly:
    return a.derivative()


def laurent_reflect(a: LaurentPoly) -> LaurentPoly:
    return a.reflect()


def poly_from_laurent(a: LaurentPoly) -> "Poly":
    """Drop to a dense polynomial; negative powers raise :class:`SingularResidue`."""
    if not a:
        return Poly(())
    if a.min_exponent < 0:
        bad = sorted(k for k in a._terms if k < 0)
        raise SingularResidue(f"nonzero coefficients at negative exponents {bad}")
    coeffs = [Fraction(0)] * (a.max_exponent + 1)
    for k, v in a._terms.items():
        coeffs[k] = v
    return Poly(coeffs)


class Poly:
    """Dense univariate polynomial over Q, coefficients in ascending order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, LaurentPoly):
            return self.to_laurent() == other
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        for _ in range(e):
            result = result * self
        return result

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evalf(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def antiderivative(self) -> "Poly":
        return Poly((0,) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def divmod(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        if len(rem) - 1 < dd:
            return Poly(()), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1 - dd, -1, -1):
            q = rem[i + dd] / lead
            quot[i] = q
            if q:
                for j, dc in enumerate(divisor.coeffs):
                    rem[i + j] -= q * dc
        return Poly(quot), Poly(rem[:dd])

    def exact_div(self, divisor: "Poly") -> "Poly":
        q, r = self.divmod(divisor)
        if r:
            raise NonzeroRemainder(f"remainder {r} dividing by {divisor}")
        return q

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly._raw({k: c for k, c in enumerate(self.coeffs) if c})

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return str(self.to_laurent())



def proportionality(result, target) -> Fraction | None:
    """Return k with ``result == k * target`` exactly, or None if no such k exists.

    ``target`` must be nonzero.  Both arguments may be Poly or LaurentPoly.
    """
    result = LaurentPoly.coerce(result)
    target = LaurentPoly.coerce(target)
    if not target:
        raise ValueError("proportionality against the zero polynomial")
    if not result:
        return Fraction(0)
    top = target.max_exponent
    k = result.coeff(top) / target.coeff(top)
    return k if result == target.scale(k) else None
