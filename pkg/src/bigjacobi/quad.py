"""Gauss rules for the two-interval weight, and a numeric total mass.

This is the only module that uses floating point.  Exact recurrence
coefficients are converted once into the symmetric Jacobi matrix; its
eigenvalues are the nodes and the squared first eigenvector components,
scaled by the total mass, are the weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .errors import ConvergenceFailure, DomainError, EigenFailure, PositivityViolation
from .family import Params, b_coeff, exact_moment, u_coeff

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadRule:
    nodes: np.ndarray
    weights: np.ndarray
    mass: float

    @property
    def order(self) -> int:
        return len(self.nodes)

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, f(self.nodes)))

    def moment(self, k: int) -> float:
        return float(np.dot(self.weights, self.nodes**k))

    def to_json_obj(self, digits: Optional[int] = None):
        def fmt(v):
            v = float(v)
            return float(f"{v:.{digits}g}") if digits else v

        return {
            "nodes": [fmt(v) for v in self.nodes],
            "weights": [fmt(v) for v in self.weights],
            "mass": fmt(self.mass),
        }


def recurrence_floats(N: int, p: Params) -> Tuple[np.ndarray, np.ndarray]:
    """(b_0..b_{N-1}, u_1..u_{N-1}) as floats; u must be strictly positive."""
    diag = np.array([float(b_coeff(k, p)) for k in range(N)])
    us = [u_coeff(k, p) for k in range(1, N)]
    for k, u in enumerate(us, start=1):
        if u <= 0:
            raise PositivityViolation(f"u_{k} = {u} <= 0 at {p}")
    return diag, np.array([float(u) for u in us])


def jacobi_matrix(N: int, p: Params) -> np.ndarray:
    if N < 1:
        raise ValueError("N must be positive")
    diag, us = recurrence_floats(N, p)
    off = np.sqrt(us)
    return np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)


def tridiagonal_eigen(diag, off, max_iter: int = 60) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Implicit-shift QL, accumulating only the first row of the eigenvector
    matrix.  Returns values in ascending order.
    """
    d = np.array(diag, dtype=float)
    n = len(d)
    e = np.zeros(n)
    e[: n - 1] = off
    z = np.zeros(n)
    z[0] = 1.0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise EigenFailure(f"no convergence for eigenvalue {l} after {max_iter} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            shift = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= shift
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - shift
                r = (d[i] - g) * s + 2.0 * c * b
                shift = s * r
                d[i + 1] = g + shift
                g = c * r - b
                zf = z[i + 1]
                z[i + 1] = s * z[i] + c * zf
                z[i] = c * z[i] - s * zf
                i -= 1
            if underflow:
                continue
            d[l] -= shift
            e[l] = g
            e[m] = 0.0
    order = np.argsort(d)
    return d[order], z[order]


def gauss_rule(N: int, p: Params, mass: Optional[float] = None) -> QuadRule:
    """N-point Gauss rule; exact for x^k, k <= 2N-1, up to rounding.

    ``mass`` defaults to the exact total mass when alpha and beta are odd
    positive integers and to :func:`numeric_mass` otherwise.
    """
    if mass is None:
        mass = float(exact_moment(0, p)) if p.is_polynomial_regime() else numeric_mass(p)
    if not mass > 0:
        raise ValueError(f"mass must be positive, got {mass}")
    diag, us = recurrence_floats(N, p)
    nodes, first = tridiagonal_eigen(diag, np.sqrt(us))
    return QuadRule(nodes, mass * first**2, float(mass))


# ---------------------------------------------------------------- tanh-sinh


def _tanh_sinh(f, half: float, tol: float, max_level: int, tmax: float) -> Tuple[float, float]:
    """Integrate f(x_from_lo, d_lo, d_hi) over an interval of half-width ``half``.

    The integrand receives the distances to both endpoints computed without
    cancellation, which is what keeps algebraic endpoint singularities
    accurate.  Returns (estimate, error estimate).
    """

    def term(t):
        u = 0.5 * math.pi * math.sinh(t)
        eu = math.exp(-2.0 * abs(u))
        near = 2.0 * half * eu / (1.0 + eu)
        far = 2.0 * half / (1.0 + eu)
        d_lo, d_hi = (far, near) if u > 0 else (near, far)
        if d_lo == 0.0 or d_hi == 0.0:
            return 0.0
        jac = half * 0.5 * math.pi * math.cosh(t) * 4.0 * eu / (1.0 + eu) ** 2
        return jac * f(d_lo, d_hi)

    step = 1.0
    kmax = int(tmax / step)
    total = term(0.0) + sum(term(k * step) + term(-k * step) for k in range(1, kmax + 1))
    tail = abs(term(tmax)) + abs(term(-tmax))
    prev = total * step
    err = math.inf
    for _ in range(max_level):
        step /= 2.0
        kmax = int(tmax / step)
        total += sum(term(k * step) + term(-k * step) for k in range(1, kmax + 1, 2))
        est = total * step
        err = abs(est - prev)
        if err <= tol * abs(est) and tail * step <= tol * abs(est):
            return est, err
        prev = est
    raise ConvergenceFailure(
        f"tanh-sinh did not converge: estimate {prev!r}, level difference {err:.3e}, "
        f"tail {tail * step:.3e}",
        estimate=prev,
        error=max(err, tail * step),
    )


def _validate_real(p) -> Tuple[float, float, float]:
    alpha, beta, c = float(p.alpha), float(p.beta), float(p.c)
    if not (alpha > -1 and beta > -1 and 0 < c < 1):
        raise DomainError(f"need alpha, beta > -1 and 0 < c < 1, got {p}")
    return alpha, beta, c


def numeric_moment(k: int, p, tol: float = 1e-13, max_level: int = 10, tmax: float = 6.0) -> float:
    """Integral of x^k w(x) over [-1,-c] U [c,1] by tanh-sinh on each interval."""
    alpha, beta, c = _validate_real(p)
    ea = (alpha - 1) / 2
    eb = (beta - 1) / 2
    half = (1.0 - c) / 2.0

    # on [c, 1]: d_lo = x - c, d_hi = 1 - x
    def right(d_lo, d_hi):
        x = c + d_lo if d_lo < d_hi else 1.0 - d_hi
        return x**k * d_lo ** (1 + eb) * d_hi**ea * (1 + x) ** (1 + ea) * (x + c) ** eb

    # on [-1, -c]: d_lo = x + 1, d_hi = -c - x
    def left(d_lo, d_hi):
        x = -1.0 + d_lo if d_lo < d_hi else -c - d_hi
        return x**k * d_lo ** (1 + ea) * d_hi**eb * (c - x) ** (1 + eb) * (1 - x) ** ea

    r, _ = _tanh_sinh(right, half, tol, max_level, tmax)
    l, _ = _tanh_sinh(left, half, tol, max_level, tmax)
    return r + l


def numeric_mass(p, tol: float = 1e-13, max_level: int = 10) -> float:
    """Total mass of the weight for real alpha, beta > -1 and 0 < c < 1."""
    return numeric_moment(0, p, tol=tol, max_level=max_level)


__all__ = [
    "QuadRule",
    "jacobi_matrix",
    "tridiagonal_eigen",
    "gauss_rule",
    "numeric_mass",
    "numeric_moment",
]
