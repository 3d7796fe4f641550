"""Run every exact identity at one parameter point, or over a random sample.

Each identity produces one :class:`IdentityCheck` per parameter point; for
identities indexed by degree the check passes only if it holds for every
``n <= nmax`` and the failing degrees are listed in ``detail``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence

from . import jordan, ladder
from .errors import DegenerateParams, ZeroAtNode
from .family import (
    Params,
    build_L,
    family,
    inner_product,
    lambda_n,
    phi_action_residual,
    phi_basis,
    u_coeff,
    b_coeff,
)
from .report import IdentityCheck

GRID_VALUES_AB = (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2))
GRID_VALUES_C = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def grid_params() -> List[Params]:
    return [Params(a, b, c) for a in GRID_VALUES_AB for b in GRID_VALUES_AB for c in GRID_VALUES_C]


def is_sampling_degenerate(p: Params) -> bool:
    """Points where some family used by the suite hits a zero denominator.

    alpha+beta+2n vanishes for some n >= 0 in the families alpha-2, alpha,
    alpha+2 exactly when alpha+beta is an even integer <= 2.  c = +-1 and
    negative integer beta make some nu_n vanish, which the Christoffel
    comparison divides by.
    """
    s = p.alpha + p.beta
    if s.denominator == 1 and s.numerator % 2 == 0 and s <= 2:
        return True
    if p.c in (1, -1):
        return True
    if p.beta.denominator == 1 and p.beta < 0:
        return True
    return False


def random_params(rng: random.Random, max_num: int = 24, max_den: int = 7) -> Params:
    """One nondegenerate rational parameter point (rejection sampling)."""
    while True:
        a = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        b = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        c = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        p = Params(a, b, c)
        if not is_sampling_degenerate(p):
            return p


def sample_params(count: int, seed: int) -> List[Params]:
    rng = random.Random(seed)
    return [random_params(rng) for _ in range(count)]


def ensure_nondegenerate(p: Params, nmax: int):
    """Raise DegenerateParams if the family or its structure constants break below nmax."""
    seq = family(p)
    seq[nmax + 1]
    for n in range(nmax + 1):
        b_coeff(n, p)
        if n:
            u_coeff(n, p)
        jordan.j_action(n, p, jordan.J_PLUS)
        jordan.j_action(n, p, jordan.J_MINUS)


def _per_n(name: str, p: Params, ns: Iterable[int], test: Callable[[int], bool]) -> IdentityCheck:
    failed = []
    for n in ns:
        if not test(n):
            failed.append(n)
    detail = f"failed at n={failed}" if failed else ""
    return IdentityCheck(name, p.to_json_obj(), not failed, detail=detail)


def _operator_zero(name: str, p: Params, residual) -> IdentityCheck:
    zero = residual.is_zero()
    return IdentityCheck(name, p.to_json_obj(), zero, detail="" if zero else f"residual {residual}")


def _skipped(name: str, p: Params, reason: str) -> IdentityCheck:
    return IdentityCheck(name, p.to_json_obj(), None, detail=f"skipped: {reason}")


# ---------------------------------------------------------------- grouped checks


def eigen_checks(p: Params, nmax: int) -> List[IdentityCheck]:
    seq = family(p)
    L = build_L(p)
    return [
        _per_n("eigenvalue", p, range(nmax + 1), lambda n: L(seq[n]) == seq[n].to_laurent().scale(lambda_n(n, p))),
        _per_n("phi_action", p, range(nmax + 1), lambda n: phi_action_residual(n, p).is_zero()),
    ]


def algebra_checks(p: Params) -> List[IdentityCheck]:
    checks = jordan.verify_jordan(p)
    checks.append(_operator_zero("casimir", p, jordan.casimir(p) - jordan.casimir_value(p)))
    return checks


def intertwiner_checks(p: Params, nmax: int) -> List[IdentityCheck]:
    checks = [_operator_zero(name, p, r) for name, r in jordan.intertwiner_residuals(p)]
    seq = family(p)
    jp, jm = jordan.build_jpm(p)
    checks.append(
        _per_n("jplus_action", p, range(nmax + 1),
               lambda n: jordan.check_action(jp, seq, jordan.j_action(n, p, jordan.J_PLUS)).ok)
    )
    checks.append(
        _per_n("jminus_action", p, range(nmax + 1),
               lambda n: jordan.check_action(jm, seq, jordan.j_action(n, p, jordan.J_MINUS)).ok)
    )
    checks.append(_per_n("eigen_shift", p, range(nmax + 1), lambda n: jordan.eigen_shift_ok(n, p)))
    for which, name in ((jordan.U1, "u1_lowering"), (jordan.U2, "u2_raising")):
        checks.append(
            _per_n(name, p, range(nmax + 1),
                   lambda n, w=which: jordan.check_action(
                       jordan.u_operator(n, p, w), seq, jordan.structure_u(n, p, w)).ok)
        )
    return checks


def recurrence_checks(p: Params, nmax: int) -> List[IdentityCheck]:
    seq = family(p)
    V = jordan.build_v(p)

    def from_v(n):
        b, u = jordan.recurrence_from_v(n, p)
        return b == b_coeff(n, p) and u == (u_coeff(n, p) if n else 0)

    return [
        _operator_zero("v_two_forms", p, V - jordan.build_v_multiplicative(p)),
        _per_n("v_multiplication", p, range(nmax + 1),
               lambda n: V(seq[n]) == jordan.v_multiplier(n, p) * seq[n].to_laurent()),
        _per_n("recurrence_from_v", p, range(nmax + 1), from_v),
    ]


def _family_ok(p: Params, top: int) -> bool:
    try:
        family(p)[top]
    except DegenerateParams:
        return False
    return True


def ladder_checks(p: Params, nmax: int) -> List[IdentityCheck]:
    checks = [
        _operator_zero("lowering_intertwiner", p, ladder.check_lowering_intertwiner(p)),
        _operator_zero("raising_intertwiner", p, ladder.check_raising_intertwiner(p)),
    ]
    low = ladder.build_lowering(p)
    checks.append(
        _per_n("lowering_phi", p, range(1, nmax + 1),
               lambda n: low(phi_basis(n, p.c)) == phi_basis(n - 1, p.c).to_laurent().scale(ladder.nu_n(n, p)))
    )
    checks.append(
        _per_n("lowered_eigenvalue", p, range(1, nmax + 1),
               lambda n: ladder.lowered_eigenvalue(n, p) == lambda_n(n - 1, p.shifted(2)))
    )
    if _family_ok(p.shifted(2), nmax):
        checks.append(_per_n("hahn", p, range(1, nmax + 1), lambda n: ladder.hahn_check(n, p).exact_match))
    else:
        checks.append(_skipped("hahn", p, "alpha+2 family degenerate"))
    if _family_ok(p.shifted(-2), nmax + 1):
        checks.append(_per_n("raising_action", p, range(nmax + 1), lambda n: ladder.raising_check(n, p).exact_match))
    else:
        checks.append(_skipped("raising_action", p, "alpha-2 family degenerate"))
    return checks


def christoffel_checks(p: Params, nmax: int) -> List[IdentityCheck]:
    top = min(nmax, 8)
    if not _family_ok(p.shifted(2), top):
        return [_skipped("double_christoffel", p, "alpha+2 family degenerate")]
    seq = family(p)
    target = family(p.shifted(2))
    dc = ladder.double_christoffel(seq)
    low = ladder.build_lowering(p)

    def test(n):
        if dc[n] != target[n]:
            return False
        nu = ladder.nu_n(n + 1, p)
        return bool(nu) and low(seq[n + 1]) == dc[n].to_laurent().scale(nu)

    try:
        return [_per_n("double_christoffel", p, range(top + 1), test)]
    except ZeroAtNode as exc:
        return [_skipped("double_christoffel", p, str(exc))]


def little_checks(p: Params) -> List[IdentityCheck]:
    if p.c != 0:
        return []
    return [
        _operator_zero("little_dunkl_reduction", p, ladder.build_lowering(p) - ladder.little_dunkl(p)),
        _operator_zero("little_raising_reduction", p, ladder.build_raising(p) - ladder.little_raising(p)),
    ]


def orthogonality_checks(p: Params, nmax: int) -> List[IdentityCheck]:
    if not (p.is_polynomial_regime() and 0 < p.c < 1):
        return []
    seq = family(p)

    def test(n):
        for m in range(n):
            if inner_product(seq[n], seq[m], p):
                return False
        h = inner_product(seq[n], seq[n], p)
        return h > 0 and h == seq.norm(n)

    return [_per_n("orthogonality", p, range(nmax + 1), test)]


def run_suite(p: Params, nmax: int = 10) -> List[IdentityCheck]:
    """All exact checks at one point. Raises DegenerateParams if the base family breaks."""
    ensure_nondegenerate(p, nmax)
    checks: List[IdentityCheck] = []
    checks += eigen_checks(p, nmax)
    checks += algebra_checks(p)
    checks += intertwiner_checks(p, nmax)
    checks += recurrence_checks(p, nmax)
    checks += ladder_checks(p, nmax)
    checks += christoffel_checks(p, nmax)
    checks += little_checks(p)
    checks += orthogonality_checks(p, nmax)
    return checks


def run_many(points: Sequence[Params], nmax: int = 10) -> List[IdentityCheck]:
    out: List[IdentityCheck] = []
    for p in points:
        out += run_suite(p, nmax)
    return out


def failures(checks: Iterable[IdentityCheck]) -> List[IdentityCheck]:
    return [c for c in checks if c.residual_zero is False]


__all__ = [
    "grid_params",
    "sample_params",
    "random_params",
    "is_sampling_degenerate",
    "ensure_nondegenerate",
    "run_suite",
    "run_many",
    "failures",
]
