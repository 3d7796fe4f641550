from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bigjacobi import ladder
from bigjacobi.errors import ZeroAtNode
from bigjacobi.exact import LaurentPoly, Poly
from bigjacobi.family import Params, build_L, family, inner_product, lambda_n, phi_basis
from bigjacobi.operators import DunklOperator
from bigjacobi.verify import is_sampling_degenerate

HALF = Fraction(1, 2)
X = LaurentPoly.monomial(1)

params_strategy = st.builds(
    Params,
    st.fractions(-8, 8, max_denominator=6),
    st.fractions(-8, 8, max_denominator=6),
    st.fractions(-3, 3, max_denominator=6),
).filter(lambda p: not is_sampling_degenerate(p))


def test_constants_at_base(base):
    assert [ladder.nu_n(n, base) for n in range(3)] == [0, 3, 1]
    assert [ladder.kappa_n(n, base) for n in range(3)] == [-2, -6, -4]


@given(params_strategy)
def test_lowering_intertwines(p):
    assert ladder.check_lowering_intertwiner(p).is_zero()


@given(params_strategy)
def test_raising_intertwines(p):
    assert ladder.check_raising_intertwiner(p).is_zero()


@given(params_strategy, st.integers(1, 12))
def test_lowering_on_phi_basis(p, n):
    low = ladder.build_lowering(p)
    assert low(phi_basis(n, p.c)) == phi_basis(n - 1, p.c).to_laurent().scale(ladder.nu_n(n, p))


@given(params_strategy, st.integers(1, 8))
def test_lowered_eigenvalue(p, n):
    assert ladder.lowered_eigenvalue(n, p) == lambda_n(n - 1, p.shifted(2))


@pytest.mark.parametrize("p", [Params(3, 1, Fraction(1, 3)), Params(Fraction(5, 2), Fraction(2, 3), Fraction(-1, 4))])
def test_hahn_property(p):
    for n in range(1, 10):
        report = ladder.hahn_check(n, p)
        assert report.exact_match, report


@pytest.mark.parametrize("p", [Params(3, 1, Fraction(1, 3)), Params(Fraction(7, 2), Fraction(2, 3), Fraction(3, 4))])
def test_raising_action(p):
    for n in range(10):
        report = ladder.raising_check(n, p)
        assert report.exact_match, report


def test_ladder_report_json():
    report = ladder.hahn_check(1, Params(3, 1, Fraction(1, 3)))
    obj = report.to_json_obj()
    assert obj["shift"] == 2 and obj["exact_match"] is True
    assert obj["predicted_constant"] == obj["observed_constant"]


# ---------------------------------------------------------------- c = 0


@pytest.mark.parametrize("ab", [(1, 1), (Fraction(3, 2), Fraction(-1, 3)), (5, 2)])
def test_lowering_reduces_to_dunkl(ab):
    p = Params(ab[0], ab[1], 0)
    assert ladder.build_lowering(p) == ladder.little_dunkl(p)


@pytest.mark.parametrize("ab", [(3, 1), (Fraction(3, 2), Fraction(-1, 3)), (5, 2)])
def test_raising_reduces_to_closed_form(ab):
    p = Params(ab[0], ab[1], 0)
    assert ladder.build_raising(p) == ladder.little_raising(p)


def reflected_derivative_variant(p):
    """The c = 0 closed form with the derivative term composed with R."""
    a, b = p.alpha, p.beta
    return DunklOperator(
        {
            (1, 1): (1 - X**2) * 2,
            (0, 1): (X - 1) ** 2 * LaurentPoly.monomial(-1, -b),
            (0, 0): LaurentPoly({0: 2, -1: b, 1: -(b + 2 * a)}),
        }
    )


def test_reflected_derivative_variant_does_not_intertwine():
    p = Params(3, 1, 0)
    variant = reflected_derivative_variant(p)
    residual = build_L(p.shifted(-2)) * variant + variant * build_L(p) + variant * (2 * (p.alpha + p.beta))
    assert not residual.is_zero()
    assert variant(family(p)[2]) != family(p.shifted(-2))[3].to_laurent().scale(ladder.kappa_n(2, p))
    # the closed form without R does both jobs
    assert ladder.raising_check(2, p).exact_match


# ---------------------------------------------------------------- Christoffel


def test_christoffel_weight_factor(base):
    """Transformed polynomials are orthogonal for (x - 1) w."""
    kernel = ladder.christoffel(family(base), 1)
    factor = Poly((-1, 1))
    for n in range(6):
        assert kernel[n].degree == n and kernel[n].is_monic()
        for m in range(n):
            assert inner_product(kernel[n] * factor, kernel[m], base) == 0


@pytest.mark.parametrize("p", [Params(1, 1, HALF), Params(Fraction(1, 3), Fraction(5, 2), Fraction(-2, 7))])
def test_double_christoffel_is_alpha_shift(p):
    dc = ladder.double_christoffel(family(p))
    target = family(p.shifted(2))
    low = ladder.build_lowering(p)
    for n in range(9):
        assert dc[n] == target[n]
        assert low(family(p)[n + 1]) == dc[n].to_laurent().scale(ladder.nu_n(n + 1, p))


def test_christoffel_zero_at_node():
    # P_1 = x - 1/4 at the base point vanishes at 1/4
    seq = ladder.christoffel(family(Params(1, 1, HALF)), Fraction(1, 4))
    with pytest.raises(ZeroAtNode):
        seq[1]
