from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from bigjacobi import quad
from bigjacobi.errors import ConvergenceFailure, DomainError, EigenFailure, PositivityViolation
from bigjacobi.family import Params, exact_moment, weight_poly_part

POLY_REGIME = [Params(a, b, c) for a, b in ((1, 1), (3, 1), (1, 3), (3, 3)) for c in (Fraction(1, 4), Fraction(1, 2))]


def absolute_moment(k, p):
    """Integral of |x^k w(x)|; w is nonnegative on both intervals."""
    F = weight_poly_part(p).shift_up(k).antiderivative()
    right = F(1) - F(p.c)
    left = F(-p.c) - F(-1)
    return right + (-1) ** (k + 1) * left


def moment_error(rule, k, p):
    exact = float(exact_moment(k, p))
    scale = abs(exact) if exact else float(absolute_moment(k, p))
    return abs(rule.moment(k) - exact) / scale


def scipy_moment(k, p):
    """Reference via QUADPACK's algebraic-endpoint weight."""
    a, b, c = (float(v) for v in (p.alpha, p.beta, p.c))
    ea, eb = (a - 1) / 2, (b - 1) / 2
    right, _ = integrate.quad(
        lambda x: x**k * (1 + x) ** (1 + ea) * (x + c) ** eb, c, 1, weight="alg", wvar=(1 + eb, ea), epsabs=0, epsrel=1e-13
    )
    left, _ = integrate.quad(
        lambda x: x**k * (c - x) ** (1 + eb) * (1 - x) ** ea, -1, -c, weight="alg", wvar=(1 + ea, eb), epsabs=0, epsrel=1e-13
    )
    return right + left


@pytest.mark.parametrize("p", POLY_REGIME, ids=str)
def test_gauss_rule_reproduces_moments(p):
    for N in (1, 2, 5, 10, 20):
        rule = quad.gauss_rule(N, p)
        worst = max(moment_error(rule, k, p) for k in range(2 * N))
        assert worst < 1e-10, (N, worst)


@pytest.mark.parametrize("p", POLY_REGIME, ids=str)
def test_weights_positive_and_nodes_inside(p):
    for N in range(1, 21):
        rule = quad.gauss_rule(N, p)
        assert np.all(rule.weights > 0)
        assert np.all(np.abs(rule.nodes) < 1)
        assert np.all(np.diff(rule.nodes) > 0)


@pytest.mark.parametrize("p", POLY_REGIME[:3] + [Params(Fraction(1, 2), Fraction(2, 3), Fraction(1, 4))], ids=str)
def test_nodes_interlace(p):
    prev = quad.gauss_rule(1, p).nodes
    for N in range(2, 21):
        cur = quad.gauss_rule(N, p).nodes
        assert np.all(cur[:-1] < prev) and np.all(prev < cur[1:])
        prev = cur


def test_eigensolver_matches_numpy():
    p = Params(Fraction(5, 3), Fraction(1, 2), Fraction(2, 5))
    J = quad.jacobi_matrix(15, p)
    nodes, first = quad.tridiagonal_eigen(np.diag(J), np.diag(J, 1))
    values, vectors = np.linalg.eigh(J)
    np.testing.assert_allclose(nodes, values, atol=1e-13)
    np.testing.assert_allclose(first**2, vectors[0] ** 2, atol=1e-13)


def test_eigensolver_iteration_limit():
    with pytest.raises(EigenFailure):
        quad.tridiagonal_eigen([0.0, 1.0, 2.0], [1.0, 1.0], max_iter=0)


@pytest.mark.parametrize("p", POLY_REGIME, ids=str)
def test_numeric_mass_matches_exact(p):
    assert abs(quad.numeric_mass(p) - float(exact_moment(0, p))) <= 1e-10 * float(exact_moment(0, p))


@pytest.mark.parametrize(
    "p",
    [
        Params(Fraction(1, 2), Fraction(2, 3), Fraction(1, 4)),
        Params(Fraction(-9, 10), Fraction(-4, 5), Fraction(1, 2)),
        Params(2, 4, Fraction(3, 4)),
    ],
    ids=str,
)
def test_numeric_moments_match_quadpack(p):
    for k in range(4):
        ref = scipy_moment(k, p)
        got = quad.numeric_moment(k, p)
        assert abs(got - ref) <= 1e-11 * max(abs(ref), scipy_moment(0, p))


def test_non_polynomial_rule_uses_numeric_mass():
    p = Params(Fraction(1, 2), Fraction(2, 3), Fraction(1, 4))
    rule = quad.gauss_rule(6, p)
    assert rule.mass == pytest.approx(scipy_moment(0, p), rel=1e-12)
    for k in range(12):
        assert rule.moment(k) == pytest.approx(scipy_moment(k, p), rel=1e-9, abs=1e-12)


def test_convergence_failure_is_reported():
    p = Params(Fraction(-99, 100), Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ConvergenceFailure) as info:
        quad.numeric_mass(p, tol=1e-15, max_level=1)
    assert info.value.estimate > 0


def test_domain_and_positivity_errors():
    with pytest.raises(DomainError):
        quad.numeric_mass(Params(-2, 1, Fraction(1, 2)))
    with pytest.raises(PositivityViolation):
        quad.gauss_rule(4, Params(-3, Fraction(1, 2), Fraction(1, 2)), mass=1.0)


def test_json_shape_and_digits():
    rule = quad.gauss_rule(3, Params(1, 1, Fraction(1, 2)))
    obj = rule.to_json_obj(digits=4)
    assert set(obj) == {"nodes", "weights", "mass"}
    assert obj["mass"] == 0.375
    assert all(len(repr(v).replace("-", "").replace("0.", "")) <= 6 for v in obj["nodes"])
    assert rule.integrate(lambda t: np.ones_like(t)) == pytest.approx(0.375)
