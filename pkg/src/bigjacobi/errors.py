"""Exception hierarchy shared by the exact and numeric layers."""


class BigJacobiError(Exception):
    """Base class for every error raised by this package."""


class SingularResidue(BigJacobiError, ValueError):
    """A Laurent polynomial with negative powers was coerced to a polynomial."""


class DegenerateParams(BigJacobiError, ValueError):
    """A closed-form expression has a vanishing denominator at these parameters."""


class NotPolynomialRegime(BigJacobiError, ValueError):
    """The weight is not a signed polynomial (alpha, beta must be odd positive integers)."""


class DomainError(BigJacobiError, ValueError):
    """A point or parameter lies outside the support of the weight."""


class ZeroAtNode(BigJacobiError, ValueError):
    """A Christoffel node is a zero of one of the polynomials being transformed."""


class NonzeroRemainder(BigJacobiError, ArithmeticError):
    """Exact division left a remainder where the theory guarantees none."""


class PositivityViolation(BigJacobiError, ValueError):
    """A recurrence coefficient u_n is not strictly positive."""


class EigenFailure(BigJacobiError, ArithmeticError):
    """The tridiagonal eigensolver did not converge."""


class ConvergenceFailure(BigJacobiError, ArithmeticError):
    """Adaptive quadrature did not reach the requested accuracy.

    Attributes
    ----------
    estimate : float
        Last integral estimate.
    error : float
        Difference between the last two refinement levels.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
