"""Exception types shared across the package."""


class FlocohError(Exception):
    """Base class for all package errors."""


class ZeroValuation(FlocohError):
    """p-adic valuation of zero requested."""


class RingMismatch(FlocohError):
    """Operands live over different ambient rings."""


class EmptyIdeal(FlocohError):
    """A Cech complex needs at least one monomial generator."""


class EmptyGenerator(FlocohError, ValueError):
    """A monomial generator must have at least one positive exponent."""


class NonCommutingActions(FlocohError):
    """Variable action matrices fail to commute."""


class DegreeIncompatible(FlocohError):
    """An action matrix does not raise degrees by exactly one."""


class PrecompositionNotLinear(FlocohError):
    """The given map is not linear over the subring of p^l-th powers."""


class MinusNInSupport(FlocohError):
    """Degree -n occurs in the support set, violating the threshold hypothesis."""


class NotZeroDimensional(FlocohError):
    """The module is supported outside the maximal ideal."""


class BoxTooSmall(FlocohError):
    """Brute-force evaluation could not certify stabilization inside the box."""


class PullbackTooLarge(FlocohError):
    """An explicit Frobenius pullback would exceed the size cap."""


class NoSolution(FlocohError):
    """An exact linear system admits no solution."""


class InvalidModule(FlocohError, ValueError):
    """Structural validation of a module or complex failed."""


class InputError(FlocohError, ValueError):
    """A job description is malformed; the message names the offending field."""
