"""Exception hierarchy shared by all twistorcalc modules."""


class TwistorCalcError(Exception):
    """Base class for every error raised by twistorcalc."""


class SingularMatrix(TwistorCalcError, ArithmeticError):
    """A linear system has no unique solution."""


class NonTerminatingRewrite(TwistorCalcError):
    """Rewriting a monomial exceeded the step budget."""


class NonNilpotent(TwistorCalcError, ValueError):
    """Exponential requested of an element with a degree-0 component."""


class UnknownMonomial(TwistorCalcError, KeyError):
    """A top-degree monomial has no entry in the pairing table."""


class NoRelation(TwistorCalcError):
    """Only the zero vector satisfies the pairing equations."""


class AmbiguousRelation(TwistorCalcError):
    """The space of relations has dimension greater than one."""


class RankMismatch(TwistorCalcError, ValueError):
    """Degree-0 part of a Chern character differs from the stated rank."""


class VerificationFailure(TwistorCalcError, AssertionError):
    """A computed identity disagrees with its expected value."""

    def __init__(self, name, expected=None, computed=None):
        self.name = name
        self.expected = expected
        self.computed = computed
        msg = name
        if expected is not None or computed is not None:
            msg = f"{name}: expected {expected}, computed {computed}"
        super().__init__(msg)


class RouteMismatch(VerificationFailure):
    """Two independent routes produced different polynomials."""


class NonDominant(TwistorCalcError, ValueError):
    """Weight is not weakly decreasing and nonnegative."""


class NotInvertible(TwistorCalcError, ZeroDivisionError):
    """Cyclotomic residue has no inverse."""


class NonIntegral(TwistorCalcError):
    """An exact Verlinde evaluation did not produce a rational integer."""


class FloatUnreliable(TwistorCalcError):
    """Float evaluation is outside its validated range or tolerance."""
