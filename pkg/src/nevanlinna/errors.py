"""Exception hierarchy shared by all modules."""


class NevanlinnaError(Exception):
    """Base class for every error raised by the package."""


class MeasureParseError(NevanlinnaError, ValueError):
    """A measure-spec document is structurally malformed (unknown type, missing field)."""


class MeasureInvariantError(NevanlinnaError, ValueError):
    """A measure spec parses but violates an invariant (negative weight, dimension clash)."""


class DimensionError(NevanlinnaError, ValueError):
    """Invalid dimension, arity, selector or multi-index."""


class DomainError(NevanlinnaError, ValueError):
    """A point or measure lies outside the domain an operation is defined on."""


class DivergenceError(NevanlinnaError, ArithmeticError):
    """The growth integral (or total mass) of a measure is infinite."""


class RepresentationError(DivergenceError):
    """Representation data cannot define a function (divergent growth integral)."""


class UnsupportedIntegralError(NevanlinnaError):
    """The integrand/measure combination is outside what the quadrature engine handles."""


class PreconditionError(NevanlinnaError):
    """A check was requested before the check it depends on succeeded."""
