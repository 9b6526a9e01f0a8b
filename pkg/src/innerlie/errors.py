"""Exception types shared across the library."""


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions or matrix sizes."""


class SingularParameter(ValueError):
    """A parameter value at which a construction degenerates (e.g. lambda = -2/n)."""


class NotInvertible(ValueError):
    """An exact inverse was requested for a singular operator."""


class HypothesisViolation(ValueError):
    """Inputs outside a statement's hypotheses (e.g. polynomial degree >= 2n)."""


class ClassificationError(ValueError):
    """Base class for failures of the subalgebra classifier."""


class NotContainingG(ClassificationError):
    """Input subspace does not contain all inner derivations."""


class NotLieClosed(ClassificationError):
    """Input subspace is not closed under the commutator bracket."""


class UnsupportedN(ClassificationError):
    """The classifier is only specified for n >= 5."""


class Unclassifiable(ClassificationError):
    """No list entry reconstructs the input exactly.

    Signals either an implementation bug or an input outside the
    classification theorem's hypotheses (e.g. the full operator algebra,
    or a span that is not actually a Lie algebra).
    """
