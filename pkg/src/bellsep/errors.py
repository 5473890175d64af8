"""Exception hierarchy for state validation and classification failures."""


class BellsepError(Exception):
    """Base class for all package-specific errors."""


class InvalidStateError(BellsepError):
    """Matrix fails a density-matrix invariant (hermiticity, trace, positivity)."""


class InvalidDecompositionError(BellsepError):
    """Product decomposition violates a weight or factor invariant."""


class NotSeparableError(BellsepError):
    """Decomposition requested for an entangled state.

    Carries the criterion margin ``1 - (|t1| + |t2| + |t3|)``, negative here.
    """

    def __init__(self, message, margin=None):
        super().__init__(message)
        self.margin = margin


class OutOfRegimeError(BellsepError):
    """State has nonzero local Bloch vectors; canonicalization does not apply."""


class ConvergenceError(BellsepError):
    """Iterative eigensolver failed to converge within the sweep cap."""


class ParseError(BellsepError):
    """Input record is malformed (bad structure, missing or extra fields)."""
