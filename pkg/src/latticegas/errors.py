"""Shared exception types."""


class LatticeGasError(Exception):
    """Base class for all package errors."""


class RegimeError(LatticeGasError):
    """Parameters outside the metastable regime handled by the model."""


class DomainError(LatticeGasError):
    """Argument outside an operation's documented domain."""


class NotAdjacent(LatticeGasError):
    """Exchange requested between sites that are not nearest neighbours."""


class AmbiguousWrap(LatticeGasError):
    """Site set too spread out to have a unique bounding rectangle on the torus."""


class Frozen(LatticeGasError):
    """No admissible move is available."""


class SearchBudgetExceeded(LatticeGasError):
    """A bounded exhaustive search ran past its configured budget."""


class TooLarge(LatticeGasError):
    """Exact enumeration requested for a state space over the size cap."""


class InsufficientData(LatticeGasError):
    """Not enough samples or grid points for a statistical estimate."""


class RunAbort(LatticeGasError):
    """A run hit a geometry the desk-scale implementation refuses (e.g. a box
    wider than half the torus)."""


class MixingWarning(UserWarning):
    """Sampler diagnostics suggest the chain has not equilibrated."""
