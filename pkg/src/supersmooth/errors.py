"""Exception hierarchy shared across the package.

Every error a caller can trigger through bad input derives from DomainError,
so the CLI can map them uniformly to exit code 1.
"""


class DomainError(ValueError):
    """Base class for all input-triggered errors raised by this package."""


class InvalidDirectionError(DomainError):
    """A direction vector was zero where a nonzero one is required."""


class DuplicateRayError(DomainError):
    """Two rays of a fan share the same oriented direction."""


class FanSizeError(DomainError):
    """A fan partition needs at least two rays."""


class OriginSectorError(DomainError):
    """The origin belongs to every sector boundary, so it has no sector."""


class SingularDecompositionError(DomainError):
    """Direction decomposition was attempted against a collinear basis pair."""


class ArityError(DomainError):
    """Ray count does not match the requested operator order."""


class MissingDirectionError(DomainError):
    """An operator symbol has no ray assigned to it."""


class InvalidSlopesError(DomainError):
    """Slope list for a construction is malformed (duplicate, zero, wrong count)."""


class SchemaError(DomainError):
    """A document violates the strict spline JSON schema."""


class RationalParseError(SchemaError):
    """A rational literal does not match "p" or "p/q" with positive q."""


class EvaluationError(DomainError):
    """A black-box function returned a non-finite value."""
