"""Exception types shared across the simulator."""


class SimError(Exception):
    """Base class for all simulator errors."""


class ConfigError(SimError):
    """Invalid or inconsistent configuration (bad preset, bad field value)."""


class DomainError(SimError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class DegenerateGeometryError(SimError):
    """Part geometry collapses (e.g. tapered path length reaches zero)."""


class NonInvertibleModelError(SimError):
    """Deposition model with zero slope cannot be inverted."""


class ContractViolationError(SimError):
    """Caller broke an interface contract (missing speeds, bad segment count)."""


class InsufficientCoverageError(SimError):
    """Too many empty bins in a height profile to trust the measurement."""


class EmptyClusterError(SimError):
    """Cluster filtering found no cluster of the required minimum size."""


class ExtrapolationError(SimError):
    """Requested feed rate outside the identified model table range."""


class RankDeficiencyError(SimError):
    """Regression dataset has too few distinct speeds to fit a line."""
