"""Exception types shared across the package."""


class WavekinError(Exception):
    """Base class for all package errors."""


class DomainError(WavekinError, ValueError):
    """Parameter outside the mathematical domain of an operation."""


class SingularityError(WavekinError, ValueError):
    """Evaluation requested at a point where the field diverges."""


class FeatureNotFoundError(WavekinError, RuntimeError):
    """No trackable feature of the requested kind inside the window."""


class DegenerateFitError(WavekinError, ValueError):
    """Too few samples to fit a trajectory."""


class NoSolutionError(WavekinError, RuntimeError):
    """A search or construction has no solution for the given inputs."""


class OpenPathError(WavekinError, ValueError):
    """A loop integral was requested on a path that does not close."""


class TooFewSamplesError(WavekinError, ValueError):
    """A discretized path or grid has too few samples to be meaningful."""


class GridDimensionError(WavekinError, ValueError):
    """Grid dimensionality does not match what the operation requires."""


class ConfigError(WavekinError, ValueError):
    """Invalid run configuration (bad key, value, or combination)."""
