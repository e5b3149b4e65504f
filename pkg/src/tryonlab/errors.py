"""Exception types shared across the package."""


class TryonlabError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(TryonlabError):
    """Invalid configuration: bad field values, mismatched checkpoints, ..."""


class DimensionError(TryonlabError):
    """Array arguments with the wrong shape or size."""


class RenderError(TryonlabError):
    """Synthetic renderer failure (e.g. joints leaving the canvas)."""


class NumericError(TryonlabError):
    """Non-finite values where finite ones are required."""


class ConsistencyError(TryonlabError):
    """Internal bookkeeping mismatch (e.g. a frame missing a contribution)."""


class DependencyError(TryonlabError):
    """A required upstream artifact is missing."""

    def __init__(self, message: str, required_command: str | None = None):
        super().__init__(message)
        self.required_command = required_command


class TrainingDiverged(TryonlabError):
    """Training loss became non-finite; the last good checkpoint was kept."""
