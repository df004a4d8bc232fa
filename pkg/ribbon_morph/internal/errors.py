from typing import Optional


class RibbonError(Exception):
    """Base class for every error raised by ribbon_morph."""


class InvalidInputError(RibbonError, ValueError):
    pass


class ConfigError(RibbonError):
    def __init__(self, message: str, field: Optional[str] = None, mode: Optional[str] = None):
        super().__init__(message)
        self.field = field
        self.mode = mode


class ResidualError(RibbonError):
    def __init__(self, invariant: str, residual: float, tolerance: float):
        super().__init__(
            f"invariant '{invariant}' violated: residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
        )
        self.invariant = invariant
        self.residual = residual
        self.tolerance = tolerance


class ExportError(RibbonError, OSError):
    def __init__(self, path: str, cause: Exception):
        super().__init__(f"failed to write {path}: {cause}")
        self.path = path
