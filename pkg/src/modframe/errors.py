"""Exception types shared across the package."""


class ModframeError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(ModframeError, ValueError):
    """Operands live on different spectra or have mismatched shapes."""


class OrderError(ModframeError, ValueError):
    """Order comparison attempted on a non-self-adjoint element."""


class PositivityError(ModframeError, ValueError):
    """A positive element was required; carries the worst offending point."""

    def __init__(self, message, point=None, value=None):
        super().__init__(message)
        self.point = point
        self.value = value


class BasisError(ModframeError, ValueError):
    """A supplied basis is not orthonormal; carries the Gram residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class UnitFrameError(ModframeError, ValueError):
    """A unit-inner-product frame was required; carries offending indices."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class DegenerateVectorError(ModframeError, ValueError):
    """A vector slice was too close to zero to normalize."""

    def __init__(self, message, vector_index=None, point=None):
        super().__init__(message)
        self.vector_index = vector_index
        self.point = point


class ConfigError(ModframeError, ValueError):
    """Invalid search or command configuration."""


class ConvergenceError(ModframeError, RuntimeError):
    """The eigensolver failed to converge; carries the spectrum point."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class CapacityError(ModframeError, ValueError):
    """A request exceeded the desk-scale size guard."""


class FrameFormatError(ModframeError, ValueError):
    """A frame file failed schema or invariant validation."""
