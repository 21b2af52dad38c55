"""Arithmetic in C({0..K-1}), complex functions on a finite spectrum.

An element is a complex vector indexed by spectrum point. Multiplication
and involution are pointwise, the norm is the sup of the moduli, and
positivity/order are decided point by point, which makes every bound in
the package concretely checkable. K = 1 recovers the scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, OrderError, PositivityError

#: Absolute tolerance for positivity and self-adjointness checks.
DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Finite spectrum with points 0..size-1."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"spectrum size must be >= 1, got {self.size}")


class PositivityCheck(NamedTuple):
    """Outcome of a positivity test with the worst offending point."""

    ok: bool
    worst_point: int
    worst_value: complex


class AlgebraElement:
    """One algebra element: a complex value at each spectrum point."""

    __slots__ = ("_values", "spectrum")

    def __init__(self, values, spectrum: Spectrum | None = None):
        arr = np.array(values, dtype=np.complex128, copy=True).reshape(-1)
        if arr.size == 0:
            raise ValueError("algebra element needs at least one value")
        if spectrum is None:
            spectrum = Spectrum(arr.size)
        elif spectrum.size != arr.size:
            raise DimensionError(
                f"got {arr.size} values for a spectrum of size {spectrum.size}"
            )
        arr.setflags(write=False)
        self._values = arr
        self.spectrum = spectrum

    @classmethod
    def unit(cls, spectrum: Spectrum) -> AlgebraElement:
        return cls(np.ones(spectrum.size), spectrum)

    @classmethod
    def zero(cls, spectrum: Spectrum) -> AlgebraElement:
        return cls(np.zeros(spectrum.size), spectrum)

    @classmethod
    def constant(cls, value, spectrum: Spectrum) -> AlgebraElement:
        return cls(np.full(spectrum.size, complex(value)), spectrum)

    @property
    def values(self) -> np.ndarray:
        return self._values

    def _coerce(self, other) -> np.ndarray:
        if isinstance(other, AlgebraElement):
            if other.spectrum != self.spectrum:
                raise DimensionError(
                    f"spectrum mismatch: {self.spectrum.size} vs {other.spectrum.size}"
                )
            return other._values
        if isinstance(other, (int, float, complex, np.number)):
            return np.full(self.spectrum.size, complex(other))
        return NotImplemented

    def __add__(self, other):
        vals = self._coerce(other)
        if vals is NotImplemented:
            return NotImplemented
        return AlgebraElement(self._values + vals, self.spectrum)

    __radd__ = __add__

    def __sub__(self, other):
        vals = self._coerce(other)
        if vals is NotImplemented:
            return NotImplemented
        return AlgebraElement(self._values - vals, self.spectrum)

    def __rsub__(self, other):
        vals = self._coerce(other)
        if vals is NotImplemented:
            return NotImplemented
        return AlgebraElement(vals - self._values, self.spectrum)

    def __neg__(self):
        return AlgebraElement(-self._values, self.spectrum)

    def __mul__(self, other):
        vals = self._coerce(other)
        if vals is NotImplemented:
            return NotImplemented
        return AlgebraElement(self._values * vals, self.spectrum)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return AlgebraElement(self._values / complex(other), self.spectrum)
        return NotImplemented

    def __pow__(self, m):
        return self.int_power(m)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spectrum == other.spectrum and np.array_equal(
            self._values, other._values
        )

    __hash__ = None

    def __repr__(self):
        return f"AlgebraElement({np.array2string(self._values, separator=', ')})"

    def conj(self) -> AlgebraElement:
        """Involution: pointwise complex conjugate."""
        return AlgebraElement(np.conj(self._values), self.spectrum)

    def norm(self) -> float:
        """C*-norm: the largest modulus over the spectrum."""
        return float(np.max(np.abs(self._values)))

    def int_power(self, m: int) -> AlgebraElement:
        """Pointwise m-th power for integer m >= 1 (binary exponentiation)."""
        if not isinstance(m, (int, np.integer)) or m < 1:
            raise ValueError(f"power must be an integer >= 1, got {m!r}")
        return AlgebraElement(_int_power(self._values, int(m)), self.spectrum)

    def is_self_adjoint(self, tol: float = DEFAULT_TOL) -> bool:
        return float(np.max(np.abs(self._values.imag))) <= tol

    def is_positive(self, tol: float = DEFAULT_TOL) -> PositivityCheck:
        """Positivity within tol, with the worst offending point.

        Positive means every value is real up to tol with real part
        >= -tol; the violation score at a point is
        max(|imag|, -real), so the witness is its argmax.
        """
        if tol < 0:
            raise ValueError("tolerance must be >= 0")
        score = np.maximum(np.abs(self._values.imag), -self._values.real)
        worst = int(np.argmax(score))
        return PositivityCheck(
            bool(score[worst] <= tol), worst, complex(self._values[worst])
        )

    def sqrt(self, tol: float = DEFAULT_TOL) -> AlgebraElement:
        """Principal square root of a positive element.

        Real parts in [-tol, 0) are clamped to 0 before rooting so that
        roundoff never produces NaN.
        """
        check = self.is_positive(tol)
        if not check.ok:
            raise PositivityError(
                f"not positive within {tol}: value {check.worst_value} "
                f"at point {check.worst_point}",
                point=check.worst_point,
                value=check.worst_value,
            )
        clamped = np.maximum(self._values.real, 0.0)
        return AlgebraElement(np.sqrt(clamped), self.spectrum)


def _int_power(values: np.ndarray, m: int) -> np.ndarray:
    result = np.ones_like(values)
    base = values.copy()
    while m:
        if m & 1:
            result = result * base
        m >>= 1
        if m:
            base = base * base
    return result


def leq(a: AlgebraElement, b: AlgebraElement, tol: float = DEFAULT_TOL) -> bool:
    """Algebra order: a <= b iff b - a is positive within tol.

    Both operands must be self-adjoint within tol.
    """
    for name, elem in (("left", a), ("right", b)):
        if not elem.is_self_adjoint(tol):
            raise OrderError(f"{name} operand is not self-adjoint within {tol}")
    return (b - a).is_positive(tol).ok
