"""The standard rank-d module A^d over the finite-spectrum algebra.

Vectors are d-tuples of algebra elements; the inner product is
sum_r x_r * conj(y_r), linear in the first slot. Because the algebra is
functions on K points, every construction here (Gram table, frame
operator, traces, coherence, potential) evaluates at a spectrum point to
its classical counterpart for the point's slice, which is what the test
suite leans on.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import eigen
from .algebra import DEFAULT_TOL, AlgebraElement, Spectrum
from .errors import BasisError, DimensionError, UnitFrameError

#: Per-point tolerance for unit-inner-product validation.
UNIT_TOL = 1e-8


class ModuleVector:
    """Element of A^d: a (d, K) complex array, coords[r][s] = value of the
    r-th coordinate at spectrum point s."""

    __slots__ = ("_values", "spectrum")

    def __init__(self, values, spectrum: Spectrum | None = None):
        arr = np.array(values, dtype=np.complex128, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2:
            raise DimensionError(f"expected a (d, K) array, got shape {arr.shape}")
        if spectrum is None:
            spectrum = Spectrum(arr.shape[1])
        elif spectrum.size != arr.shape[1]:
            raise DimensionError(
                f"got {arr.shape[1]} points for a spectrum of size {spectrum.size}"
            )
        arr.setflags(write=False)
        self._values = arr
        self.spectrum = spectrum

    @classmethod
    def from_coords(cls, coords: list[AlgebraElement]) -> ModuleVector:
        if not coords:
            raise DimensionError("vector needs at least one coordinate")
        spectrum = coords[0].spectrum
        for c in coords[1:]:
            if c.spectrum != spectrum:
                raise DimensionError("coordinates live on different spectra")
        return cls(np.stack([c.values for c in coords]), spectrum)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def dim(self) -> int:
        return self._values.shape[0]

    def coord(self, r: int) -> AlgebraElement:
        return AlgebraElement(self._values[r], self.spectrum)

    def __repr__(self):
        return f"ModuleVector(d={self.dim}, K={self.spectrum.size})"


class Frame:
    """Ordered collection of n module vectors sharing (d, K)."""

    __slots__ = ("_values", "spectrum")

    def __init__(self, values, spectrum: Spectrum | None = None):
        arr = np.array(values, dtype=np.complex128, copy=True)
        if arr.ndim != 3:
            raise DimensionError(f"expected an (n, d, K) array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionError(f"frame needs n >= 1 and d >= 1, got {arr.shape}")
        if spectrum is None:
            spectrum = Spectrum(arr.shape[2])
        elif spectrum.size != arr.shape[2]:
            raise DimensionError(
                f"got {arr.shape[2]} points for a spectrum of size {spectrum.size}"
            )
        arr.setflags(write=False)
        self._values = arr
        self.spectrum = spectrum

    @classmethod
    def from_vectors(cls, vectors: list[ModuleVector]) -> Frame:
        if not vectors:
            raise DimensionError("frame needs at least one vector")
        first = vectors[0]
        for v in vectors[1:]:
            if v.dim != first.dim or v.spectrum != first.spectrum:
                raise DimensionError("frame vectors disagree on (d, K)")
        return cls(np.stack([v.values for v in vectors]), first.spectrum)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def n(self) -> int:
        return self._values.shape[0]

    @property
    def d(self) -> int:
        return self._values.shape[1]

    @property
    def K(self) -> int:
        return self._values.shape[2]

    def vector(self, j: int) -> ModuleVector:
        return ModuleVector(self._values[j], self.spectrum)

    def vectors(self) -> list[ModuleVector]:
        return [self.vector(j) for j in range(self.n)]

    def unit_residual(self) -> float:
        """Largest per-point deviation of any <tau_j, tau_j> from 1."""
        norms_sq = np.einsum("jps,jps->js", self._values, self._values.conj()).real
        return float(np.max(np.abs(norms_sq - 1.0)))

    def is_unit(self, tol: float = UNIT_TOL) -> bool:
        return self.unit_residual() <= tol

    def nonunit_indices(self, tol: float = UNIT_TOL) -> list[int]:
        norms_sq = np.einsum("jps,jps->js", self._values, self._values.conj()).real
        bad = np.max(np.abs(norms_sq - 1.0), axis=1) > tol
        return [int(j) for j in np.nonzero(bad)[0]]

    def require_unit(self, tol: float = UNIT_TOL) -> None:
        bad = self.nonunit_indices(tol)
        if bad:
            raise UnitFrameError(
                f"vectors {bad} are not unit inner product within {tol}", indices=bad
            )

    def __repr__(self):
        return f"Frame(n={self.n}, d={self.d}, K={self.K})"


class GramTable:
    """All pairwise inner products: gram[j][k] = <tau_j, tau_k>."""

    __slots__ = ("_values", "spectrum")

    def __init__(self, values, spectrum: Spectrum):
        arr = np.asarray(values, dtype=np.complex128)
        arr.setflags(write=False)
        self._values = arr
        self.spectrum = spectrum

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def n(self) -> int:
        return self._values.shape[0]

    def entry(self, j: int, k: int) -> AlgebraElement:
        return AlgebraElement(self._values[j, k], self.spectrum)

    def hermitian_residual(self) -> float:
        return float(np.max(np.abs(self._values - np.conj(self._values.transpose(1, 0, 2)))))


class OperatorMatrix:
    """Square matrix of algebra elements acting on A^d (or any A^D)."""

    __slots__ = ("_values", "spectrum")

    def __init__(self, values, spectrum: Spectrum | None = None):
        arr = np.array(values, dtype=np.complex128, copy=True)
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1]:
            raise DimensionError(f"expected a (D, D, K) array, got shape {arr.shape}")
        if spectrum is None:
            spectrum = Spectrum(arr.shape[2])
        elif spectrum.size != arr.shape[2]:
            raise DimensionError(
                f"got {arr.shape[2]} points for a spectrum of size {spectrum.size}"
            )
        arr.setflags(write=False)
        self._values = arr
        self.spectrum = spectrum

    @classmethod
    def identity(cls, dim: int, spectrum: Spectrum) -> OperatorMatrix:
        vals = np.zeros((dim, dim, spectrum.size), dtype=np.complex128)
        idx = np.arange(dim)
        vals[idx, idx, :] = 1.0
        return cls(vals, spectrum)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def dim(self) -> int:
        return self._values.shape[0]

    def entry(self, i: int, j: int) -> AlgebraElement:
        return AlgebraElement(self._values[i, j], self.spectrum)

    def __matmul__(self, other: OperatorMatrix) -> OperatorMatrix:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if other.spectrum != self.spectrum or other.dim != self.dim:
            raise DimensionError("operator shapes do not match")
        vals = np.einsum("pqs,qrs->prs", self._values, other._values)
        return OperatorMatrix(vals, self.spectrum)

    def apply(self, x: ModuleVector) -> ModuleVector:
        if x.spectrum != self.spectrum or x.dim != self.dim:
            raise DimensionError("operator and vector shapes do not match")
        vals = np.einsum("pqs,qs->ps", self._values, x.values)
        return ModuleVector(vals, self.spectrum)

    def hermitian_residual(self) -> float:
        return float(np.max(np.abs(self._values - np.conj(self._values.transpose(1, 0, 2)))))

    def is_self_adjoint(self, tol: float = DEFAULT_TOL) -> bool:
        return self.hermitian_residual() <= tol

    def pointwise_eigenvalues(self) -> np.ndarray:
        """(D, K) array of per-point eigenvalues, ascending."""
        return eigen.pointwise_eigenvalues(np.asarray(self._values))

    def is_positive(self, tol: float = DEFAULT_TOL) -> bool:
        if not self.is_self_adjoint(max(tol, 1e-8)):
            return False
        return bool(np.min(self.pointwise_eigenvalues()) >= -tol)


class FrameBounds(NamedTuple):
    ok: bool
    lower: float
    upper: float


class Tightness(NamedTuple):
    tight: bool
    bound: float
    parseval: bool


class Equiangularity(NamedTuple):
    equiangular: bool
    gamma: AlgebraElement


class Coherence(NamedTuple):
    value: float
    witness: tuple[int, int]


def inner_product(x: ModuleVector, y: ModuleVector) -> AlgebraElement:
    """<x, y> = sum_r x_r * conj(y_r)."""
    if x.spectrum != y.spectrum or x.dim != y.dim:
        raise DimensionError("vectors disagree on (d, K)")
    vals = np.einsum("ps,ps->s", x.values, y.values.conj())
    return AlgebraElement(vals, x.spectrum)


def pointwise_slice(f: Frame, s: int) -> np.ndarray:
    """Classical frame over C^d at spectrum point s, as an (n, d) array."""
    if not 0 <= s < f.K:
        raise IndexError(f"spectrum point {s} out of range for K={f.K}")
    return np.array(f.values[:, :, s])


def gram_table(f: Frame) -> GramTable:
    vals = np.einsum("jps,kps->jks", f.values, f.values.conj())
    return GramTable(vals, f.spectrum)


def frame_operator(f: Frame) -> OperatorMatrix:
    """S x = sum_j <x, tau_j> tau_j, as a d x d matrix over the algebra."""
    vals = np.einsum("jps,jqs->pqs", f.values, f.values.conj())
    return OperatorMatrix(vals, f.spectrum)


def trace(t: OperatorMatrix, basis: list[ModuleVector] | None = None,
          tol: float = UNIT_TOL) -> AlgebraElement:
    """Trace of an operator matrix: sum_j <T e_j, e_j>.

    With no basis the canonical one is used, which reduces to the sum of
    diagonal entries. A supplied basis must be orthonormal within tol;
    the trace does not depend on which one is chosen.
    """
    if basis is None:
        vals = np.einsum("pps->s", t.values)
        return AlgebraElement(vals, t.spectrum)
    if len(basis) != t.dim:
        raise BasisError(f"basis has {len(basis)} vectors, operator needs {t.dim}")
    b = np.stack([v.values for v in basis])  # (d, d, K): vector, coord, point
    gram = np.einsum("jps,kps->jks", b, b.conj())
    eye = np.zeros_like(gram)
    idx = np.arange(t.dim)
    eye[idx, idx, :] = 1.0
    residual = float(np.max(np.abs(gram - eye)))
    if residual > tol:
        raise BasisError(f"basis is not orthonormal (Gram residual {residual:.3g})",
                         residual=residual)
    # sum_j <T b_j, b_j> = sum_j sum_p (T b_j)_p conj(b_j_p)
    vals = np.einsum("pqs,jqs,jps->s", t.values, b, b.conj())
    return AlgebraElement(vals, t.spectrum)


def trace_square_formula(f: Frame) -> AlgebraElement:
    """Trace of the squared frame operator straight from the Gram table:
    sum_{j,k} <tau_j, tau_k><tau_k, tau_j>."""
    g = gram_table(f).values
    vals = np.einsum("jks,kjs->s", g, g)
    return AlgebraElement(vals, f.spectrum)


def is_frame(f: Frame, tol: float = DEFAULT_TOL) -> FrameBounds:
    """Optimal scalar frame bounds from the pointwise eigenvalues of the
    frame operator; a frame iff the lower bound exceeds tol."""
    eigvals = frame_operator(f).pointwise_eigenvalues()
    lower = float(np.min(eigvals))
    upper = float(np.max(eigvals))
    return FrameBounds(lower > tol, lower, upper)


def is_tight(f: Frame, tol: float = UNIT_TOL) -> Tightness:
    """Tight iff the frame operator is a * identity within tol at every
    point; Parseval iff additionally |a - 1| <= tol."""
    s = frame_operator(f)
    bound = float(np.mean(np.einsum("pps->s", s.values).real)) / f.d
    eye = OperatorMatrix.identity(f.d, f.spectrum)
    residual = float(np.max(np.abs(s.values - bound * eye.values)))
    tight = residual <= tol
    return Tightness(tight, bound, tight and abs(bound - 1.0) <= tol)


def is_equiangular(f: Frame, tol: float = UNIT_TOL) -> Equiangularity:
    """Equiangular iff all off-diagonal <tau_j,tau_k><tau_k,tau_j> agree
    within tol per point; gamma is their mean."""
    if f.n < 2:
        raise DimensionError("equiangularity needs n >= 2")
    g = gram_table(f).values
    sq = g * np.conj(g)  # |<tau_j, tau_k>|^2 pointwise, exactly real
    off = ~np.eye(f.n, dtype=bool)
    cross = sq[off]  # (n*(n-1), K)
    gamma_vals = np.mean(cross, axis=0)
    agree = float(np.max(np.abs(cross - gamma_vals[None, :]))) <= tol
    return Equiangularity(agree, AlgebraElement(gamma_vals, f.spectrum))


def frame_correlation(f: Frame) -> Coherence:
    """Largest off-diagonal Gram norm, max_{j != k} ||<tau_j, tau_k>||,
    with the lexicographically smallest attaining pair."""
    if f.n < 2:
        raise DimensionError("frame correlation needs n >= 2")
    g = gram_table(f).values
    norms = np.max(np.abs(g), axis=2)  # (n, n) of sup norms
    best = 0.0
    witness = (0, 1)
    for j in range(f.n - 1):
        for k in range(j + 1, f.n):
            if norms[j, k] > best:
                best = float(norms[j, k])
                witness = (j, k)
    return Coherence(best, witness)


def frame_potential(f: Frame) -> AlgebraElement:
    """sum_{j,k} <tau_j, tau_k><tau_k, tau_j>, diagonal included."""
    return trace_square_formula(f)


def mrms(f: Frame, unit_tol: float = UNIT_TOL) -> AlgebraElement:
    """Root-mean-square cross relation over the off-diagonal pairs:
    ((1/(n(n-1))) sum_{j != k} <tau_j,tau_k><tau_k,tau_j>)^(1/2).

    Requires a unit-inner-product frame with n >= 2.
    """
    f.require_unit(unit_tol)
    if f.n < 2:
        raise DimensionError("root-mean-square cross relation needs n >= 2")
    g = gram_table(f).values
    sq = (g * np.conj(g)).real
    off = ~np.eye(f.n, dtype=bool)
    mean = np.sum(sq[off], axis=0) / (f.n * (f.n - 1))
    return AlgebraElement(mean, f.spectrum).sqrt()
