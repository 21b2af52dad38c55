"""Symmetric tensor powers of the standard module.

Coordinates of Sym^m(A^d) are indexed by degree-m multisets over the d
base coordinates, listed in lexicographic order of their nondecreasing
index tuples. The lift x -> x^(tensor m) carries sqrt-multinomial
weights so that the plain coordinate inner product realizes
<x^m, y^m> = <x, y>^m, which turns the tensor-power identity into a
directly testable equality and feeds the eigenvalue route to the
higher-order bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .algebra import AlgebraElement, Spectrum
from .errors import CapacityError, DimensionError
from .module import Frame, ModuleVector, OperatorMatrix, gram_table

#: Desk-scale guard: refuse pointwise eigenproblems beyond this many entries.
MAX_POINTWISE_ENTRIES = 10**6

#: Per-point tolerance for the trace reconciliation checks.
TRACE_TOL = 1e-8


def sym_rank(dim: int, order: int) -> int:
    """Rank of Sym^m over a rank-d free module: binomial(d+m-1, m)."""
    if dim < 1 or order < 1:
        raise ValueError(f"need dim >= 1 and order >= 1, got ({dim}, {order})")
    return math.comb(dim + order - 1, order)


def multiset_indices(dim: int, order: int) -> list[tuple[int, ...]]:
    """Exponent vectors alpha with |alpha| = order, enumerated by the
    lexicographic order of nondecreasing index tuples."""
    if dim < 1 or order < 1:
        raise ValueError(f"need dim >= 1 and order >= 1, got ({dim}, {order})")
    out = []
    for combo in combinations_with_replacement(range(dim), order):
        alpha = [0] * dim
        for i in combo:
            alpha[i] += 1
        out.append(tuple(alpha))
    return out


def _multinomial(order: int, alpha: tuple[int, ...]) -> int:
    value = math.factorial(order)
    for a in alpha:
        value //= math.factorial(a)
    return value


@dataclass(frozen=True)
class SymVector:
    """Element of Sym^m(A^d) in weighted multiset coordinates."""

    values: np.ndarray  # (D, K) complex, D = sym_rank(base_dim, order)
    order: int
    base_dim: int
    spectrum: Spectrum

    def coord(self, index: int) -> AlgebraElement:
        return AlgebraElement(self.values[index], self.spectrum)


def lift(x: ModuleVector, order: int) -> SymVector:
    """x^(tensor m) in weighted coordinates: the alpha entry is
    sqrt(m!/prod(alpha_i!)) * prod_i x_i^{alpha_i}, pointwise."""
    indices = multiset_indices(x.dim, order)
    vals = np.empty((len(indices), x.spectrum.size), dtype=np.complex128)
    for row, alpha in enumerate(indices):
        acc = np.full(x.spectrum.size, math.sqrt(_multinomial(order, alpha)),
                      dtype=np.complex128)
        for i, a in enumerate(alpha):
            for _ in range(a):
                acc = acc * x.values[i]
        vals[row] = acc
    return SymVector(vals, order, x.dim, x.spectrum)


def sym_inner(u: SymVector, v: SymVector) -> AlgebraElement:
    """Coordinate inner product sum_alpha u_alpha * conj(v_alpha)."""
    if (u.order, u.base_dim, u.spectrum) != (v.order, v.base_dim, v.spectrum):
        raise DimensionError("symmetric vectors disagree on (m, d, K)")
    vals = np.einsum("as,as->s", u.values, v.values.conj())
    return AlgebraElement(vals, u.spectrum)


def sym_frame_operator(f: Frame, order: int) -> OperatorMatrix:
    """Frame operator of the lifted family {tau_j^(tensor m)} on Sym^m."""
    rank = sym_rank(f.d, order)
    if rank * rank * f.K > MAX_POINTWISE_ENTRIES:
        raise CapacityError(
            f"lifted operator would hold {rank * rank * f.K} entries "
            f"(limit {MAX_POINTWISE_ENTRIES})"
        )
    lifted = np.stack([lift(f.vector(j), order).values for j in range(f.n)])
    vals = np.einsum("jas,jbs->abs", lifted, lifted.conj())
    return OperatorMatrix(vals, f.spectrum)


@dataclass(frozen=True)
class PointSpectrumRecord:
    point: int
    trace: float
    trace_square: float
    cross_power_sum: float
    trace_ok: bool
    trace_square_ok: bool
    cauchy_schwarz_ok: bool


@dataclass(frozen=True)
class SymSpectrumReport:
    order: int
    rank: int
    points: list[PointSpectrumRecord]
    inequality_holds: bool


def sym_spectrum_check(f: Frame, order: int, tol: float = TRACE_TOL) -> SymSpectrumReport:
    """Eigenvalue route to the order-m sum bound, one point at a time.

    For each point: diagonalize the lifted frame operator, reconcile
    sum(lambda) with n and sum(lambda^2) with the Gram power sum
    sum_{j,k} |<tau_j,tau_k>|^{2m}, and check the Cauchy-Schwarz step
    (sum lambda)^2 <= rank * sum(lambda^2), all within tol.
    """
    f.require_unit()
    rank = sym_rank(f.d, order)
    if rank * f.K > MAX_POINTWISE_ENTRIES:
        raise CapacityError(
            f"check would need {rank * f.K} pointwise eigenvalues "
            f"(limit {MAX_POINTWISE_ENTRIES})"
        )
    operator = sym_frame_operator(f, order)
    eigvals = operator.pointwise_eigenvalues()  # (rank, K)
    g = gram_table(f).values
    cross = np.sum(np.abs(g) ** (2 * order), axis=(0, 1))  # (K,)

    records = []
    all_ok = True
    for s in range(f.K):
        lam = eigvals[:, s]
        tr = float(np.sum(lam))
        tr_sq = float(np.sum(lam * lam))
        cr = float(cross[s])
        trace_ok = abs(tr - f.n) <= tol
        trace_square_ok = abs(tr_sq - cr) <= tol
        cs_ok = tr * tr <= rank * tr_sq + tol
        all_ok = all_ok and trace_ok and trace_square_ok and cs_ok
        records.append(
            PointSpectrumRecord(s, tr, tr_sq, cr, trace_ok, trace_square_ok, cs_ok)
        )
    return SymSpectrumReport(order, rank, records, all_ok)
