"""Cyclic Jacobi eigensolver for complex Hermitian matrices.

Each rotation first strips the phase of the targeted off-diagonal entry
and then applies the classical real Jacobi rotation, so the combined
plane transform is unitary and zeroes that entry. Sweeps over the upper
triangle repeat until the off-diagonal Frobenius mass drops below the
threshold (relative to the matrix scale). Eigenvalues come back sorted
ascending; columns of the vector matrix match that order.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError, DimensionError

#: Convergence threshold on the off-diagonal Frobenius mass.
OFFDIAG_THRESHOLD = 1e-12

_MAX_SWEEPS = 100


def _offdiag_mass(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def hermitian_eig(matrix, threshold: float = OFFDIAG_THRESHOLD, with_vectors: bool = True):
    """Eigen-decomposition of one complex Hermitian matrix.

    Returns (eigenvalues ascending, unitary of eigenvectors) or
    (eigenvalues, None) when with_vectors is False.
    """
    a = np.array(matrix, dtype=np.complex128, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    herm_residual = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    scale = max(1.0, float(np.linalg.norm(a)))
    if herm_residual > 1e-8 * scale:
        raise DimensionError(f"matrix is not Hermitian (residual {herm_residual:.3g})")
    # Work on the exactly Hermitian average so roundoff cannot accumulate.
    a = 0.5 * (a + a.conj().T)
    d = a.shape[0]
    vectors = np.eye(d, dtype=np.complex128) if with_vectors else None

    if d == 1:
        vals = np.array([a[0, 0].real])
        return vals, vectors

    limit = threshold * scale
    for _ in range(_MAX_SWEEPS):
        if _offdiag_mass(a) <= limit:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                r = abs(a[p, q])
                if r <= limit / (d * d):
                    continue
                phase = a[p, q] / r
                theta = 0.5 * math.atan2(2.0 * r, a[p, p].real - a[q, q].real)
                c = math.cos(theta)
                s = math.sin(theta)
                # Plane unitary U: U[p,p]=c, U[p,q]=-s,
                # U[q,p]=s*conj(phase), U[q,q]=c*conj(phase).
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * np.conj(phase) * col_q
                a[:, q] = -s * col_p + c * np.conj(phase) * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * phase * row_q
                a[q, :] = -s * row_p + c * phase * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if with_vectors:
                    v_p = vectors[:, p].copy()
                    v_q = vectors[:, q].copy()
                    vectors[:, p] = c * v_p + s * np.conj(phase) * v_q
                    vectors[:, q] = -s * v_p + c * np.conj(phase) * v_q
    else:
        if _offdiag_mass(a) > limit:
            raise ConvergenceError(
                f"Jacobi sweep limit reached (off-diagonal mass {_offdiag_mass(a):.3g})"
            )

    values = np.diag(a).real.copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    if with_vectors:
        vectors = vectors[:, order]
    return values, vectors


def pointwise_eigenvalues(stack: np.ndarray, threshold: float = OFFDIAG_THRESHOLD) -> np.ndarray:
    """Eigenvalues of a (D, D, K) stack of Hermitian matrices.

    Returns a (D, K) real array, ascending per point. Convergence
    failures carry the offending point index.
    """
    d, d2, k = stack.shape
    if d != d2:
        raise DimensionError(f"expected square matrices, got shape {stack.shape}")
    out = np.empty((d, k))
    for s in range(k):
        try:
            out[:, s], _ = hermitian_eig(stack[:, :, s], threshold, with_vectors=False)
        except ConvergenceError as exc:
            raise ConvergenceError(f"{exc} at spectrum point {s}", point=s) from None
    return out
