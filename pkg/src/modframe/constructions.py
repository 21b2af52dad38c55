"""Named frame constructions used by the CLI and the test suite."""

from __future__ import annotations

import math

import numpy as np

from .algebra import Spectrum
from .errors import DimensionError
from .module import Frame, ModuleVector
from .rng import Xoshiro256StarStar


def canonical_basis(num_points: int, dim: int) -> Frame:
    """The canonical orthonormal basis e_1..e_d, constant across points."""
    vals = np.zeros((dim, dim, num_points), dtype=np.complex128)
    idx = np.arange(dim)
    vals[idx, idx, :] = 1.0
    return Frame(vals)


def random_unit_frame(num_points: int, dim: int, count: int, seed: int) -> Frame:
    """Random unit-inner-product frame: per-point complex Gaussian slices
    normalized to unit Euclidean length."""
    rng = Xoshiro256StarStar(seed)
    vals = rng.complex_gaussians((count, dim, num_points))
    norms = np.sqrt(np.einsum("jps,jps->js", vals, vals.conj()).real)
    if np.min(norms) < 1e-14:
        raise DimensionError("degenerate random draw; use a different seed")
    return Frame(vals / norms[:, None, :])


def random_orthonormal_basis(num_points: int, dim: int, seed: int) -> list[ModuleVector]:
    """Orthonormal basis of A^d built from an independent random unitary
    at each spectrum point (QR of a complex Gaussian matrix)."""
    rng = Xoshiro256StarStar(seed)
    coords = np.empty((dim, dim, num_points), dtype=np.complex128)
    for s in range(num_points):
        q, _ = np.linalg.qr(rng.complex_gaussians((dim, dim)))
        # basis vector j has coordinates U[:, j] at this point
        coords[:, :, s] = q
    return [ModuleVector(coords[:, j, :]) for j in range(dim)]


def mercedes_frame(num_points: int = 1) -> Frame:
    """Three unit vectors in dimension 2 at mutual angle 120 degrees,
    replicated across the spectrum. Coherence squared is exactly 1/4 and
    the frame is tight with bound 3/2."""
    vecs = np.array(
        [
            [math.cos(2.0 * math.pi * j / 3.0), math.sin(2.0 * math.pi * j / 3.0)]
            for j in range(3)
        ],
        dtype=np.complex128,
    )
    vals = np.repeat(vecs[:, :, None], num_points, axis=2)
    return Frame(vals)


def sic_d2_frame(num_points: int = 1) -> Frame:
    """The four-vector equiangular tight configuration in dimension 2:
    the tetrahedral fiducial (sqrt((3+sqrt 3)/6), e^{i pi/4} sqrt((3-sqrt 3)/6))
    and its orbit under the two shift/phase generators. All squared cross
    inner products equal 1/3."""
    alpha = math.sqrt((3.0 + math.sqrt(3.0)) / 6.0)
    beta = math.sqrt((3.0 - math.sqrt(3.0)) / 6.0) * np.exp(1j * math.pi / 4.0)
    fiducial = np.array([alpha, beta], dtype=np.complex128)
    shift = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    phase = np.array([[1, 0], [0, -1]], dtype=np.complex128)
    orbit = [fiducial, shift @ fiducial, phase @ fiducial, shift @ phase @ fiducial]
    vals = np.repeat(np.stack(orbit)[:, :, None], num_points, axis=2)
    return Frame(vals)


def repeated_vector_frame(vector: ModuleVector, count: int) -> Frame:
    """count copies of one vector; the coherence-1 extreme for unit input."""
    vals = np.repeat(vector.values[None, :, :], count, axis=0)
    return Frame(vals)
