"""Numerical search for low-coherence unit-inner-product frames.

The true objective, the largest off-diagonal Gram norm, is a max of
smooth terms; we descend its log-sum-exp surrogate

    value = T * log( sum_{j != k, s} exp(|<tau_j, tau_k>(s)|^2 / T) )

which upper-bounds the squared coherence for every temperature T and
converges to it as T -> 0. Iterations take a gradient step on the
surrogate, re-project every per-point slice onto the unit sphere, and
accept only steps that do not increase the surrogate (backtracking
halving); the temperature cools geometrically. Equiangular targets add
the penalty sum (|<tau_j,tau_k>(s)|^2 - target)^2 with a linearly
annealed weight.

Searches never claim optimality: results carry an attainment flag
against the first-order max bound (or the configured target), since the
existence of minimizers over modules is open.

Restarts are independent; with MODFRAME_THREADS > 1 they run in a thread
pool, and the winner is selected by lowest coherence with ties broken by
restart index, so results do not depend on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .algebra import AlgebraElement
from .bounds import welch_max_bound
from .errors import ConfigError, DegenerateVectorError
from .module import Frame, frame_correlation, frame_operator, is_equiangular
from .rng import Xoshiro256StarStar, derive_seeds

_MIN_SLICE_NORM = 1e-14
_MIN_TEMPERATURE = 1e-12
_MAX_HALVINGS = 30


@dataclass(frozen=True)
class SearchConfig:
    """Shape, budget, and schedule of one search."""

    spectrum: int
    dim: int
    count: int
    restarts: int = 10
    max_iters: int = 5000
    initial_temperature: float = 0.1
    cooling: float = 0.99
    step: float = 0.5
    step_decay: float = 1.0
    seed: int = 0
    target: float | None = None
    tolerance: float = 1e-6
    penalty_weight: float = 1.0

    def __post_init__(self):
        if self.spectrum < 1 or self.dim < 1:
            raise ConfigError(f"need K >= 1 and d >= 1, got ({self.spectrum}, {self.dim})")
        if self.count < 2:
            raise ConfigError(f"need n >= 2 (coherence is undefined below), got {self.count}")
        if self.count < self.dim:
            raise ConfigError(f"need n >= d, got n={self.count}, d={self.dim}")
        if self.restarts < 1 or self.max_iters < 1:
            raise ConfigError("restarts and max_iters must be >= 1")
        if self.initial_temperature <= 0:
            raise ConfigError("initial temperature must be > 0")
        if not 0 < self.cooling <= 1:
            raise ConfigError("cooling must lie in (0, 1]")
        if self.step <= 0 or self.step_decay <= 0:
            raise ConfigError("step and step_decay must be > 0")
        if self.tolerance < 0 or self.penalty_weight < 0:
            raise ConfigError("tolerance and penalty_weight must be >= 0")


@dataclass(frozen=True)
class SearchResult:
    config: SearchConfig
    best_frame: Frame
    best_coherence: float
    best_restart: int
    welch_bound: float
    target: float | None
    attained: bool
    equiangular_residual: float
    tightness_residual: float
    trajectories: list[list[tuple[int, float, float]]] = field(repr=False)

    def summary(self) -> dict:
        return {
            "config": asdict(self.config),
            "best_coherence": self.best_coherence,
            "best_coherence_sq": self.best_coherence**2,
            "best_restart": self.best_restart,
            "welch_bound": self.welch_bound,
            "target": self.target,
            "attained": self.attained,
            "equiangular_residual": self.equiangular_residual,
            "tightness_residual": self.tightness_residual,
        }


def project_unit(raw, min_norm: float = _MIN_SLICE_NORM) -> Frame:
    """Scale every per-point slice of every vector to unit Euclidean
    length. Idempotent; rejects slices with norm below min_norm."""
    arr = raw.values if isinstance(raw, Frame) else np.asarray(raw, dtype=np.complex128)
    if arr.ndim != 3:
        raise ConfigError(f"expected an (n, d, K) array, got shape {arr.shape}")
    norms = np.sqrt(np.einsum("jps,jps->js", arr, arr.conj()).real)
    if np.min(norms) < min_norm:
        j, s = np.unravel_index(int(np.argmin(norms)), norms.shape)
        raise DegenerateVectorError(
            f"vector {j} has norm {norms[j, s]:.3g} at point {s}",
            vector_index=int(j), point=int(s),
        )
    return Frame(arr / norms[:, None, :])


def _project_array(arr: np.ndarray) -> np.ndarray:
    norms = np.sqrt(np.einsum("jps,jps->js", arr, arr.conj()).real)
    if np.min(norms) < _MIN_SLICE_NORM:
        j, s = np.unravel_index(int(np.argmin(norms)), norms.shape)
        raise DegenerateVectorError(
            f"vector {j} has norm {norms[j, s]:.3g} at point {s}",
            vector_index=int(j), point=int(s),
        )
    return arr / norms[:, None, :]


def _offdiag_mask(n: int) -> np.ndarray:
    return ~np.eye(n, dtype=bool)


def _evaluate(arr: np.ndarray, temperature: float, weight: float,
              target: float, with_grad: bool, off: np.ndarray | None = None):
    """Surrogate value, true coherence, and (optionally) the gradient.

    The gradient is with respect to the real and imaginary parts of each
    coordinate, packed as d/d(re) + i * d/d(im).
    """
    if off is None:
        off = _offdiag_mask(arr.shape[0])
    mask = off[:, :, None]
    gram = np.einsum("jps,kps->jks", arr, arr.conj())
    z = gram.real**2 + gram.imag**2  # squared moduli
    peak = float(np.max(z, initial=0.0, where=mask))
    # mask the exponent, not the result: the unit diagonal would overflow
    scaled = np.exp(np.where(mask, (z - peak) / temperature, -np.inf))
    total = float(np.sum(scaled))
    value = peak + temperature * np.log(total)
    coherence = float(np.sqrt(peak))

    if weight > 0.0:
        deviation = np.where(mask, z - target, 0.0)
        value += weight * float(np.sum(deviation * deviation))

    if not with_grad:
        return value, coherence, None

    coef = scaled / total
    if weight > 0.0:
        coef = coef + weight * 2.0 * deviation
    grad = 2.0 * np.einsum("jks,jks,kps->jps", coef, gram, arr)
    grad += 2.0 * np.einsum("kjs,kjs,kps->jps", coef, np.conj(gram), arr)
    return value, coherence, grad


def smoothed_coherence(f: Frame, temperature: float):
    """Log-sum-exp upper bound on the squared coherence and its exact
    gradient in frame coordinates. The value decreases to the squared
    coherence as the temperature goes to 0."""
    if temperature <= 0:
        raise ConfigError(f"temperature must be > 0, got {temperature}")
    if f.n < 2:
        raise ConfigError("smoothed coherence needs n >= 2")
    value, _, grad = _evaluate(f.values, temperature, 0.0, 0.0, with_grad=True)
    return value, grad


def _weight_schedule(cfg: SearchConfig, iteration: int, penalized: bool) -> float:
    if not penalized:
        return 0.0
    if cfg.max_iters == 1:
        return cfg.penalty_weight
    ramp = 1.0 + 9.0 * iteration / (cfg.max_iters - 1)
    return cfg.penalty_weight * ramp


def _run_restart(cfg: SearchConfig, seed: int, penalized: bool):
    rng = Xoshiro256StarStar(seed)
    target = cfg.target if cfg.target is not None else 0.0
    arr = _project_array(rng.complex_gaussians((cfg.count, cfg.dim, cfg.spectrum)))
    off = _offdiag_mask(cfg.count)
    temperature = cfg.initial_temperature
    step_cur = cfg.step
    budget = _MAX_HALVINGS
    best_coh = np.inf
    best_arr = arr
    trajectory: list[tuple[int, float, float]] = []

    for iteration in range(cfg.max_iters):
        weight = _weight_schedule(cfg, iteration, penalized)
        value, coherence, grad = _evaluate(arr, temperature, weight, target,
                                           True, off)
        if coherence < best_coh:
            best_coh = coherence
            best_arr = arr
        trajectory.append((iteration, value, coherence))

        step = min(step_cur * 2.0, cfg.step * cfg.step_decay**iteration)
        accepted = False
        for _ in range(budget + 1):
            candidate = _project_array(arr - step * grad)
            cand_value, cand_coh, _ = _evaluate(candidate, temperature, weight,
                                                target, False, off)
            if cand_value <= value:
                arr = candidate
                step_cur = step
                accepted = True
                if cand_coh < best_coh:
                    best_coh = cand_coh
                    best_arr = candidate
                break
            step *= 0.5
        # a full failure means the iterate is (near-)stationary for the
        # current surrogate; keep the line search short until a step
        # lands again so converged tails stay cheap
        budget = _MAX_HALVINGS if accepted else 3
        temperature = max(temperature * cfg.cooling, _MIN_TEMPERATURE)

    _, final_coh, _ = _evaluate(arr, temperature, 0.0, 0.0, False, off)
    if final_coh < best_coh:
        best_coh = final_coh
        best_arr = arr
    return best_arr, float(best_coh), trajectory


def _residuals(frame: Frame, target: float | None):
    n, d = frame.n, frame.d
    gram = np.einsum("jps,kps->jks", frame.values, frame.values.conj())
    z = (gram * np.conj(gram)).real
    off = ~np.eye(n, dtype=bool)
    z_off = z[off]
    center = float(np.mean(z_off)) if target is None else target
    equi_residual = float(np.max(np.abs(z_off - center)))
    s_vals = frame_operator(frame).values
    eye = np.zeros_like(s_vals)
    idx = np.arange(d)
    eye[idx, idx, :] = 1.0
    tight_residual = float(np.max(np.abs(s_vals - (n / d) * eye)))
    return equi_residual, tight_residual


def _search(cfg: SearchConfig, penalized: bool) -> SearchResult:
    seeds = derive_seeds(cfg.seed, cfg.restarts)
    threads = int(os.environ.get("MODFRAME_THREADS", "1") or "1")

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(
                lambda rs: _run_restart(cfg, rs, penalized), seeds
            ))
    else:
        outcomes = [_run_restart(cfg, rs, penalized) for rs in seeds]

    best_idx = 0
    for r in range(1, cfg.restarts):
        if outcomes[r][1] < outcomes[best_idx][1]:
            best_idx = r
    best_arr, best_coh, _ = outcomes[best_idx]
    best_frame = Frame(best_arr)

    bound = welch_max_bound(cfg.count, cfg.dim, 1)
    goal = cfg.target if cfg.target is not None else bound
    attained = best_coh**2 <= goal + cfg.tolerance
    equi_res, tight_res = _residuals(best_frame, cfg.target)
    return SearchResult(
        config=cfg,
        best_frame=best_frame,
        best_coherence=best_coh,
        best_restart=best_idx,
        welch_bound=bound,
        target=cfg.target,
        attained=attained,
        equiangular_residual=equi_res,
        tightness_residual=tight_res,
        trajectories=[t for _, _, t in outcomes],
    )


def grassmannian_search(cfg: SearchConfig) -> SearchResult:
    """Multi-restart projected descent on the smoothed coherence."""
    return _search(cfg, penalized=False)


def sic_search(cfg: SearchConfig) -> SearchResult:
    """Search for a d^2-vector equiangular tight configuration with all
    squared cross inner products at 1/(d+1), via the coherence surrogate
    plus the equiangularity penalty."""
    if cfg.count != cfg.dim**2:
        raise ConfigError(f"need n = d^2, got n={cfg.count}, d={cfg.dim}")
    if cfg.target is None:
        cfg = SearchConfig(**{**asdict(cfg), "target": 1.0 / (cfg.dim + 1)})
    return _search(cfg, penalized=True)


@dataclass(frozen=True)
class EqualityCertificate:
    """Attainment certificate for the first-order max bound.

    gamma_sq is (n-d)/(d(n-1)). A unit frame whose off-diagonal squared
    inner products all equal gamma_sq (as a constant algebra element)
    must attain the bound with equality, so implication_holds reports
    (equiangular and gamma matches) -> coherence equality. Certificates
    with n <= d are vacuous."""

    n: int
    d: int
    vacuous: bool
    gamma_sq: float
    coherence: float
    equiangular: bool
    gamma_matches: bool
    coherence_equality: bool
    implication_holds: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d, "vacuous": self.vacuous,
            "gamma_sq": self.gamma_sq, "coherence": self.coherence,
            "coherence_sq": self.coherence**2,
            "equiangular": self.equiangular,
            "gamma_matches": self.gamma_matches,
            "coherence_equality": self.coherence_equality,
            "implication_holds": self.implication_holds,
        }


def certify_equality(f: Frame, tol: float = 1e-6) -> EqualityCertificate:
    f.require_unit()
    n, d = f.n, f.d
    gamma_sq = (n - d) / (d * (n - 1)) if n > 1 else 0.0
    coherence = frame_correlation(f).value
    if n <= d:
        return EqualityCertificate(n, d, True, gamma_sq, coherence,
                                   False, False, False, True)
    equi, gamma = is_equiangular(f, tol)
    gamma_matches = equi and bool(
        np.max(np.abs(gamma.values - gamma_sq)) <= tol
    )
    equality = abs(coherence**2 - gamma_sq) <= tol
    implication = (not (equi and gamma_matches)) or equality
    return EqualityCertificate(n, d, False, gamma_sq, coherence, equi,
                               gamma_matches, equality, implication)
