"""Independent classical Welch-bound checker for frames over C^d.

Deliberately coded from scratch against plain (n, d) complex arrays with
loop-level arithmetic and float bound formulas, so it shares no code
path with the package. The tolerance constants are part of the report
contract and are the only shared values.
"""

import math

import numpy as np

HOLDS_TOL = 1e-9
EQUALITY_TOL = 1e-6


def classical_gram(vectors: np.ndarray) -> np.ndarray:
    n = vectors.shape[0]
    g = np.empty((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            g[j, k] = np.vdot(vectors[k], vectors[j])  # vdot conjugates arg 1
    return g


def classical_coherence(vectors: np.ndarray) -> float:
    g = classical_gram(vectors)
    n = vectors.shape[0]
    best = 0.0
    for j in range(n):
        for k in range(n):
            if j != k:
                best = max(best, abs(g[j, k]))
    return best


def classical_report(vectors: np.ndarray, max_order: int) -> dict:
    """holds/equality flags for the max-form and sum-form bounds."""
    n, d = vectors.shape
    g = classical_gram(vectors)
    coherence = classical_coherence(vectors)
    orders = []
    sums = []
    for m in range(1, max_order + 1):
        c = math.comb(d + m - 1, m)
        max_bound = (n / c - 1.0) / (n - 1.0)
        max_lhs = coherence ** (2 * m)
        orders.append({
            "m": m,
            "holds": max_lhs >= max_bound - HOLDS_TOL,
            "equality": abs(max_lhs - max_bound) <= EQUALITY_TOL,
        })
        sum_bound = n * n / c
        sum_lhs = 0.0
        for j in range(n):
            for k in range(n):
                sum_lhs += abs(g[j, k]) ** (2 * m)
        sums.append({
            "m": m,
            "holds": sum_lhs >= sum_bound - HOLDS_TOL,
            "equality": abs(sum_lhs - sum_bound) <= EQUALITY_TOL,
        })
    return {"coherence": coherence, "orders": orders, "sums": sums}
