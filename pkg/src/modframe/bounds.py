"""Closed-form coherence lower bounds and the frame verification report.

The order-m bounds for n unit-inner-product vectors in rank d:

    sum form:  sum_{j,k} ||<tau_j,tau_k>||^{2m}  >=  n^2 / binomial(d+m-1, m)
    max form:  max_{j!=k} ||<tau_j,tau_k>||^{2m} >=  (n/binomial(d+m-1,m) - 1)/(n-1)

together with the algebra-order middle inequality

    sum_{j,k} <tau_j,tau_k>^m <tau_k,tau_j>^m  >=  (n^2/binomial(d+m-1,m)) * 1

and the classical comparator bounds (Gerzon, Bukh-Cox, orthoplex/Rankin,
Levenstein, exponential), which apply to the scalar values
||<tau_j,tau_k>|| and are reported as classical context only: their
module versions are open.

Bound values are computed in exact rational arithmetic and converted to
float at the end, so equality at known extremal configurations is
detected reliably.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np

from .algebra import AlgebraElement, leq
from .module import Frame, frame_correlation, gram_table

#: Slack for the `holds` flags (the theorems are exact; this absorbs roundoff).
HOLDS_TOL = 1e-9

#: Window for flagging equality (bound attained), on the 2m-th coherence power.
EQUALITY_TOL = 1e-6

Field = Literal["complex", "real"]


def welch_max_bound(n: int, d: int, m: int = 1) -> float:
    """Max-form bound (n/binomial(d+m-1,m) - 1)/(n-1); may be negative
    (vacuous) and is returned as-is in that case."""
    if n < 2:
        raise ValueError(f"max-form bound needs n >= 2, got {n}")
    if d < 1 or m < 1:
        raise ValueError(f"need d >= 1 and m >= 1, got ({d}, {m})")
    exact = (Fraction(n, math.comb(d + m - 1, m)) - 1) / (n - 1)
    return float(exact)


def welch_sum_bound(n: int, d: int, m: int = 1) -> float:
    """Sum-form bound n^2 / binomial(d+m-1, m)."""
    if n < 1 or d < 1 or m < 1:
        raise ValueError(f"need n, d, m >= 1, got ({n}, {d}, {m})")
    return float(Fraction(n * n, math.comb(d + m - 1, m)))


def gerzon_bound(d: int, field_kind: Field = "complex") -> int:
    """Largest possible number of equiangular lines: d^2 over the complex
    numbers, d(d+1)/2 over the reals."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if field_kind == "complex":
        return d * d
    if field_kind == "real":
        return d * (d + 1) // 2
    raise ValueError(f"unknown field kind {field_kind!r}")


@dataclass(frozen=True)
class Comparators:
    """Classical coherence lower bounds for n unit vectors in K^d.

    bukh_cox is None unless n > d; levenstein is None unless n exceeds
    the Gerzon bound; exponential is None for d = 1. The orthoplex value
    1/sqrt(d) is always reported, with its applicability flag n > Gerzon.
    """

    field_kind: Field
    gerzon: int
    bukh_cox: float | None
    orthoplex: float
    orthoplex_applicable: bool
    levenstein: float | None
    exponential: float | None

    def to_dict(self) -> dict:
        return {
            "field": self.field_kind,
            "gerzon": self.gerzon,
            "bukh_cox": self.bukh_cox,
            "orthoplex": self.orthoplex,
            "orthoplex_applicable": self.orthoplex_applicable,
            "levenstein": self.levenstein,
            "exponential": self.exponential,
        }


def classical_comparators(n: int, d: int, field_kind: Field = "complex") -> Comparators:
    """Evaluate the four classical comparator bounds at (n, d).

    The parameter m is dim_R(K)/2: 1 for the complex field, 1/2 for the
    real field, and the Bukh-Cox expression uses m^-1 accordingly.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got ({n}, {d})")
    m = 1.0 if field_kind == "complex" else 0.5
    zd = gerzon_bound(d, field_kind)

    bukh_cox = None
    if n > d:
        z_excess = gerzon_bound(n - d, field_kind)
        denom = n * (1.0 + m * (n - d - 1) * math.sqrt(1.0 / m + n - d)) - z_excess
        if denom > 0:
            bukh_cox = z_excess / denom

    orthoplex = 1.0 / math.sqrt(d)

    levenstein = None
    if n > zd:
        radicand = (n * (m + 1.0) - d * (m * d + 1.0)) / ((n - d) * (m * d + 1.0))
        if radicand >= 0:
            levenstein = math.sqrt(radicand)

    exponential = None
    if d >= 2:
        exponential = 1.0 - 2.0 * n ** (-1.0 / (d - 1))

    return Comparators(field_kind, zd, bukh_cox, orthoplex, n > zd, levenstein,
                       exponential)


@dataclass(frozen=True)
class GeneralizedWelchResult:
    """Outcome of the bound that needs no unit normalization:

        sum_{j,k} <tau_j,tau_k>^m <tau_k,tau_j>^m
            >= (sum_j <tau_j,tau_j>^m)^2 / binomial(d+m-1, m)

    in the algebra order, plus its max-form corollary on scalars (None
    when n < 2): max ||<tau_j,tau_k>||^{2m} >=
    (||rhs|| - sum_j ||tau_j||^{4m}) / (n^2 - n).
    """

    order: int
    lhs: AlgebraElement
    rhs: AlgebraElement
    holds: bool
    max_lhs: float | None
    max_rhs: float | None
    max_holds: bool | None


def generalized_welch_check(f: Frame, m: int, tol: float = HOLDS_TOL) -> GeneralizedWelchResult:
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    g = gram_table(f).values
    sq = (g * np.conj(g)).real  # |<tau_j,tau_k>|^2 pointwise
    lhs_vals = np.sum(sq**m, axis=(0, 1))
    lhs = AlgebraElement(lhs_vals, f.spectrum)

    diag = np.einsum("jjs->js", g).real  # <tau_j,tau_j> pointwise
    diag_power_sum = np.sum(diag**m, axis=0)
    binom = math.comb(f.d + m - 1, m)
    rhs = AlgebraElement(diag_power_sum * diag_power_sum / binom, f.spectrum)
    holds = leq(rhs, lhs, tol)

    max_lhs = max_rhs = max_holds = None
    if f.n >= 2:
        coherence = frame_correlation(f).value
        max_lhs = coherence ** (2 * m)
        norm_sum = float(np.sum(np.max(diag, axis=1) ** (2 * m)))
        max_rhs = (rhs.norm() - norm_sum) / (f.n * f.n - f.n)
        max_holds = max_lhs >= max_rhs - tol
    return GeneralizedWelchResult(m, lhs, rhs, holds, max_lhs, max_rhs, max_holds)


@dataclass(frozen=True)
class OrderCheck:
    m: int
    bound: float
    lhs: float
    holds: bool
    equality: bool
    vacuous: bool

    def to_dict(self) -> dict:
        return {"m": self.m, "max_bound": self.bound, "max_lhs": self.lhs,
                "holds": self.holds, "equality": self.equality,
                "vacuous": self.vacuous}


@dataclass(frozen=True)
class SumCheck:
    m: int
    bound: float
    lhs: float
    holds: bool
    equality: bool
    middle_holds: bool

    def to_dict(self) -> dict:
        return {"m": self.m, "sum_bound": self.bound, "sum_lhs": self.lhs,
                "holds": self.holds, "equality": self.equality,
                "middle_holds": self.middle_holds}


@dataclass(frozen=True)
class BoundReport:
    """Every closed-form check for one unit-inner-product frame."""

    n: int
    d: int
    K: int
    coherence: float
    witness: tuple[int, int]
    orders: list[OrderCheck] = field(default_factory=list)
    sums: list[SumCheck] = field(default_factory=list)
    comparators: Comparators | None = None
    vacuous_orders: list[int] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(o.holds for o in self.orders) and all(
            s.holds and s.middle_holds for s in self.sums
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "K": self.K,
            "coherence": self.coherence,
            "witness": list(self.witness),
            "orders": [o.to_dict() for o in self.orders],
            "sums": [s.to_dict() for s in self.sums],
            "comparators": self.comparators.to_dict() if self.comparators else None,
            "vacuous_orders": list(self.vacuous_orders),
        }


def verify_frame(f: Frame, max_order: int, unit_tol: float = 1e-8) -> BoundReport:
    """Check the max-form, sum-form, and algebra-order bounds for every
    order up to max_order against a unit-inner-product frame.

    Negative max-form bounds are reported verbatim and flagged vacuous.
    Equality within EQUALITY_TOL marks the bound as attained. Raises if
    the frame is not unit within unit_tol.
    """
    if max_order < 1:
        raise ValueError(f"need max_order >= 1, got {max_order}")
    f.require_unit(unit_tol)
    n, d = f.n, f.d

    coherence, witness = frame_correlation(f)
    g = gram_table(f).values
    norms = np.max(np.abs(g), axis=2)
    sq = (g * np.conj(g)).real

    orders: list[OrderCheck] = []
    sums: list[SumCheck] = []
    vacuous: list[int] = []
    for m in range(1, max_order + 1):
        max_bound = welch_max_bound(n, d, m)
        max_lhs = coherence ** (2 * m)
        if max_bound < 0:
            vacuous.append(m)
        orders.append(OrderCheck(
            m, max_bound, max_lhs,
            holds=max_lhs >= max_bound - HOLDS_TOL,
            equality=abs(max_lhs - max_bound) <= EQUALITY_TOL,
            vacuous=max_bound < 0,
        ))

        sum_bound = welch_sum_bound(n, d, m)
        sum_lhs = float(np.sum(norms ** (2 * m)))
        middle = AlgebraElement(np.sum(sq**m, axis=(0, 1)), f.spectrum)
        middle_holds = leq(
            AlgebraElement.constant(sum_bound, f.spectrum), middle, HOLDS_TOL
        )
        sums.append(SumCheck(
            m, sum_bound, sum_lhs,
            holds=sum_lhs >= sum_bound - HOLDS_TOL,
            equality=abs(sum_lhs - sum_bound) <= EQUALITY_TOL,
            middle_holds=middle_holds,
        ))

    return BoundReport(n, d, f.K, coherence, witness, orders, sums,
                       classical_comparators(n, d, "complex"), vacuous)
