"""Sampled convexity checking for sets over Euclidean space.

A functional set carries membership oracles from points of R^n to interval
values. Convexity demands, along every segment, that both truth endpoints
are quasi-concave and all indeterminacy/falsity endpoints quasi-convex; the
strong form demands strict inequalities at interior mixing weights for
distinct points.

Universally quantified statements over black-box oracles cannot be decided,
so the checkers falsify by sampling: segment endpoints drawn uniformly from a
box by a seeded PCG64 generator, mixing weights on a fixed grid. The verdict
is therefore ``no-violation-found`` (never "convex") or ``violated`` with a
reproducible witness. Reports are deterministic for a fixed seed: trials run
in draw order and the first violation wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import NeutrosophicValue, UnitInterval
from .errors import DimensionMismatch, InvalidDomain
from .sampling import rng_from_seed

__all__ = [
    "Box",
    "FunctionalINS",
    "Witness",
    "ConvexityReport",
    "COMPONENTS",
    "NO_VIOLATION",
    "VIOLATED",
    "check_convex",
    "check_strongly_convex",
    "intersect_functional",
]

#: Endpoint names in report order.
COMPONENTS = ("infT", "supT", "infI", "supI", "infF", "supF")

NO_VIOLATION = "no-violation-found"
VIOLATED = "violated"

# truth endpoints compare against the min of the segment ends, the rest
# against the max
_MIN_SIDE = (0, 1)
_MAX_SIDE = (2, 3, 4, 5)


@dataclass(frozen=True, slots=True)
class Box:
    """Axis-aligned closed sampling domain, one (lo, hi) pair per dimension."""

    bounds: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        bounds = tuple((float(lo), float(hi)) for lo, hi in self.bounds)
        if not bounds:
            raise InvalidDomain("box needs at least one dimension")
        for lo, hi in bounds:
            if not (np.isfinite(lo) and np.isfinite(hi)):
                raise InvalidDomain("box bounds must be finite")
            if lo > hi:
                raise InvalidDomain(f"box bound [{lo}, {hi}] is out of order")
        object.__setattr__(self, "bounds", bounds)

    @property
    def dimension(self) -> int:
        return len(self.bounds)


@dataclass(frozen=True, slots=True)
class FunctionalINS:
    """Set over R^n given by a membership oracle.

    The oracle must be pure: deterministic, returning a valid value for every
    queried point. Points are passed as 1-D float arrays of length
    ``dimension``.
    """

    dimension: int
    membership: Callable[[np.ndarray], NeutrosophicValue]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be a positive integer")


@dataclass(frozen=True, slots=True)
class Witness:
    """A sampled segment and mixing weight violating one inequality."""

    x1: tuple[float, ...]
    x2: tuple[float, ...]
    lam: float
    component: str
    lhs: float
    rhs: float


@dataclass(frozen=True, slots=True)
class ConvexityReport:
    verdict: str
    samples_checked: int
    witness: Witness | None = None


def _endpoints(value: NeutrosophicValue) -> tuple[float, ...]:
    t, i, f = value.truth, value.indeterminacy, value.falsity
    return (t.lo, t.hi, i.lo, i.hi, f.lo, f.hi)


def _validate(a: FunctionalINS, domain: Box, trials: int, lambda_grid: int, tol: float) -> None:
    if not isinstance(domain, Box):
        raise InvalidDomain("domain must be a Box")
    if domain.dimension != a.dimension:
        raise InvalidDomain(
            f"box dimension {domain.dimension} does not match set dimension {a.dimension}"
        )
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if lambda_grid < 2:
        raise ValueError("lambda_grid must be >= 2")
    if tol < 0.0:
        raise ValueError("tol must be >= 0")


def _scan(
    a: FunctionalINS,
    domain: Box,
    trials: int,
    lambdas: list[float],
    seed: int,
    tol: float,
    strict: bool,
) -> ConvexityReport:
    rng = rng_from_seed(seed)
    lo = np.array([b[0] for b in domain.bounds])
    span = np.array([b[1] - b[0] for b in domain.bounds])
    membership = a.membership
    lam_col = np.asarray(lambdas)[:, None]
    checked = 0
    for _ in range(trials):
        pts = lo + rng.random((2, a.dimension)) * span
        x1, x2 = pts[0], pts[1]
        if strict:
            while np.array_equal(x1, x2):
                pts = lo + rng.random((2, a.dimension)) * span
                x1, x2 = pts[0], pts[1]
        e1 = _endpoints(membership(x1))
        e2 = _endpoints(membership(x2))
        low = tuple(map(min, e1, e2))
        high = tuple(map(max, e1, e2))
        mids = lam_col * x1 + (1.0 - lam_col) * x2
        for lam, mid in zip(lambdas, mids):
            m = _endpoints(membership(mid))
            checked += 1
            for c in _MIN_SIDE:
                # convex: m >= low; strongly convex: m > low by more than tol
                bad = m[c] <= low[c] + tol if strict else m[c] < low[c] - tol
                if bad:
                    return _report(x1, x2, lam, c, m[c], low[c], checked)
            for c in _MAX_SIDE:
                bad = m[c] >= high[c] - tol if strict else m[c] > high[c] + tol
                if bad:
                    return _report(x1, x2, lam, c, m[c], high[c], checked)
    return ConvexityReport(NO_VIOLATION, checked)


def _report(x1, x2, lam, component, lhs, rhs, checked) -> ConvexityReport:
    witness = Witness(
        x1=tuple(float(v) for v in x1),
        x2=tuple(float(v) for v in x2),
        lam=float(lam),
        component=COMPONENTS[component],
        lhs=float(lhs),
        rhs=float(rhs),
    )
    return ConvexityReport(VIOLATED, checked, witness)


def check_convex(
    a: FunctionalINS,
    domain: Box,
    trials: int = 1000,
    lambda_grid: int = 11,
    seed: int = 0,
    tol: float = 1e-9,
) -> ConvexityReport:
    """Search for a violation of convexity over sampled segments.

    Mixing weights form a uniform grid of ``lambda_grid`` points on [0, 1],
    endpoints included (they can never witness a violation). A violation must
    exceed ``tol`` to be reported.
    """
    _validate(a, domain, trials, lambda_grid, tol)
    lambdas = np.linspace(0.0, 1.0, lambda_grid).tolist()
    return _scan(a, domain, trials, lambdas, seed, tol, strict=False)


def check_strongly_convex(
    a: FunctionalINS,
    domain: Box,
    trials: int = 1000,
    lambda_grid: int = 11,
    seed: int = 0,
    tol: float = 1e-9,
) -> ConvexityReport:
    """Search for a violation of strong convexity.

    Sampled segment endpoints are forced distinct and the ``lambda_grid``
    mixing weights lie strictly inside (0, 1). A comparison that fails to be
    strict by more than ``tol`` counts as a violation.
    """
    _validate(a, domain, trials, lambda_grid, tol)
    lambdas = np.linspace(0.0, 1.0, lambda_grid + 2)[1:-1].tolist()
    return _scan(a, domain, trials, lambdas, seed, tol, strict=True)


def intersect_functional(a: FunctionalINS, b: FunctionalINS) -> FunctionalINS:
    """Pointwise intersection: min on truth endpoints, max on the others."""
    if a.dimension != b.dimension:
        raise DimensionMismatch(
            f"cannot intersect sets of dimension {a.dimension} and {b.dimension}"
        )
    fa, fb = a.membership, b.membership

    def membership(point: np.ndarray) -> NeutrosophicValue:
        va, vb = fa(point), fb(point)
        return NeutrosophicValue(
            UnitInterval(
                min(va.truth.lo, vb.truth.lo), min(va.truth.hi, vb.truth.hi)
            ),
            UnitInterval(
                max(va.indeterminacy.lo, vb.indeterminacy.lo),
                max(va.indeterminacy.hi, vb.indeterminacy.hi),
            ),
            UnitInterval(
                max(va.falsity.lo, vb.falsity.lo), max(va.falsity.hi, vb.falsity.hi)
            ),
        )

    return FunctionalINS(a.dimension, membership)
