"""Built-in parametric membership families for the convexity checkers.

Apart from the bimodal counterexample, every family derives its components
from a single radial bump b(x) in [0, 1]:

    truth = [alpha*b, b]
    indeterminacy = [beta*(1-b), 1-b]
    falsity = [gamma*(1-b), 1-b]

with 0 < alpha, beta, gamma <= 1. Convexity of such a set: each bump is a
nonincreasing function of the distance to its center, and distance is convex,
so every superlevel set of b is a ball; hence b (and any positive scaling) is
quasi-concave, and 1-b with its scalings quasi-convex. The Gaussian bump is
*strictly* quasi-concave, because squared distance is strictly convex, so the
Gaussian family is strongly convex on any box. The piecewise-linear bumps are
flat where they vanish, so they are convex but not strongly convex.

The bimodal family plants a known violation: two separated unit bumps whose
connecting segments dip to zero between the modes.
"""

from __future__ import annotations

import math
import re
from typing import Callable

import numpy as np

from .convexity import FunctionalINS
from .core import NeutrosophicValue, UnitInterval
from .errors import UnknownFamily

__all__ = [
    "triangular",
    "gaussian",
    "bimodal",
    "parse_family",
    "family_names",
    "random_convex",
    "random_strongly_convex",
]

_ZERO = UnitInterval(0.0, 0.0)


def _bump_set(
    bump: Callable[[np.ndarray], float],
    dimension: int,
    alpha: float,
    beta: float,
    gamma: float,
) -> FunctionalINS:
    def membership(point: np.ndarray) -> NeutrosophicValue:
        b = bump(np.asarray(point, dtype=float))
        up = 1.0 - b
        return NeutrosophicValue(
            UnitInterval(alpha * b, b),
            UnitInterval(beta * up, up),
            UnitInterval(gamma * up, up),
        )

    return FunctionalINS(dimension, membership)


def _distance(point: np.ndarray, center: float) -> float:
    # scalar centers sit on the first axis: the bump peaks at (center, 0, ...)
    d0 = point[0] - center
    if point.shape[0] == 1:
        return abs(d0)
    rest = point[1:]
    return math.sqrt(d0 * d0 + float(np.dot(rest, rest)))


def triangular(center: float = 0.0, width: float = 1.0, dimension: int = 1) -> FunctionalINS:
    """Piecewise-linear bump of the given half-width around ``center``."""
    if width <= 0:
        raise ValueError("triangular width must be > 0")

    def bump(p: np.ndarray) -> float:
        return max(0.0, 1.0 - _distance(p, center) / width)

    return _bump_set(bump, dimension, alpha=0.8, beta=0.5, gamma=0.5)


def gaussian(center: float = 0.0, sigma: float = 1.0, dimension: int = 1) -> FunctionalINS:
    """Gaussian bump; strictly quasi-concave, hence strongly convex."""
    if sigma <= 0:
        raise ValueError("gaussian sigma must be > 0")

    def bump(p: np.ndarray) -> float:
        r = _distance(p, center) / sigma
        return math.exp(-r * r)

    return _bump_set(bump, dimension, alpha=0.9, beta=0.5, gamma=0.5)


def bimodal(separation: float = 4.0, dimension: int = 1) -> FunctionalINS:
    """Two unit bumps with centers ``separation`` apart: a planted
    counterexample whose mode midpoints violate convexity."""
    if separation < 0:
        raise ValueError("bimodal separation must be >= 0")
    half = separation / 2.0

    def membership(point: np.ndarray) -> NeutrosophicValue:
        p = np.asarray(point, dtype=float)
        m = max(0.0, 1.0 - _distance(p, half)) + max(0.0, 1.0 - _distance(p, -half))
        m = min(1.0, m)
        return NeutrosophicValue(UnitInterval(m, m), _ZERO, _ZERO)

    return FunctionalINS(dimension, membership)


def _trapezoid(center: float, top: float, width: float, dimension: int,
               alpha: float, beta: float, gamma: float) -> FunctionalINS:
    def bump(p: np.ndarray) -> float:
        d = _distance(p, center)
        if d <= top:
            return 1.0
        return max(0.0, 1.0 - (d - top) / width)

    return _bump_set(bump, dimension, alpha, beta, gamma)


_FAMILIES: dict[str, tuple[Callable[..., FunctionalINS], int]] = {
    "triangular": (triangular, 2),
    "gaussian": (gaussian, 2),
    "bimodal": (bimodal, 1),
}

_SPEC_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\(([^()]*)\))?\s*$")


def family_names() -> tuple[str, ...]:
    return tuple(_FAMILIES)


def parse_family(spec: str, dimension: int = 1) -> FunctionalINS:
    """Build a family from a spec string like ``triangular(0,1)``.

    Omitted parameters fall back to the family defaults.
    """
    m = _SPEC_RE.match(spec)
    if not m:
        raise ValueError(f"malformed family spec: {spec!r}")
    name, argtext = m.group(1), m.group(2)
    if name not in _FAMILIES:
        raise UnknownFamily(
            f"unknown family {name!r}; built-ins: " + ", ".join(_FAMILIES)
        )
    builder, arity = _FAMILIES[name]
    args: list[float] = []
    if argtext and argtext.strip():
        for piece in argtext.split(","):
            try:
                args.append(float(piece))
            except ValueError:
                raise ValueError(f"bad parameter {piece.strip()!r} in family spec {spec!r}") from None
    if len(args) > arity:
        raise ValueError(f"family {name!r} takes at most {arity} parameters, got {len(args)}")
    return builder(*args, dimension=dimension)


def _random_scales(rng: np.random.Generator) -> tuple[float, float, float]:
    s = 0.3 + 0.7 * rng.random(3)
    return float(s[0]), float(s[1]), float(s[2])


def random_convex(rng: np.random.Generator, dimension: int = 1) -> FunctionalINS:
    """Random member of the provably convex families (piecewise-linear
    unimodal or Gaussian bumps with random scalings)."""
    kind = int(rng.integers(0, 3))
    center = float(rng.uniform(-1.0, 1.0))
    spread = float(0.5 + 1.5 * rng.random())
    alpha, beta, gamma = _random_scales(rng)
    if kind == 0:
        def bump(p: np.ndarray, c=center, w=spread) -> float:
            return max(0.0, 1.0 - _distance(p, c) / w)
        return _bump_set(bump, dimension, alpha, beta, gamma)
    if kind == 1:
        top = float(0.5 * rng.random())
        return _trapezoid(center, top, spread, dimension, alpha, beta, gamma)
    def bump(p: np.ndarray, c=center, s=spread) -> float:
        r = _distance(p, c) / s
        return math.exp(-r * r)
    return _bump_set(bump, dimension, alpha, beta, gamma)


def random_strongly_convex(rng: np.random.Generator, dimension: int = 1) -> FunctionalINS:
    """Random Gaussian-bump set; strictly quasi-concave truth and strictly
    quasi-convex indeterminacy/falsity on any box.

    Centers stay within [-0.5, 0.5] and sigma within [1, 2] so the bump keeps
    a usable slope on boxes a few units wide; in far tails the strict margins
    would shrink below any checking tolerance even though the inequalities
    hold mathematically.
    """
    center = float(rng.uniform(-0.5, 0.5))
    sigma = float(1.0 + rng.random())
    alpha, beta, gamma = _random_scales(rng)

    def bump(p: np.ndarray, c=center, s=sigma) -> float:
        r = _distance(p, c) / s
        return math.exp(-r * r)

    return _bump_set(bump, dimension, alpha, beta, gamma)
