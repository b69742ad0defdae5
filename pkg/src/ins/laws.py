"""Seeded randomized checking of the algebraic laws of the set operators.

Each law is a per-trial check over freshly generated random sets. Laws built
from min/max/copy operations are compared exactly; laws involving addition or
products are compared within a caller-supplied tolerance (default 1e-12),
since only those introduce floating-point rounding.

A failed trial reports the smallest failing element together with both sides'
six endpoints, and the whole run is reproducible from its seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import core
from .core import DiscreteINS
from .errors import UnknownLaw
from .sampling import random_set, random_subset, random_superset, random_universe, rng_from_seed

__all__ = ["LawResult", "CLI_LAWS", "ALL_CHECKS", "run_law", "run_all_laws"]


@dataclass(frozen=True, slots=True)
class LawResult:
    law: str
    description: str
    trials: int
    seed: int
    tol: float
    passed: bool
    counterexample: str | None = None
    failed_trial: int | None = None


def _fmt_value(row: np.ndarray) -> str:
    t, i, f = row[0:2], row[2:4], row[4:6]
    part = lambda p: f"[{p[0]:g},{p[1]:g}]"
    return f"<{part(t)},{part(i)},{part(f)}>"


def _fail_eq(relation: str, x: DiscreteINS, y: DiscreteINS, tol: float) -> str | None:
    """None if x == y (within tol per endpoint), else a rendered failure."""
    dx, dy = x.endpoints, y.endpoints
    bad = np.abs(dx - dy) > tol if tol > 0.0 else dx != dy
    rows = np.flatnonzero(bad.any(axis=1))
    if rows.size == 0:
        return None
    label = x.universe[rows[0]]
    return (
        f"{relation}\n  element {label}: "
        f"lhs={_fmt_value(dx[rows[0]])} rhs={_fmt_value(dy[rows[0]])}"
    )


def _fail_contained(relation: str, x: DiscreteINS, y: DiscreteINS) -> str | None:
    """None if x is contained in y, else a rendered failure."""
    dx, dy = x.endpoints, y.endpoints
    ok = np.concatenate(
        [dx[:, 0:2] <= dy[:, 0:2], dx[:, 2:6] >= dy[:, 2:6]], axis=1
    )
    rows = np.flatnonzero(~ok.all(axis=1))
    if rows.size == 0:
        return None
    label = x.universe[rows[0]]
    return (
        f"{relation}\n  element {label}: "
        f"lhs={_fmt_value(dx[rows[0]])} rhs={_fmt_value(dy[rows[0]])}"
    )


def _common_superset(rng: np.random.Generator, a: DiscreteINS, b: DiscreteINS) -> DiscreteINS:
    # Sampled directly from the containment constraints of both operands
    # (min/max only, no set operators), so minimality checks don't assume
    # the theorem they test.
    da, db = a.endpoints, b.endpoints
    r = rng.random(da.shape)
    out = np.empty_like(da)
    out[:, 1] = np.maximum(np.maximum(da[:, 1], db[:, 1]), r[:, 1])
    out[:, 0] = np.maximum(
        np.maximum(da[:, 0], db[:, 0]), np.minimum(r[:, 0], out[:, 1])
    )
    for lo, hi in ((2, 3), (4, 5)):
        out[:, lo] = np.minimum(np.minimum(da[:, lo], db[:, lo]), r[:, lo])
        out[:, hi] = np.minimum(
            np.minimum(da[:, hi], db[:, hi]), np.maximum(r[:, hi], out[:, lo])
        )
    return DiscreteINS.from_array(a.universe, out)


def _common_subset(rng: np.random.Generator, a: DiscreteINS, b: DiscreteINS) -> DiscreteINS:
    da, db = a.endpoints, b.endpoints
    r = rng.random(da.shape)
    out = np.empty_like(da)
    out[:, 0] = np.minimum(np.minimum(da[:, 0], db[:, 0]), r[:, 0])
    out[:, 1] = np.minimum(
        np.minimum(da[:, 1], db[:, 1]), np.maximum(r[:, 1], out[:, 0])
    )
    for lo, hi in ((2, 3), (4, 5)):
        out[:, hi] = np.maximum(np.maximum(da[:, hi], db[:, hi]), r[:, hi])
        out[:, lo] = np.maximum(
            np.maximum(da[:, lo], db[:, lo]), np.minimum(r[:, lo], out[:, hi])
        )
    return DiscreteINS.from_array(a.universe, out)


# Per-trial checks. Each returns None on success or a rendered counterexample.


def _check_commutativity(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    for name, op in (
        ("union", core.union),
        ("intersect", core.intersect),
        ("add", core.add),
        ("pointwise_product", core.pointwise_product),
    ):
        fail = _fail_eq(f"{name}(A, B) != {name}(B, A)", op(a, b), op(b, a), 0.0)
        if fail:
            return fail
    # cartesian product commutes after transposing the pair keys
    other = random_set(rng, random_universe(rng))
    ab = core.cartesian_product(a, other)
    ba = core.cartesian_product(other, a)
    n, m = len(a), len(other)
    transposed = ba.endpoints.reshape(m, n, 6).transpose(1, 0, 2)
    if not np.array_equal(ab.endpoints.reshape(n, m, 6), transposed):
        return "cartesian_product(A, B) differs from key-transposed cartesian_product(B, A)"
    return None


def _check_associativity(rng, universe, tol):
    a, b, c = (random_set(rng, universe) for _ in range(3))
    for name, op, t in (
        ("union", core.union, 0.0),
        ("intersect", core.intersect, 0.0),
        ("add", core.add, tol),
        ("pointwise_product", core.pointwise_product, tol),
    ):
        fail = _fail_eq(
            f"{name}(A, {name}(B, C)) != {name}({name}(A, B), C)",
            op(a, op(b, c)),
            op(op(a, b), c),
            t,
        )
        if fail:
            return fail
    return None


def _check_distributivity(rng, universe, tol):
    a, b, c = (random_set(rng, universe) for _ in range(3))
    lhs = core.union(a, core.intersect(b, c))
    rhs = core.intersect(core.union(a, b), core.union(a, c))
    fail = _fail_eq("A | (B & C) != (A | B) & (A | C)", lhs, rhs, 0.0)
    if fail:
        return fail
    lhs = core.intersect(a, core.union(b, c))
    rhs = core.union(core.intersect(a, b), core.intersect(a, c))
    return _fail_eq("A & (B | C) != (A & B) | (A & C)", lhs, rhs, 0.0)


def _check_idempotency(rng, universe, tol):
    a = random_set(rng, universe)
    return (
        _fail_eq("A | A != A", core.union(a, a), a, 0.0)
        or _fail_eq("A & A != A", core.intersect(a, a), a, 0.0)
        or _fail_eq(
            "tf(tf(A)) != tf(A)",
            core.truth_favorite(core.truth_favorite(a)),
            core.truth_favorite(a),
            0.0,
        )
        or _fail_eq(
            "ff(ff(A)) != ff(A)",
            core.false_favorite(core.false_favorite(a)),
            core.false_favorite(a),
            0.0,
        )
    )


def _check_identity_absorber(rng, universe, tol):
    a = random_set(rng, universe)
    phi = core.empty_set(universe)
    full = core.universal_set(universe)
    return (
        _fail_eq("A & empty != empty", core.intersect(a, phi), phi, 0.0)
        or _fail_eq("A | universal != universal", core.union(a, full), full, 0.0)
        or _fail_eq("A | empty != A", core.union(a, phi), a, 0.0)
        or _fail_eq("A & universal != A", core.intersect(a, full), a, 0.0)
    )


def _check_favorite_additivity(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    s = core.add(a, b)
    return (
        _fail_eq(
            "tf(A + B) != tf(A) + tf(B)",
            core.truth_favorite(s),
            core.add(core.truth_favorite(a), core.truth_favorite(b)),
            tol,
        )
        or _fail_eq(
            "ff(A + B) != ff(A) + ff(B)",
            core.false_favorite(s),
            core.add(core.false_favorite(a), core.false_favorite(b)),
            tol,
        )
    )


def _check_absorption(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    return (
        _fail_eq("A | (A & B) != A", core.union(a, core.intersect(a, b)), a, 0.0)
        or _fail_eq("A & (A | B) != A", core.intersect(a, core.union(a, b)), a, 0.0)
    )


def _check_demorgan(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    return (
        _fail_eq(
            "~(A | B) != ~A & ~B",
            core.complement(core.union(a, b)),
            core.intersect(core.complement(a), core.complement(b)),
            0.0,
        )
        or _fail_eq(
            "~(A & B) != ~A | ~B",
            core.complement(core.intersect(a, b)),
            core.union(core.complement(a), core.complement(b)),
            0.0,
        )
    )


def _check_involution(rng, universe, tol):
    a = random_set(rng, universe)
    return _fail_eq("~~A != A", core.complement(core.complement(a)), a, 0.0)


def _check_lub(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    u = core.union(a, b)
    fail = _fail_contained("A not contained in A | B", a, u) or _fail_contained(
        "B not contained in A | B", b, u
    )
    if fail:
        return fail
    # minimality: the union must sit below every common superset
    for _ in range(3):
        d = _common_superset(rng, a, b)
        fail = _fail_contained("A | B not contained in a common superset D", u, d)
        if fail:
            return fail
    d = random_set(rng, universe)
    if core.is_contained(a, d) and core.is_contained(b, d):
        return _fail_contained("A | B not contained in a common superset D", u, d)
    return None


def _check_glb(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    m = core.intersect(a, b)
    fail = _fail_contained("A & B not contained in A", m, a) or _fail_contained(
        "A & B not contained in B", m, b
    )
    if fail:
        return fail
    for _ in range(3):
        d = _common_subset(rng, a, b)
        fail = _fail_contained("a common subset D not contained in A & B", d, m)
        if fail:
            return fail
    d = random_set(rng, universe)
    if core.is_contained(d, a) and core.is_contained(d, b):
        return _fail_contained("a common subset D not contained in A & B", d, m)
    return None


def _check_containment_complement(rng, universe, tol):
    a = random_set(rng, universe)
    pairs = (
        (a, random_set(rng, universe)),
        (a, random_superset(rng, a)),
        (random_subset(rng, a), a),
    )
    for x, y in pairs:
        forward = core.is_contained(x, y)
        reflected = core.is_contained(core.complement(y), core.complement(x))
        if forward != reflected:
            return (
                f"subset(X, Y) is {forward} but subset(~Y, ~X) is {reflected}\n"
                f"  X[{x.universe[0]}]={_fmt_value(x.endpoints[0])} "
                f"Y[{y.universe[0]}]={_fmt_value(y.endpoints[0])}"
            )
    return None


def _check_favorite_inclusions(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    tf, ff = core.truth_favorite, core.false_favorite
    u, m = core.union(a, b), core.intersect(a, b)
    return (
        _fail_contained("tf(A | B) not contained in tf(A) | tf(B)", tf(u), core.union(tf(a), tf(b)))
        or _fail_contained("tf(A) & tf(B) not contained in tf(A & B)", core.intersect(tf(a), tf(b)), tf(m))
        or _fail_contained("ff(A) | ff(B) not contained in ff(A | B)", core.union(ff(a), ff(b)), ff(u))
        or _fail_contained("ff(A & B) not contained in ff(A) & ff(B)", ff(m), core.intersect(ff(a), ff(b)))
    )


def _valid_endpoints(tag: str, s) -> str | None:
    d = s.endpoints
    if not np.all(np.isfinite(d)):
        return f"{tag}: non-finite endpoint"
    if np.any(d < 0.0) or np.any(d > 1.0):
        return f"{tag}: endpoint outside [0, 1]"
    if np.any(d[:, 0::2] > d[:, 1::2]):
        return f"{tag}: lower endpoint exceeds upper endpoint"
    return None


def _check_closure(rng, universe, tol):
    a, b = random_set(rng, universe), random_set(rng, universe)
    factor = float(rng.random()) * 3.0 + 1e-3
    results = (
        ("complement", core.complement(a)),
        ("union", core.union(a, b)),
        ("intersect", core.intersect(a, b)),
        ("difference", core.difference(a, b)),
        ("add", core.add(a, b)),
        ("pointwise_product", core.pointwise_product(a, b)),
        ("cartesian_product", core.cartesian_product(a, b)),
        ("scalar_mul", core.scalar_mul(factor, a)),
        ("scalar_div", core.scalar_div(a, factor)),
        ("truth_favorite", core.truth_favorite(a)),
        ("false_favorite", core.false_favorite(a)),
    )
    for tag, s in results:
        fail = _valid_endpoints(tag, s)
        if fail:
            return fail
    return None


def _check_containment_order(rng, universe, tol):
    a = random_set(rng, universe)
    if not core.is_contained(a, a):
        return "containment is not reflexive"
    b = random_subset(rng, a)
    c = random_subset(rng, b)
    if not core.is_contained(c, a):
        return "containment is not transitive along C <= B <= A"
    if core.is_contained(a, b) and not core.equals(a, b):
        return "mutual containment without equality"
    same = DiscreteINS.from_array(a.universe, a.endpoints.copy())
    if not (core.is_contained(a, same) and core.is_contained(same, a) and core.equals(a, same)):
        return "identical sets not mutually contained and equal"
    return None


def _check_favorite_annihilation(rng, universe, tol):
    a = random_set(rng, universe)
    for tag, s in (("tf", core.truth_favorite(a)), ("ff", core.false_favorite(a))):
        if np.any(s.endpoints[:, 2:4] != 0.0):
            return f"{tag}(A) left a nonzero indeterminacy interval"
    return None


_Check = Callable[[np.random.Generator, tuple[str, ...], float], "str | None"]

_REGISTRY: dict[str, tuple[str, _Check]] = {
    "commutativity": ("union/intersect/add/product are symmetric; cartesian commutes up to key transposition", _check_commutativity),
    "associativity": ("union/intersect exactly, add/product within tolerance", _check_associativity),
    "distributivity": ("union and intersection distribute over each other", _check_distributivity),
    "idempotency": ("A|A = A, A&A = A, and both favorite operators are idempotent", _check_idempotency),
    "identity-absorber": ("the empty set absorbs intersection and is the union identity; dually for the universal set", _check_identity_absorber),
    "favorite-additivity": ("both favorite operators distribute over addition", _check_favorite_additivity),
    "absorption": ("A|(A&B) = A and A&(A|B) = A", _check_absorption),
    "demorgan": ("complement swaps union and intersection", _check_demorgan),
    "involution": ("double complement is the identity", _check_involution),
    "lub": ("union contains both operands and sits below every sampled common superset", _check_lub),
    "glb": ("intersection is contained in both operands and sits above every sampled common subset", _check_glb),
    "containment-complement": ("subset(A, B) holds iff subset(~B, ~A) holds", _check_containment_complement),
    "favorite-inclusions": ("the four favorite-operator inclusions over union and intersection", _check_favorite_inclusions),
    "closure": ("every operator yields valid membership intervals", _check_closure),
    "containment-order": ("containment is a partial order with equality as antisymmetry", _check_containment_order),
    "favorite-annihilation": ("favorite operators zero out indeterminacy", _check_favorite_annihilation),
}

#: Law names accepted by the command-line `check` command.
CLI_LAWS: tuple[str, ...] = (
    "commutativity",
    "associativity",
    "distributivity",
    "idempotency",
    "identity-absorber",
    "favorite-additivity",
    "absorption",
    "demorgan",
    "involution",
    "lub",
    "glb",
    "containment-complement",
    "favorite-inclusions",
)

#: Every registered check, including the extra structural invariants.
ALL_CHECKS: tuple[str, ...] = tuple(_REGISTRY)


def run_law(
    name: str,
    *,
    trials: int = 1000,
    seed: int = 0,
    tol: float = 1e-12,
    universes: Sequence[tuple[str, ...]] | None = None,
) -> LawResult:
    """Run one named law over ``trials`` seeded random trials.

    When ``universes`` is given, trials cycle through them; otherwise each
    trial draws a fresh universe of size 1 to 8.
    """
    if name not in _REGISTRY:
        raise UnknownLaw(f"unknown law {name!r}; expected one of: " + ", ".join(CLI_LAWS))
    description, check = _REGISTRY[name]
    rng = rng_from_seed(seed)
    for trial in range(trials):
        if universes:
            universe = tuple(universes[trial % len(universes)])
        else:
            universe = random_universe(rng)
        fail = check(rng, universe, tol)
        if fail is not None:
            return LawResult(
                law=name,
                description=description,
                trials=trials,
                seed=seed,
                tol=tol,
                passed=False,
                counterexample=fail,
                failed_trial=trial,
            )
    return LawResult(
        law=name, description=description, trials=trials, seed=seed, tol=tol, passed=True
    )


def run_all_laws(
    *,
    trials: int = 1000,
    seed: int = 0,
    tol: float = 1e-12,
    universes: Sequence[tuple[str, ...]] | None = None,
) -> list[LawResult]:
    """Run every CLI-exposed law with the same settings."""
    return [
        run_law(name, trials=trials, seed=seed, tol=tol, universes=universes)
        for name in CLI_LAWS
    ]
