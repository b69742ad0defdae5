"""Value types and set-theoretic operators for interval neutrosophic sets.

An interval neutrosophic set attaches three independent membership degrees to
every element of a universe: truth, indeterminacy, and falsity. Each degree is
a closed subinterval of [0, 1], and nothing ties the three together (their
suprema may sum to 3). The operators below act endpointwise:

* union        -- max on truth, min on indeterminacy and falsity
* intersection -- min on truth, max on indeterminacy and falsity
* complement   -- swaps truth and falsity, reflects indeterminacy at 1
* difference   -- truth limited by the other set's falsity, and dually
* addition     -- endpoint sums saturating at 1
* products     -- probabilistic sum on truth, plain product on the others
* scaling      -- endpoint multiply/divide saturating at 1
* truth/false-favorite -- fold indeterminacy into truth (resp. falsity)

Discrete sets store their endpoints in a float64 array of shape ``(n, 6)``
with columns ``(truth.lo, truth.hi, ind.lo, ind.hi, fal.lo, fal.hi)``, so the
operators reduce to a handful of vectorized min/max/arithmetic calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import InvalidInterval, NonPositiveScalar, UniverseMismatch

__all__ = [
    "UnitInterval",
    "NeutrosophicValue",
    "DiscreteINS",
    "PairedINS",
    "EMPTY_VALUE",
    "UNIVERSAL_VALUE",
    "nv",
    "empty_set",
    "universal_set",
    "complement",
    "is_contained",
    "equals",
    "is_empty",
    "union",
    "intersect",
    "difference",
    "add",
    "pointwise_product",
    "cartesian_product",
    "scalar_mul",
    "scalar_div",
    "truth_favorite",
    "false_favorite",
]

# Column layout of the endpoint matrix.
_TL, _TU, _IL, _IU, _FL, _FU = range(6)
_T = slice(0, 2)
_I = slice(2, 4)
_F = slice(4, 6)


# Endpoints are stored quantized to the 2**-53 lattice. Every point of the
# lattice inside [0, 1] reflects exactly (1 - x is representable), which keeps
# complement an exact involution for values built from literals or files; the
# quantization error itself is at most 2**-54, far below any tolerance used
# here. Values produced by min/max/copy operators and saturating sums stay on
# the lattice; only products and divisions leave it.
_LATTICE = 2.0**53


def _snap(x: float) -> float:
    return round(x * _LATTICE) / _LATTICE


@dataclass(frozen=True, slots=True)
class UnitInterval:
    """Closed subinterval [lo, hi] of the unit interval."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise InvalidInterval("interval endpoints must not be NaN")
        if not 0.0 <= lo <= hi <= 1.0:
            raise InvalidInterval(f"need 0 <= lo <= hi <= 1, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", _snap(lo))
        object.__setattr__(self, "hi", _snap(hi))

    def __str__(self) -> str:
        return f"[{self.lo:g},{self.hi:g}]"


@dataclass(frozen=True, slots=True)
class NeutrosophicValue:
    """Truth/indeterminacy/falsity intervals attached to one element.

    The three components are independent: no constraint links them.
    """

    truth: UnitInterval
    indeterminacy: UnitInterval
    falsity: UnitInterval

    def __str__(self) -> str:
        return f"<{self.truth},{self.indeterminacy},{self.falsity}>"


def nv(
    t_lo: float,
    t_hi: float,
    i_lo: float,
    i_hi: float,
    f_lo: float,
    f_hi: float,
) -> NeutrosophicValue:
    """Shorthand constructor from six endpoints."""
    return NeutrosophicValue(
        UnitInterval(t_lo, t_hi), UnitInterval(i_lo, i_hi), UnitInterval(f_lo, f_hi)
    )


#: Value of the absorbing empty set: no truth, full indeterminacy and falsity.
EMPTY_VALUE = nv(0, 0, 1, 1, 1, 1)

#: Value of the universal set: full truth, no indeterminacy or falsity.
UNIVERSAL_VALUE = nv(1, 1, 0, 0, 0, 0)

_EMPTY_ROW = np.array([0.0, 0.0, 1.0, 1.0, 1.0, 1.0])
_UNIVERSAL_ROW = np.array([1.0, 1.0, 0.0, 0.0, 0.0, 0.0])


def _validate_endpoints(data: np.ndarray) -> None:
    if data.ndim != 2 or data.shape[1] != 6:
        raise InvalidInterval(f"endpoint matrix must have shape (n, 6), got {data.shape}")
    if not np.all(np.isfinite(data)):
        raise InvalidInterval("interval endpoints must be finite")
    if np.any(data < 0.0) or np.any(data > 1.0):
        raise InvalidInterval("interval endpoints must lie in [0, 1]")
    if np.any(data[:, 0::2] > data[:, 1::2]):
        raise InvalidInterval("interval lower bounds must not exceed upper bounds")


class _BaseSet:
    """Shared machinery for discrete sets; labels are opaque hashables."""

    __slots__ = ("_labels", "_index", "_data")

    _label_kind = "element"

    def __init__(self, items: Iterable[tuple[object, NeutrosophicValue]]) -> None:
        labels = []
        rows = []
        for label, value in items:
            self._check_label(label)
            labels.append(label)
            v = value
            rows.append(
                (v.truth.lo, v.truth.hi, v.indeterminacy.lo, v.indeterminacy.hi,
                 v.falsity.lo, v.falsity.hi)
            )
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            seen: set[object] = set()
            for x in labels:
                if x in seen:
                    raise ValueError(f"duplicate {self._label_kind} label: {x!r}")
                seen.add(x)
        data = np.array(rows, dtype=np.float64).reshape(len(labels), 6)
        data.flags.writeable = False
        self._labels = tuple(labels)
        self._index = index
        self._data = data

    @classmethod
    def from_array(cls, labels: Iterable[object], data: np.ndarray):
        """Build a set from an ``(n, 6)`` endpoint matrix, validating it."""
        arr = np.array(data, dtype=np.float64)
        _validate_endpoints(arr)
        np.divide(np.round(arr * _LATTICE), _LATTICE, out=arr)
        labels = tuple(labels)
        if len(labels) != arr.shape[0]:
            raise ValueError("label count does not match endpoint row count")
        for label in labels:
            cls._check_label(label)
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError(f"duplicate {cls._label_kind} label")
        return cls._wrap(labels, index, arr)

    @classmethod
    def _wrap(cls, labels: tuple, index: dict, data: np.ndarray):
        # Trusted path for operator results: data is valid by construction.
        if data.flags.writeable:
            data.flags.writeable = False
        obj = object.__new__(cls)
        obj._labels = labels
        obj._index = index
        obj._data = data
        return obj

    @staticmethod
    def _check_label(label: object) -> None:
        raise NotImplementedError

    @property
    def universe(self) -> tuple:
        """Element labels in declaration order."""
        return self._labels

    @property
    def endpoints(self) -> np.ndarray:
        """Read-only ``(n, 6)`` endpoint matrix."""
        return self._data

    def value(self, label: object) -> NeutrosophicValue:
        row = self._data[self._index[label]]
        return nv(*row)

    def __getitem__(self, label: object) -> NeutrosophicValue:
        return self.value(label)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self._labels)

    def items(self) -> Iterator[tuple[object, NeutrosophicValue]]:
        for label, row in zip(self._labels, self._data):
            yield label, nv(*row)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        try:
            a, b = _aligned(self, other)
        except UniverseMismatch:
            return False
        return bool(np.array_equal(a, b))

    __hash__ = None  # mutable-free but array-backed; not hashable

    def __repr__(self) -> str:
        return f"<{type(self).__name__} of {len(self._labels)} elements>"


class DiscreteINS(_BaseSet):
    """Interval neutrosophic set over a finite universe of named elements.

    Built from ``(label, NeutrosophicValue)`` pairs; label order is preserved
    and significant for serialization, but not for equality or containment.
    """

    _label_kind = "element"

    @staticmethod
    def _check_label(label: object) -> None:
        if not isinstance(label, str) or not label:
            raise ValueError(f"element label must be a non-empty string, got {label!r}")


class PairedINS(_BaseSet):
    """Set over a product universe; elements are (x, y) label pairs."""

    _label_kind = "pair"

    @staticmethod
    def _check_label(label: object) -> None:
        if (
            not isinstance(label, tuple)
            or len(label) != 2
            or not all(isinstance(p, str) and p for p in label)
        ):
            raise ValueError(f"pair label must be a (str, str) tuple, got {label!r}")


def _aligned(a: _BaseSet, b: _BaseSet) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint matrices of a and b with b's rows permuted into a's order.

    Universes must be equal as unordered label sets.
    """
    if type(a) is not type(b):
        raise UniverseMismatch(
            f"cannot combine {type(a).__name__} with {type(b).__name__}"
        )
    if a._labels == b._labels:
        return a._data, b._data
    if len(a._labels) != len(b._labels) or a._index.keys() != b._index.keys():
        raise UniverseMismatch("operands are defined over different universes")
    perm = [b._index[label] for label in a._labels]
    return a._data, b._data[perm]


def _like(a: _BaseSet, data: np.ndarray) -> _BaseSet:
    return type(a)._wrap(a._labels, a._index, data)


def _constant_set(universe: Iterable[str], row: np.ndarray) -> DiscreteINS:
    labels = tuple(universe)
    data = np.tile(row, (len(labels), 1))
    return DiscreteINS.from_array(labels, data)


def empty_set(universe: Iterable[str]) -> DiscreteINS:
    """The absorbing empty set <[0,0],[1,1],[1,1]> over the given universe."""
    return _constant_set(universe, _EMPTY_ROW)


def universal_set(universe: Iterable[str]) -> DiscreteINS:
    """The universal set <[1,1],[0,0],[0,0]> over the given universe."""
    return _constant_set(universe, _UNIVERSAL_ROW)


def complement(a: _BaseSet) -> _BaseSet:
    """Swap truth and falsity; reflect the indeterminacy interval at 1."""
    d = a._data
    out = np.empty_like(d)
    out[:, _T] = d[:, _F]
    out[:, _IL] = 1.0 - d[:, _IU]
    out[:, _IU] = 1.0 - d[:, _IL]
    out[:, _F] = d[:, _T]
    return _like(a, out)


def is_contained(a: _BaseSet, b: _BaseSet) -> bool:
    """True iff a's truth is pointwise no larger than b's, and a's
    indeterminacy and falsity pointwise no smaller, at every element."""
    da, db = _aligned(a, b)
    return bool(
        np.all(da[:, _T] <= db[:, _T])
        and np.all(da[:, _I] >= db[:, _I])
        and np.all(da[:, _F] >= db[:, _F])
    )


def equals(a: _BaseSet, b: _BaseSet) -> bool:
    """Mutual containment; equivalently exact equality of all endpoints."""
    da, db = _aligned(a, b)
    return bool(np.array_equal(da, db))


def is_empty(a: _BaseSet) -> bool:
    """True iff every element carries the empty value <[0,0],[1,1],[1,1]>."""
    return bool(np.all(a._data == _EMPTY_ROW))


def union(a: _BaseSet, b: _BaseSet) -> _BaseSet:
    """Endpointwise max on truth, min on indeterminacy and falsity."""
    da, db = _aligned(a, b)
    out = np.empty_like(da)
    out[:, _T] = np.maximum(da[:, _T], db[:, _T])
    out[:, 2:] = np.minimum(da[:, 2:], db[:, 2:])
    return _like(a, out)


def intersect(a: _BaseSet, b: _BaseSet) -> _BaseSet:
    """Endpointwise min on truth, max on indeterminacy and falsity."""
    da, db = _aligned(a, b)
    out = np.empty_like(da)
    out[:, _T] = np.minimum(da[:, _T], db[:, _T])
    out[:, 2:] = np.maximum(da[:, 2:], db[:, 2:])
    return _like(a, out)


def difference(a: _BaseSet, b: _BaseSet) -> _BaseSet:
    """Remove b from a: truth is capped by b's falsity, falsity raised by
    b's truth, and indeterminacy raised by the reflection of b's."""
    da, db = _aligned(a, b)
    out = np.empty_like(da)
    out[:, _T] = np.minimum(da[:, _T], db[:, _F])
    out[:, _IL] = np.maximum(da[:, _IL], 1.0 - db[:, _IU])
    out[:, _IU] = np.maximum(da[:, _IU], 1.0 - db[:, _IL])
    out[:, _F] = np.maximum(da[:, _F], db[:, _T])
    return _like(a, out)


def add(a: _BaseSet, b: _BaseSet) -> _BaseSet:
    """Endpointwise sum on all three components, saturating at 1."""
    da, db = _aligned(a, b)
    return _like(a, np.minimum(da + db, 1.0))


def pointwise_product(a: _BaseSet, b: _BaseSet) -> _BaseSet:
    """Elementwise product over a shared universe: probabilistic sum on
    truth endpoints, plain product on indeterminacy and falsity."""
    da, db = _aligned(a, b)
    out = np.empty_like(da)
    out[:, _T] = da[:, _T] + db[:, _T] - da[:, _T] * db[:, _T]
    out[:, 2:] = da[:, 2:] * db[:, 2:]
    return _like(a, out)


def cartesian_product(a: DiscreteINS, b: DiscreteINS) -> PairedINS:
    """Product set over the ordered cross universe; same endpoint rules as
    :func:`pointwise_product`, applied to every (x, y) pair."""
    da = a._data[:, None, :]
    db = b._data[None, :, :]
    out = np.empty((len(a), len(b), 6))
    out[:, :, _T] = da[:, :, _T] + db[:, :, _T] - da[:, :, _T] * db[:, :, _T]
    out[:, :, 2:] = da[:, :, 2:] * db[:, :, 2:]
    labels = tuple((x, y) for x in a.universe for y in b.universe)
    index = {label: i for i, label in enumerate(labels)}
    return PairedINS._wrap(labels, index, out.reshape(-1, 6))


def _check_scalar(factor: float) -> float:
    factor = float(factor)
    if math.isnan(factor) or factor <= 0.0:
        raise NonPositiveScalar(f"scalar factor must be > 0, got {factor}")
    return factor


def scalar_mul(factor: float, a: _BaseSet) -> _BaseSet:
    """Scale every endpoint by ``factor`` > 0, saturating at 1."""
    factor = _check_scalar(factor)
    return _like(a, np.minimum(a._data * factor, 1.0))


def scalar_div(a: _BaseSet, divisor: float) -> _BaseSet:
    """Divide every endpoint by ``divisor`` > 0, saturating at 1."""
    divisor = _check_scalar(divisor)
    return _like(a, np.minimum(a._data / divisor, 1.0))


def truth_favorite(a: _BaseSet) -> _BaseSet:
    """Fold indeterminacy into truth (saturating); indeterminacy becomes
    exactly [0,0]; falsity is untouched."""
    d = a._data
    out = np.empty_like(d)
    out[:, _T] = np.minimum(d[:, _T] + d[:, _I], 1.0)
    out[:, _I] = 0.0
    out[:, _F] = d[:, _F]
    return _like(a, out)


def false_favorite(a: _BaseSet) -> _BaseSet:
    """Fold indeterminacy into falsity (saturating); indeterminacy becomes
    exactly [0,0]; truth is untouched."""
    d = a._data
    out = np.empty_like(d)
    out[:, _T] = d[:, _T]
    out[:, _I] = 0.0
    out[:, _F] = np.minimum(d[:, _F] + d[:, _I], 1.0)
    return _like(a, out)
