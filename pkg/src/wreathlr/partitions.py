"""Integer partitions, compositions and multipartitions.

Partitions are immutable tuples of positive, weakly decreasing parts; the
empty partition is the empty tuple.  Every enumeration in this module
returns its results in lexicographically decreasing order of part
sequences, which is the canonical order used throughout the package.

Text syntax: ``[3,2,1]`` for a partition, ``[]`` for the empty one and
``[[2],[1,1],[]]`` for a multipartition.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Iterator

from .errors import InvalidArgument


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped, so ``Partition([2, 1, 0]) == Partition([2, 1])``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidArgument(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise InvalidArgument(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Length of row ``i`` (0-based), zero past the last row."""
        return self[i] if i < len(self) else 0

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


class Composition(tuple):
    """A tuple of non-negative integers of fixed length."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise InvalidArgument(f"composition parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def plus(self, other: "Composition") -> "Composition":
        """Componentwise sum."""
        if len(self) != len(other):
            raise InvalidArgument("compositions of different lengths")
        return Composition(a + b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Composition({list(self)})"


class MultiPartition(tuple):
    """A tuple of ``l`` partitions, one per irreducible representation of F."""

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = [c if isinstance(c, Partition) else Partition(c) for c in components]
        if not comps:
            raise InvalidArgument("a multipartition needs at least one component")
        return super().__new__(cls, comps)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self)

    @property
    def shape(self) -> Composition:
        return Composition(c.weight for c in self)

    @property
    def weight(self) -> int:
        return sum(c.weight for c in self)

    def replace(self, i: int, part: Partition) -> "MultiPartition":
        comps = list(self)
        comps[i] = Partition(part)
        return MultiPartition(comps)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self) + "]"

    def __repr__(self) -> str:
        return f"MultiPartition({[list(c) for c in self]})"


EMPTY = Partition()


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise InvalidArgument(f"n must be non-negative, got {n}")
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first, *rest)))
    return tuple(out)


def compositions_of(n: int, l: int) -> list[Composition]:
    """Weak compositions of ``n`` into ``l`` parts, lexicographically decreasing."""
    if l < 1:
        raise InvalidArgument(f"l must be positive, got {l}")
    if l == 1:
        return [Composition((n,))]
    return [
        Composition((first, *rest))
        for first in range(n, -1, -1)
        for rest in compositions_of(n - first, l - 1)
    ]


def y_plus(lam: Partition) -> set[Partition]:
    """Partitions obtained from ``lam`` by adding one box."""
    lam = Partition(lam)
    out = set()
    for i in range(len(lam) + 1):
        if i == 0 or lam.part(i) < lam[i - 1]:
            rows = list(lam) + [0]
            rows[i] += 1
            out.add(Partition(rows))
    return out


def y_minus(lam: Partition) -> set[Partition]:
    """Partitions obtained from ``lam`` by removing one box."""
    lam = Partition(lam)
    out = set()
    for i in range(len(lam)):
        if lam[i] > lam.part(i + 1):
            rows = list(lam)
            rows[i] -= 1
            out.add(Partition(rows))
    return out


def contains(gamma: Partition, lam: Partition) -> bool:
    """True iff the diagram of ``lam`` fits inside the diagram of ``gamma``."""
    if len(lam) > len(gamma):
        return False
    return all(a <= b for a, b in zip(lam, gamma))


def multipartitions_of(n: int, l: int) -> list[MultiPartition]:
    """All multipartitions of ``n`` with ``l`` components.

    Ordered by shape (lexicographically decreasing composition), then by
    the components, each in lexicographically decreasing order.
    """
    if n < 0:
        raise InvalidArgument(f"n must be non-negative, got {n}")
    out = []
    for shape in compositions_of(n, l):
        for comps in product(*(partitions_of(k) for k in shape)):
            out.append(MultiPartition(comps))
    return out


@lru_cache(maxsize=None)
def multipartition_count(n: int, l: int) -> int:
    """P_l(n) from the convolution P_l(n) = sum_j P_{l-1}(j) P_1(n-j).

    ``l = 0`` is allowed: there is exactly one (empty) multipartition of 0.
    """
    if l == 0:
        return 1 if n == 0 else 0
    return sum(multipartition_count(j, l - 1) * len(_partitions(n - j, n - j)) for j in range(n + 1))


def standard_tableau_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    lam = Partition(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in lam[i + 1:] if r > j)
            hooks *= arm + leg + 1
    return factorial(lam.weight) // hooks


def multinomial(n: int, parts: Iterable[int]) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def partition_key(lam: Partition) -> tuple:
    """Sort key realising the lexicographically decreasing order."""
    return tuple(-p for p in lam)


def multipartition_key(mp: MultiPartition) -> tuple:
    """Sort key: total weight, then shape and components lexicographically decreasing."""
    return (mp.weight, tuple(-s for s in mp.shape), tuple(partition_key(c) for c in mp))


def sorted_partitions(parts: Iterable[Partition]) -> list[Partition]:
    return sorted((Partition(p) for p in parts), key=lambda p: (p.weight, partition_key(p)))


def sorted_multipartitions(mps: Iterable[MultiPartition]) -> list[MultiPartition]:
    return sorted(mps, key=multipartition_key)


def iter_boxes(lam: Partition) -> Iterator[tuple[int, int]]:
    for i, row in enumerate(lam):
        for j in range(row):
            yield i, j


# -- text syntax ---------------------------------------------------------


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"malformed partition syntax: {text!r}") from exc


def _as_partition(value) -> Partition:
    if not isinstance(value, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in value):
        raise InvalidArgument(f"a partition must be a list of integers, got {value!r}")
    if any(p <= 0 for p in value):
        raise InvalidArgument(f"partition parts must be positive: {value!r}")
    return Partition(value)


def parse_partition(text: str) -> Partition:
    """Parse ``"[3,2,1]"`` or ``"[]"``."""
    return _as_partition(_load(text))


def parse_multipartition(text: str) -> MultiPartition:
    """Parse ``"[[2],[1,1],[]]"``."""
    value = _load(text)
    if not isinstance(value, list) or not value or not all(isinstance(c, list) for c in value):
        raise InvalidArgument(f"a multipartition must be a non-empty list of lists, got {text!r}")
    return MultiPartition(_as_partition(c) for c in value)


def multipartition_from_json(value) -> MultiPartition:
    return parse_multipartition(json.dumps(value))


def multipartition_to_json(mp: MultiPartition) -> list[list[int]]:
    return [list(c) for c in mp]
