"""Skew tableaux, lattice words and classical Littlewood-Richardson coefficients.

The coefficient c^gamma_{lam,delta} counts semistandard skew tableaux of
shape gamma/lam and content delta whose row word is a lattice word.
Tableaux are enumerated directly: boxes are filled in row-word order
(rows top to bottom, each row right to left) and every partial filling is
pruned as soon as it breaks row/column monotonicity, the content, or the
lattice condition.  The lattice condition is prefix-closed, so pruning it
early loses nothing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidArgument
from .partitions import Composition, Partition, contains, partitions_of


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise InvalidArgument(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def row_span(self, i: int) -> range:
        """Columns of row ``i`` that belong to the skew diagram."""
        return range(self.inner.part(i), self.outer.part(i))

    def __contains__(self, box) -> bool:
        i, j = box
        return 0 <= i and j in self.row_span(i)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i in range(len(self.outer)):
            for j in self.row_span(i):
                yield i, j


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape; ``rows[i]`` lists row ``i`` left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        n_rows = len(self.shape.outer)
        rows = rows + ((),) * (n_rows - len(rows))
        if len(rows) != n_rows:
            raise InvalidArgument("more rows than the outer shape")
        for i, r in enumerate(rows):
            if len(r) != len(self.shape.row_span(i)):
                raise InvalidArgument(f"row {i} needs {len(self.shape.row_span(i))} entries, got {len(r)}")
            if any(v < 1 for v in r):
                raise InvalidArgument("entries must be positive")
        object.__setattr__(self, "rows", rows)

    def __getitem__(self, box) -> int:
        i, j = box
        return self.rows[i][j - self.shape.inner.part(i)]

    @property
    def content(self) -> Composition:
        counts = Counter(v for r in self.rows for v in r)
        top = max(counts, default=0)
        return Composition(counts[v] for v in range(1, top + 1))

    def __str__(self) -> str:
        lines = []
        for i, r in enumerate(self.rows):
            cells = ["."] * self.shape.inner.part(i) + [str(v) for v in r]
            lines.append(" ".join(cells))
        return " / ".join(lines)


def row_word(t: SkewTableau) -> tuple[int, ...]:
    """Entries read right to left within rows, rows top to bottom."""
    return tuple(v for r in t.rows for v in reversed(r))


def lattice_violation(word: Sequence[int] | str) -> int | None:
    """Length of the shortest prefix that is not a lattice word, or None.

    Accepts a digit string such as ``"11322"`` as well as a sequence of ints.
    """
    counts = Counter()
    for pos, v in enumerate(word, 1):
        v = int(v)
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return pos
    return None


def is_lattice_word(word: Sequence[int] | str) -> bool:
    return lattice_violation(word) is None


def is_semistandard(t: SkewTableau) -> bool:
    """Rows weakly increase, columns strictly increase."""
    for r in t.rows:
        if any(a > b for a, b in zip(r, r[1:])):
            return False
    shape = t.shape
    for i, j in shape.boxes():
        if (i + 1, j) in shape and t[i, j] >= t[i + 1, j]:
            return False
    return True


def _check_shapes(gamma: Partition, lam: Partition, delta: Partition) -> None:
    if not contains(gamma, lam):
        raise InvalidArgument(f"{lam} is not contained in {gamma}")
    if gamma.weight != lam.weight + delta.weight:
        raise InvalidArgument(
            f"weight mismatch: |{gamma}| != |{lam}| + |{delta}|"
        )


def enumerate_lr_tableaux(gamma, lam, delta) -> list[SkewTableau]:
    """LR tableaux of shape gamma/lam and content delta.

    Results are ordered by row word, lexicographically decreasing.
    """
    gamma, lam, delta = Partition(gamma), Partition(lam), Partition(delta)
    _check_shapes(gamma, lam, delta)
    shape = SkewShape(gamma, lam)
    cells = [(i, j) for i in range(len(gamma)) for j in reversed(shape.row_span(i))]
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (len(delta) + 1)
    found = []

    def fill(k: int) -> None:
        if k == len(cells):
            rows = tuple(tuple(grid[i, j] for j in shape.row_span(i)) for i in range(len(gamma)))
            found.append(SkewTableau(shape, rows))
            return
        i, j = cells[k]
        hi = grid.get((i, j + 1), len(delta))
        lo = grid.get((i - 1, j), 0) + 1
        for v in range(hi, lo - 1, -1):
            if counts[v] == delta[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[i, j] = v
            counts[v] += 1
            fill(k + 1)
            counts[v] -= 1
            del grid[i, j]

    fill(0)
    return found


@lru_cache(maxsize=None)
def _lr(lam: Partition, delta: Partition, gamma: Partition) -> int:
    return len(enumerate_lr_tableaux(gamma, lam, delta))


def lr_coefficient(lam, delta, gamma) -> int:
    """c^gamma_{lam,delta}; zero when the shapes are incompatible."""
    lam, delta, gamma = Partition(lam), Partition(delta), Partition(gamma)
    if gamma.weight != lam.weight + delta.weight or not contains(gamma, lam):
        return 0
    return _lr(lam, delta, gamma)


def lr_expand(lam, delta) -> dict[Partition, int]:
    """Non-zero c^gamma_{lam,delta} over all gamma, in canonical order of gamma."""
    lam, delta = Partition(lam), Partition(delta)
    out = {}
    for gamma in partitions_of(lam.weight + delta.weight):
        if not (contains(gamma, lam) and contains(gamma, delta)):
            continue
        c = _lr(lam, delta, gamma)
        if c:
            out[gamma] = c
    return out


def standard_tableaux(lam) -> list[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of shape ``lam`` with entries 1..n, as row tuples."""
    lam = Partition(lam)
    n = lam.weight
    rows: list[list[int]] = [[] for _ in lam]
    out = []

    def place(v: int) -> None:
        if v > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, r in enumerate(rows):
            if len(r) < lam[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(v)
                place(v + 1)
                r.pop()

    place(1)
    return out
