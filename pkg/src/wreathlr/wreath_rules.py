"""Littlewood-Richardson and one-step branching rules for F wr S_n.

Everything here is combinatorial: the group F enters only through
``l = |Irr F|`` and the dimension vector ``dims`` of its irreducibles,
with ``dims[0]`` belonging to the trivial representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgument
from .partitions import (
    MultiPartition,
    Partition,
    multinomial,
    multipartition_from_json,
    multipartition_key,
    multipartition_to_json,
    standard_tableau_count,
    y_minus,
    y_plus,
)
from .tableaux import lr_coefficient, lr_expand


@dataclass(frozen=True)
class IrrLabel:
    """Index (1-based) and dimension of an irreducible representation of F."""

    index: int
    dim: int

    def __post_init__(self):
        if self.index < 1:
            raise InvalidArgument(f"irreducible indices start at 1, got {self.index}")
        if self.dim < 1:
            raise InvalidArgument(f"dimension must be positive, got {self.dim}")
        if self.index == 1 and self.dim != 1:
            raise InvalidArgument("index 1 is the trivial representation and must have dimension 1")


def irr_labels(dims: Sequence[int]) -> list[IrrLabel]:
    if not dims:
        raise InvalidArgument("dims must list at least the trivial representation")
    return [IrrLabel(i + 1, int(d)) for i, d in enumerate(dims)]


class Decomposition(dict):
    """Multiplicities of irreducibles Phi_Gamma, keyed by multipartition.

    Keys are kept in canonical order; all multiplicities are positive and
    all keys share one component count.
    """

    def __init__(self, terms: Mapping | Iterable = ()):
        items = dict(terms)
        ls = {len(mp) for mp in items}
        if len(ls) > 1:
            raise InvalidArgument(f"mixed component counts in decomposition: {sorted(ls)}")
        clean = {}
        for mp, m in items.items():
            m = int(m)
            if m < 0:
                raise InvalidArgument(f"negative multiplicity {m} for {mp}")
            if m:
                clean[MultiPartition(mp)] = m
        super().__init__(sorted(clean.items(), key=lambda kv: multipartition_key(kv[0])))

    def __add__(self, other: "Decomposition") -> "Decomposition":
        merged = dict(self)
        for mp, m in other.items():
            merged[mp] = merged.get(mp, 0) + m
        return Decomposition(merged)

    def scaled(self, factor: int) -> "Decomposition":
        return Decomposition({mp: m * factor for mp, m in self.items()})

    def support(self) -> set[MultiPartition]:
        return set(self)

    def lines(self) -> list[str]:
        return [f"{m} × {mp}" for mp, m in self.items()]

    def to_json(self) -> dict:
        return {"terms": [{"mult": m, "mp": multipartition_to_json(mp)} for mp, m in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        return cls({multipartition_from_json(t["mp"]): t["mult"] for t in data["terms"]})


def _same_l(*mps: MultiPartition) -> int:
    ls = {len(mp) for mp in mps}
    if len(ls) != 1:
        raise InvalidArgument(f"component counts differ: {[len(mp) for mp in mps]}")
    return ls.pop()


def _check_dims(mp: MultiPartition, dims: Sequence[int]) -> list[int]:
    labels = irr_labels(dims)
    if len(labels) != len(mp):
        raise InvalidArgument(f"{len(mp)} components but {len(labels)} dimensions")
    return [lab.dim for lab in labels]


def wreath_lr_coefficient(big_lam, big_delta, big_gamma) -> int:
    """C^Gamma_{Lambda,Delta}: the product of componentwise LR coefficients."""
    big_lam, big_delta, big_gamma = map(MultiPartition, (big_lam, big_delta, big_gamma))
    _same_l(big_lam, big_delta, big_gamma)
    return prod(lr_coefficient(a, b, c) for a, b, c in zip(big_lam, big_delta, big_gamma))


def wreath_lr_expand(big_lam, big_delta) -> Decomposition:
    """Decomposition of Ind_{F wr S_k x F wr S_r}^{F wr S_(k+r)}(Phi_Lambda ⊠ Phi_Delta)."""
    big_lam, big_delta = MultiPartition(big_lam), MultiPartition(big_delta)
    _same_l(big_lam, big_delta)
    per_component = [lr_expand(a, b) for a, b in zip(big_lam, big_delta)]
    terms = {}
    for choice in product(*(list(d.items()) for d in per_component)):
        gamma = MultiPartition(g for g, _ in choice)
        terms[gamma] = prod(c for _, c in choice)
    return Decomposition(terms)


def induce_one_step(big_lam, dims: Sequence[int]) -> Decomposition:
    """Ind_{F wr S_n}^{F wr S_(n+1)} Phi_Lambda."""
    big_lam = MultiPartition(big_lam)
    dims = _check_dims(big_lam, dims)
    terms = {}
    for i, lam in enumerate(big_lam):
        for gamma in y_plus(lam):
            terms[big_lam.replace(i, gamma)] = dims[i]
    return Decomposition(terms)


def restrict_one_step(big_lam, dims: Sequence[int]) -> Decomposition:
    """Res_{F wr S_(n-1)}^{F wr S_n} Phi_Lambda."""
    big_lam = MultiPartition(big_lam)
    dims = _check_dims(big_lam, dims)
    if big_lam.weight == 0:
        raise InvalidArgument("cannot restrict below F wr S_0")
    terms = {}
    for i, lam in enumerate(big_lam):
        for gamma in y_minus(lam):
            terms[big_lam.replace(i, gamma)] = dims[i]
    return Decomposition(terms)


def unit_multipartition(i: int, l: int) -> MultiPartition:
    """The multipartition with [1] in position ``i`` (0-based) and empty elsewhere."""
    return MultiPartition(Partition([1]) if j == i else Partition() for j in range(l))


def phi_dimension(big_lam, dims: Sequence[int]) -> int:
    """dim Phi_Lambda = multinomial(n; n_i) * prod dims[i]^n_i * f^lambda_i."""
    big_lam = MultiPartition(big_lam)
    dims = _check_dims(big_lam, dims)
    shape = big_lam.shape
    out = multinomial(big_lam.weight, shape)
    for d, n_i, lam in zip(dims, shape, big_lam):
        out *= d**n_i * standard_tableau_count(lam)
    return out
