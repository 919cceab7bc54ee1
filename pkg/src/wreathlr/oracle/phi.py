"""Irreducible representations Phi_Lambda of F wr S_n, built as matrices.

Phi^i_lambda is the extension of U_i^{⊠m} tensored with the inflation of
the Specht module S^lambda.  For a multipartition Lambda the factors
Phi^i_{lambda_i} are combined by outer tensor product and induced from
F wr S_n1 x ... x F wr S_nl, whose i-th factor acts on the i-th block of
consecutive positions.
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidArgument
from ..partitions import MultiPartition, multipartitions_of
from ..wreath_rules import Decomposition
from .builtins import builtin_group, check_irreps, load_group
from .groups import DEFAULT_BUDGET, GroupData, block_embedding, wreath_group
from .reps import (
    ClassFunction,
    MatrixRep,
    character,
    extend,
    induce,
    inflate,
    multiplicity,
    specht_rep,
    tensor_inner,
    tensor_outer,
    trivial_rep,
)


def build_phi(big_lam, base: GroupData, irreps, budget: int = DEFAULT_BUDGET) -> MatrixRep:
    big_lam = MultiPartition(big_lam)
    if len(big_lam) != len(irreps):
        raise InvalidArgument(f"{len(big_lam)} components but F has {len(irreps)} irreducibles")
    n = big_lam.weight
    if n == 0:
        return trivial_rep(wreath_group(base, 0, budget))
    wreath_group(base, n, budget)
    blocks, sizes = [], []
    for i, lam in enumerate(big_lam):
        m = lam.weight
        if m:
            blocks.append(tensor_inner(extend(i + 1, irreps, m, budget), inflate(specht_rep(lam), base, m, budget)))
            sizes.append(m)
    if len(blocks) == 1:
        return blocks[0]
    _, target, emb = block_embedding(base, sizes, budget)
    return induce(tensor_outer(*blocks), target, emb)


class WreathOracle:
    """A base group F with its irreducibles, and cached Phi_Lambda for each n."""

    def __init__(self, base: GroupData, irreps, budget: int = DEFAULT_BUDGET, check: bool = True):
        if check:
            check_irreps(base, irreps)
        self.base = base
        self.irreps = list(irreps)
        self.budget = budget
        self._phi: dict[MultiPartition, MatrixRep] = {}
        self._chars: dict[int, dict[MultiPartition, ClassFunction]] = {}

    @classmethod
    def builtin(cls, name: str, budget: int = DEFAULT_BUDGET) -> "WreathOracle":
        base, irreps = builtin_group(name)
        return cls(base, irreps, budget, check=False)

    @classmethod
    def from_json(cls, source, budget: int = DEFAULT_BUDGET) -> "WreathOracle":
        base, irreps = load_group(source)
        return cls(base, irreps, budget, check=False)

    @property
    def l(self) -> int:
        return len(self.irreps)

    @property
    def dims(self) -> list[int]:
        return [r.degree for r in self.irreps]

    def group(self, n: int):
        return wreath_group(self.base, n, self.budget)

    def phi(self, big_lam) -> MatrixRep:
        big_lam = MultiPartition(big_lam)
        if big_lam not in self._phi:
            self._phi[big_lam] = build_phi(big_lam, self.base, self.irreps, self.budget)
        return self._phi[big_lam]

    def characters(self, n: int) -> dict[MultiPartition, ClassFunction]:
        if n not in self._chars:
            self._chars[n] = {mp: character(self.phi(mp)) for mp in multipartitions_of(n, self.l)}
        return self._chars[n]

    def decompose(self, chi: ClassFunction, n: int) -> Decomposition:
        """Multiplicities of each Phi_Gamma (Gamma of weight n) in ``chi``.

        Raises if an inner product is not within tolerance of an integer or
        if the constituents do not account for the whole degree.
        """
        chars = self.characters(n)
        terms = {mp: multiplicity(chi, c) for mp, c in chars.items()}
        total = sum(m * int(round(c.values[c.group.identity].real)) for (mp, m), c in zip(terms.items(), chars.values()))
        degree = chi.values[chi.group.identity]
        if not np.isclose(degree, total):
            raise ArithmeticError(f"constituents account for degree {total}, expected {degree.real:g}")
        return Decomposition(terms)
