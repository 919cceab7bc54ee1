"""Checks of the combinatorial rules against explicit matrix computations.

Each ``verify_*`` function returns a ``Report`` holding the combinatorial
prediction, the oracle's decomposition, and whether they agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..partitions import MultiPartition, multipartitions_of
from ..quiver import arrow_exists, arrows_via_branching
from ..wreath_rules import (
    Decomposition,
    induce_one_step,
    phi_dimension,
    restrict_one_step,
    wreath_lr_expand,
)
from .groups import block_embedding, standard_embedding
from .phi import WreathOracle
from .reps import MULT_TOL, character, induce, inner_product, tensor_outer, trivial_rep


@dataclass
class Report:
    mode: str
    instance: str
    expected: Decomposition | dict | None
    observed: Decomposition | dict | None
    passed: bool
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.mode} {self.instance}"
        if not self.passed:
            text += f": expected {_fmt(self.expected)}, oracle {_fmt(self.observed)}"
        if self.notes:
            text += " (" + "; ".join(self.notes) + ")"
        return text

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "instance": self.instance,
            "passed": self.passed,
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "notes": self.notes,
        }


def _fmt(d) -> str:
    if isinstance(d, Decomposition):
        return "{" + ", ".join(f"{mp}: {m}" for mp, m in d.items()) + "}"
    return str(d)


def _jsonable(d):
    if isinstance(d, Decomposition):
        return d.to_json()
    return d


def verify_wreath_lr(oracle: WreathOracle, big_lam, big_delta) -> Report:
    """Ind_{F wr S_k x F wr S_r}^{F wr S_(k+r)}(Phi_Lambda ⊠ Phi_Delta) against the LR rule."""
    big_lam, big_delta = MultiPartition(big_lam), MultiPartition(big_delta)
    k, r = big_lam.weight, big_delta.weight
    _, target, emb = block_embedding(oracle.base, (k, r), oracle.budget)
    induced = induce(tensor_outer(oracle.phi(big_lam), oracle.phi(big_delta)), target, emb)
    observed = oracle.decompose(character(induced), k + r)
    expected = wreath_lr_expand(big_lam, big_delta)
    return Report("lr", f"{big_lam} ⊠ {big_delta}", expected, observed, observed == expected)


def verify_branching(oracle: WreathOracle, big_lam) -> Report:
    """Ind_{F wr S_n}^{F wr S_(n+1)} Phi_Lambda against the one-step branching rule."""
    big_lam = MultiPartition(big_lam)
    _, big, emb = standard_embedding(oracle.base, big_lam.weight, oracle.budget)
    observed = oracle.decompose(character(induce(oracle.phi(big_lam), big, emb)), big_lam.weight + 1)
    expected = induce_one_step(big_lam, oracle.dims)
    return Report("branch-up", str(big_lam), expected, observed, observed == expected)


def verify_restriction(oracle: WreathOracle, big_lam) -> Report:
    """Res_{F wr S_(n-1)}^{F wr S_n} Phi_Lambda against the restriction rule."""
    big_lam = MultiPartition(big_lam)
    n = big_lam.weight
    small, _, emb = standard_embedding(oracle.base, n - 1, oracle.budget)
    chi = character(oracle.phi(big_lam)).restrict(small, emb)
    observed = oracle.decompose(chi, n - 1)
    expected = restrict_one_step(big_lam, oracle.dims)
    return Report("branch-down", str(big_lam), expected, observed, observed == expected)


def verify_quiver_arrows(oracle: WreathOracle, big_lam) -> Report:
    """Ind_{(F wr S_k) x F}^{F wr S_(k+1)}(Phi_Lambda ⊠ tr_F): multiplicities 0/1, support = arrows."""
    big_lam = MultiPartition(big_lam)
    k = big_lam.weight
    _, target, emb = block_embedding(oracle.base, (k, 1), oracle.budget)
    one = oracle.group(1)
    induced = induce(tensor_outer(oracle.phi(big_lam), trivial_rep(one)), target, emb)
    observed = oracle.decompose(character(induced), k + 1)
    predicted = arrows_via_branching(big_lam, oracle.dims)
    by_rule = {d for d in multipartitions_of(k + 1, oracle.l) if arrow_exists(big_lam, d)}
    notes = []
    ok = True
    if any(m > 1 for m in observed.values()):
        ok = False
        notes.append("multiplicity above 1")
    if predicted != by_rule:
        ok = False
        notes.append("branching support differs from the arrow rule")
    expected = Decomposition({d: 1 for d in predicted})
    ok = ok and observed == expected
    return Report("quiver-arrows", str(big_lam), expected, observed, ok, notes)


def verify_orthonormality(oracle: WreathOracle, n: int) -> Report:
    """The Phi_Lambda of F wr S_n are orthonormal, complete, and of the predicted degrees."""
    chars = oracle.characters(n)
    labels = list(chars)
    gram = np.array([[inner_product(chars[a], chars[b]) for b in labels] for a in labels])
    deviation = float(np.max(np.abs(gram - np.eye(len(labels)))))
    integral = float(np.max(np.abs(gram - np.rint(gram.real))))
    degrees = {mp: oracle.phi(mp).degree for mp in labels}
    predicted = {mp: phi_dimension(mp, oracle.dims) for mp in labels}
    order = oracle.group(n).order
    total = sum(d * d for d in degrees.values())
    notes = [f"max |gram - I| = {deviation:.2e}", f"sum dim^2 = {total}, |G| = {order}"]
    ok = deviation < MULT_TOL and integral < MULT_TOL and total == order and degrees == predicted
    return Report(
        "orthonormality",
        f"{oracle.base.name} wr S{n}",
        {"sum_dim_sq": order, "degrees": [predicted[mp] for mp in labels]},
        {"sum_dim_sq": total, "degrees": [degrees[mp] for mp in labels]},
        ok,
        notes,
    )
