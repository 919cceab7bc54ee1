"""The ordinary quiver of the category F wr FI_n.

Vertices are the multipartitions with ``l`` components and at most ``n``
boxes.  There is a single arrow Lambda -> Delta exactly when Delta is
Lambda with one box added to its first component; arrows always point from
weight k to weight k + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .errors import InvalidArgument
from .partitions import (
    MultiPartition,
    multipartition_from_json,
    multipartition_to_json,
    multipartitions_of,
    sorted_partitions,
    y_plus,
)
from .wreath_rules import irr_labels, unit_multipartition, wreath_lr_expand


@dataclass(frozen=True)
class Quiver:
    n: int
    l: int
    vertices: tuple[MultiPartition, ...]
    arrows: tuple[tuple[MultiPartition, MultiPartition], ...]

    def index(self) -> dict[MultiPartition, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow_indices(self) -> list[tuple[int, int]]:
        idx = self.index()
        return [(idx[a], idx[b]) for a, b in self.arrows]

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g

    def components(self) -> list[list[MultiPartition]]:
        """Weakly connected components, each listed in vertex order."""
        order = self.index()
        comps = [sorted(c, key=order.__getitem__) for c in nx.weakly_connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: order[c[0]])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "vertices": [multipartition_to_json(v) for v in self.vertices],
            "arrows": [list(a) for a in self.arrow_indices()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        vertices = tuple(multipartition_from_json(v) for v in data["vertices"])
        arrows = tuple((vertices[a], vertices[b]) for a, b in data["arrows"])
        return cls(int(data["n"]), int(data["l"]), vertices, arrows)

    def to_dot(self) -> str:
        idx = self.index()
        lines = ["digraph quiver {", "\trankdir=BT;"]
        for v, i in idx.items():
            comp = "[" + ",".join(str(c) for c in component_key(v)) + "]"
            lines.append(f'\tv{i} [label="{v}", comp="{comp}"];')
        for a, b in self.arrow_indices():
            lines.append(f"\tv{a} -> v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def component_key(mp: MultiPartition) -> tuple:
    """Components 2..l, which determine the connected component of a vertex."""
    return tuple(mp[1:])


def arrow_exists(big_lam, big_delta) -> bool:
    big_lam, big_delta = MultiPartition(big_lam), MultiPartition(big_delta)
    if len(big_lam) != len(big_delta):
        raise InvalidArgument("component counts differ")
    return (
        big_delta.weight == big_lam.weight + 1
        and big_delta[0] in y_plus(big_lam[0])
        and big_delta[1:] == big_lam[1:]
    )


def build_quiver(n: int, l: int) -> Quiver:
    if n < 0 or l < 1:
        raise InvalidArgument(f"need n >= 0 and l >= 1, got n={n}, l={l}")
    vertices = tuple(v for k in range(n + 1) for v in multipartitions_of(k, l))
    arrows = []
    for v in vertices:
        if v.weight == n:
            continue
        for gamma in sorted_partitions(y_plus(v[0])):
            arrows.append((v, v.replace(0, gamma)))
    order = {v: i for i, v in enumerate(vertices)}
    arrows.sort(key=lambda a: (order[a[0]], order[a[1]]))
    return Quiver(n, l, vertices, tuple(arrows))


def connected_components(q: Quiver) -> int:
    return nx.number_weakly_connected_components(q.to_networkx())


def arrows_via_branching(big_lam, dims: Sequence[int]) -> set[MultiPartition]:
    """Targets of arrows out of Lambda, read off Ind(Phi_Lambda ⊠ tr_F).

    The trivial representation of F is Phi of ([1], ∅, ..., ∅), so the
    targets are the support of the wreath LR expansion against it.
    """
    big_lam = MultiPartition(big_lam)
    labels = irr_labels(dims)
    if len(labels) != len(big_lam):
        raise InvalidArgument(f"{len(big_lam)} components but {len(labels)} dimensions")
    return wreath_lr_expand(big_lam, unit_multipartition(0, len(big_lam))).support()
