"""Built-in base groups with complete lists of irreducible representations,
and the JSON group format.

JSON schema::

    {"order": m, "mul": [[...], ...],
     "irreps": [{"degree": d, "matrices": [[[re, im], ...], ...] per element}, ...]}

The first irrep must be the trivial one.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import numpy as np

from ..errors import InvalidArgument
from .groups import GroupData, TableGroup, cyclic_group, symmetric_group
from .reps import MULT_TOL, MatrixRep, character, inner_product

BUILTIN_NAMES = ("C1", "C2", "C3", "C4", "C5", "C6", "S3")


def _cyclic(k: int):
    g = cyclic_group(k)
    idx = np.arange(k)
    irreps = [MatrixRep(g, np.exp(2j * np.pi * j * idx / k).reshape(k, 1, 1)) for j in range(k)]
    return g, irreps


def _s3():
    sym = symmetric_group(3)
    g = TableGroup(sym.table, name="S3")
    # the permutation action on C^3 restricted to the sum-zero plane, basis e1-e2, e2-e3
    basis = np.array([[1, 0], [-1, 1], [0, -1]], dtype=float)
    pinv = np.linalg.pinv(basis)
    perm_mats = np.zeros((6, 3, 3))
    for k, p in enumerate(sym.perms):
        perm_mats[k, p, np.arange(3)] = 1.0
    standard = np.rint(pinv @ perm_mats @ basis)
    sign = np.array([np.linalg.det(m) for m in perm_mats]).round().reshape(6, 1, 1)
    irreps = [MatrixRep(g, np.ones((6, 1, 1))), MatrixRep(g, standard), MatrixRep(g, sign)]
    return g, irreps


@lru_cache(maxsize=None)
def _builtin(name: str):
    if name == "S3":
        g, irreps = _s3()
    elif name.startswith("C") and name[1:].isdigit() and name in BUILTIN_NAMES:
        g, irreps = _cyclic(int(name[1:]))
    else:
        raise InvalidArgument(f"unknown group {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    check_irreps(g, irreps)
    return g, tuple(irreps)


def builtin_group(name: str) -> tuple[GroupData, list[MatrixRep]]:
    """A base group together with its irreducible representations, trivial first."""
    g, irreps = _builtin(name)
    return g, list(irreps)


def check_irreps(group: GroupData, irreps) -> None:
    """Validate that ``irreps`` is a complete irredundant list of irreducibles, trivial first."""
    if not irreps:
        raise InvalidArgument("at least the trivial representation is required")
    for rep in irreps:
        if rep.group is not group:
            raise InvalidArgument("irreducible representation over a different group")
        rep.check_homomorphism()
    first = irreps[0]
    if first.degree != 1 or not np.allclose(first.images, 1.0, atol=MULT_TOL):
        raise InvalidArgument("the first irreducible representation must be trivial")
    if sum(r.degree**2 for r in irreps) != group.order:
        raise InvalidArgument("sum of squared degrees differs from the group order")
    chars = [character(r) for r in irreps]
    gram = np.array([[inner_product(a, b) for b in chars] for a in chars])
    if not np.allclose(gram, np.eye(len(chars)), atol=MULT_TOL):
        raise InvalidArgument("characters are not orthonormal")


def load_group(source, name: str | None = None) -> tuple[GroupData, list[MatrixRep]]:
    """Read a group and its irreducibles from a JSON file path or an already-parsed dict."""
    if isinstance(source, (str, Path)):
        path = Path(source)
        data = json.loads(path.read_text())
        name = name or path.stem
    else:
        data = source
    try:
        order = int(data["order"])
        table = np.asarray(data["mul"], dtype=np.int64)
        if table.shape != (order, order):
            raise InvalidArgument(f"mul must be {order}x{order}")
        group = TableGroup(table, name=name or "F")
        irreps = []
        for entry in data["irreps"]:
            d = int(entry["degree"])
            raw = np.asarray(entry["matrices"], dtype=float)
            if raw.shape != (order, d, d, 2):
                raise InvalidArgument(f"irrep of degree {d} needs matrices of shape ({order},{d},{d},[re,im])")
            irreps.append(MatrixRep(group, raw[..., 0] + 1j * raw[..., 1]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidArgument):
            raise
        raise InvalidArgument(f"malformed group JSON: {exc}") from exc
    check_irreps(group, irreps)
    return group, irreps


def dump_group(group: GroupData, irreps) -> dict:
    return {
        "order": group.order,
        "mul": group.table.tolist(),
        "irreps": [
            {
                "degree": r.degree,
                "matrices": np.stack([r.images.real, r.images.imag], axis=-1).tolist(),
            }
            for r in irreps
        ],
    }
