"""Finite groups on element indices 0..order-1.

``mul`` accepts integers or numpy index arrays and broadcasts, so whole
multiplication tables and coset actions are computed without Python loops.
Concrete groups:

* ``TableGroup``: given by an explicit multiplication table.
* ``SymmetricGroup``: permutations of {0..n-1} in lexicographic order,
  composed as (pq)(x) = p(q(x)).
* ``WreathGroup``: F wr S_n with (f, g)(f', g') = (f (g*f'), g g'),
  where (g*f')(x) = f'(g^-1 x).
* ``DirectProduct``: mixed-radix product, first factor most significant.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import permutations
from math import factorial, prod

import numpy as np

from ..errors import BudgetExceeded, InvalidArgument

DEFAULT_BUDGET = 20000

_CHUNK = 1 << 22


class GroupData:
    """Abstract finite group; subclasses provide ``mul``, ``identity`` and ``inverse``."""

    name: str = "G"
    order: int
    identity: int
    inverse: np.ndarray

    def mul(self, a, b):
        raise NotImplementedError

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def table(self) -> np.ndarray:
        idx = np.arange(self.order)
        return np.asarray(self.mul(idx[:, None], idx[None, :]))

    def conjugate(self, x, g):
        """x g x^-1."""
        return self.mul(self.mul(x, g), self.inverse[x])

    def check_axioms(self) -> None:
        """Exhaustively verify identity, inverse and associativity laws."""
        idx = np.arange(self.order)
        if not (np.all(self.mul(self.identity, idx) == idx) and np.all(self.mul(idx, self.identity) == idx)):
            raise InvalidArgument(f"{self.name}: identity law fails")
        if not np.all(self.mul(idx, self.inverse[idx]) == self.identity):
            raise InvalidArgument(f"{self.name}: inverse law fails")
        table = self.table
        rows = max(1, _CHUNK // max(1, self.order * self.order))
        for start in range(0, self.order, rows):
            a = idx[start:start + rows, None, None]
            left = table[table[a, idx[None, :, None]], idx[None, None, :]]
            right = table[a, table[idx[:, None], idx[None, :]][None, :, :]]
            if not np.array_equal(left, right):
                raise InvalidArgument(f"{self.name}: multiplication is not associative")

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class TableGroup(GroupData):
    def __init__(self, table, name: str = "G", check: bool = True):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidArgument("multiplication table must be a non-empty square matrix")
        m = table.shape[0]
        if table.min() < 0 or table.max() >= m:
            raise InvalidArgument("multiplication table entries out of range")
        self.name = name
        self.order = m
        self.__dict__["table"] = table
        ids = [e for e in range(m) if np.array_equal(table[e], np.arange(m))]
        if not ids:
            raise InvalidArgument(f"{name}: no identity element")
        self.identity = ids[0]
        inv = np.argmax(table == self.identity, axis=1)
        self.inverse = inv
        if check:
            self.check_axioms()

    def mul(self, a, b):
        return self.table[a, b]


def cyclic_group(k: int) -> TableGroup:
    idx = np.arange(k)
    return TableGroup((idx[:, None] + idx[None, :]) % k, name=f"C{k}")


def trivial_group() -> TableGroup:
    return TableGroup([[0]], name="1")


class SymmetricGroup(GroupData):
    def __init__(self, n: int):
        self.n = n
        self.name = f"S{n}"
        self.perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(factorial(n), n)
        self.order = len(self.perms)
        self._weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self._lookup = np.full(max(1, n**n), -1, dtype=np.int64)
        self._lookup[self.perms @ self._weights] = np.arange(self.order)
        self.identity = 0
        self.inverse = self.index_of(np.argsort(self.perms, axis=1))

    def index_of(self, perm_arrays) -> np.ndarray:
        """Indices of permutations given as arrays with last axis of length n."""
        return self._lookup[np.asarray(perm_arrays) @ self._weights]

    def mul(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        composed = np.take_along_axis(self.perms[a], self.perms[b], axis=-1)
        return self.index_of(composed)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    if n < 0:
        raise InvalidArgument(f"n must be non-negative, got {n}")
    return SymmetricGroup(n)


class WreathGroup(GroupData):
    """F wr S_n.  Element index = perm_index * |F|^n + sum_x f(x) |F|^(n-1-x)."""

    def __init__(self, base: GroupData, n: int):
        self.base = base
        self.n = n
        self.sym = symmetric_group(n)
        m = base.order
        self.name = f"{base.name}wrS{n}"
        self.order = m**n * self.sym.order
        self._fweights = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
        fcount = m**n
        codes = np.arange(fcount)
        fs = (codes[:, None] // self._fweights[None, :]) % m if n else np.zeros((1, 0), dtype=np.int64)
        self.f = np.tile(fs, (self.sym.order, 1))
        self.perm_index = np.repeat(np.arange(self.sym.order), fcount)
        self.identity = int(self.encode(np.full(n, base.identity, dtype=np.int64), np.arange(n)))
        idx = np.arange(self.order)
        self.inverse = self._inverse(idx)

    @property
    def perm(self) -> np.ndarray:
        """Permutation arrays of all elements, shape (order, n)."""
        return self.sym.perms[self.perm_index]

    def element(self, idx: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(int(v) for v in self.f[idx]), tuple(int(v) for v in self.sym.perms[self.perm_index[idx]])

    def encode(self, f, perm):
        f = np.asarray(f, dtype=np.int64)
        return self.sym.index_of(perm) * (self.base.order**self.n) + f @ self._fweights

    def mul(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        pa, pb = self.perm_index[a], self.perm_index[b]
        inv_pa = self.sym.perms[self.sym.inverse[pa]]
        shifted = np.take_along_axis(self.f[b], inv_pa, axis=-1)
        f = self.base.mul(self.f[a], shifted)
        p = self.sym.mul(pa, pb)
        return p * (self.base.order**self.n) + f @ self._fweights

    def _inverse(self, a):
        # (f, g)^-1 = (g^-1 * f^-1, g^-1) and (g^-1 * h)(x) = h(g x)
        p = self.sym.perms[self.perm_index[a]]
        finv = self.base.inverse[self.f[a]]
        f = np.take_along_axis(finv, p, axis=-1)
        return self.sym.inverse[self.perm_index[a]] * (self.base.order**self.n) + f @ self._fweights


@lru_cache(maxsize=None)
def _wreath(base: GroupData, n: int) -> WreathGroup:
    return WreathGroup(base, n)


def wreath_group(base: GroupData, n: int, budget: int = DEFAULT_BUDGET) -> WreathGroup:
    if n < 0:
        raise InvalidArgument(f"n must be non-negative, got {n}")
    order = base.order**n * factorial(n)
    if order > budget:
        raise BudgetExceeded(f"|{base.name} wr S{n}| = {order} exceeds the element budget {budget}")
    return _wreath(base, n)


class DirectProduct(GroupData):
    def __init__(self, factors: tuple[GroupData, ...]):
        if not factors:
            raise InvalidArgument("direct product needs at least one factor")
        self.factors = tuple(factors)
        self.name = "x".join(g.name for g in factors)
        orders = [g.order for g in factors]
        self.order = prod(orders)
        self._radix = np.array([prod(orders[i + 1:]) for i in range(len(orders))], dtype=np.int64)
        self.identity = int(self.join([g.identity for g in factors]))
        idx = np.arange(self.order)
        self.inverse = self.join([g.inverse[part] for g, part in zip(self.factors, self.split(idx))])

    def split(self, idx) -> list[np.ndarray]:
        idx = np.asarray(idx)
        return [(idx // r) % g.order for g, r in zip(self.factors, self._radix)]

    def join(self, parts):
        return sum(np.asarray(p) * r for p, r in zip(parts, self._radix))

    def mul(self, a, b):
        return self.join([g.mul(x, y) for g, x, y in zip(self.factors, self.split(a), self.split(b))])


@lru_cache(maxsize=None)
def direct_product(*factors: GroupData) -> DirectProduct:
    return DirectProduct(tuple(factors))


# -- embeddings ------------------------------------------------------------


def check_embedding(h: GroupData, g: GroupData, embedding) -> np.ndarray:
    """Verify that ``embedding`` (H index -> G index) is an injective homomorphism."""
    emb = np.asarray(embedding, dtype=np.int64)
    if emb.shape != (h.order,):
        raise InvalidArgument(f"embedding must list one image per element of {h.name}")
    if emb.min() < 0 or emb.max() >= g.order or len(np.unique(emb)) != h.order:
        raise InvalidArgument("embedding is not injective into the target group")
    idx = np.arange(h.order)
    rows = max(1, _CHUNK // h.order)
    for start in range(0, h.order, rows):
        a = idx[start:start + rows, None]
        if not np.array_equal(g.mul(emb[a], emb[None, :]), emb[h.mul(a, idx[None, :])]):
            raise InvalidArgument(f"embedding {h.name} -> {g.name} is not a homomorphism")
    return emb


def block_embedding(base: GroupData, sizes, budget: int = DEFAULT_BUDGET):
    """F wr S_s1 x ... x F wr S_sk inside F wr S_(s1+...+sk).

    Factor t acts on the positions following those of factors 1..t-1.
    Returns ``(H, G, embedding)``.
    """
    sizes = tuple(int(s) for s in sizes)
    factors = tuple(wreath_group(base, s, budget) for s in sizes)
    target = wreath_group(base, sum(sizes), budget)
    h = direct_product(*factors)
    parts = h.split(np.arange(h.order))
    fs, ps, offset = [], [], 0
    for w, part, s in zip(factors, parts, sizes):
        fs.append(w.f[part])
        ps.append(w.sym.perms[w.perm_index[part]] + offset)
        offset += s
    emb = target.encode(np.concatenate(fs, axis=1), np.concatenate(ps, axis=1))
    return h, target, np.asarray(emb, dtype=np.int64)


def standard_embedding(base: GroupData, n: int, budget: int = DEFAULT_BUDGET):
    """F wr S_n inside F wr S_(n+1), fixing position n+1 with trivial label."""
    small = wreath_group(base, n, budget)
    big = wreath_group(base, n + 1, budget)
    f = np.concatenate([small.f, np.full((small.order, 1), base.identity)], axis=1)
    p = np.concatenate([small.perm, np.full((small.order, 1), n)], axis=1)
    return small, big, np.asarray(big.encode(f, p), dtype=np.int64)
