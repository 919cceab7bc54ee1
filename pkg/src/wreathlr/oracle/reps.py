"""Matrix representations, characters, and the constructions built from them.

A ``MatrixRep`` stores one complex matrix per group element (array of shape
``(order, d, d)``).  All sums run over every group element; conjugacy
classes are never enumerated.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import numpy as np

from ..errors import BudgetExceeded, InvalidArgument, NonIntegralMultiplicity
from ..partitions import Partition
from ..tableaux import standard_tableaux
from .groups import (
    GroupData,
    WreathGroup,
    check_embedding,
    direct_product,
    symmetric_group,
    wreath_group,
    DEFAULT_BUDGET,
)

HOM_TOL = 1e-9
MULT_TOL = 1e-6
SPECHT_MAX = 5
# complex entries held by one MatrixRep (order * degree^2)
MATRIX_BUDGET = 40_000_000

_CHUNK = 1 << 22


class MatrixRep:
    def __init__(self, group: GroupData, images):
        images = np.asarray(images, dtype=np.complex128)
        if images.ndim != 3 or images.shape[0] != group.order or images.shape[1] != images.shape[2]:
            raise InvalidArgument(f"need one square matrix per element of {group.name}, got shape {images.shape}")
        self.group = group
        self.images = images

    @property
    def degree(self) -> int:
        return self.images.shape[1]

    def __getitem__(self, g) -> np.ndarray:
        return self.images[g]

    def character(self) -> "ClassFunction":
        return character(self)

    def check_homomorphism(self, tol: float = HOM_TOL) -> None:
        """Raise unless image(gh) = image(g) image(h) for every pair, and image(e) = I."""
        g = self.group
        d = self.degree
        if not np.allclose(self.images[g.identity], np.eye(d), atol=tol, rtol=0):
            raise InvalidArgument("identity does not act as the identity matrix")
        idx = np.arange(g.order)
        rows = max(1, _CHUNK // max(1, g.order * d * d))
        for start in range(0, g.order, rows):
            a = idx[start:start + rows]
            prods = g.mul(a[:, None], idx[None, :])
            lhs = self.images[prods]
            rhs = np.einsum("aij,bjk->abik", self.images[a], self.images)
            if np.max(np.abs(lhs - rhs), initial=0.0) > tol:
                raise InvalidArgument("homomorphism law fails")

    def __repr__(self) -> str:
        return f"<MatrixRep of {self.group.name}, degree {self.degree}>"


class ClassFunction:
    def __init__(self, group: GroupData, values):
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != (group.order,):
            raise InvalidArgument(f"need one value per element of {group.name}")
        self.group = group
        self.values = values

    def is_class_function(self, tol: float = HOM_TOL) -> bool:
        g = self.group
        idx = np.arange(g.order)
        rows = max(1, _CHUNK // g.order)
        for start in range(0, g.order, rows):
            x = idx[start:start + rows, None]
            if np.max(np.abs(self.values[g.conjugate(x, idx[None, :])] - self.values[None, :])) > tol:
                return False
        return True

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self.group, other.group)
        return ClassFunction(self.group, self.values + other.values)

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            _same_group(self.group, other.group)
            return ClassFunction(self.group, self.values * other.values)
        return ClassFunction(self.group, self.values * other)

    __rmul__ = __mul__

    def restrict(self, subgroup: GroupData, embedding) -> "ClassFunction":
        return ClassFunction(subgroup, self.values[np.asarray(embedding)])

    def __repr__(self) -> str:
        return f"<ClassFunction on {self.group.name}>"


def _same_group(a: GroupData, b: GroupData) -> None:
    if a is not b:
        raise InvalidArgument(f"group mismatch: {a.name} vs {b.name}")


def _check_budget(order: int, degree: int) -> None:
    if order * degree * degree > MATRIX_BUDGET:
        raise BudgetExceeded(f"representation of degree {degree} on {order} elements exceeds the matrix budget")


def character(rep: MatrixRep) -> ClassFunction:
    return ClassFunction(rep.group, np.trace(rep.images, axis1=1, axis2=2))


def inner_product(a: ClassFunction, b: ClassFunction) -> complex:
    """<a, b> = 1/|G| sum_g a(g) conj(b(g))."""
    _same_group(a.group, b.group)
    return complex(np.vdot(b.values, a.values) / a.group.order)


def multiplicity(a: ClassFunction, b: ClassFunction, tol: float = MULT_TOL) -> int:
    """<a, b> rounded to a non-negative integer; raises if it is not one."""
    value = inner_product(a, b)
    m = round(value.real)
    if abs(value - m) >= tol or m < 0:
        raise NonIntegralMultiplicity(f"inner product {value} is not a non-negative integer")
    return int(m)


def trivial_rep(group: GroupData) -> MatrixRep:
    return MatrixRep(group, np.ones((group.order, 1, 1)))


def regular_character(group: GroupData) -> ClassFunction:
    values = np.zeros(group.order)
    values[group.identity] = group.order
    return ClassFunction(group, values)


# -- symmetric group -------------------------------------------------------


@lru_cache(maxsize=None)
def specht_rep(lam) -> MatrixRep:
    """Young's natural representation on standard polytabloids.

    Polytabloids e_T = sum over the column group of T of sign * {sigma T}
    live in the permutation module on tabloids; pi e_T = e_(pi T) is
    expanded in the basis of standard polytabloids, which gives integral
    matrices.
    """
    lam = Partition(lam)
    n = lam.weight
    if n > SPECHT_MAX:
        raise BudgetExceeded(f"Specht modules are built only up to weight {SPECHT_MAX}")
    sym = symmetric_group(n)
    syt = standard_tableaux(lam)

    # a tabloid is encoded by the row label of each entry 0..n-1
    tabloids: dict[tuple[int, ...], int] = {}
    for labels in sorted(set(permutations([i for i, r in enumerate(lam) for _ in range(r)]))):
        tabloids[labels] = len(tabloids)

    columns = [[i for i, r in enumerate(lam) if r > j] for j in range(lam.part(0))]

    def polytabloid(filling) -> np.ndarray:
        # filling[i][j] is the entry (0-based) at box (i, j)
        vec = np.zeros(len(tabloids))
        col_perms = [list(permutations(range(len(col)))) for col in columns]
        for choice in product(*col_perms):
            sign = 1
            rows = [0] * n
            for j, (col, sigma) in enumerate(zip(columns, choice)):
                sign *= _perm_sign(sigma)
                for a, i in enumerate(col):
                    rows[filling[col[sigma[a]]][j]] = i
            vec[tabloids[tuple(rows)]] += sign
        return vec

    base = [[[v - 1 for v in row] for row in t] for t in syt]
    basis = np.stack([polytabloid(t) for t in base], axis=1)
    images = np.zeros((sym.order, len(syt), len(syt)))
    for p_idx, perm in enumerate(sym.perms):
        moved = np.stack([polytabloid([[perm[v] for v in row] for row in t]) for t in base], axis=1)
        coeffs, *_ = np.linalg.lstsq(basis, moved, rcond=None)
        rounded = np.rint(coeffs)
        if np.max(np.abs(basis @ rounded - moved), initial=0.0) > 1e-9:
            raise ArithmeticError(f"polytabloid expansion failed for {lam}")
        images[p_idx] = rounded
    return MatrixRep(sym, images)


def _perm_sign(p) -> int:
    sign, seen = 1, set()
    for start in range(len(p)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- wreath product constructions -------------------------------------------


def inflate(rep: MatrixRep, base: GroupData, n: int, budget: int = DEFAULT_BUDGET) -> MatrixRep:
    """Pull a representation of S_n back along F wr S_n -> S_n: (f, pi) acts as pi."""
    w = wreath_group(base, n, budget)
    _same_group(rep.group, w.sym)
    return MatrixRep(w, rep.images[w.perm_index])


def extend(i: int, irreps, n: int, budget: int = DEFAULT_BUDGET) -> MatrixRep:
    """The F wr S_n action on the n-fold tensor power of the F-irrep ``irreps[i-1]``.

    (f, pi) sends u_1 ⊗ ... ⊗ u_n to the tensor whose slot x holds
    rho(f(x)) u_(pi^-1 x).  ``i`` is 1-based (``i = 1`` is the trivial rep).
    """
    i = getattr(i, "index", i)
    rho = irreps[i - 1]
    base = rho.group
    w = wreath_group(base, n, budget)
    d = rho.degree
    dim = d**n
    _check_budget(w.order, dim)

    # slot permutation: basis multi-index j maps to j' with j'_x = j_(pi^-1 x)
    multi = np.array(list(product(range(d), repeat=n)), dtype=np.int64).reshape(dim, n)
    weights = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    sym = w.sym
    inv = sym.perms[sym.inverse]
    slot = np.zeros((sym.order, dim, dim))
    for p in range(sym.order):
        target = np.take(multi, inv[p], axis=1) @ weights
        slot[p, target, np.arange(dim)] = 1.0

    local = np.ones((w.order, 1, 1), dtype=np.complex128)
    for x in range(n):
        factor = rho.images[w.f[:, x]]
        local = np.einsum("aij,akl->aikjl", local, factor).reshape(w.order, local.shape[1] * d, local.shape[2] * d)
    return MatrixRep(w, local @ slot[w.perm_index])


def tensor_inner(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    _same_group(a.group, b.group)
    _check_budget(a.group.order, a.degree * b.degree)
    g = a.group.order
    images = np.einsum("aij,akl->aikjl", a.images, b.images).reshape(g, a.degree * b.degree, a.degree * b.degree)
    return MatrixRep(a.group, images)


def tensor_outer(*reps: MatrixRep) -> MatrixRep:
    """Outer tensor product over the direct product of the reps' groups."""
    group = direct_product(*(r.group for r in reps))
    dim = int(np.prod([r.degree for r in reps]))
    _check_budget(group.order, dim)
    parts = group.split(np.arange(group.order))
    images = np.ones((group.order, 1, 1), dtype=np.complex128)
    for r, part in zip(reps, parts):
        factor = r.images[part]
        images = np.einsum("aij,akl->aikjl", images, factor).reshape(
            group.order, images.shape[1] * r.degree, images.shape[2] * r.degree
        )
    return MatrixRep(group, images)


def restrict(rep: MatrixRep, subgroup: GroupData, embedding) -> MatrixRep:
    emb = check_embedding(subgroup, rep.group, embedding)
    return MatrixRep(subgroup, rep.images[emb])


class CosetData:
    """Left cosets gH of an embedded subgroup.

    Representatives are the least element index in each coset.  For every
    x in G, ``coset_of[x]`` and ``h_of[x]`` satisfy x = reps[coset_of[x]] * h_of[x].
    """

    def __init__(self, group: GroupData, subgroup: GroupData, embedding):
        emb = check_embedding(subgroup, group, embedding)
        self.group, self.subgroup, self.embedding = group, subgroup, emb
        coset_of = np.full(group.order, -1, dtype=np.int64)
        h_of = np.full(group.order, -1, dtype=np.int64)
        reps = []
        for g in range(group.order):
            if coset_of[g] >= 0:
                continue
            members = group.mul(g, emb)
            coset_of[members] = len(reps)
            h_of[members] = np.arange(subgroup.order)
            reps.append(g)
        self.reps = np.array(reps, dtype=np.int64)
        self.coset_of, self.h_of = coset_of, h_of

    @property
    def index(self) -> int:
        return len(self.reps)

    def action(self):
        """For all g and cosets i: g s_i = s_j h, returned as (j, h) arrays of shape (|G|, index)."""
        x = self.group.mul(np.arange(self.group.order)[:, None], self.reps[None, :])
        return self.coset_of[x], self.h_of[x]


def induce(rep: MatrixRep, group: GroupData, embedding) -> MatrixRep:
    """Ind_H^G as block matrices: g (s_i, u) = (s_j, h u) where g s_i = s_j h."""
    cosets = CosetData(group, rep.group, embedding)
    m, d = cosets.index, rep.degree
    _check_budget(group.order, m * d)
    j, h = cosets.action()
    images = np.zeros((group.order, m, d, m, d), dtype=np.complex128)
    gi = np.arange(group.order)[:, None]
    ii = np.arange(m)[None, :]
    images[gi, j, :, ii, :] = rep.images[h]
    return MatrixRep(group, images.reshape(group.order, m * d, m * d))


def induced_character(chi: ClassFunction, group: GroupData, embedding) -> ClassFunction:
    """Trace of the induced action: sum over cosets fixed by g of chi(h)."""
    cosets = CosetData(group, chi.group, embedding)
    j, h = cosets.action()
    fixed = j == np.arange(cosets.index)[None, :]
    return ClassFunction(group, np.where(fixed, chi.values[h], 0).sum(axis=1))
