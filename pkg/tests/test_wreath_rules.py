import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathlr.errors import InvalidArgument
from wreathlr.partitions import MultiPartition, Partition, multipartitions_of, partitions_of
from wreathlr.tableaux import lr_expand
from wreathlr.wreath_rules import (
    Decomposition,
    IrrLabel,
    induce_one_step,
    irr_labels,
    phi_dimension,
    restrict_one_step,
    unit_multipartition,
    wreath_lr_coefficient,
    wreath_lr_expand,
)

MP = MultiPartition

DIMS = {1: [1], 2: [1, 1], 3: [1, 2, 1], 4: [1, 1, 1, 1]}


def mp_strategy(max_n=4):
    return st.sampled_from(sorted(DIMS)).flatmap(
        lambda l: st.integers(0, max_n).flatmap(lambda n: st.sampled_from(multipartitions_of(n, l)))
    )


def test_seven_term_example():
    lam = MP([[2], [2, 1], [1, 1, 1]])
    got = induce_one_step(lam, (1, 2, 1))
    want = {
        MP([[2, 1], [2, 1], [1, 1, 1]]): 1,
        MP([[3], [2, 1], [1, 1, 1]]): 1,
        MP([[2], [3, 1], [1, 1, 1]]): 2,
        MP([[2], [2, 2], [1, 1, 1]]): 2,
        MP([[2], [2, 1, 1], [1, 1, 1]]): 2,
        MP([[2], [2, 1], [2, 1, 1]]): 1,
        MP([[2], [2, 1], [1, 1, 1, 1]]): 1,
    }
    assert dict(got) == want
    assert len(got) == 7
    assert list(got.values()) == [1, 1, 2, 2, 2, 1, 1]


def test_coefficient_is_componentwise_product():
    lam = MP([[2, 1], [1]])
    delta = MP([[2, 1], [1]])
    gamma = MP([[3, 2, 1], [2]])
    assert wreath_lr_coefficient(lam, delta, gamma) == 2
    assert wreath_lr_coefficient(lam, delta, MP([[3, 2, 1], [1, 1]])) == 2
    assert wreath_lr_coefficient(lam, delta, MP([[6], [2]])) == 0
    # weight shifted between components: the shapes do not add
    assert wreath_lr_coefficient(lam, delta, MP([[3, 2], [2, 1]])) == 0


@pytest.mark.parametrize("lam", [p for n in range(5) for p in partitions_of(n)])
@pytest.mark.parametrize("delta", [p for n in range(4) for p in partitions_of(n)])
def test_single_component_reduces_to_classical(lam, delta):
    got = wreath_lr_expand(MP([lam]), MP([delta]))
    assert {mp[0]: m for mp, m in got.items()} == lr_expand(lam, delta)


@settings(max_examples=80, deadline=None)
@given(mp_strategy(), st.data())
def test_expand_agrees_with_coefficient(lam, data):
    delta = data.draw(st.sampled_from(multipartitions_of(data.draw(st.integers(0, 3)), lam.l)))
    expansion = wreath_lr_expand(lam, delta)
    for gamma in multipartitions_of(lam.weight + delta.weight, lam.l):
        assert expansion.get(gamma, 0) == wreath_lr_coefficient(lam, delta, gamma)


@settings(max_examples=80, deadline=None)
@given(mp_strategy(), st.data())
def test_lr_dimension_bookkeeping(lam, data):
    dims = DIMS[lam.l]
    delta = data.draw(st.sampled_from(multipartitions_of(data.draw(st.integers(0, 3)), lam.l)))
    k, r = lam.weight, delta.weight
    total = sum(m * phi_dimension(g, dims) for g, m in wreath_lr_expand(lam, delta).items())
    assert total == math.comb(k + r, k) * phi_dimension(lam, dims) * phi_dimension(delta, dims)


@settings(max_examples=100, deadline=None)
@given(mp_strategy())
def test_branching_is_lr_against_regular_of_f(lam):
    # Ind to F wr S_(n+1) passes through (F wr S_n) x F, where Phi_Lambda ⊠ reg_F = ⊕ d_i Phi_Lambda ⊠ U_i
    dims = DIMS[lam.l]
    expected = Decomposition()
    for i, d in enumerate(dims):
        expected = expected + wreath_lr_expand(lam, unit_multipartition(i, lam.l)).scaled(d)
    assert induce_one_step(lam, dims) == expected


@settings(max_examples=100, deadline=None)
@given(mp_strategy())
def test_branching_dimensions(lam):
    dims = DIMS[lam.l]
    order_f = sum(d * d for d in dims)
    n = lam.weight
    up = induce_one_step(lam, dims)
    assert sum(m * phi_dimension(g, dims) for g, m in up.items()) == (n + 1) * order_f * phi_dimension(lam, dims)
    if n:
        down = restrict_one_step(lam, dims)
        assert sum(m * phi_dimension(g, dims) for g, m in down.items()) == phi_dimension(lam, dims)


@pytest.mark.parametrize("l", sorted(DIMS))
@pytest.mark.parametrize("n", range(4))
def test_frobenius_duality(l, n):
    dims = DIMS[l]
    for lam in multipartitions_of(n, l):
        up = induce_one_step(lam, dims)
        for gamma in multipartitions_of(n + 1, l):
            assert up.get(gamma, 0) == restrict_one_step(gamma, dims).get(lam, 0)


@pytest.mark.parametrize("l", sorted(DIMS))
@pytest.mark.parametrize("n", range(5))
def test_dimensions_square_sum_to_group_order(l, n):
    dims = DIMS[l]
    order_f = sum(d * d for d in dims)
    total = sum(phi_dimension(mp, dims) ** 2 for mp in multipartitions_of(n, l))
    assert total == order_f**n * math.factorial(n)


def test_phi_dimension_examples():
    assert phi_dimension(MP([[1], []]), [1, 1]) == 1
    assert phi_dimension(MP([[1], [1]]), [1, 1]) == 2
    assert phi_dimension(MP([[], [1], []]), [1, 2, 1]) == 2
    assert phi_dimension(MP([[], [2], []]), [1, 2, 1]) == 4
    assert phi_dimension(MP([[], [], []]), [1, 2, 1]) == 1


def test_restriction_of_empty_raises():
    with pytest.raises(InvalidArgument):
        restrict_one_step(MP([[], []]), [1, 1])


def test_dims_validation():
    with pytest.raises(InvalidArgument):
        induce_one_step(MP([[1], []]), [1])
    with pytest.raises(InvalidArgument):
        induce_one_step(MP([[1], []]), [2, 1])
    with pytest.raises(InvalidArgument):
        IrrLabel(0, 1)
    with pytest.raises(InvalidArgument):
        irr_labels([])


def test_mixed_component_counts():
    with pytest.raises(InvalidArgument):
        wreath_lr_expand(MP([[1]]), MP([[1], []]))
    with pytest.raises(InvalidArgument):
        Decomposition({MP([[1]]): 1, MP([[1], []]): 1})


def test_decomposition_json_round_trip():
    d = induce_one_step(MP([[2], [2, 1], [1, 1, 1]]), (1, 2, 1))
    assert Decomposition.from_json(d.to_json()) == d
    assert d.lines()[2] == "2 × [[2],[3,1],[1,1,1]]"


def test_decomposition_arithmetic():
    a = Decomposition({MP([[1]]): 1})
    b = Decomposition({MP([[1]]): 2, MP([[]]): 0})
    assert a + b == {MP([[1]]): 3}
    assert MP([[]]) not in b
    assert a.scaled(0) == {}
    with pytest.raises(InvalidArgument):
        Decomposition({MP([[1]]): -1})


def test_unit_multipartition():
    assert unit_multipartition(1, 3) == MP([[], [1], []])
    assert unit_multipartition(0, 1) == MP([[1]])
    assert unit_multipartition(0, 2)[0] == Partition([1])
