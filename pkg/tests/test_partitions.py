import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathlr.errors import InvalidArgument
from wreathlr.partitions import (
    Composition,
    MultiPartition,
    Partition,
    compositions_of,
    contains,
    multinomial,
    multipartition_count,
    multipartition_from_json,
    multipartition_to_json,
    multipartitions_of,
    parse_multipartition,
    parse_partition,
    partitions_of,
    sorted_multipartitions,
    standard_tableau_count,
    y_minus,
    y_plus,
)
from wreathlr.tableaux import standard_tableaux

# OEIS A000041
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def brute_partitions(n):
    """Every multiset of positive parts summing to n, via sorted tuples."""
    out = set()
    for k in range(n + 1):
        for combo in itertools.combinations_with_replacement(range(1, n + 1), k):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


partition_st = st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_partition_normalises_trailing_zeros():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    assert Partition([]).weight == 0
    assert str(Partition([3, 2, 1])) == "[3,2,1]"
    assert str(Partition()) == "[]"


@pytest.mark.parametrize("bad", [[1, 2], [2, -1], [0, 1]])
def test_partition_rejects_non_partitions(bad):
    with pytest.raises(InvalidArgument):
        Partition(bad)


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(len(PARTITION_NUMBERS))] == PARTITION_NUMBERS


@pytest.mark.parametrize("n", range(8))
def test_partitions_match_brute_force(n):
    got = partitions_of(n)
    assert set(got) == brute_partitions(n)
    # lexicographically decreasing
    assert got == sorted(got, reverse=True)


def test_partitions_of_4_order():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_y_plus_y_minus_examples():
    assert y_minus(Partition([2, 1])) == {Partition([2]), Partition([1, 1])}
    assert y_plus(Partition([2, 1])) == {Partition([3, 1]), Partition([2, 2]), Partition([2, 1, 1])}
    assert y_plus(Partition()) == {Partition([1])}
    assert y_minus(Partition()) == set()


@given(partition_st)
def test_y_plus_size_is_distinct_parts_plus_one(lam):
    assert len(y_plus(lam)) == len(set(lam)) + 1
    assert len(y_minus(lam)) == len(set(lam))


@given(partition_st)
def test_box_moves_are_dual(lam):
    for mu in y_plus(lam):
        assert mu.weight == lam.weight + 1
        assert lam in y_minus(mu)
        assert contains(mu, lam)
    for mu in y_minus(lam):
        assert lam in y_plus(mu)


def test_contains():
    assert contains(Partition([4, 3, 1]), Partition([2, 1]))
    assert not contains(Partition([2, 2]), Partition([3]))
    assert contains(Partition([1]), Partition())


@pytest.mark.parametrize("n", range(9))
def test_sum_of_squares_of_hook_counts(n):
    assert sum(standard_tableau_count(p) ** 2 for p in partitions_of(n)) == math.factorial(n)


@pytest.mark.parametrize("lam", [p for n in range(7) for p in partitions_of(n)])
def test_hook_length_against_enumeration(lam):
    assert standard_tableau_count(lam) == len(standard_tableaux(lam))


def test_hook_length_examples():
    assert standard_tableau_count(Partition([2, 1])) == 2
    assert standard_tableau_count(Partition([3, 2])) == 5
    assert standard_tableau_count(Partition([4, 3, 1])) == 70


def test_compositions():
    assert compositions_of(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(compositions_of(5, 3)) == math.comb(7, 2)
    assert Composition([1, 0]).plus(Composition([0, 2])) == Composition([1, 2])


def brute_multipartitions(n, l):
    out = []
    for comp in itertools.product(range(n + 1), repeat=l):
        if sum(comp) == n:
            for parts in itertools.product(*(brute_partitions(c) for c in comp)):
                out.append(parts)
    return out


@pytest.mark.parametrize("n,l", [(n, l) for n in range(6) for l in range(1, 5)])
def test_multipartitions_match_brute_force(n, l):
    got = multipartitions_of(n, l)
    want = brute_multipartitions(n, l)
    assert len(got) == len(want) == len(set(got))
    assert {tuple(tuple(p) for p in mp) for mp in got} == set(want)
    assert multipartition_count(n, l) == len(want)


def test_multipartition_count_generating_function():
    # coefficients of prod_k (1-x^k)^-2, OEIS A000712
    assert [multipartition_count(n, 2) for n in range(8)] == [1, 2, 5, 10, 20, 36, 65, 110]
    assert multipartition_count(0, 0) == 1
    assert multipartition_count(3, 0) == 0


def test_multipartition_order():
    mps = multipartitions_of(2, 3)
    assert len(mps) == 9
    assert mps == sorted_multipartitions(reversed(mps))
    assert mps[0] == MultiPartition([[2], [], []])


def test_multipartition_basics():
    mp = MultiPartition([[2], [2, 1], [1, 1, 1]])
    assert mp.l == 3
    assert mp.weight == 8
    assert mp.shape == (2, 3, 3)
    assert str(mp) == "[[2],[2,1],[1,1,1]]"
    assert mp.replace(0, Partition([3])) == MultiPartition([[3], [2, 1], [1, 1, 1]])


def test_multinomial():
    assert multinomial(4, [2, 1, 1]) == 12
    assert multinomial(0, []) == 1


@pytest.mark.parametrize("text", ["[3,2,1]", "[]", "[1]", " [ 2 , 2 ] "])
def test_parse_partition_round_trip(text):
    lam = parse_partition(text)
    assert parse_partition(str(lam)) == lam


@pytest.mark.parametrize("text", ["[2,1", "[1,2]", "3", "[a]", "[[1]]", "[1.5]", "[-1]"])
def test_parse_partition_errors(text):
    with pytest.raises(InvalidArgument):
        parse_partition(text)


@pytest.mark.parametrize("text", ["[[1],[2]", "[1,2]", "[[1],[1,2]]", "[]"])
def test_parse_multipartition_errors(text):
    with pytest.raises(InvalidArgument):
        parse_multipartition(text)


@settings(max_examples=50)
@given(st.integers(0, 5), st.integers(1, 4), st.data())
def test_multipartition_round_trips(n, l, data):
    mp = data.draw(st.sampled_from(multipartitions_of(n, l)))
    assert parse_multipartition(str(mp)) == mp
    assert multipartition_from_json(multipartition_to_json(mp)) == mp
