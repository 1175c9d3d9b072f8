import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glchar.partitions import (
    Partition,
    add_partitions,
    conjugate,
    enumerate_partitions,
    n_stat,
    parse_partition,
    z_order,
)

partitions = st.lists(st.integers(1, 6), min_size=0, max_size=6).map(Partition)


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (8, 22), (12, 77)])
def test_partition_counts(n, count):
    assert len(enumerate_partitions(n)) == count


def test_order_is_ascending_lexicographic():
    names = [str(p) for p in enumerate_partitions(5)]
    assert names == ["1^5", "2.1^3", "2^2.1", "3.1^2", "3.2", "4.1", "5"]


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions)
def test_format_parse_roundtrip(lam):
    assert parse_partition(str(lam)) == lam


@given(partitions, partitions)
def test_union_merges_parts(a, b):
    assert Counter(add_partitions(a, b)) == Counter(a) + Counter(b)


@pytest.mark.parametrize("n", range(1, 8))
def test_class_equation_of_symmetric_group(n):
    assert sum(math.factorial(n) // z_order(rho) for rho in enumerate_partitions(n)) == math.factorial(n)


@pytest.mark.parametrize("text,nstat", [("1^5", 10), ("5", 0), ("2.1", 1), ("3.2", 2)])
def test_n_statistic(text, nstat):
    assert n_stat(parse_partition(text)) == nstat


@pytest.mark.parametrize("bad", ["2.x", "-1", "3^"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_partition(bad)


def test_empty_partition_prints_as_zero():
    assert parse_partition("0") == Partition()
