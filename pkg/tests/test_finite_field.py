import itertools

import numpy as np
import pytest

from glchar.finite_field import get_field, is_prime_power, prime_power

FIELDS = [2, 3, 4, 5, 7, 8, 9, 16]


@pytest.mark.parametrize("q", FIELDS)
def test_field_axioms(q):
    F = get_field(q)
    els = range(q)
    for a, b in itertools.product(els, els):
        assert F.add[a, b] == F.add[b, a]
        assert F.mul[a, b] == F.mul[b, a]
        assert F.add[a, F.neg[a]] == 0
    for a in range(1, q):
        assert F.mul[a, F.inv[a]] == 1
    # distributivity on a sample
    for a, b, c in itertools.islice(itertools.product(els, els, els), 500):
        assert F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]]


@pytest.mark.parametrize("q", FIELDS)
def test_multiplicative_group_is_cyclic(q):
    F = get_field(q)
    orders = {min(k for k in range(1, q) if F.power(a, k) == 1) for a in range(1, q)}
    assert q - 1 in orders


@pytest.mark.parametrize("n,q,count", [(2, 2, 6), (2, 3, 48), (3, 2, 168)])
def test_rank_counts_invertible_matrices(n, q, count):
    F = get_field(q)
    mats = np.array(list(itertools.product(range(q), repeat=n * n))).reshape(-1, n, n)
    assert int((F.rank(mats) == n).sum()) == count


@pytest.mark.parametrize("q,expected", [(8, (2, 3)), (9, (3, 2)), (7, (7, 1))])
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("q", [1, 6, 12, 0])
def test_non_prime_powers_rejected(q):
    assert not is_prime_power(q)
    with pytest.raises(ValueError):
        get_field(q)
