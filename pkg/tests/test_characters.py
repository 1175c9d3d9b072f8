import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from glchar.characters import char_value, full_table, s_sum
from glchar.class_space import identity_class
from glchar.dual_space import degree
from glchar.exact_arith import CycloSum, common_modulus, eps_exponent
from glchar.frobenius_orbits import enumerate_orbits
from glchar.verification import certify_table


def test_s_sum_degree_one_is_one_term():
    M = common_modulus(7, 1)
    assert s_sum(1, 3, (1, 2), 7, M) == CycloSum(M, {eps_exponent(M, 7, 1, 6): 1})


@pytest.mark.parametrize("i,a", [(1, 1), (2, 3), (5, 4)])
def test_s_sum_collapses_for_norm_exponent(i, a):
    q = 7
    M = common_modulus(q, 2)
    assert s_sum(2, i * (q + 1), (1, a), q, M) == CycloSum(M, {eps_exponent(M, q, 1, 2 * i * a): 2})


@pytest.mark.parametrize("d", [1, 2, 3])
def test_s_sum_at_zero_is_d(d):
    assert s_sum(d, 0, (1, 1), 3).rational_value() == d


def test_s_sum_rejects_bad_level():
    with pytest.raises(ValueError):
        s_sum(3, 1, (2, 1), 3)


@pytest.mark.parametrize("q,n", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 4)])
def test_small_tables_are_orthogonal(q, n):
    rep = certify_table(full_table(q, n))
    assert rep.ok, rep.failures


def test_corrupted_table_fails_certification():
    t = full_table(3, 2)
    rows = [list(r) for r in t.values]
    rows[2][3] = rows[2][3] + CycloSum.scalar(t.modulus, 1)
    bad = type(t)(t.q, t.n, t.modulus, t.duals, t.classes, tuple(tuple(r) for r in rows))
    rep = certify_table(bad)
    assert not rep.ok


def test_degree_at_identity():
    t = full_table(3, 3)
    col = t.classes.index(identity_class(3, 3))
    for e, row in zip(t.duals, t.values):
        assert row[col].rational_value() == degree(e)


def test_worker_count_does_not_change_table():
    assert full_table(2, 3, workers=2) == full_table(2, 3, workers=1)


def _random_roots(q, n, seed):
    rng = random.Random(seed)
    return {o: rng.choice(o.members()) for s in range(1, n + 1) for o in enumerate_orbits(q, s)}


@settings(max_examples=5, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(0, 10**6))
def test_root_choice_is_irrelevant(seed):
    base = full_table(3, 3)
    other = full_table(3, 3, root_choice=_random_roots(3, 3, seed))
    assert sorted(map(repr, base.values)) == sorted(map(repr, other.values))


def test_value_is_integral_cyclotomic():
    t = full_table(4, 2)
    assert all(v.is_integral() for row in t.values for v in row)


def test_single_value_matches_table():
    t = full_table(3, 2)
    assert char_value(t.duals[-1], t.classes[-1]) == t.values[-1][-1]
