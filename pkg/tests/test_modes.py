import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glchar.class_space import TYPE_LABELS, enumerate_classes
from glchar.exact_arith import RatFuncQ
from glchar.fixtures import random_instance, representative
from glchar.modes import chi_weight, modes_bruteforce, modes_into, q_weight, q_weight_poly
from glchar.partitions import enumerate_partitions, parse_partition

RHOS = enumerate_partitions(5)


@given(st.sampled_from(TYPE_LABELS), st.sampled_from(RHOS), st.integers(0, 10**6))
def test_modes_match_brute_force(label, rho, seed):
    c, _ = random_instance(label, 7, random.Random(seed))
    fast = {tuple(tau for _, tau in m.targets) for m in modes_into(rho, c)}
    assert fast == modes_bruteforce(rho, c)


@pytest.mark.parametrize("label", TYPE_LABELS)
def test_class_weights_sum_to_one(label):
    c, _ = representative(label, 7)
    total = RatFuncQ(0)
    for rho in RHOS:
        for m in modes_into(rho, c):
            const, poly = q_weight_poly(m, c)
            total = total + RatFuncQ(poly * const.numerator, const.denominator)
    assert total == RatFuncQ(1)


@pytest.mark.parametrize("label", TYPE_LABELS)
def test_dual_weights_detect_the_trivial_character(label):
    e, _ = representative(label, 7, dual=True)
    total = sum(chi_weight(m, e) for rho in RHOS for m in modes_into(rho, e))
    assert total == int(all(len(lam) == 1 for _, lam in e.entries))


def test_two_mode_example():
    # rho = 1^3.2 into f^{1^2} f^{1^3}: two modes
    c, _ = representative("C1", 7)
    modes = modes_into("2.1^3", c)
    assert len(modes) == 2
    shapes = sorted(tuple(str(tau) for _, tau in m.targets) for m in modes)
    assert shapes == [("1^3", "2"), ("2.1", "1^2")]


@pytest.mark.parametrize("q", [2, 3])
def test_weights_at_integers(q):
    for c in enumerate_classes(q, 3):
        total = sum(q_weight(m, c) for rho in enumerate_partitions(3) for m in modes_into(rho, c))
        assert total == Fraction(1)


def test_size_mismatch_rejected():
    c, _ = representative("A1", 7)
    with pytest.raises(ValueError):
        modes_into(parse_partition("2.1"), c)
