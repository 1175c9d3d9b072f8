import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glchar.class_space import (
    TYPE_LABELS,
    ClassSymbol,
    centralizer_poly,
    check_representative,
    class_size,
    classify_type,
    enumerate_classes,
    identity_class,
    parse_type_spec,
    representative_matrix,
    symbol_from_type,
    type_census,
    type_parameters,
)
from glchar.exact_arith import eval_poly, gl_order_poly
from glchar.finite_field import get_field
from glchar.frobenius_orbits import build_field_tower
from glchar.verification import bruteforce_group_oracle, class_number


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (3, 2), (2, 3), (3, 3), (4, 3), (2, 4), (3, 4), (2, 5), (3, 5)])
def test_class_count_and_sizes(q, n):
    classes = enumerate_classes(q, n)
    assert len(classes) == class_number(q, n)
    assert sum(class_size(c) for c in classes) == eval_poly(gl_order_poly(n), q)


def test_identity_class_is_central():
    c = identity_class(3, 4)
    assert class_size(c) == 1
    assert eval_poly(centralizer_poly(c), 3) == eval_poly(gl_order_poly(4), 3)


def test_type_labels():
    assert len(TYPE_LABELS) == 42
    assert TYPE_LABELS[:3] == ("A1", "A2", "A3") and TYPE_LABELS[-1] == "Q"


@pytest.mark.parametrize("q,types", [(2, 17), (3, 32), (4, 39)])
def test_type_census(q, types):
    assert len(type_census(enumerate_classes(q, 5))) == types


@pytest.mark.parametrize("q", [2, 3])
def test_classify_roundtrip(q):
    for c in enumerate_classes(q, 5):
        label, params = type_parameters(c)
        assert label == classify_type(c)
        assert symbol_from_type(label, params, q) == c


def test_parse_type_spec():
    c = parse_type_spec("E2:a=1,b=2,c=3", 7)
    assert classify_type(c) == "E2" and not c.dual
    e = parse_type_spec("C1':i=1,j=2", 7)
    assert e.dual and classify_type(e) == "C1"
    assert parse_type_spec(c.dumps(), 7) == c
    with pytest.raises(ValueError):
        parse_type_spec("Z9", 7)


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (2, 4), (4, 3), (3, 5)])
def test_representative_matrices(q, n):
    tower = build_field_tower(q, n)
    F = get_field(q)
    rng = random.Random(0)
    classes = enumerate_classes(q, n)
    for c in rng.sample(list(classes), min(25, len(classes))):
        A = representative_matrix(c, tower)
        assert A.shape == (n, n)
        assert int(F.rank(A[None])[0]) == n
        assert check_representative(A, c, tower)


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (2, 4), (2, 5)])
def test_sizes_match_brute_force(n, q):
    assert bruteforce_group_oracle(n, q) == sorted(class_size(c) for c in enumerate_classes(q, n))


@given(st.sampled_from(TYPE_LABELS), st.integers(0, 10**6))
def test_json_roundtrip(label, seed):
    from glchar.fixtures import random_instance

    c, _ = random_instance(label, 7, random.Random(seed))
    assert ClassSymbol.from_json(c.dumps(), 7) == c
    assert c.sort_key()[0] == 0


def test_rejects_malformed_symbols():
    c = identity_class(2, 2)
    orb = c.entries[0][0]
    with pytest.raises(ValueError):
        ClassSymbol(2, ((orb, (1,)), (orb, (1,))))
    with pytest.raises(ValueError):
        ClassSymbol(3, ((orb, (1,)),))
