import pytest

from glchar.finite_field import get_field
from glchar.frobenius_orbits import (
    build_field_tower,
    canonical_orbit,
    count_irreducible,
    enumerate_orbits,
    min_poly,
    parse_orbit,
)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_orbit_count_is_necklace_count(q, s):
    # elements of exact degree s in GF(q^s)*, grouped into Frobenius orbits of size s
    exact = [k for k in range(q**s - 1) if all(k * q**d % (q**s - 1) != k for d in range(1, s))]
    assert len(enumerate_orbits(q, s)) == len(exact) // s == count_irreducible(q, s)


@pytest.mark.parametrize("q,s", [(2, 4), (3, 2), (2, 5)])
def test_orbits_partition_the_exact_degree_elements(q, s):
    seen = set()
    for o in enumerate_orbits(q, s):
        assert not seen & set(o.members())
        seen |= set(o.members())
        assert canonical_orbit(q, s, o.members()[-1]) == o
    assert all(canonical_orbit(q, s, k).degree == s for k in seen)


def test_parse_orbit_roundtrip():
    o = enumerate_orbits(3, 2)[1]
    assert parse_orbit(o.label(), 3) == o


@pytest.mark.parametrize("q", [2, 3, 4])
def test_tower_compatibility(q):
    tower = build_field_tower(q, 4)
    for s in (2, 4):
        d = s // 2
        K = tower.field(s)
        step = (q**s - 1) // (q**d - 1)
        image = K.power(tower.omega(s), step)
        # image of omega_s lies in GF(q^d) and has omega_d's minimal polynomial
        assert not any(K.eval_base_poly(tower.omega_min_polys[d - 1], image))


@pytest.mark.parametrize("q", [2, 3, 5])
def test_minimal_polynomials_are_distinct_and_monic(q):
    tower = build_field_tower(q, 3)
    polys = set()
    for s in (1, 2, 3):
        for o in enumerate_orbits(q, s):
            mp = tuple(min_poly(o, tower))
            assert mp[-1] == 1 and len(mp) == s + 1
            polys.add(mp)
    assert len(polys) == sum(len(enumerate_orbits(q, s)) for s in (1, 2, 3))
    assert get_field(q).q == q
