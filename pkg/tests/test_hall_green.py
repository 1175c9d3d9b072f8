import json

import pytest

from glchar import hall_green
from glchar.exact_arith import IntPolyQ, eval_poly
from glchar.hall_green import (
    green_poly,
    hall_counts,
    hall_pair,
    hook_dimension,
    k_poly,
    mn_char,
    sym_char,
)
from glchar.partitions import enumerate_partitions, n_stat


def P(*c):
    return IntPolyQ(c)


@pytest.mark.parametrize(
    "lam,rho,expected",
    [
        ("1^2", "1^2", P(1, 1)),
        ("1^2", "2", P(1, -1)),
        ("2", "1^2", P(1)),
        ("2", "2", P(1)),
        ("2.1", "1^3", P(1, 2)),
        ("2.1", "3", P(1, -1)),
        ("1^3", "1^3", P(1, 2, 2, 1)),
        ("3", "2.1", P(1)),
    ],
)
def test_known_green_polynomials(lam, rho, expected):
    assert green_poly(lam, rho) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_column_one_n_closed_form(n):
    """Q^{1^n}_rho = prod_{k<=n} (1 - q^k) / prod_i (1 - q^rho_i)."""
    top = IntPolyQ([1])
    for k in range(1, n + 1):
        top = top * (1 - IntPolyQ.monomial(k))
    for rho in enumerate_partitions(n):
        bottom = IntPolyQ([1])
        for part in rho:
            bottom = bottom * (1 - IntPolyQ.monomial(part))
        assert green_poly((1,) * n, rho) * bottom == top


@pytest.mark.parametrize("n", range(1, 5))
def test_green_at_one_parts_counts_flags(n):
    # Q^lam_{1^n}(q) is the number of complete flags fixed by a unipotent of type lam
    for lam in enumerate_partitions(n):
        Q = green_poly(lam, (1,) * n)
        assert Q == hall_green.hall_chain(lam, [(1,)] * n)


def test_single_part_k_factor_is_one():
    assert k_poly("3") == IntPolyQ([1])
    assert k_poly("2.1") == IntPolyQ([1, -1])


@pytest.mark.parametrize("q", [2, 3])
def test_hall_pairs_match_subspace_counts(q):
    # submodules of V_{2.1} over GF(q), counted by brute force
    counts = hall_counts((2, 1), q, 1)
    assert sum(counts.values()) == sum(
        eval_poly(hall_pair("2.1", mu, nu), q) for mu in enumerate_partitions(2) for nu in ["1"]
    )


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_characters_match_murnaghan_nakayama(n):
    for lam in enumerate_partitions(n):
        for rho in enumerate_partitions(n):
            assert sym_char(lam, rho) == mn_char(lam, rho)
        assert sym_char(lam, (1,) * n) == hook_dimension(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_degree_law(n):
    """deg Q^lam_rho <= n(lam), with equality exactly when chi^lam(rho) != 0."""
    for lam in enumerate_partitions(n):
        for rho in enumerate_partitions(n):
            Q = green_poly(lam, rho)
            assert Q.degree <= n_stat(lam)
            assert Q.coeff(n_stat(lam)) == sym_char(lam, rho)


def test_cache_roundtrip(tmp_path):
    hall_green.set_cache_dir(tmp_path)
    try:
        hall_pair("3.1", "2", "1^2")
        green_poly("2.2", "3.1")
        written = hall_green.flush_cache()
        if written is not None:
            data = json.loads(written.read_text())
            assert data["version"] == 1 and "hall" in data
        assert hall_green.cache_path().parent == tmp_path
    finally:
        hall_green.set_cache_dir(None)


def test_cache_directory_precedence(tmp_path, monkeypatch):
    monkeypatch.setenv(hall_green.CACHE_ENV, str(tmp_path / "env"))
    hall_green.set_cache_dir(None)
    assert hall_green.cache_path().parent == tmp_path / "env"
    hall_green.set_cache_dir(tmp_path / "flag")
    assert hall_green.cache_path().parent == tmp_path / "flag"
    hall_green.set_cache_dir(None)
