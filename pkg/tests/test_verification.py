import json

import pytest

from glchar.verification import (
    ALL_CHECKS,
    CheckReport,
    ErrataEntry,
    FIXED_ERRATA,
    bruteforce_group_oracle,
    check_counts,
    check_green_orthogonality,
    class_number,
    fixture_sweep,
    gl22_matches_s3,
    run_suite,
    symbolic_identities,
)


@pytest.mark.parametrize("q,n,expected", [(2, 1, 1), (2, 2, 3), (3, 2, 8), (2, 3, 6), (2, 5, 27), (4, 5, 1005), (7, 5, 16752)])
def test_class_number(q, n, expected):
    assert class_number(q, n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_green_checks(n):
    assert check_green_orthogonality(n).ok


def test_brute_force_oracle_sizes():
    assert bruteforce_group_oracle(2, 2) == [1, 2, 3]
    assert len(bruteforce_group_oracle(2, 3)) == 8
    assert len(bruteforce_group_oracle(3, 2)) == 6
    with pytest.raises(ValueError):
        bruteforce_group_oracle(4, 3)


def test_s3():
    assert gl22_matches_s3()


@pytest.mark.parametrize("q,n", [(2, 5), (3, 4)])
def test_counts(q, n):
    rep = check_counts(q, n)
    assert rep.ok, rep.failures


def test_symbolic_identities():
    ident = symbolic_identities()
    assert ident["class_count"] and ident["size_sum"] and ident["degree_square_sum"]


def test_errata_entry_validates_status():
    with pytest.raises(ValueError):
        ErrataEntry("x", "1", "2", "maybe")
    e = FIXED_ERRATA[0]
    assert json.loads(json.dumps(e.to_json()))["status"] == "confirmed-typo"


@pytest.fixture(scope="module")
def sweep():
    return fixture_sweep(characters=False)


def test_hard_fixtures_are_all_explained(sweep):
    errata, failures = sweep
    assert failures == []
    hard = [e for e in errata if e.hard]
    assert all(e.evidence for e in hard)


@pytest.mark.parametrize(
    "location",
    [
        "class-types:A4:size",
        "class-types:O:count",
        "dual-types:N':degree",
        "q-weights:B1:rho5",
        "chi-weights:A1:rho5",
    ],
)
def test_known_errata_present(sweep, location):
    errata, _ = sweep
    assert any(e.location == location and e.status == "confirmed-typo" for e in errata)


def test_run_suite_subset():
    rep = run_suite(2, 3, checks=("counts", "orthogonality"))
    assert rep.ok and [c.name for c in rep.checks] == ["counts", "orthogonality"]
    with pytest.raises(ValueError):
        run_suite(2, 3, checks=("nonsense",))
    assert set(ALL_CHECKS) >= {"green", "fixtures"}
    assert isinstance(rep.checks[0], CheckReport)
