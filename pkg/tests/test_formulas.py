import pytest

from mmp132.errors import FormulaNotCoveredError, FormulaThresholdError
from mmp132.formulas import (
    FORMULAS,
    catalog_entry,
    gf_catalog,
    highest_coeff,
    identity_checks,
    second_coeff,
    special_counts,
    verify_catalog,
    verify_formulas,
)
from mmp132.reference import ERRATA, REFERENCE_SERIES, expected_rows, reference_check
from mmp132.series import expand_rational


# ---------------------------------------------------------------------------
# coefficient formulas

def test_highest_coeff_values():
    assert highest_coeff("2,0,1,0", 9) == (6, 1)
    assert highest_coeff("0,2,0,1", 9) == (6, 264)
    assert highest_coeff("2,0,0,1", 6) == (3, 15)
    assert highest_coeff("0,1,0,1", 5) == (3, 5)


def test_second_coeff_values():
    assert second_coeff("1,0,2,0", 9) == (5, 27)
    assert second_coeff("0,2,2,0", 6) == (1, 26)


def test_special_counts():
    assert special_counts("0,1,0,1", 5) == {0: 11}
    counts = special_counts("1,0,1,0", 6)
    assert counts[0] == 2**5
    assert counts[1] == 3 * 2**4 + 1


def test_threshold_and_coverage_errors():
    with pytest.raises(FormulaThresholdError):
        highest_coeff("2,0,1,0", 3)  # below n = k + l + 1
    with pytest.raises(FormulaNotCoveredError):
        highest_coeff("0,3,0,0", 8)


def test_formula_ids_are_unique():
    ids = [f.id for f in FORMULAS]
    assert len(ids) == len(set(ids))


def test_verify_formulas_clean(dist_cache):
    rows = verify_formulas(8, cache=dist_cache)
    assert rows, "registry must not be empty"
    assert not [r for r in rows if r["status"] == "mismatch"]
    checked = {r["formula_id"] for r in rows if r["status"] == "match"}
    assert checked == {f.id for f in FORMULAS}


# ---------------------------------------------------------------------------
# x=0 rational catalog

def test_catalog_covers_known_patterns():
    patterns = {e.pattern for e in gf_catalog()}
    for key in ("1,0,0,0", "7,0,0,0", "2,0,2,0", "0,2,0,2", "0,1,4,0"):
        assert key in patterns


def test_catalog_expansions_match_series():
    rows = verify_catalog(16)
    by_status = {}
    for r in rows:
        by_status.setdefault(r["status"], []).append(r["pattern"])
    assert "mismatch" not in by_status
    assert by_status["erratum"] == ["7,0,0,0"]


def test_seven_zero_erratum_detail():
    entry = catalog_entry("7,0,0,0")
    assert entry.erratum is not None
    assert entry.erratum["printed"] == "1 - 6t + 10t^3 - 4t^3"
    # the corrected numerator expands to the oracle-checked sequence
    assert expand_rational(entry.gf, 8) == [1, 1, 2, 5, 14, 42, 132, 429, 1429]


def test_fibonacci_like_specializations():
    # (1,0,2,0) at x=0 obeys the two-step recurrence a(n)=2a(n-1)+a(n-2)
    seq = expand_rational(catalog_entry("1,0,2,0").gf, 12)
    for n in range(3, 13):  # numerator degree 2 delays the pure recurrence
        assert seq[n] == 2 * seq[n - 1] + seq[n - 2]
    # (1,0,3,0) at x=0 obeys a(n)=2a(n-1)+a(n-2)+2a(n-3)
    seq = expand_rational(catalog_entry("1,0,3,0").gf, 12)
    for n in range(4, 13):
        assert seq[n] == 2 * seq[n - 1] + seq[n - 2] + 2 * seq[n - 3]


# ---------------------------------------------------------------------------
# transcribed reference tables

def test_reference_dimensions():
    for key, rows in REFERENCE_SERIES.items():
        assert len(rows) >= 10, key
        assert rows[0] == [1] and rows[1] == [1] and rows[2] == [2]


def test_reference_check_statuses():
    rows = reference_check()
    statuses = {r["pattern"]: r["status"] for r in rows}
    assert set(statuses.values()) <= {"match", "erratum"}
    flagged = sorted(p for p, s in statuses.items() if s == "erratum")
    assert flagged == ["0,1,0,1", "0,2,1,0", "0,2,3,0", "1,0,0,2"]


def test_expected_rows_apply_corrections():
    assert REFERENCE_SERIES["0,1,0,1"][8][4] == 36  # as printed
    assert expected_rows("0,1,0,1")[8][4] == 368  # corrected
    assert expected_rows("1,0,0,2")[9][5] == 1188
    assert expected_rows("0,2,1,0")[5][0] == 28
    assert expected_rows("0,2,3,0")[9][0] == 2868


def test_errata_are_all_distinct_cells():
    cells = {(e["pattern"], e["n"], e["exponent"]) for e in ERRATA}
    assert len(cells) == len(ERRATA) == 4


# ---------------------------------------------------------------------------
# structural identities

def test_identity_checks_pass(dist_cache):
    rows = identity_checks(n_max=6, order=12, trials=6, cache=dist_cache)
    assert all(r["ok"] for r in rows), [r for r in rows if not r["ok"]]
    ids = {r["id"] for r in rows}
    assert "x0-chain-k7" in ids
    assert "sym-series-0201" in ids
