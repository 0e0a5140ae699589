import json
import urllib.error

import pytest
from hypothesis import given, strategies as st

from mmp132.errors import OeisUnavailableError
from mmp132.oeis import (
    OEIS_CLAIMS,
    OeisSequence,
    _overlap_range,
    compare,
    fetch,
    load_fixture,
    normalize_id,
    verify_oeis,
)

FIXTURE_IDS = ["A000129", "A000337", "A052963", "A077938", "A083329", "A116731"]


def test_id_validation():
    assert normalize_id(" a000129 ") == "A000129"
    for bad in ("A00012", "B000129", "000129", "A0001299"):
        with pytest.raises(ValueError):
            normalize_id(bad)


def test_all_fixtures_load():
    for sid in FIXTURE_IDS:
        seq = load_fixture(sid)
        assert seq.id == sid
        assert seq.source == "fixture"
        assert len(seq.terms) >= 20


def test_fixture_terms_satisfy_their_recurrences():
    pell = load_fixture("A000129").terms
    assert pell[:4] == (0, 1, 2, 5)
    assert all(pell[n] == 2 * pell[n - 1] + pell[n - 2] for n in range(2, len(pell)))
    a337 = load_fixture("A000337").terms
    assert all(a337[n] == (n - 1) * 2**n + 1 for n in range(len(a337)))


def test_offline_fetch_is_fixture():
    seq = fetch("A000129", offline=True)
    assert seq.source == "fixture"
    assert seq.terms == load_fixture("A000129").terms


def test_missing_fixture_offline():
    with pytest.raises(OeisUnavailableError):
        fetch("A999999", offline=True)


def test_network_path_with_fake_endpoint(tmp_path, monkeypatch):
    bfile = "# comment line\n0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n7 429\n"

    class FakeResponse:
        def read(self):
            return bfile.encode()

        def __enter__(self):
            return self

        def __exit__(self, *exc):
            return False

    calls = []

    def fake_urlopen(url, timeout=None):
        calls.append(url)
        return FakeResponse()

    monkeypatch.setattr("urllib.request.urlopen", fake_urlopen)
    seq = fetch("A000108", offline=False, cache_dir=tmp_path)
    assert seq.source == "network"
    assert seq.offset == 0
    assert seq.terms == (1, 1, 2, 5, 14, 42, 132, 429)
    assert len(calls) == 1

    # second fetch inside the TTL must come from the disk cache
    again = fetch("A000108", offline=False, cache_dir=tmp_path)
    assert len(calls) == 1
    assert again.terms == seq.terms

    cached = json.loads((tmp_path / "oeis" / "a000108.json").read_text())
    assert cached["terms"][:3] == ["1", "1", "2"]


def test_network_failure_falls_back_to_fixture(tmp_path, monkeypatch):
    def dead_urlopen(url, timeout=None):
        raise urllib.error.URLError("no route to host")

    monkeypatch.setattr("urllib.request.urlopen", dead_urlopen)
    seq = fetch("A000129", offline=False, cache_dir=tmp_path)
    assert seq.source == "fixture"
    with pytest.raises(OeisUnavailableError):
        fetch("A999999", offline=False, cache_dir=tmp_path)


# ---------------------------------------------------------------------------
# comparison

def _seq(terms, sid="A000129"):
    return OeisSequence(id=sid, offset=0, terms=tuple(terms), fetched_at=0.0,
                        source="fixture")


def test_compare_finds_shift():
    seq = _seq([0, 1, 2, 5, 12, 29, 70, 169, 408])
    rep = compare([1, 2, 5, 12, 29, 70], seq)
    assert rep["matched"] is True
    assert rep["shift"] == 1
    assert rep["overlap"] == 6


def test_compare_reports_disagreement():
    seq = _seq([1, 2, 3, 4, 5, 6, 7, 8])
    rep = compare([1, 2, 3, 4, 99, 6, 7, 8], seq)
    assert rep["matched"] is False
    assert rep["first_disagreement"]["computed"] == "99"


def test_compare_short_overlap_is_not_a_match():
    seq = _seq([1, 2, 3, 4, 5])
    rep = compare([1, 2, 3], seq)
    assert rep["overlap"] < 6
    assert rep["matched"] is False


@given(st.integers(1, 30), st.integers(1, 30), st.integers(-3, 3))
def test_overlap_symmetric_under_swapped_direction(la, lb, s):
    assert len(_overlap_range(la, lb, s)) == len(_overlap_range(lb, la, -s))


# ---------------------------------------------------------------------------
# the registered claims

def test_registered_claims_all_match_offline():
    rows = verify_oeis(20, offline=True)
    assert len(rows) == len(OEIS_CLAIMS) == 6
    for r in rows:
        assert r["matched"], r
        assert r["overlap"] >= 8
        assert abs(r["shift"]) <= 3
