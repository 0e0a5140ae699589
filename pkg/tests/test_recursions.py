import pytest

from mmp132.errors import UnsupportedPatternError
from mmp132.oracle import build_table
from mmp132.recursions import (
    classify,
    gf_Q00k0,
    gf_Q00k0_radical,
    gf_Q0101_alt,
    gf_Q0201_alt,
    gf_Q0202_alt,
    gf_Q0k0l,
    gf_Qk000,
    gf_Qk001_alt,
    gf_Qk002_alt,
    gf_Qk00l,
    gf_Qk0l0,
    gf_dispatch,
    gf_supported,
    rec_rows,
    recursion_check,
)
from mmp132.series import coeff, specialize_x0, specialize_x1, catalan


def test_classify_normalizes_shapes():
    assert classify("2,0,1,0")[0] == "K0L0"
    assert classify("3,2,0,0") == classify("3,0,0,2")
    assert classify("0,0,1,2") == classify("0,2,1,0")
    assert classify("0,0,0,0")[0] == "ZERO"
    assert classify("0,0,0,3")[0] == "0K00"  # via the b/d swap of (0,3,0,0)


@pytest.mark.parametrize("bad", ["1,1,1,0", "e,0,0,0", "1,2,3,4"])
def test_unsupported_shapes(bad):
    assert not gf_supported(bad)
    with pytest.raises(UnsupportedPatternError):
        gf_dispatch(bad, 5)


def test_dispatch_known_row():
    s = gf_dispatch("1,0,1,0", 6)
    assert coeff(s, 5).coeffs == (16, 17, 8, 1)
    assert coeff(s, 6).coeffs == (32, 49, 38, 12, 1)


@pytest.mark.parametrize(
    "pattern",
    ["1,0,1,0", "2,0,2,0", "0,2,0,1", "3,0,0,2", "0,1,3,0", "0,0,0,0",
     "2,2,0,0", "0,0,2,3"],
)
def test_series_equals_oracle(pattern, dist_cache):
    s = gf_dispatch(pattern, 7)
    table = build_table(pattern, 7, cache=dist_cache)
    for n in range(8):
        got = coeff(s, n).coeffs or (0,)
        assert got == (table.rows[n].coeffs or (0,)), f"n={n}"


def test_series_mass_is_catalan():
    s = gf_dispatch("2,0,0,2", 12)
    assert specialize_x1(s) == [catalan(n) for n in range(13)]


# ---------------------------------------------------------------------------
# alternate assemblies of the same generating functions

@pytest.mark.parametrize("k", [1, 2, 3])
def test_radical_form_of_00k0(k):
    assert gf_Q00k0_radical(k, 12) == gf_Q00k0(k, 12)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_k001_alternate(k):
    assert gf_Qk001_alt(k, 12) == gf_Qk00l(k, 1, 12)


@pytest.mark.parametrize("k", [1, 2])
def test_k002_alternate(k):
    assert gf_Qk002_alt(k, 12) == gf_Qk00l(k, 2, 12)


def test_0k0l_alternates():
    assert gf_Q0101_alt(12) == gf_Q0k0l(1, 1, 12)
    assert gf_Q0201_alt(12) == gf_Q0k0l(2, 1, 12)
    assert gf_Q0202_alt(12) == gf_Q0k0l(2, 2, 12)


def test_x0_avoidance_chain():
    for k in (2, 3):
        assert specialize_x0(gf_Qk000(k, 14)) == specialize_x0(gf_Qk0l0(k - 1, 1, 14))


# ---------------------------------------------------------------------------
# n-indexed convolution route

@pytest.mark.parametrize("pattern", ["2,0,2,0", "2,0,0,2", "0,2,2,0", "0,2,0,1"])
def test_rec_rows_match_oracle(pattern, dist_cache):
    rows = rec_rows(pattern, 7, cache=dist_cache)
    table = build_table(pattern, 7, cache=dist_cache)
    for n in range(8):
        assert rows[n] == table.rows[n], f"n={n}"


def test_recursion_check_report(dist_cache):
    rep = recursion_check("1,0,2,0", 6, cache=dist_cache)
    assert rep["pattern"] == "1,0,2,0"
    assert rep["n_max"] == 6
    assert rep["agree"] is True
    assert rep["first_mismatch"] is None
