import json

import pytest

from mmp132.errors import CapExceededError
from mmp132.oracle import (
    DistCache,
    brute_force_Q,
    brute_force_coeff,
    build_table,
    build_tables,
)
from mmp132.perms import parse_pattern
from mmp132.series import catalan


def test_small_distributions():
    assert brute_force_Q(3, "1,0,1,0").coeffs == (4, 1)
    assert brute_force_Q(4, "0,1,0,1").coeffs == (7, 5, 2)
    assert brute_force_Q(0, "2,0,2,0").coeffs == (1,)


def test_coeff_shortcut():
    assert brute_force_coeff(9, "2,0,1,0", 5) == 25
    assert brute_force_coeff(9, "2,0,1,0", 9) == 0


def test_empty_quadrant_pattern():
    # (e,0,0,0): a position matches iff nothing later is larger
    assert brute_force_Q(3, "e,0,0,0").coeffs == (0, 2, 2, 1)


def test_rows_sum_to_catalan():
    table = build_table("1,0,2,0", 9)
    for n in range(10):
        assert sum(table.rows[n].coeffs) == catalan(n)
    assert [table.rows[n].coeff(0) for n in range(10)] == [
        1, 1, 2, 5, 12, 29, 70, 169, 408, 985,
    ]


def test_cap_is_enforced():
    with pytest.raises(CapExceededError):
        build_table("1,0,1,0", 7, cap=6)
    build_table("1,0,1,0", 6, cap=6)  # boundary is allowed


def test_build_tables_shares_one_sweep():
    pats = ["1,0,1,0", "0,1,0,1", "e,e,e,e"]
    tables = build_tables(pats, 6)
    assert [t.pattern.serialize() for t in tables] == pats
    for t in tables:
        assert t.n_max == 6
        assert sum(t.rows[6].coeffs) == catalan(6)
    solo = build_table("0,1,0,1", 6)
    assert tables[1].rows == solo.rows


def test_cache_round_trip(tmp_path):
    cache = DistCache(tmp_path)
    first = build_table("2,0,1,0", 7, cache=cache)
    path = cache.path_for(parse_pattern("2,0,1,0"))
    assert path.is_file()
    on_disk = json.loads(path.read_text())
    assert on_disk["pattern"] == "2,0,1,0"
    assert set(on_disk["rows"]) == {str(n) for n in range(8)}

    # second build must reuse the stored rows and extend them
    second = build_table("2,0,1,0", 9, cache=cache)
    assert all(second.rows[n] == first.rows[n] for n in range(8))
    assert sum(second.rows[9].coeffs) == catalan(9)


def test_cache_tolerates_corruption(tmp_path):
    cache = DistCache(tmp_path)
    path = cache.path_for(parse_pattern("1,0,1,0"))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("{ not json")
    table = build_table("1,0,1,0", 5, cache=cache)
    assert table.rows[5].coeffs == (16, 17, 8, 1)


def test_parallel_equals_serial():
    serial = build_tables(["1,0,1,0", "0,2,0,2"], 7, workers=1)
    parallel = build_tables(["1,0,1,0", "0,2,0,2"], 7, workers=2)
    for a, b in zip(serial, parallel):
        assert a.rows == b.rows


def test_table_json_shape():
    table = build_table("0,1,0,1", 4)
    obj = table.to_json_obj()
    assert obj["pattern"] == "0,1,0,1"
    assert obj["rows"]["4"] == ["7", "5", "2"]
