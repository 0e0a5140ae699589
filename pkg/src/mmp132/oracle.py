"""Brute-force distribution oracle.

The ground truth everything else is checked against: enumerate the
132-avoiding permutations of length n, count pattern matches position by
position, and collect the distribution polynomial

    Q_n(x) = sum over sigma of x^(number of matching positions).

No recursions, no generating functions, no shared code with the clever
routes; just counting.  Catalan growth caps practical n (58786 permutations
at n=11, 742900 at n=13), so enumeration beyond a configurable cap raises
CapExceededError instead of silently burning hours.

Computed rows are cached on disk, one JSON file per pattern, so repeated
verification runs are cheap.  Files are written atomically (temp file plus
rename); a concurrent reader sees either the old table or the new one.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CapExceededError
from .jsonio import read_json, write_json_atomic
from .perms import (
    EMPTY,
    PatternSpec,
    enumerate_avoiders,
    pattern_of,
    quadrant_counts_all,
)
from .series import XPoly

DEFAULT_CAP = 14
CACHE_ENV_VAR = "MMP132_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path(os.path.expanduser("~")) / ".cache" / "mmp132"


class DistCache:
    """Disk cache of distribution rows, one file per pattern.

    Schema per file: {"pattern": "a,b,c,d", "rows": {"n": [decimal coeff
    strings, ascending x powers], ...}}.
    """

    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def path_for(self, pattern) -> Path:
        p = pattern_of(pattern)
        return self.root / "tables" / (p.serialize().replace(",", "_") + ".json")

    def load_rows(self, pattern) -> dict[int, XPoly]:
        path = self.path_for(pattern)
        try:
            obj = read_json(path)
        except (OSError, ValueError):
            return {}
        try:
            return {int(n): XPoly([int(v) for v in row]) for n, row in obj["rows"].items()}
        except (KeyError, TypeError, ValueError):
            # Unreadable cache entries are just recomputed.
            return {}

    def merge_rows(self, pattern, rows: dict[int, XPoly]) -> None:
        if not rows:
            return
        p = pattern_of(pattern)
        merged = self.load_rows(p)
        merged.update(rows)
        obj = {
            "pattern": p.serialize(),
            "rows": {str(n): [str(v) for v in poly.coeffs] for n, poly in sorted(merged.items())},
        }
        write_json_atomic(self.path_for(p), obj)


@dataclass
class DistTable:
    """Distribution polynomials for one pattern, n = 0..n_max."""

    pattern: PatternSpec
    rows: dict[int, XPoly] = field(default_factory=dict)

    @property
    def n_max(self) -> int:
        return max(self.rows) if self.rows else -1

    def row(self, n: int) -> XPoly:
        return self.rows[n]

    def to_json_obj(self) -> dict:
        return {
            "pattern": self.pattern.serialize(),
            "rows": {str(n): [str(v) for v in p.coeffs] for n, p in sorted(self.rows.items())},
        }


def _compiled_checks(p: PatternSpec):
    """Split the pattern into (index, threshold) demands and empty indices."""
    thresholds = []
    empties = []
    for idx, dem in enumerate(p.coords):
        if dem is EMPTY:
            empties.append(idx)
        elif dem > 0:
            thresholds.append((idx, dem))
    return tuple(thresholds), tuple(empties)


def _match_count(qall, thresholds, empties) -> int:
    m = 0
    for qc in qall:
        for idx, dem in thresholds:
            if qc[idx] < dem:
                break
        else:
            for idx in empties:
                if qc[idx]:
                    break
            else:
                m += 1
    return m


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds enumeration cap {cap}; raise the cap explicitly if you mean it"
        )


def brute_force_Q(n: int, pattern, *, cap: int = DEFAULT_CAP, cache: DistCache | None = None) -> XPoly:
    """Distribution polynomial Q_n(x) for one pattern, by enumeration.

    >>> brute_force_Q(3, "1,0,1,0").coeffs
    (4, 1)
    >>> brute_force_Q(4, "0,1,0,1").coeffs
    (7, 5, 2)
    """
    p = pattern_of(pattern)
    _check_cap(n, cap)
    if cache is not None:
        cached = cache.load_rows(p)
        if n in cached:
            return cached[n]
    thresholds, empties = _compiled_checks(p)
    counts = [0] * (n + 1)
    for sigma in enumerate_avoiders(n):
        counts[_match_count(quadrant_counts_all(sigma), thresholds, empties)] += 1
    poly = XPoly(counts)
    if cache is not None:
        cache.merge_rows(p, {n: poly})
    return poly


def brute_force_coeff(n: int, pattern, r: int, *, cap: int = DEFAULT_CAP,
                      cache: DistCache | None = None) -> int:
    """The x^r coefficient of Q_n(x): how many avoiders have exactly r matches.

    >>> brute_force_coeff(9, "2,0,1,0", 5)
    25
    """
    return brute_force_Q(n, pattern, cap=cap, cache=cache).coeff(r)


def build_table(pattern, n_max: int, *, cap: int = DEFAULT_CAP,
                cache: DistCache | None = None, workers: int = 1) -> DistTable:
    """Distribution table for one pattern, n = 0..n_max."""
    return build_tables([pattern], n_max, cap=cap, cache=cache, workers=workers)[0]


def build_tables(patterns, n_max: int, *, cap: int = DEFAULT_CAP,
                 cache: DistCache | None = None, workers: int = 1) -> list[DistTable]:
    """Distribution tables for several patterns over one shared enumeration.

    The permutations of each length are enumerated once and every pattern's
    quadrant demands are tested against the same per-position quadrant
    counts, which is what makes wide verification sweeps affordable.

    With workers > 1 each length n is partitioned by the position of the
    value n (the structural split of 132-avoiders): positions are dealt
    round-robin to worker processes and the per-pattern match counters are
    summed at the end.  Results are identical to the serial path.
    """
    pats = [pattern_of(p) for p in patterns]
    _check_cap(n_max, cap)
    tables = {i: {} for i in range(len(pats))}
    cached_rows: list[dict[int, XPoly]] = []
    if cache is not None:
        for p in pats:
            cached_rows.append(cache.load_rows(p))
    else:
        cached_rows = [{} for _ in pats]

    for n in range(n_max + 1):
        todo = [i for i in range(len(pats)) if n not in cached_rows[i]]
        for i in range(len(pats)):
            if n in cached_rows[i]:
                tables[i][n] = cached_rows[i][n]
        if not todo:
            continue
        checks = [_compiled_checks(pats[i]) for i in todo]
        if workers > 1 and n >= 6:
            counters = _count_parallel(n, checks, workers)
        else:
            counters = _count_serial(enumerate_avoiders(n), n, checks)
        for slot, i in enumerate(todo):
            tables[i][n] = XPoly(counters[slot])

    if cache is not None:
        for i, p in enumerate(pats):
            fresh = {n: poly for n, poly in tables[i].items() if n not in cached_rows[i]}
            cache.merge_rows(p, fresh)
    return [DistTable(pats[i], tables[i]) for i in range(len(pats))]


def _count_serial(sigmas, n: int, checks) -> list[list[int]]:
    counters = [[0] * (n + 1) for _ in checks]
    for sigma in sigmas:
        qall = quadrant_counts_all(sigma)
        for slot, (thresholds, empties) in enumerate(checks):
            counters[slot][_match_count(qall, thresholds, empties)] += 1
    return counters


def _positions_block(n: int, positions):
    """132-avoiders of length n whose largest value sits at one of the
    given 1-based positions."""
    for i in positions:
        shift = n - i
        for alpha in enumerate_avoiders(i - 1):
            head = tuple(v + shift for v in alpha) + (n,)
            for beta in enumerate_avoiders(n - i):
                yield head + beta


def _worker_count(args):
    n, pattern_strs, positions = args
    pats = [pattern_of(s) for s in pattern_strs]
    checks = [_compiled_checks(p) for p in pats]
    return _count_serial(_positions_block(n, positions), n, checks)


def _count_parallel(n: int, checks, workers: int) -> list[list[int]]:
    # Rebuild pattern strings from the compiled checks so the task payload
    # pickles small and the worker recompiles.
    pattern_strs = []
    for thresholds, empties in checks:
        coords = [0, 0, 0, 0]
        for idx, dem in thresholds:
            coords[idx] = dem
        for idx in empties:
            coords[idx] = EMPTY
        pattern_strs.append(PatternSpec(*coords).serialize())
    blocks = [[] for _ in range(workers)]
    for i in range(1, n + 1):
        blocks[(i - 1) % workers].append(i)
    tasks = [(n, pattern_strs, block) for block in blocks if block]
    totals = [[0] * (n + 1) for _ in checks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_worker_count, tasks):
            for slot in range(len(checks)):
                for m in range(n + 1):
                    totals[slot][m] += part[slot][m]
    return totals
