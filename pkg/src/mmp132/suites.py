"""Named verification suites behind the `verify` CLI command.

Each suite bundles one family of cross-checks at a "desk scale" meant to
finish in seconds to a couple of minutes: n <= 8 for anything driven by
the enumeration oracle, shape parameters up to 3, series order 20.  The
deep flag raises oracle-backed suites to n <= 10.  Every runner returns a
report dict with an "ok" flag; a report is ok when nothing disagreed
except differences already catalogued as errata of the reference text.
"""

from __future__ import annotations

from .formulas import identity_checks, verify_catalog, verify_formulas
from .oracle import DEFAULT_CAP, DistCache, build_tables
from .recursions import recursion_check
from .reference import reference_check
from .oeis import verify_oeis
from .series import DEFAULT_ORDER

SUITE_NAMES = ("oracle-gf", "closed-forms", "catalog", "identities", "oeis", "all")

DESK_N_MAX = 8
DEEP_N_MAX = 10
PARAM_RANGE = (1, 2, 3)


def supported_pattern_sweep(params=PARAM_RANGE) -> list[str]:
    """Every shape the series route handles, at small parameter values.

    Includes both members of each symmetry pair, e.g. (k,l,0,0) alongside
    (k,0,0,l), so normalization itself gets exercised.
    """
    pats = ["0,0,0,0"]
    for k in params:
        pats += [f"{k},0,0,0", f"0,{k},0,0", f"0,0,{k},0", f"0,0,0,{k}"]
    for k in params:
        for l in params:
            pats += [
                f"{k},0,{l},0",
                f"{k},0,0,{l}",
                f"{k},{l},0,0",
                f"0,{k},{l},0",
                f"0,0,{l},{k}",
                f"0,{k},0,{l}",
            ]
    return sorted(set(pats))


def run_oracle_gf(*, deep: bool = False, cap: int = DEFAULT_CAP,
                  cache: DistCache | None = None, workers: int = 1) -> dict:
    """Three-way oracle / series / convolution agreement on every shape."""
    n_max = DEEP_N_MAX if deep else DESK_N_MAX
    pats = supported_pattern_sweep()
    # one shared enumeration sweep warms the cache for all patterns at once
    build_tables(pats, n_max, cap=cap, cache=cache, workers=workers)
    rows = [recursion_check(p, n_max, cap=cap, cache=cache) for p in pats]
    bad = [r for r in rows if not r["agree"]]
    return {
        "suite": "oracle-gf",
        "ok": not bad,
        "n_max": n_max,
        "patterns": len(pats),
        "rows": rows,
    }


def run_closed_forms(*, deep: bool = False, cap: int = DEFAULT_CAP,
                     cache: DistCache | None = None) -> dict:
    n_max = DEEP_N_MAX if deep else DESK_N_MAX
    rows = verify_formulas(n_max, cap=cap, cache=cache)
    bad = [r for r in rows if r["status"] == "mismatch"]
    return {
        "suite": "closed-forms",
        "ok": not bad,
        "n_max": n_max,
        "checked": sum(1 for r in rows if r["status"] != "below-threshold"),
        "rows": rows,
    }


def run_catalog(*, order: int = DEFAULT_ORDER) -> dict:
    """Rational x=0 catalog plus the transcribed Q tables, errata allowed."""
    rows = verify_catalog(order) + reference_check()
    bad = [r for r in rows if r["status"] == "mismatch"]
    errata = [r for r in rows if r["status"] == "erratum"]
    return {
        "suite": "catalog",
        "ok": not bad,
        "order": order,
        "errata": len(errata),
        "rows": rows,
    }


def run_identities(*, deep: bool = False, order: int = DEFAULT_ORDER,
                   cap: int = DEFAULT_CAP, cache: DistCache | None = None) -> dict:
    n_max = DEEP_N_MAX if deep else DESK_N_MAX
    rows = identity_checks(n_max=n_max, order=order, cap=cap, cache=cache)
    return {
        "suite": "identities",
        "ok": all(r["ok"] for r in rows),
        "n_max": n_max,
        "rows": rows,
    }


def run_oeis(*, order: int = DEFAULT_ORDER, offline: bool = True,
             cache_dir=None) -> dict:
    rows = verify_oeis(order, offline=offline, cache_dir=cache_dir)
    return {
        "suite": "oeis",
        "ok": all(r["matched"] for r in rows),
        "order": order,
        "rows": rows,
    }


def run_suite(name: str, *, deep: bool = False, order: int = DEFAULT_ORDER,
              cap: int = DEFAULT_CAP, cache: DistCache | None = None,
              cache_dir=None, offline: bool = True, workers: int = 1) -> dict:
    """Run one named suite (or "all") and return its report dict."""
    if cache is None and cache_dir is not None:
        cache = DistCache(cache_dir)
    if name == "oracle-gf":
        return run_oracle_gf(deep=deep, cap=cap, cache=cache, workers=workers)
    if name == "closed-forms":
        return run_closed_forms(deep=deep, cap=cap, cache=cache)
    if name == "catalog":
        return run_catalog(order=order)
    if name == "identities":
        return run_identities(deep=deep, order=order, cap=cap, cache=cache)
    if name == "oeis":
        return run_oeis(order=order, offline=offline, cache_dir=cache_dir)
    if name == "all":
        subs = [
            run_suite(s, deep=deep, order=order, cap=cap, cache=cache,
                      cache_dir=cache_dir, offline=offline, workers=workers)
            for s in SUITE_NAMES
            if s != "all"
        ]
        return {"suite": "all", "ok": all(s["ok"] for s in subs), "suites": subs}
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
