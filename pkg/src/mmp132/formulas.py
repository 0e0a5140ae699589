"""Closed-form coefficient claims and the catalog of rational x=0 series.

Three kinds of verifiable claims live here:

  * coefficient formulas: the highest (and second-highest) coefficient of
    Q_n(x), and a few exact low-coefficient counts, each valid from an
    explicit n threshold upward;
  * a catalog of rational generating functions for Q(t, 0), the t-series
    counting avoiders with no match at all;
  * cross-identities tying independently computed objects together.

Every claim is data plus a verifier; nothing here asserts anything the
oracle or the series route cannot be checked against.  Thresholds are
sufficient, not necessarily sharp: below the threshold the verifier
reports, it never asserts.  One registered formula extrapolates a stated
pattern (see conjecture=True) and is flagged so the reports distinguish it
from the proved rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Callable

from .errors import FormulaNotCoveredError, FormulaThresholdError, UnsupportedPatternError
from .oracle import DEFAULT_CAP, DistCache, build_tables
from .perms import EMPTY, PatternSpec, pattern_of
from .recursions import classify, gf_dispatch, gf_Qk000, gf_Qk0l0
from .series import (
    DEFAULT_ORDER,
    RationalGF,
    catalan,
    expand_rational,
    specialize_x0,
    specialize_x1,
    tpoly_add,
    tpoly_mul,
)

# ---------------------------------------------------------------------------
# Coefficient formulas


@dataclass(frozen=True)
class CoeffFormula:
    """One claimed coefficient of Q_n(x) for a family of patterns.

    kind "highest" claims the leading coefficient (and hence the degree),
    "second" the one just below the leading one, "special" a fixed low
    exponent.  predict(p, n) returns (exponent, value) and raises
    FormulaThresholdError below min_n(p).
    """

    id: str
    kind: str
    description: str
    covers: Callable[[PatternSpec], bool]
    min_n: Callable[[PatternSpec], int]
    _predict: Callable[[PatternSpec, int], tuple[int, int]]
    samples: tuple[str, ...]
    conjecture: bool = False

    def predict(self, p: PatternSpec, n: int) -> tuple[int, int]:
        if n < self.min_n(p):
            raise FormulaThresholdError(
                f"{self.id} needs n >= {self.min_n(p)} for {p}, got {n}"
            )
        return self._predict(p, n)

    def predict_raw(self, p: PatternSpec, n: int) -> tuple[int, int]:
        """Like predict but without the threshold gate (for reporting)."""
        return self._predict(p, n)


def _shape_params(p: PatternSpec):
    try:
        return classify(p)[0:2]
    except UnsupportedPatternError:
        return ("UNSUPPORTED", ())


def _is_k0l0(p):  # (k,0,l,0) with k, l >= 1; l = 0 has a different top term
    s, params = _shape_params(p)
    return s == "K0L0" and params[0] >= 1


def _k0l0_params(p):
    return _shape_params(p)[1]


FORMULAS: tuple[CoeffFormula, ...] = (
    CoeffFormula(
        id="top-k0l0",
        kind="highest",
        description="(k,0,l,0), l >= 1: leading term C_l x^(n-k-l)",
        covers=_is_k0l0,
        min_n=lambda p: sum(_k0l0_params(p)) + 1,
        _predict=lambda p, n: (
            n - sum(_k0l0_params(p)),
            catalan(_k0l0_params(p)[1]),
        ),
        samples=tuple(f"{k},0,{l},0" for k in (1, 2, 3) for l in (1, 2, 3)),
    ),
    CoeffFormula(
        id="top-k001",
        kind="highest",
        description="(k,0,0,1): leading term (k+1) C_(n-k-1) x^(n-k-1)",
        covers=lambda p: _shape_params(p)[0] == "K00L" and _shape_params(p)[1][1] == 1,
        min_n=lambda p: _shape_params(p)[1][0] + 2,
        _predict=lambda p, n: (
            n - _shape_params(p)[1][0] - 1,
            (_shape_params(p)[1][0] + 1) * catalan(n - _shape_params(p)[1][0] - 1),
        ),
        samples=("1,0,0,1", "2,0,0,1", "3,0,0,1"),
    ),
    CoeffFormula(
        id="top-k002",
        kind="highest",
        description="(k,0,0,2), k <= 3: leading term (C(k+3,2)-1) C_(n-k-2) x^(n-k-2)",
        covers=lambda p: _shape_params(p)[0] == "K00L"
        and _shape_params(p)[1][1] == 2
        and _shape_params(p)[1][0] <= 3,
        min_n=lambda p: _shape_params(p)[1][0] + 3,
        _predict=lambda p, n: (
            n - _shape_params(p)[1][0] - 2,
            (comb(_shape_params(p)[1][0] + 3, 2) - 1) * catalan(n - _shape_params(p)[1][0] - 2),
        ),
        samples=("1,0,0,2", "2,0,0,2", "3,0,0,2"),
    ),
    CoeffFormula(
        id="top-k002-extrapolated",
        kind="highest",
        description="(k,0,0,2), k >= 4: same (C(k+3,2)-1) C_(n-k-2) pattern, extrapolated",
        covers=lambda p: _shape_params(p)[0] == "K00L"
        and _shape_params(p)[1][1] == 2
        and _shape_params(p)[1][0] >= 4,
        min_n=lambda p: _shape_params(p)[1][0] + 3,
        _predict=lambda p, n: (
            n - _shape_params(p)[1][0] - 2,
            (comb(_shape_params(p)[1][0] + 3, 2) - 1) * catalan(n - _shape_params(p)[1][0] - 2),
        ),
        samples=("4,0,0,2", "5,0,0,2"),
        conjecture=True,
    ),
    CoeffFormula(
        id="top-0k0l",
        kind="highest",
        description="(0,k,0,l): leading term C_k C_l C_(n-k-l) x^(n-k-l)",
        covers=lambda p: _shape_params(p)[0] == "0K0L",
        min_n=lambda p: sum(_shape_params(p)[1]) + 1,
        _predict=lambda p, n: (
            n - sum(_shape_params(p)[1]),
            catalan(_shape_params(p)[1][0])
            * catalan(_shape_params(p)[1][1])
            * catalan(n - sum(_shape_params(p)[1])),
        ),
        samples=tuple(f"0,{k},0,{l}" for k in (1, 2, 3) for l in (1, 2, 3)),
    ),
    CoeffFormula(
        id="top-01l0",
        kind="highest",
        description="(0,1,l,0): leading term C_l x^(n-l-1)",
        covers=lambda p: _shape_params(p)[0] == "0KL0" and _shape_params(p)[1][0] == 1,
        min_n=lambda p: _shape_params(p)[1][1] + 2,
        _predict=lambda p, n: (n - _shape_params(p)[1][1] - 1, catalan(_shape_params(p)[1][1])),
        samples=("0,1,1,0", "0,1,2,0", "0,1,3,0"),
    ),
    CoeffFormula(
        id="top-02l0",
        kind="highest",
        description="(0,2,l,0): leading term 2 C_l x^(n-l-2)",
        covers=lambda p: _shape_params(p)[0] == "0KL0" and _shape_params(p)[1][0] == 2,
        min_n=lambda p: _shape_params(p)[1][1] + 3,
        _predict=lambda p, n: (
            n - _shape_params(p)[1][1] - 2,
            2 * catalan(_shape_params(p)[1][1]),
        ),
        samples=("0,2,1,0", "0,2,2,0", "0,2,3,0"),
    ),
    CoeffFormula(
        id="second-k010",
        kind="second",
        description="(k,0,1,0): second coefficient 2k + C(n-k,2) at x^(n-k-2)",
        covers=lambda p: _is_k0l0(p) and _k0l0_params(p)[1] == 1,
        min_n=lambda p: _k0l0_params(p)[0] + 3,
        _predict=lambda p, n: (
            n - _k0l0_params(p)[0] - 2,
            2 * _k0l0_params(p)[0] + comb(n - _k0l0_params(p)[0], 2),
        ),
        samples=("1,0,1,0", "2,0,1,0", "3,0,1,0"),
    ),
    CoeffFormula(
        id="second-k0m0",
        kind="second",
        description="(k,0,m,0), m >= 2: second coefficient "
        "C_(m+1) + (2k+1) C_m + 2 C_m (n-k-m-2) at x^(n-k-m-1)",
        covers=lambda p: _is_k0l0(p) and _k0l0_params(p)[1] >= 2,
        min_n=lambda p: sum(_k0l0_params(p)) + 2,
        _predict=lambda p, n: (
            n - sum(_k0l0_params(p)) - 1,
            catalan(_k0l0_params(p)[1] + 1)
            + (2 * _k0l0_params(p)[0] + 1) * catalan(_k0l0_params(p)[1])
            + 2 * catalan(_k0l0_params(p)[1]) * (n - sum(_k0l0_params(p)) - 2),
        ),
        samples=tuple(f"{k},0,{m},0" for k in (1, 2, 3) for m in (2, 3)),
    ),
    CoeffFormula(
        id="second-0110",
        kind="second",
        description="(0,1,1,0): second coefficient 2 + C(n-1,2) at x^(n-3)",
        covers=lambda p: _shape_params(p) == ("0KL0", (1, 1)),
        min_n=lambda p: 4,
        _predict=lambda p, n: (n - 3, 2 + comb(n - 1, 2)),
        samples=("0,1,1,0",),
    ),
    CoeffFormula(
        id="second-01l0",
        kind="second",
        description="(0,1,l,0), l >= 2: second coefficient "
        "C_(l+1) + C_l + 2 C_l (n-2-l) at x^(n-l-2)",
        covers=lambda p: _shape_params(p)[0] == "0KL0"
        and _shape_params(p)[1][0] == 1
        and _shape_params(p)[1][1] >= 2,
        min_n=lambda p: _shape_params(p)[1][1] + 3,
        _predict=lambda p, n: (
            n - _shape_params(p)[1][1] - 2,
            catalan(_shape_params(p)[1][1] + 1)
            + catalan(_shape_params(p)[1][1])
            + 2 * catalan(_shape_params(p)[1][1]) * (n - 2 - _shape_params(p)[1][1]),
        ),
        samples=("0,1,2,0", "0,1,3,0"),
    ),
    CoeffFormula(
        id="second-0210",
        kind="second",
        description="(0,2,1,0): second coefficient 6 + 2 C(n-2,2) at x^(n-4)",
        covers=lambda p: _shape_params(p) == ("0KL0", (2, 1)),
        min_n=lambda p: 5,
        _predict=lambda p, n: (n - 4, 6 + 2 * comb(n - 2, 2)),
        samples=("0,2,1,0",),
    ),
    CoeffFormula(
        id="second-02l0",
        kind="second",
        description="(0,2,l,0), l >= 2: second coefficient "
        "2 C_(l+1) + 8 C_l + 4 C_l (n-4-l) at x^(n-l-3)",
        covers=lambda p: _shape_params(p)[0] == "0KL0"
        and _shape_params(p)[1][0] == 2
        and _shape_params(p)[1][1] >= 2,
        min_n=lambda p: _shape_params(p)[1][1] + 4,
        _predict=lambda p, n: (
            n - _shape_params(p)[1][1] - 3,
            2 * catalan(_shape_params(p)[1][1] + 1)
            + 8 * catalan(_shape_params(p)[1][1])
            + 4 * catalan(_shape_params(p)[1][1]) * (n - 4 - _shape_params(p)[1][1]),
        ),
        samples=("0,2,2,0", "0,2,3,0"),
    ),
    CoeffFormula(
        id="second-1001",
        kind="second",
        description="(1,0,0,1): second coefficient 3 C_(n-2) at x^(n-3)",
        covers=lambda p: _shape_params(p) == ("K00L", (1, 1)),
        min_n=lambda p: 3,
        _predict=lambda p, n: (n - 3, 3 * catalan(n - 2)),
        samples=("1,0,0,1",),
    ),
    CoeffFormula(
        id="second-0101",
        kind="second",
        description="(0,1,0,1): second coefficient 2 C_(n-2) + C_(n-3) at x^(n-3)",
        covers=lambda p: _shape_params(p) == ("0K0L", (1, 1)),
        min_n=lambda p: 4,
        _predict=lambda p, n: (n - 3, 2 * catalan(n - 2) + catalan(n - 3)),
        samples=("0,1,0,1",),
    ),
    CoeffFormula(
        id="special-1010-x0",
        kind="special",
        description="(1,0,1,0): constant term 2^(n-1)",
        covers=lambda p: _shape_params(p) == ("K0L0", (1, 1)),
        min_n=lambda p: 1,
        _predict=lambda p, n: (0, 2 ** (n - 1)),
        samples=("1,0,1,0",),
    ),
    CoeffFormula(
        id="special-1010-x1",
        kind="special",
        description="(1,0,1,0): x^1 coefficient (n-3) 2^(n-2) + 1",
        covers=lambda p: _shape_params(p) == ("K0L0", (1, 1)),
        min_n=lambda p: 3,
        _predict=lambda p, n: (1, (n - 3) * 2 ** (n - 2) + 1),
        samples=("1,0,1,0",),
    ),
    CoeffFormula(
        id="special-1001-x0",
        kind="special",
        description="(1,0,0,1): constant term n",
        covers=lambda p: _shape_params(p) == ("K00L", (1, 1)),
        min_n=lambda p: 1,
        _predict=lambda p, n: (0, n),
        samples=("1,0,0,1",),
    ),
    CoeffFormula(
        id="special-1001-x1",
        kind="special",
        description="(1,0,0,1): x^1 coefficient (n-1)(n-2)",
        covers=lambda p: _shape_params(p) == ("K00L", (1, 1)),
        min_n=lambda p: 3,
        _predict=lambda p, n: (1, (n - 1) * (n - 2)),
        samples=("1,0,0,1",),
    ),
    CoeffFormula(
        id="special-0101-x0",
        kind="special",
        description="(0,1,0,1): constant term 1 + C(n,2)",
        covers=lambda p: _shape_params(p) == ("0K0L", (1, 1)),
        min_n=lambda p: 2,
        _predict=lambda p, n: (0, 1 + comb(n, 2)),
        samples=("0,1,0,1",),
    ),
)


def _find(kind: str, p: PatternSpec) -> CoeffFormula:
    for f in FORMULAS:
        if f.kind == kind and f.covers(p):
            return f
    raise FormulaNotCoveredError(f"no {kind}-coefficient formula covers {p}")


def highest_coeff(pattern, n: int) -> tuple[int, int]:
    """(exponent, value) of the leading term of Q_n(x), by formula.

    >>> highest_coeff("2,0,1,0", 9)
    (6, 1)
    >>> highest_coeff("0,2,0,1", 9)
    (6, 264)
    """
    p = pattern_of(pattern)
    return _find("highest", p).predict(p, n)


def second_coeff(pattern, n: int) -> tuple[int, int]:
    """(exponent, value) of the second-highest term of Q_n(x), by formula.

    >>> second_coeff("1,0,2,0", 9)
    (5, 27)
    """
    p = pattern_of(pattern)
    return _find("second", p).predict(p, n)


def special_counts(pattern, n: int) -> dict[int, int]:
    """Exact low-coefficient values {exponent: value} known for this pattern.

    Only formulas whose n threshold is met contribute; raises
    FormulaNotCoveredError if no special formula covers the pattern at all.

    >>> special_counts("0,1,0,1", 5)
    {0: 11}
    """
    p = pattern_of(pattern)
    out: dict[int, int] = {}
    found = False
    for f in FORMULAS:
        if f.kind == "special" and f.covers(p):
            found = True
            if n >= f.min_n(p):
                exp, val = f.predict(p, n)
                out[exp] = val
    if not found:
        raise FormulaNotCoveredError(f"no special-count formula covers {p}")
    return out


def verify_formulas(n_max: int = 10, *, cap: int = DEFAULT_CAP,
                    cache: DistCache | None = None,
                    include_conjectures: bool = True) -> list[dict]:
    """Check every registered formula against the oracle on its samples.

    One report row per (formula, pattern, n): status "match" or "mismatch"
    for n at or above the formula's threshold, "below-threshold" (reported,
    never asserted) for smaller n where the claimed exponent still makes
    sense.  Highest/second rows also pin the degree, so a formula cannot
    pass by hitting a coefficient that is not actually the leading one.
    """
    rows: list[dict] = []
    formulas = [f for f in FORMULAS if include_conjectures or not f.conjecture]
    pats = sorted({s for f in formulas for s in f.samples})
    tables = {t.pattern.serialize(): t for t in build_tables(pats, n_max, cap=cap, cache=cache)}
    for f in formulas:
        for s in f.samples:
            p = pattern_of(s)
            assert f.covers(p), f"{f.id} sample {s} not covered by its own matcher"
            for n in range(n_max + 1):
                try:
                    exp, val = f.predict_raw(p, n)
                except ValueError:
                    continue  # n so small the expression is not even defined
                if exp < 0:
                    continue
                poly = tables[p.serialize()].rows[n]
                observed = poly.coeff(exp)
                if f.kind == "highest":
                    ok = poly.degree == exp and observed == val
                elif f.kind == "second":
                    ok = poly.degree == exp + 1 and observed == val
                else:
                    ok = observed == val
                below = n < f.min_n(p)
                rows.append(
                    {
                        "formula_id": f.id,
                        "pattern": p.serialize(),
                        "n": n,
                        "conjecture": f.conjecture,
                        "predicted": {"exponent": exp, "value": str(val)},
                        "observed": {"degree": poly.degree, "value": str(observed)},
                        "status": "below-threshold" if below else ("match" if ok else "mismatch"),
                    }
                )
    return rows


# ---------------------------------------------------------------------------
# Catalog of rational generating functions for Q(t, 0)


@dataclass(frozen=True)
class CatalogEntry:
    pattern: str
    gf: RationalGF
    oeis: str | None = None
    erratum: dict | None = None  # {"id": ..., "printed": <string>} when the
    # reference text misprints this function; gf holds the corrected form


def _catalan_tpoly(m: int) -> tuple[int, ...]:
    return tuple(catalan(j) for j in range(m))


def _gf_01l0(l: int) -> RationalGF:
    # (0,1,l,0):  (1 - t sum_{j<l} C_j t^j) / (1 - t (1 + sum_{j<l} C_j t^j))
    pre = _catalan_tpoly(l)
    num = tpoly_add((1,), tuple(-c for c in tpoly_mul((0, 1), pre)))
    den = tpoly_add(num, (0, -1))
    return RationalGF(num, den)


def _gf_02l0(l: int) -> RationalGF:
    # (0,2,l,0):  1 + t r^2 with r the (0,1,l,0) function: (d^2 + t n^2) / d^2
    r = _gf_01l0(l)
    d2 = tpoly_mul(r.den, r.den)
    return RationalGF(tpoly_add(d2, tpoly_mul((0, 1), tpoly_mul(r.num, r.num))), d2)


def _build_catalog() -> tuple[CatalogEntry, ...]:
    entries: list[CatalogEntry] = []

    # (k,0,0,0) continued-fraction chain: each denominator is the next
    # numerator.  The chain is also the (k-1,0,1,0) sequence shifted by one.
    k000 = {
        1: RationalGF((1,), (1, -1)),
        2: RationalGF((1, -1), (1, -2)),
        3: RationalGF((1, -2), (1, -3, 1)),
        4: RationalGF((1, -3, 1), (1, -4, 3)),
        5: RationalGF((1, -4, 3), (1, -5, 6, -1)),
        6: RationalGF((1, -5, 6, -1), (1, -6, 10, -4)),
        7: RationalGF((1, -6, 10, -4), (1, -7, 15, -10, 1)),
    }
    for k, gf in k000.items():
        err = None
        if k == 7:
            err = {
                "id": "gf-7000-numerator",
                "printed": "1 - 6t + 10t^3 - 4t^3",
                "note": "reference text misprints the numerator; the continued-fraction "
                "chain forces 1 - 6t + 10t^2 - 4t^3",
            }
        entries.append(CatalogEntry(f"{k},0,0,0", gf, erratum=err))
    for k in range(1, 7):
        entries.append(CatalogEntry(f"{k},0,1,0", k000[k + 1]))

    fib2 = {
        0: RationalGF((1,), (1, -1, -1)),
        1: RationalGF((1, -1, -1), (1, -2, -1)),
        2: RationalGF((1, -2, -1), (1, -3, 0, 1)),
        3: RationalGF((1, -3, 0, 1), (1, -4, 2, 2)),
        4: RationalGF((1, -4, 2, 2), (1, -5, 5, 2, -1)),
    }
    oeis2 = {1: "A000129", 2: "A052963"}
    for k, gf in fib2.items():
        entries.append(CatalogEntry(f"{k},0,2,0", gf, oeis=oeis2.get(k)))

    fib3 = {
        0: RationalGF((1,), (1, -1, -1, -2)),
        1: RationalGF((1, -1, -1, -2), (1, -2, -1, -2)),
        2: RationalGF((1, -2, -1, -2), (1, -3, 0, -1, 2)),
        3: RationalGF((1, -3, 0, -1, 2), (1, -4, 2, 0, 4)),
        4: RationalGF((1, -4, 2, 0, 4), (1, -5, 5, 0, 5, -2)),
    }
    for k, gf in fib3.items():
        entries.append(CatalogEntry(f"{k},0,3,0", gf, oeis="A077938" if k == 1 else None))

    k001 = {
        1: RationalGF((1, -1, 1), (1, -2, 1)),
        2: RationalGF((1, -2, 1, 1), (1, -3, 2)),
        3: RationalGF((1, -3, 2, 0, 1), (1, -4, 4, -1)),
        4: RationalGF((1, -4, 4, -1, 0, 1), (1, -5, 7, -3)),
        5: RationalGF((1, -5, 7, -3, 0, 0, 1), (1, -6, 11, -7, 1)),
    }
    for k, gf in k001.items():
        entries.append(CatalogEntry(f"{k},0,0,1", gf, oeis="A083329" if k == 2 else None))

    for l in range(1, 5):
        entries.append(CatalogEntry(f"0,1,{l},0", _gf_01l0(l)))
        entries.append(CatalogEntry(f"0,2,{l},0", _gf_02l0(l)))

    entries.append(CatalogEntry("0,1,0,0", RationalGF((1,), (1, -1))))
    entries.append(CatalogEntry("0,0,0,1", RationalGF((1,), (1, -1))))
    entries.append(CatalogEntry("0,2,0,0", RationalGF((1, -1, 1), (1, -2, 1))))
    entries.append(CatalogEntry("0,0,0,2", RationalGF((1, -1, 1), (1, -2, 1))))
    entries.append(CatalogEntry("0,1,0,1", RationalGF((1, -2, 2), (1, -3, 3, -1))))
    entries.append(
        CatalogEntry("0,2,0,1", RationalGF((1, -3, 4, -1, 1), (1, -4, 6, -4, 1)), oeis="A116731")
    )
    entries.append(
        CatalogEntry("0,2,0,2", RationalGF((1, -4, 7, -5, 4, 2), (1, -5, 10, -10, 5, -1)))
    )
    return tuple(entries)


_CATALOG = _build_catalog()


def gf_catalog() -> tuple[CatalogEntry, ...]:
    """All catalogued x=0 rational forms."""
    return _CATALOG


def catalog_entry(pattern) -> CatalogEntry:
    key = pattern_of(pattern).serialize()
    for e in _CATALOG:
        if e.pattern == key:
            return e
    raise FormulaNotCoveredError(f"no catalogued x=0 form for {key}")


def verify_catalog(order: int = DEFAULT_ORDER) -> list[dict]:
    """Expand every catalogued rational form and compare with the series
    route at x=0 through t^order.

    Status per entry: "match", "erratum" (computed series matches the
    corrected form of a catalogued misprint), or "mismatch".
    """
    rows = []
    for e in _CATALOG:
        expected = expand_rational(e.gf, order)
        computed = specialize_x0(gf_dispatch(e.pattern, order))
        ok = expected == computed
        status = "mismatch" if not ok else ("erratum" if e.erratum else "match")
        row = {
            "pattern": e.pattern,
            "gf": e.gf.to_json_obj(),
            "status": status,
            "expected": [str(v) for v in expected],
            "computed": [str(v) for v in computed],
        }
        if e.erratum:
            row["erratum"] = e.erratum
        if e.oeis:
            row["oeis"] = e.oeis
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# Cross-identities


def _random_pattern(rng: random.Random) -> PatternSpec:
    coords = []
    for _ in range(4):
        v = rng.choice((0, 0, 1, 1, 2, 3, EMPTY))
        coords.append(v)
    return PatternSpec(*coords)


def identity_checks(n_max: int = 8, order: int = DEFAULT_ORDER, *, trials: int = 20,
                    seed: int = 20260819, cap: int = DEFAULT_CAP,
                    cache: DistCache | None = None) -> list[dict]:
    """Structural identities hooked to independent computations.

    * inverse symmetry: Q for (a,b,c,d) and (a,d,c,b) is the same multiset,
      checked on random patterns (empty demands included) via the oracle;
    * x=0 chain: Q^(k,0,0,0)(t,0) = Q^(k-1,0,1,0)(t,0) for k=2..7;
    * mirrored pairs compute equal series: (0,2,0,1) vs sym (0,1,0,2);
    * mass check: Q_n(1) = C_n (matches ignored, pure Catalan count).
    """
    rows: list[dict] = []
    rng = random.Random(seed)

    sym_pairs = []
    seen = set()
    while len(sym_pairs) < trials:
        p = _random_pattern(rng)
        if p.coords in seen:
            continue
        seen.add(p.coords)
        sym_pairs.append((p, p.sym()))
    flat = [q for pair in sym_pairs for q in pair]
    tables = build_tables(flat, n_max, cap=cap, cache=cache)
    for idx, (p, q) in enumerate(sym_pairs):
        ok = tables[2 * idx].rows == tables[2 * idx + 1].rows
        rows.append(
            {
                "id": f"sym-{p.serialize()}",
                "detail": f"oracle tables equal for {p} and {q}, n <= {n_max}",
                "ok": ok,
            }
        )

    for k in range(2, 8):
        a = specialize_x0(gf_Qk000(k, order))
        b = specialize_x0(gf_Qk0l0(k - 1, 1, order))
        rows.append(
            {
                "id": f"x0-chain-k{k}",
                "detail": f"({k},0,0,0) and ({k-1},0,1,0) agree at x=0 through t^{order}",
                "ok": a == b,
            }
        )

    rows.append(
        {
            "id": "sym-series-0201",
            "detail": "series for (0,2,0,1) and (0,1,0,2) coincide",
            "ok": gf_dispatch("0,2,0,1", order) == gf_dispatch("0,1,0,2", order),
        }
    )

    for pat in ("1,0,1,0", "0,2,0,2", "3,0,0,1", "0,0,0,0"):
        s = gf_dispatch(pat, order)
        ok = specialize_x1(s) == [catalan(n) for n in range(order + 1)]
        rows.append(
            {
                "id": f"mass-{pat}",
                "detail": f"Q_n(1) = C_n for {pat} through t^{order}",
                "ok": ok,
            }
        )
    return rows
