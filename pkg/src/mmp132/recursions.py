"""Generating-function and convolution routes to the distributions.

Let Q(t, x) = 1 + sum_{n>=1} Q_n(x) t^n where Q_n is the distribution of
match counts for one quadrant pattern over the 132-avoiders of length n.
For patterns with at most two nonzero coordinates (and no empty-quadrant
demands) Q satisfies closed recursions, derived from the structural split
of a 132-avoider around the position of its largest value: everything
before n exceeds everything after, so each statistic decomposes over the
two factors once enough mass sits on one side.

Shape names used throughout, after normalizing with the inverse symmetry
(a,b,c,d) ~ (a,d,c,b):

    ZERO (0,0,0,0)   K000 (k,0,0,0)   0K00 (0,k,0,0)   00K0 (0,0,k,0)
    K0L0 (k,0,l,0)   K00L (k,0,0,l)   0KL0 (0,k,l,0)   0K0L (0,k,0,l)

Patterns (k,l,0,0) and (0,0,l,k) normalize to K00L and 0KL0.  Anything
with three or more demands, or an empty-quadrant demand, is out of scope
here and raises UnsupportedPatternError; the enumeration oracle still
handles those.

Two independent layers live in this module:

  * gf_*: truncated power-series assemblies of the closed generating
    functions (one function per shape, dispatch by classify);
  * rec_rows / recursion_check: the n-indexed convolution recursions,
    seeded with oracle rows for the leaf shapes, giving a third route that
    shares no algebra with the series assemblies.
"""

from __future__ import annotations

import functools

from .errors import UnsupportedPatternError
from .oracle import DEFAULT_CAP, DistCache, build_tables
from .perms import EMPTY, PatternSpec, pattern_of
from .series import (
    DEFAULT_ORDER,
    TSeries,
    XPoly,
    catalan,
    catalan_of_tx,
    coeff,
    divide_exact,
    reciprocal,
    solve_quadratic_fixed_point,
    sqrt_unit,
    ts_const,
    ts_from_tpoly,
    ts_monomial,
    ts_shift_up,
)

# ---------------------------------------------------------------------------
# Shape classification


def classify(pattern) -> tuple[str, tuple[int, ...], PatternSpec]:
    """(shape name, parameters, normalized pattern) for the GF routes.

    >>> classify("2,0,1,0")
    ('K0L0', (2, 1), PatternSpec(a=2, b=0, c=1, d=0))
    >>> classify("3,2,0,0")[0:2]
    ('K00L', (3, 2))
    >>> classify("0,0,1,2")[0:2]
    ('0KL0', (2, 1))
    """
    p = pattern_of(pattern)
    if p.has_empty:
        raise UnsupportedPatternError(
            f"pattern {p} has an empty-quadrant demand; only the oracle covers those"
        )
    a, b, c, d = p.coords
    live = p.nonzero_positions()
    if len(live) > 2:
        raise UnsupportedPatternError(
            f"pattern {p} has {len(live)} nonzero coordinates; recursions cover at most two"
        )
    if len(live) == 0:
        return ("ZERO", (), p)
    if len(live) == 1:
        if a:
            return ("K000", (a,), p)
        if b:
            return ("0K00", (b,), p)
        if c:
            return ("00K0", (c,), p)
        return ("0K00", (d,), p.sym())
    pair = set(live)
    if pair == {0, 2}:
        return ("K0L0", (a, c), p)
    if pair == {0, 3}:
        return ("K00L", (a, d), p)
    if pair == {0, 1}:
        return ("K00L", (a, b), p.sym())
    if pair == {1, 2}:
        return ("0KL0", (b, c), p)
    if pair == {2, 3}:
        return ("0KL0", (d, c), p.sym())
    return ("0K0L", (b, d), p)


def gf_supported(pattern) -> bool:
    try:
        classify(pattern)
    except UnsupportedPatternError:
        return False
    return True


# ---------------------------------------------------------------------------
# Series assemblies, one per shape.  All exact integer arithmetic; every
# division goes through divide_exact/reciprocal which refuse to round.


@functools.cache
def gf_Q0000(order: int = DEFAULT_ORDER) -> TSeries:
    """Q for the empty pattern: every position matches, so C(tx)."""
    return catalan_of_tx(order)


@functools.cache
def gf_Qk000(k: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Shape (k,0,0,0): Q^(k) = 1 / (1 - t Q^(k-1)).

    The largest value matches only through its quadrant-I demand on what
    follows, and iterating the structural split peels one demand per level.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return gf_Q0000(order)
    prev = gf_Qk000(k - 1, order)
    return reciprocal(ts_const(order, 1) - ts_shift_up(prev, 1))


@functools.cache
def gf_Q00k0(k: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Shape (0,0,k,0): root of  tx Q^2 - A Q + 1 = 0,  Q(0,x) = 1,

    with A = 1 + (tx - t) sum_{j=0}^{k-1} C_j t^j.  Positions with fewer
    than k smaller-earlier points contribute the Catalan correction in A.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    x = XPoly.monomial(1, 1)
    u = ts_monomial(order, 1, x)  # t*x
    corr = ts_from_tpoly(order, [catalan(j) for j in range(k)])
    A = ts_const(order, 1) + ts_monomial(order, 1, XPoly([-1, 1])) * corr
    return solve_quadratic_fixed_point(A, u)


def gf_Q00k0_radical(k: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Same series as gf_Q00k0 via 2 / (A + sqrt(A^2 - 4tx)).

    Kept as an independent assembly for cross-checks; exactness of the
    square root and of the division by the constant 2 is part of the test.
    """
    x = XPoly.monomial(1, 1)
    u = ts_monomial(order, 1, x)
    corr = ts_from_tpoly(order, [catalan(j) for j in range(k)])
    A = ts_const(order, 1) + ts_monomial(order, 1, XPoly([-1, 1])) * corr
    disc = A * A - 4 * u
    return divide_exact(ts_const(order, 2), A + sqrt_unit(disc))


@functools.cache
def gf_Q0k00(k: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Shape (0,k,0,0).

    Q^(0,1,0,0) = 1 / (1 - t C(tx)); for k >= 2 the positions whose
    quadrant-II count falls short of k contribute Catalan-weighted
    corrections against the k-1 case:

    Q^(0,k,0,0) = [1 + t sum_{j=0}^{k-2} C_j t^j (Q^(0,k-1-j,0,0) - C(tx))]
                  / (1 - t C(tx)).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return gf_Q0000(order)
    one = ts_const(order, 1)
    cat = catalan_of_tx(order)
    den = one - ts_shift_up(cat, 1)
    if k == 1:
        return reciprocal(den)
    num = one
    for j in range(k - 1):
        num = num + ts_monomial(order, j + 1, catalan(j)) * (gf_Q0k00(k - 1 - j, order) - cat)
    return divide_exact(num, den)


@functools.cache
def gf_Qk0l0(k: int, l: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Shape (k,0,l,0): the (k,0,0,0) iteration on top of the (0,0,l,0) base,

    Q^(k,0,l,0) = 1 / (1 - t Q^(k-1,0,l,0)).
    """
    if k < 0 or l < 0:
        raise ValueError("parameters must be non-negative")
    if l == 0:
        return gf_Qk000(k, order)
    if k == 0:
        return gf_Q00k0(l, order)
    prev = gf_Qk0l0(k - 1, l, order)
    return reciprocal(ts_const(order, 1) - ts_shift_up(prev, 1))


def _catalan_prefix(order: int, m: int) -> TSeries:
    """sum_{j=0}^{m-1} C_j t^j (empty sum for m <= 0)."""
    return ts_from_tpoly(order, [catalan(j) for j in range(max(m, 0))])


@functools.cache
def gf_Qk00l(k: int, l: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Shape (k,0,0,l).

    Splitting at the largest value, the right factor keeps the full pattern
    while the left factor sees (k-1,0,0,0); short right factors (length
    below l) force the demand leftward, giving the boundary sum:

    Q^(k,0,0,l) = [ C_l t^l + sum_{j=0}^{l-1} C_j t^j ( 1 - t Q^(k-1,0,0,0)
                    + t (Q^(k-1,0,0,l-j) - sum_{s=0}^{l-j-1} C_s t^s) ) ]
                  / (1 - t Q^(k-1,0,0,0)).
    """
    if k < 0 or l < 0:
        raise ValueError("parameters must be non-negative")
    if l == 0:
        return gf_Qk000(k, order)
    if k == 0:
        return gf_Q0k00(l, order)  # (0,0,0,l) ~ (0,l,0,0)
    base = gf_Qk000(k - 1, order)
    den = ts_const(order, 1) - ts_shift_up(base, 1)
    num = ts_monomial(order, l, catalan(l))
    for j in range(l):
        inner = den + ts_shift_up(gf_Qk00l(k - 1, l - j, order) - _catalan_prefix(order, l - j), 1)
        num = num + ts_monomial(order, j, catalan(j)) * inner
    return divide_exact(num, den)


def gf_Qk001_alt(k: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Simplified assembly of gf_Qk00l(k, 1), kept as a cross-check:

    [1 - t Q^(k-1,0,0,0) + t Q^(k-1,0,0,1)] / (1 - t Q^(k-1,0,0,0)).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    base = gf_Qk000(k - 1, order)
    den = ts_const(order, 1) - ts_shift_up(base, 1)
    num = den + ts_shift_up(gf_Qk00l(k - 1, 1, order), 1)
    return divide_exact(num, den)


def gf_Qk002_alt(k: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Simplified assembly of gf_Qk00l(k, 2), kept as a cross-check:

    [1 - (t + t^2) Q^(k-1,0,0,0) + t Q^(k-1,0,0,2) + t^2 Q^(k-1,0,0,1)]
    / (1 - t Q^(k-1,0,0,0)).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    base = gf_Qk000(k - 1, order)
    den = ts_const(order, 1) - ts_shift_up(base, 1)
    num = (
        ts_const(order, 1)
        - (ts_shift_up(base, 1) + ts_shift_up(base, 2))
        + ts_shift_up(gf_Qk00l(k - 1, 2, order), 1)
        + ts_shift_up(gf_Qk00l(k - 1, 1, order), 2)
    )
    return divide_exact(num, den)


@functools.cache
def gf_Q0kl0(k: int, l: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Shape (0,k,l,0).

    Same splitting idea as gf_Qk00l with quadrants mirrored: the left
    factor keeps the full pattern, the right factor sees (0,0,l,0), and
    left factors shorter than k feed the boundary sum:

    Q^(0,k,l,0) = [ C_{k-1} t^{k-1} + sum_{j=0}^{k-2} C_j t^j ( 1 - t Q^(0,0,l,0)
                    + t (Q^(0,k-j-1,l,0) - sum_{s=0}^{k-j-2} C_s t^s) ) ]
                  / (1 - t Q^(0,0,l,0)).
    """
    if k < 0 or l < 0:
        raise ValueError("parameters must be non-negative")
    if l == 0:
        return gf_Q0k00(k, order)
    if k == 0:
        return gf_Q00k0(l, order)
    base = gf_Q00k0(l, order)
    den = ts_const(order, 1) - ts_shift_up(base, 1)
    if k == 1:
        return reciprocal(den)
    num = ts_monomial(order, k - 1, catalan(k - 1))
    for j in range(k - 1):
        inner = den + ts_shift_up(
            gf_Q0kl0(k - j - 1, l, order) - _catalan_prefix(order, k - j - 1), 1
        )
        num = num + ts_monomial(order, j, catalan(j)) * inner
    return divide_exact(num, den)


@functools.cache
def gf_Q0k0l(k: int, l: int, order: int = DEFAULT_ORDER) -> TSeries:
    """Shape (0,k,0,l): Q^(0,k,0,l) = Phi_{k,l} / (1 - t).

    Splitting at the largest value decouples the two demands once the left
    factor has length >= k and the right factor length >= l; shorter
    factors on either side push a reduced pattern to the other, giving

    Phi = sum_{j=0}^{k+l-1} C_j t^j  -  sum_{j=0}^{k+l-2} C_j t^{j+1}
        + t sum_{j=0}^{k-2} C_j t^j (Q^(0,k-j-1,0,l) - sum_{s=0}^{k+l-j-2} C_s t^s)
        + t (Q^(0,k,0,0) - sum_{u=0}^{k-2} C_u t^u)
            (Q^(0,0,0,l) - sum_{v=0}^{l-1} C_v t^v)
        + t sum_{j=1}^{l-1} C_j t^j (Q^(0,k,0,l-j) - sum_{w=0}^{k+l-j-2} C_w t^w).

    The two correction sums recurse on k and on l respectively and bottom
    out in the single-demand shapes.
    """
    if k < 0 or l < 0:
        raise ValueError("parameters must be non-negative")
    if k == 0:
        return gf_Q0k00(l, order)  # (0,0,0,l) ~ (0,l,0,0)
    if l == 0:
        return gf_Q0k00(k, order)
    phi = _catalan_prefix(order, k + l) - ts_shift_up(_catalan_prefix(order, k + l - 1), 1)
    for j in range(k - 1):
        phi = phi + ts_monomial(order, j + 1, catalan(j)) * (
            gf_Q0k0l(k - j - 1, l, order) - _catalan_prefix(order, k + l - j - 1)
        )
    phi = phi + ts_shift_up(
        (gf_Q0k00(k, order) - _catalan_prefix(order, k - 1))
        * (gf_Q0k00(l, order) - _catalan_prefix(order, l)),
        1,
    )
    for j in range(1, l):
        phi = phi + ts_monomial(order, j + 1, catalan(j)) * (
            gf_Q0k0l(k, l - j, order) - _catalan_prefix(order, k + l - j - 1)
        )
    return divide_exact(phi, ts_from_tpoly(order, [1, -1]))


def gf_Q0101_alt(order: int = DEFAULT_ORDER) -> TSeries:
    """Simplified assembly of gf_Q0k0l(1, 1), kept as a cross-check:

    [1 + t Q^(0,1,0,0) (Q^(0,0,0,1) - 1)] / (1 - t).
    """
    one = ts_const(order, 1)
    num = one + ts_shift_up(gf_Q0k00(1, order) * (gf_Q0k00(1, order) - one), 1)
    return divide_exact(num, ts_from_tpoly(order, [1, -1]))


def gf_Q0201_alt(order: int = DEFAULT_ORDER) -> TSeries:
    """Simplified assembly of gf_Q0k0l(2, 1), kept as a cross-check:

    [1 + t Q^(0,1,0,1) + t Q^(0,2,0,0) Q^(0,0,0,1)
       - t Q^(0,2,0,0) - t Q^(0,0,0,1)] / (1 - t).
    """
    one = ts_const(order, 1)
    q0101 = gf_Q0k0l(1, 1, order)
    q0200 = gf_Q0k00(2, order)
    q0001 = gf_Q0k00(1, order)
    num = one + ts_shift_up(q0101 + q0200 * q0001 - q0200 - q0001, 1)
    return divide_exact(num, ts_from_tpoly(order, [1, -1]))


def gf_Q0202_alt(order: int = DEFAULT_ORDER) -> TSeries:
    """Simplified assembly of gf_Q0k0l(2, 2), kept as a cross-check:

    [1 + (t + t^2) Q^(0,2,0,1) + t (Q^(0,2,0,0))^2
       - (2t + t^2) Q^(0,2,0,0)] / (1 - t).
    """
    one = ts_const(order, 1)
    q0201 = gf_Q0k0l(2, 1, order)
    q0200 = gf_Q0k00(2, order)
    num = (
        one
        + ts_shift_up(q0201, 1)
        + ts_shift_up(q0201, 2)
        + ts_shift_up(q0200 * q0200, 1)
        - 2 * ts_shift_up(q0200, 1)
        - ts_shift_up(q0200, 2)
    )
    return divide_exact(num, ts_from_tpoly(order, [1, -1]))


_GF_BY_SHAPE = {
    "ZERO": lambda params, order: gf_Q0000(order),
    "K000": lambda params, order: gf_Qk000(params[0], order),
    "0K00": lambda params, order: gf_Q0k00(params[0], order),
    "00K0": lambda params, order: gf_Q00k0(params[0], order),
    "K0L0": lambda params, order: gf_Qk0l0(params[0], params[1], order),
    "K00L": lambda params, order: gf_Qk00l(params[0], params[1], order),
    "0KL0": lambda params, order: gf_Q0kl0(params[0], params[1], order),
    "0K0L": lambda params, order: gf_Q0k0l(params[0], params[1], order),
}


def gf_dispatch(pattern, order: int = DEFAULT_ORDER) -> TSeries:
    """Series for any supported pattern, normalizing by the inverse symmetry.

    >>> from .series import coeff
    >>> coeff(gf_dispatch("1,0,1,0", 5), 5).coeffs
    (16, 17, 8, 1)
    """
    shape, params, _ = classify(pattern)
    return _GF_BY_SHAPE[shape](params, order)


# ---------------------------------------------------------------------------
# n-indexed convolution recursions (third route)

LEAF_SHAPES = ("ZERO", "0K00", "00K0")


class RecRoute:
    """Row-by-row evaluation of the convolution recursions.

    Leaf shapes, the ones the recursions consume but do not produce
    ((0,0,0,0), (0,k,0,0), (0,0,l,0) and their symmetric twins), come from
    a pluggable base callable, by default the brute-force oracle.  That
    keeps this route independent of the series assemblies: when all three
    agree the algebra, the counting, and the recursion structure confirm
    each other.
    """

    def __init__(self, base, n_max: int):
        self.base = base
        self.n_max = n_max
        self.memo: dict[tuple, list[XPoly]] = {}

    def rows(self, pattern) -> list[XPoly]:
        shape, params, norm = classify(pattern)
        key = norm.coords
        if key in self.memo:
            return self.memo[key]
        if shape in LEAF_SHAPES:
            out = self.base(norm, self.n_max)
        elif shape == "K000":
            out = self._rows_k0l0(params[0], 0)
        elif shape == "K0L0":
            out = self._rows_k0l0(params[0], params[1])
        elif shape == "K00L":
            out = self._rows_k00l(params[0], params[1])
        elif shape == "0KL0":
            out = self._rows_0kl0(params[0], params[1])
        else:
            out = self._rows_0k0l(params[0], params[1])
        self.memo[key] = out
        return out

    def _rows_k0l0(self, k: int, l: int) -> list[XPoly]:
        # Q_n = sum_{i=1}^n Q'_{i-1} Q_{n-i}, Q' the (k-1,0,l,0) table.
        prev = self.rows(PatternSpec(k - 1, 0, l, 0))
        out = [XPoly.const(1)]
        for n in range(1, self.n_max + 1):
            acc = XPoly()
            for i in range(1, n + 1):
                acc = acc + prev[i - 1] * out[n - i]
            out.append(acc)
        return out

    def _rows_k00l(self, k: int, l: int) -> list[XPoly]:
        # Q_n = sum_{i=1}^{n-l} Q^(k-1,0,0,0)_{i-1} Q_{n-i}
        #     + sum_{j=0}^{l-1} C_j Q^(k-1,0,0,l-j)_{n-j-1},  n >= l+1,
        # with Q_n = C_n below.
        left = self.rows(PatternSpec(k - 1, 0, 0, 0))
        right = {m: self.rows(PatternSpec(k - 1, 0, 0, m)) for m in range(1, l + 1)}
        out = [XPoly.const(catalan(n)) for n in range(min(l, self.n_max) + 1)]
        for n in range(l + 1, self.n_max + 1):
            acc = XPoly()
            for i in range(1, n - l + 1):
                acc = acc + left[i - 1] * out[n - i]
            for j in range(l):
                acc = acc + catalan(j) * right[l - j][n - j - 1]
            out.append(acc)
        return out

    def _rows_0kl0(self, k: int, l: int) -> list[XPoly]:
        # Q_n = sum_{i=k}^{n} Q_{i-1} Q^(0,0,l,0)_{n-i}
        #     + sum_{j=1}^{k-1} C_{j-1} Q^(0,k-j,l,0)_{n-j},  n >= k,
        # with Q_n = C_n below.
        right = self.rows(PatternSpec(0, 0, l, 0))
        lower = {m: self.rows(PatternSpec(0, m, l, 0)) for m in range(1, k)}
        out = [XPoly.const(catalan(n)) for n in range(min(k - 1, self.n_max) + 1)]
        for n in range(k, self.n_max + 1):
            acc = XPoly()
            for i in range(k, n + 1):
                acc = acc + out[i - 1] * right[n - i]
            for j in range(1, k):
                acc = acc + catalan(j - 1) * lower[k - j][n - j]
            out.append(acc)
        return out

    def _rows_0k0l(self, k: int, l: int) -> list[XPoly]:
        # Q_n = sum_{i=1}^{k-1} C_{i-1} Q^(0,k-i,0,l)_{n-i}
        #     + sum_{i=k}^{n-l} Q^(0,k,0,0)_{i-1} Q^(0,0,0,l)_{n-i}
        #     + sum_{j=0}^{l-1} C_j Q^(0,k,0,l-j)_{n-j-1},  n >= k+l,
        # with Q_n = C_n below.
        left = self.rows(PatternSpec(0, k, 0, 0))
        right = self.rows(PatternSpec(0, 0, 0, l))
        reduced_k = {m: self.rows(PatternSpec(0, m, 0, l)) for m in range(1, k)}
        reduced_l = {m: self.rows(PatternSpec(0, k, 0, m)) for m in range(1, l)}
        out = [XPoly.const(catalan(n)) for n in range(min(k + l - 1, self.n_max) + 1)]
        for n in range(k + l, self.n_max + 1):
            acc = XPoly()
            for i in range(1, k):
                acc = acc + catalan(i - 1) * reduced_k[k - i][n - i]
            for i in range(k, n - l + 1):
                acc = acc + left[i - 1] * right[n - i]
            for j in range(l):
                if j == 0:
                    # the j = 0 term references the table being built, at n-1
                    acc = acc + out[n - 1]
                else:
                    acc = acc + catalan(j) * reduced_l[l - j][n - j - 1]
            out.append(acc)
        return out


def oracle_base_rows(*, cap: int = DEFAULT_CAP, cache: DistCache | None = None):
    """Leaf-row supplier backed by the brute-force oracle."""

    def base(pattern: PatternSpec, n_max: int) -> list[XPoly]:
        table = build_tables([pattern], n_max, cap=cap, cache=cache)[0]
        return [table.rows[n] for n in range(n_max + 1)]

    return base


def rec_rows(pattern, n_max: int, base=None, *, cap: int = DEFAULT_CAP,
             cache: DistCache | None = None) -> list[XPoly]:
    """Distribution rows 0..n_max via the convolution recursions."""
    if base is None:
        base = oracle_base_rows(cap=cap, cache=cache)
    return RecRoute(base, n_max).rows(pattern)


def recursion_check(pattern, n_max: int = 8, *, cap: int = DEFAULT_CAP,
                    cache: DistCache | None = None) -> dict:
    """Three-way agreement check: oracle vs series vs convolution rows.

    Returns {"pattern", "n_max", "agree", "first_mismatch"} where
    first_mismatch is None or {"n", "route_a", "route_b"} carrying the two
    disagreeing rows as named coefficient lists.
    """
    p = pattern_of(pattern)
    shape, params, norm = classify(p)  # raises for unsupported shapes
    oracle_rows = [
        build_tables([p], n_max, cap=cap, cache=cache)[0].rows[n] for n in range(n_max + 1)
    ]
    s = gf_dispatch(p, order=n_max)
    series_rows = [coeff(s, n) for n in range(n_max + 1)]
    conv_rows = rec_rows(p, n_max, cap=cap, cache=cache)

    routes = [("oracle", oracle_rows), ("series", series_rows), ("convolution", conv_rows)]
    for n in range(n_max + 1):
        for idx_a in range(len(routes)):
            for idx_b in range(idx_a + 1, len(routes)):
                name_a, rows_a = routes[idx_a]
                name_b, rows_b = routes[idx_b]
                if rows_a[n] != rows_b[n]:
                    return {
                        "pattern": p.serialize(),
                        "n_max": n_max,
                        "agree": False,
                        "first_mismatch": {
                            "n": n,
                            "route_a": {"name": name_a,
                                        "coeffs": [str(v) for v in rows_a[n].coeffs]},
                            "route_b": {"name": name_b,
                                        "coeffs": [str(v) for v in rows_b[n].coeffs]},
                        },
                    }
    return {"pattern": p.serialize(), "n_max": n_max, "agree": True, "first_mismatch": None}
