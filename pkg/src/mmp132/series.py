"""Exact truncated power series in t whose coefficients are polynomials in x.

Everything here is integer arithmetic.  An XPoly is a polynomial in x with
int coefficients, stored dense with no trailing zeros.  A TSeries is a
power series in t truncated at a fixed order N: coefficients for t^0..t^N
are kept exactly, everything higher is discarded.  Binary operations on two
TSeries truncate to the smaller order, so precision never silently exceeds
what both operands can support.

The solvers (reciprocal, divide_exact, sqrt_unit, solve_quadratic_fixed_point,
expand_rational) work order by order and insist on exact integer divisions;
they raise ExactDivisionError rather than leave integers.

>>> s = sqrt_unit(ts_from_tpoly(8, [1, -4]))        # sqrt(1-4t)
>>> half = ts_shift_down(ts_const(8, 1) - s, 1)     # (1-sqrt(1-4t))/t
>>> divide_exact(half, ts_const(7, 2)) == catalan_series(7)
True
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ExactDivisionError

DEFAULT_ORDER = 20


class XPoly:
    """Dense integer polynomial in x.

    >>> p = XPoly([1, 0, 3])
    >>> p.coeff(2), p.degree, p.eval_at(2)
    (3, 2, 13)
    >>> str(XPoly([16, 17, 8, 1]))
    '16 + 17*x + 8*x^2 + x^3'
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for v in c:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"XPoly coefficients must be int, got {v!r}")
        self._c = tuple(c)

    @staticmethod
    def const(v: int) -> "XPoly":
        return XPoly((v,))

    @staticmethod
    def monomial(coef: int, power: int) -> "XPoly":
        if power < 0:
            raise ValueError("power must be non-negative")
        return XPoly((0,) * power + (coef,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, r: int) -> int:
        return self._c[r] if 0 <= r < len(self._c) else 0

    def eval_at(self, x0: int) -> int:
        acc = 0
        for v in reversed(self._c):
            acc = acc * x0 + v
        return acc

    def exact_div(self, k: int) -> "XPoly":
        if k == 0:
            raise ZeroDivisionError("division of XPoly by zero")
        out = []
        for v in self._c:
            q, r = divmod(v, k)
            if r:
                raise ExactDivisionError(f"{v} not divisible by {k}")
            out.append(q)
        return XPoly(out)

    def _coerce(self, other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return XPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        return XPoly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return XPoly([-v for v in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return XPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if av:
                for j, bv in enumerate(b):
                    out[i + j] += av * bv
        return XPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"XPoly({list(self._c)!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for r, v in enumerate(self._c):
            if v == 0:
                continue
            if r == 0:
                parts.append(str(v))
            else:
                xs = "x" if r == 1 else f"x^{r}"
                if v == 1:
                    parts.append(xs)
                elif v == -1:
                    parts.append(f"-{xs}")
                else:
                    parts.append(f"{v}*{xs}")
        return " + ".join(parts).replace("+ -", "- ")


X_ZERO = XPoly()
X_ONE = XPoly.const(1)


class TSeries:
    """Power series in t, exact through t^order, XPoly coefficients."""

    __slots__ = ("_order", "_c")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        self._order = order
        cs = []
        for v in coeffs:
            if not isinstance(v, XPoly):
                v = XPoly.const(v) if v else X_ZERO
            cs.append(v)
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        while len(cs) < order + 1:
            cs.append(X_ZERO)
        self._c = tuple(cs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[XPoly, ...]:
        return self._c

    def coeff(self, n: int) -> XPoly:
        if n < 0:
            return X_ZERO
        if n > self._order:
            raise IndexError(f"coefficient t^{n} beyond series order {self._order}")
        return self._c[n]

    def truncate(self, order: int) -> "TSeries":
        if order > self._order:
            raise ValueError(f"cannot extend a truncated series ({self._order} -> {order})")
        return TSeries(order, self._c[: order + 1])

    def _coerce(self, other):
        if isinstance(other, TSeries):
            return other
        if isinstance(other, (int, XPoly)) and not isinstance(other, bool):
            return TSeries(self._order, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self._order, o._order)
        return TSeries(n, [self._c[i] + o._c[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TSeries(self._order, [-p for p in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self._order, o._order)
        out = [X_ZERO] * (n + 1)
        for i in range(n + 1):
            a = self._c[i]
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = o._c[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TSeries(n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self._order == other._order and self._c == other._c

    def __hash__(self):
        return hash((self._order, self._c))

    def __repr__(self):
        shown = ", ".join(str(list(p.coeffs)) for p in self._c[:6])
        tail = ", ..." if self._order > 5 else ""
        return f"TSeries(order={self._order}, coeffs=[{shown}{tail}])"


def ts_const(order: int, value) -> TSeries:
    return TSeries(order, [value])


def ts_monomial(order: int, n: int, value=1) -> TSeries:
    """value * t^n as a TSeries."""
    if n > order:
        return TSeries(order)
    return TSeries(order, [0] * n + [value])


def ts_from_tpoly(order: int, tcoeffs: Sequence) -> TSeries:
    """Series from a polynomial in t (entries are ints or XPolys)."""
    return TSeries(order, list(tcoeffs))


def ts_shift_up(s: TSeries, m: int) -> TSeries:
    """Multiply by t^m, keeping the order (top m coefficients fall off)."""
    if m < 0:
        raise ValueError("shift must be non-negative")
    return TSeries(s.order, (X_ZERO,) * m + s.coeffs[: s.order + 1 - m])


def ts_shift_down(s: TSeries, m: int) -> TSeries:
    """Divide by t^m.  The low m coefficients must vanish; order drops by m."""
    if m < 0:
        raise ValueError("shift must be non-negative")
    if m > s.order:
        raise ValueError("cannot shift below order 0")
    if any(not p.is_zero for p in s.coeffs[:m]):
        raise ExactDivisionError(f"series not divisible by t^{m}")
    return TSeries(s.order - m, s.coeffs[m:])


def coeff(s: TSeries, n: int, r: int | None = None):
    """t^n coefficient of s: the XPoly, or its x^r entry when r is given."""
    p = s.coeff(n)
    return p if r is None else p.coeff(r)


def specialize_x0(s: TSeries) -> list[int]:
    """The integer sequence [t^n](s) at x=0, n = 0..order."""
    return [p.coeff(0) for p in s.coeffs]


def specialize_x1(s: TSeries) -> list[int]:
    """The integer sequence [t^n](s) at x=1, n = 0..order."""
    return [p.eval_at(1) for p in s.coeffs]


@functools.cache
def catalan(n: int) -> int:
    """Catalan number C_n.

    >>> [catalan(i) for i in range(8)]
    [1, 1, 2, 5, 14, 42, 132, 429]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    # C_n = C_{n-1} * 2(2n-1)/(n+1), exact at every step
    return catalan(n - 1) * 2 * (2 * n - 1) // (n + 1)


def catalan_series(order: int) -> TSeries:
    """sum C_n t^n, the generating function of the Catalan numbers."""
    return TSeries(order, [catalan(n) for n in range(order + 1)])


def catalan_of_tx(order: int) -> TSeries:
    """sum C_n x^n t^n, the Catalan series evaluated at tx."""
    return TSeries(order, [XPoly.monomial(catalan(n), n) for n in range(order + 1)])


def _unit_value(p: XPoly, what: str) -> int:
    if p.degree > 0 or p.coeff(0) not in (1, -1):
        raise ExactDivisionError(f"{what} needs constant term +-1, got {p}")
    return p.coeff(0)


def reciprocal(s: TSeries) -> TSeries:
    """Multiplicative inverse of a series with constant term +-1.

    >>> f = ts_from_tpoly(10, [1, -1])
    >>> specialize_x0(reciprocal(f))
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]
    """
    a0 = _unit_value(s.coeff(0), "reciprocal")
    n = s.order
    out = [XPoly.const(a0)]
    for m in range(1, n + 1):
        acc = X_ZERO
        for i in range(1, m + 1):
            ai = s.coeff(i)
            if not ai.is_zero:
                acc = acc + ai * out[m - i]
        out.append((-a0) * acc)
    return TSeries(n, out)


def divide_exact(num: TSeries, den: TSeries) -> TSeries:
    """Solve den * q = num for q, order by order.

    The denominator's constant term must be a nonzero integer constant, and
    every step must divide exactly; otherwise ExactDivisionError.  This is
    what makes cross-checks honest: if a closed form only holds up to a
    rational factor, the division blows up instead of rounding.
    """
    d0_poly = den.coeff(0)
    if d0_poly.degree > 0 or d0_poly.is_zero:
        raise ExactDivisionError(f"divide_exact needs nonzero constant leading term, got {d0_poly}")
    d0 = d0_poly.coeff(0)
    n = min(num.order, den.order)
    out: list[XPoly] = []
    for m in range(n + 1):
        acc = num.coeff(m)
        for i in range(1, m + 1):
            di = den.coeff(i)
            if not di.is_zero:
                acc = acc - di * out[m - i]
        out.append(acc.exact_div(d0))
    return TSeries(n, out)


def sqrt_unit(s: TSeries) -> TSeries:
    """Square root of a series with constant term 1, exact or error.

    >>> g = ts_from_tpoly(6, [1, 2, 1])    # (1+t)^2
    >>> sqrt_unit(g) == ts_from_tpoly(6, [1, 1])
    True
    """
    if s.coeff(0) != X_ONE:
        raise ExactDivisionError(f"sqrt_unit needs constant term 1, got {s.coeff(0)}")
    n = s.order
    out = [X_ONE]
    for m in range(1, n + 1):
        acc = s.coeff(m)
        for i in range(1, m):
            acc = acc - out[i] * out[m - i]
        out.append(acc.exact_div(2))
    return TSeries(n, out)


def solve_quadratic_fixed_point(A: TSeries, u: TSeries) -> TSeries:
    """The series Q with u*Q^2 - A*Q + 1 = 0 and Q(0) = 1.

    Requires A to have constant term 1 and u to vanish at t=0, which makes
    the t^n coefficient of Q depend only on lower coefficients:

        Q_n = sum_{i>=1} u_i (Q^2)_{n-i} - sum_{j>=1} A_j Q_{n-j}   (n >= 1).

    The result is the same series the quadratic formula gives as
    (A - sqrt(A^2 - 4u)) / (2u), without leaving integer coefficients.
    """
    if A.coeff(0) != X_ONE:
        raise ExactDivisionError(f"quadratic solve needs A(0) = 1, got {A.coeff(0)}")
    if not u.coeff(0).is_zero:
        raise ExactDivisionError(f"quadratic solve needs u(0) = 0, got {u.coeff(0)}")
    n = min(A.order, u.order)
    q: list[XPoly] = [X_ONE]
    sq: list[XPoly] = [X_ONE]  # coefficients of Q^2, kept in step with q
    for m in range(1, n + 1):
        acc = X_ZERO
        for i in range(1, m + 1):
            ui = u.coeff(i)
            if not ui.is_zero:
                acc = acc + ui * sq[m - i]
        for j in range(1, m + 1):
            aj = A.coeff(j)
            if not aj.is_zero:
                acc = acc - aj * q[m - j]
        q.append(acc)
        # (Q^2)_m now that q_m is known: sum_{a+b=m} q_a q_b
        s2 = X_ZERO
        for a_ in range(m + 1):
            s2 = s2 + q[a_] * q[m - a_]
        sq.append(s2)
    return TSeries(n, q)


@dataclass(frozen=True)
class RationalGF:
    """A rational function num(t)/den(t) with integer coefficients.

    Coefficient tuples are ascending in t.  den must not vanish at t=0;
    expansion to an integer series additionally needs den(0) = +-1.
    """

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "num", _trim_int_tuple(self.num, "num"))
        object.__setattr__(self, "den", _trim_int_tuple(self.den, "den"))
        if not self.den or self.den[0] == 0:
            raise ExactDivisionError("rational GF denominator must not vanish at t=0")

    def to_json_obj(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @staticmethod
    def from_json_obj(obj) -> "RationalGF":
        return RationalGF(tuple(obj["num"]), tuple(obj["den"]))

    def __str__(self):
        return f"({_tpoly_str(self.num)}) / ({_tpoly_str(self.den)})"


def _trim_int_tuple(vals, what) -> tuple[int, ...]:
    out = list(vals)
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"RationalGF {what} entries must be int, got {v!r}")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _tpoly_str(coeffs: Sequence[int]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for n, v in enumerate(coeffs):
        if v == 0:
            continue
        if n == 0:
            parts.append(str(v))
        else:
            ts = "t" if n == 1 else f"t^{n}"
            if v == 1:
                parts.append(ts)
            elif v == -1:
                parts.append(f"-{ts}")
            else:
                parts.append(f"{v}*{ts}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def expand_rational(gf: RationalGF, order: int) -> list[int]:
    """First order+1 coefficients of the Taylor expansion of gf at t=0.

    den(0) must be +-1 so the expansion stays in integers.

    >>> expand_rational(RationalGF((1, -1), (1, -2)), 8)
    [1, 1, 2, 4, 8, 16, 32, 64, 128]
    """
    d0 = gf.den[0]
    if d0 not in (1, -1):
        raise ExactDivisionError(f"integer expansion needs den(0) = +-1, got {d0}")
    out: list[int] = []
    for m in range(order + 1):
        acc = gf.num[m] if m < len(gf.num) else 0
        for i in range(1, min(m, len(gf.den) - 1) + 1):
            acc -= gf.den[i] * out[m - i]
        out.append(acc * d0)
    return out


def tpoly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Product of two integer polynomials in t (ascending coefficients)."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] += av * bv
    return _trim_int_tuple(out, "product")


def tpoly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim_int_tuple(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], "sum"
    )


def ts_to_json_obj(s: TSeries) -> dict:
    """{"order": N, "coeffs": [[decimal strings ascending in x], ...]}."""
    return {
        "order": s.order,
        "coeffs": [[str(v) for v in p.coeffs] for p in s.coeffs],
    }


def ts_from_json_obj(obj) -> TSeries:
    return TSeries(int(obj["order"]), [XPoly([int(v) for v in row]) for row in obj["coeffs"]])
