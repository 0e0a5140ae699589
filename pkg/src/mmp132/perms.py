"""Permutations, 132-avoidance, and quadrant marked mesh patterns.

A permutation of length n is a tuple of the integers 1..n.  Positions and
values are 1-based at the API surface; the tuple itself is indexed the usual
0-based way.

Placing a permutation on the grid (point (i, sigma_i) for each position i),
every point splits the remaining points into four open quadrants:

    I   positions after i with larger values
    II  positions before i with larger values
    III positions before i with smaller values
    IV  positions after i with smaller values

A quadrant pattern is a 4-tuple (a, b, c, d), one entry per quadrant in the
order I, II, III, IV.  An integer entry k demands at least k points in that
quadrant (0 demands nothing); the special entry EMPTY demands that the
quadrant contain no points at all.  A position of the permutation matches
the pattern when all four demands hold, and ``mmp_count`` counts matching
positions.

The permutations of interest avoid the classical pattern 132: there is no
triple of positions i < j < k with sigma_i < sigma_k < sigma_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import PatternSyntaxError, PermutationError

Perm = tuple[int, ...]


class _Empty:
    """Sentinel for an empty-quadrant demand.  Use the EMPTY constant."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()

Coord = Union[int, _Empty]


@dataclass(frozen=True)
class PatternSpec:
    """A quadrant pattern (a, b, c, d).

    Coordinates are non-negative integers or EMPTY, listed in quadrant
    order I, II, III, IV.

    >>> PatternSpec(1, 0, 2, 0).serialize()
    '1,0,2,0'
    >>> parse_pattern("4,2,e,e").coords
    (4, 2, EMPTY, EMPTY)
    """

    a: Coord
    b: Coord
    c: Coord
    d: Coord

    def __post_init__(self):
        for name, v in zip("abcd", (self.a, self.b, self.c, self.d)):
            if v is EMPTY:
                continue
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise PatternSyntaxError(
                    f"pattern coordinate {name}={v!r} is not a non-negative int or EMPTY"
                )

    @property
    def coords(self) -> tuple[Coord, Coord, Coord, Coord]:
        return (self.a, self.b, self.c, self.d)

    @property
    def has_empty(self) -> bool:
        return any(v is EMPTY for v in self.coords)

    def nonzero_positions(self) -> tuple[int, ...]:
        """0-based indices of coordinates that impose a condition."""
        return tuple(i for i, v in enumerate(self.coords) if v is EMPTY or v != 0)

    def sym(self) -> "PatternSpec":
        """The pattern (a, d, c, b).

        Taking inverses maps 132-avoiders to 132-avoiders and swaps
        quadrants II and IV, so this pattern has the same distribution.
        """
        return PatternSpec(self.a, self.d, self.c, self.b)

    def serialize(self) -> str:
        return ",".join("e" if v is EMPTY else str(v) for v in self.coords)

    def __str__(self) -> str:
        return self.serialize()


def parse_pattern(text: str) -> PatternSpec:
    """Parse "a,b,c,d" with "e" standing for EMPTY.

    >>> parse_pattern("0,1,0,1")
    PatternSpec(a=0, b=1, c=0, d=1)
    """
    parts = [p.strip() for p in text.strip().split(",")]
    if len(parts) != 4:
        raise PatternSyntaxError(f"pattern needs 4 comma-separated coordinates, got {text!r}")
    coords: list[Coord] = []
    for p in parts:
        if p in ("e", "E"):
            coords.append(EMPTY)
        elif p.isdigit():
            coords.append(int(p))
        else:
            raise PatternSyntaxError(f"bad pattern coordinate {p!r} in {text!r}")
    return PatternSpec(*coords)


def pattern_of(value) -> PatternSpec:
    """Coerce a PatternSpec, string, or 4-tuple to a PatternSpec."""
    if isinstance(value, PatternSpec):
        return value
    if isinstance(value, str):
        return parse_pattern(value)
    if isinstance(value, (tuple, list)) and len(value) == 4:
        return PatternSpec(*value)
    raise PatternSyntaxError(f"cannot interpret {value!r} as a pattern")


def validate_permutation(seq: Iterable[int]) -> Perm:
    """Return seq as a tuple after checking it permutes 1..n."""
    sigma = tuple(seq)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise PermutationError(f"{sigma!r} is not a permutation of 1..{n}")
    return sigma


def parse_permutation(text: str) -> Perm:
    """Parse a permutation string.

    One-line notation: digits only for n <= 9 ("471569283"), or
    comma-separated values for any n ("4,7,1,5,6,9,2,8,3").

    >>> parse_permutation("2754")
    Traceback (most recent call last):
        ...
    mmp132.errors.PermutationError: (2, 7, 5, 4) is not a permutation of 1..4
    >>> parse_permutation("10,2,1,3,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if "," in text:
        try:
            values = [int(p) for p in text.split(",")]
        except ValueError:
            raise PermutationError(f"bad permutation string {text!r}") from None
    elif text.isdigit():
        values = [int(ch) for ch in text]
    else:
        raise PermutationError(f"bad permutation string {text!r}")
    return validate_permutation(values)


def format_permutation(sigma: Iterable[int]) -> str:
    """Inverse of parse_permutation: digit string if n <= 9, else commas."""
    sigma = tuple(sigma)
    if len(sigma) <= 9:
        return "".join(str(v) for v in sigma)
    return ",".join(str(v) for v in sigma)


def quadrant_counts(sigma: Perm, i: int) -> tuple[int, int, int, int]:
    """Counts of points in quadrants I..IV around position i (1-based).

    The four counts always sum to n - 1.

    >>> quadrant_counts((4, 7, 1, 5, 6, 9, 2, 8, 3), 4)
    (3, 1, 2, 2)
    """
    n = len(sigma)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    v = sigma[i - 1]
    q1 = q2 = q3 = q4 = 0
    for j in range(i - 1):
        if sigma[j] > v:
            q2 += 1
        else:
            q3 += 1
    for j in range(i, n):
        if sigma[j] > v:
            q1 += 1
        else:
            q4 += 1
    return (q1, q2, q3, q4)


def _demand_ok(count: int, demand: Coord) -> bool:
    if demand is EMPTY:
        return count == 0
    return count >= demand


def matches(sigma: Perm, i: int, pattern) -> bool:
    """Does position i of sigma match the quadrant pattern?

    >>> matches((1, 3, 2), 1, PatternSpec(1, 0, 0, 0))
    True
    >>> matches((1, 3, 2), 1, PatternSpec(EMPTY, 0, 0, 0))
    False
    """
    p = pattern_of(pattern)
    counts = quadrant_counts(sigma, i)
    return all(_demand_ok(cnt, dem) for cnt, dem in zip(counts, p.coords))


def mmp_count(sigma: Perm, pattern) -> int:
    """Number of positions of sigma matching the pattern.

    >>> mmp_count((2, 1, 3), PatternSpec(1, 0, 1, 0))
    0
    >>> mmp_count((1, 2, 3), PatternSpec(1, 0, 1, 0))
    1
    """
    p = pattern_of(pattern)
    sigma = validate_permutation(sigma)
    demands = p.coords
    total = 0
    for counts in quadrant_counts_all(sigma):
        if all(_demand_ok(cnt, dem) for cnt, dem in zip(counts, demands)):
            total += 1
    return total


def quadrant_counts_all(sigma: Perm) -> list[tuple[int, int, int, int]]:
    """Quadrant counts for every position, in one O(n^2) sweep.

    Row i-1 of the result equals quadrant_counts(sigma, i).  Useful when
    many patterns are evaluated against the same permutation.
    """
    n = len(sigma)
    out = []
    for i in range(n):
        v = sigma[i]
        q2 = 0
        for j in range(i):
            if sigma[j] > v:
                q2 += 1
        q3 = i - q2
        # Values above v overall: n - v of them; q1 = those after position i.
        q1 = (n - v) - q2
        q4 = (n - i - 1) - q1
        out.append((q1, q2, q3, q4))
    return out


def is_132_avoiding(sigma: Perm) -> bool:
    """Test for the classical pattern 132 (no i<j<k with sigma_i<sigma_k<sigma_j).

    Linear-time stack scan from the right: "middle" is the largest value
    seen so far that has some larger value to its left (a 32 suffix of a
    132); any value to the left of both that is smaller completes the
    pattern.

    >>> is_132_avoiding((4, 7, 1, 5, 6, 9, 2, 8, 3))
    False
    >>> is_132_avoiding((5, 6, 4, 7, 3, 1, 2))
    True
    """
    middle = 0
    stack: list[int] = []
    for v in reversed(sigma):
        if v < middle:
            return False
        while stack and stack[-1] < v:
            middle = stack.pop()
        stack.append(v)
    return True


def enumerate_avoiders(n: int) -> Iterator[Perm]:
    """Yield all 132-avoiding permutations of length n.

    Generation follows the structure theorem for 132-avoiders: if n sits at
    position i, everything before it must exceed everything after it, so
    sigma = (alpha shifted up by n-i) + (n,) + beta with alpha and beta
    avoiding 132 on their own.  Counts are the Catalan numbers.

    >>> sorted(enumerate_avoiders(3))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    >>> sum(1 for _ in enumerate_avoiders(6))
    132
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    if n <= _CACHE_MAX:
        yield from _avoiders(n)
        return
    # Too many to keep around: stream them.  With the position of n at i,
    # only small i recurse into another streamed length (n - i > _CACHE_MAX
    # forces i < n - _CACHE_MAX, so the alpha side is tiny there); the bulk
    # of the work reads the memoised lists.
    for i in range(1, n + 1):
        shift = n - i
        for alpha in enumerate_avoiders(i - 1):
            head = tuple(v + shift for v in alpha) + (n,)
            for beta in enumerate_avoiders(n - i):
                yield head + beta


def _avoiders(n: int) -> list[Perm]:
    # Memoised bottom-up table of all avoiders up to length _CACHE_MAX
    # (Catalan growth: 58786 tuples at n=11, a few MB).
    while len(_AVOIDER_CACHE) <= n:
        m = len(_AVOIDER_CACHE)
        rows: list[Perm] = []
        for i in range(1, m + 1):
            shift = m - i
            for alpha in _AVOIDER_CACHE[i - 1]:
                head = tuple(v + shift for v in alpha) + (m,)
                for beta in _AVOIDER_CACHE[m - i]:
                    rows.append(head + beta)
        _AVOIDER_CACHE.append(rows)
    return _AVOIDER_CACHE[n]


_CACHE_MAX = 11
_AVOIDER_CACHE: list[list[Perm]] = [[()]]


def count_avoiders(n: int) -> int:
    """len(list(enumerate_avoiders(n))), without storing anything new."""
    return sum(1 for _ in enumerate_avoiders(n))


def reduce(word: Iterable[int]) -> Perm:
    """Order-isomorphic reduction of a word of distinct integers.

    The i-th smallest letter becomes i, preserving relative order:
    917 reduces to 312.

    >>> reduce((2, 7, 5, 4))
    (1, 4, 3, 2)
    >>> reduce((9, 1, 7))
    (3, 1, 2)
    """
    letters = tuple(word)
    if len(set(letters)) != len(letters):
        raise PermutationError(f"letters must be distinct, got {letters!r}")
    rank = {v: i + 1 for i, v in enumerate(sorted(letters))}
    return tuple(rank[v] for v in letters)


def inverse(sigma: Perm) -> Perm:
    """Group inverse: position of each value.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    sigma = validate_permutation(sigma)
    out = [0] * len(sigma)
    for pos, v in enumerate(sigma, start=1):
        out[v - 1] = pos
    return tuple(out)
