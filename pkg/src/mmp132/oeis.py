"""Bridge to the On-line Encyclopedia of Integer Sequences.

Several coefficient columns of the Q tables are known OEIS sequences; this
module fetches those sequences, compares them against columns computed by
the series route, and keeps the whole exercise runnable offline.  Terms
come from one of three places, in order of preference for a live run:

  1. a fresh-enough disk cache entry (written by a previous network fetch),
  2. the OEIS b-file endpoint (https://oeis.org/A000129/b000129.txt style),
  3. a bundled fixture under mmp132/fixtures/ (always used when offline).

Fixtures are regenerated by scripts/gen_oeis_fixtures.py from each
sequence's defining recurrence, so the offline ground truth is computed,
not transcribed.

Comparison is alignment-tolerant: OEIS offset conventions rarely agree
with the n-indexing of a coefficient column (a column starting at n = 3
may be a(n-2) of its sequence), so compare() slides one sequence against
the other within a small window and reports the best alignment.  A claim
"matches" only if every overlapping term agrees and the overlap is long
enough to be convincing.
"""

from __future__ import annotations

import re
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import OeisUnavailableError
from .jsonio import read_json, write_json_atomic
from .oracle import default_cache_dir
from .recursions import gf_dispatch
from .series import DEFAULT_ORDER, coeff

_ID_RE = re.compile(r"\AA\d{6}\Z")

CACHE_TTL_DAYS = 7
FETCH_TIMEOUT = 10.0
MAX_TERMS = 100


def normalize_id(seq_id: str) -> str:
    sid = seq_id.strip().upper()
    if not _ID_RE.match(sid):
        raise ValueError(f"not a well-formed OEIS A-number: {seq_id!r}")
    return sid


@dataclass(frozen=True)
class OeisSequence:
    id: str
    offset: int
    terms: tuple[int, ...]
    fetched_at: float  # Unix timestamp of the network fetch, 0.0 for fixtures
    source: str  # "network" or "fixture"

    def __post_init__(self):
        normalize_id(self.id)
        if not self.terms:
            raise ValueError("sequence must carry at least one term")

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "offset": self.offset,
            "terms": [str(t) for t in self.terms],
            "fetched_at": int(self.fetched_at),
            "source": self.source,
        }


def _sequence_from_obj(obj: dict, *, source: str, fetched_at: float = 0.0) -> OeisSequence:
    return OeisSequence(
        id=obj["id"],
        offset=int(obj["offset"]),
        terms=tuple(int(t) for t in obj["terms"]),
        fetched_at=float(obj.get("fetched_at", fetched_at)),
        source=source,
    )


def load_fixture(seq_id: str) -> OeisSequence:
    """Load a bundled fixture; raises OeisUnavailableError if not bundled."""
    sid = normalize_id(seq_id)
    res = resources.files("mmp132").joinpath("fixtures").joinpath(f"{sid.lower()}.json")
    if not res.is_file():
        raise OeisUnavailableError(f"no bundled fixture for {sid}")
    import json

    return _sequence_from_obj(json.loads(res.read_text()), source="fixture")


def _parse_bfile(sid: str, text: str) -> OeisSequence:
    """Parse b-file lines of the form "n a(n)", ignoring comments."""
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise OeisUnavailableError(f"unparseable b-file line for {sid}: {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
        if len(pairs) >= MAX_TERMS:
            break
    if not pairs:
        raise OeisUnavailableError(f"empty b-file for {sid}")
    offset = pairs[0][0]
    for i, (n, _) in enumerate(pairs):
        if n != offset + i:
            raise OeisUnavailableError(f"non-contiguous b-file for {sid} at n={n}")
    return OeisSequence(
        id=sid,
        offset=offset,
        terms=tuple(v for _, v in pairs),
        fetched_at=time.time(),
        source="network",
    )


def _oeis_cache_path(sid: str, cache_dir: str | Path | None) -> Path:
    root = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    return root / "oeis" / f"{sid.lower()}.json"


def fetch(seq_id: str, *, offline: bool = False,
          cache_dir: str | Path | None = None,
          ttl_days: float = CACHE_TTL_DAYS) -> OeisSequence:
    """Fetch an OEIS sequence by A-number.

    Offline mode goes straight to the bundled fixture.  Otherwise a disk
    cache is consulted (entries expire after ttl_days), then the b-file
    endpoint, and a network failure falls back to the fixture when one is
    bundled.  Only when every source is exhausted does this raise
    OeisUnavailableError.
    """
    sid = normalize_id(seq_id)
    if offline:
        return load_fixture(sid)

    cache_path = _oeis_cache_path(sid, cache_dir)
    if cache_path.is_file():
        try:
            obj = read_json(cache_path)
            fetched_at = float(obj.get("fetched_at", 0))
            if time.time() - fetched_at < ttl_days * 86400:
                return _sequence_from_obj(obj, source="network", fetched_at=fetched_at)
        except (ValueError, KeyError, OSError):
            pass  # corrupt or stale cache entry; refetch below

    url = f"https://oeis.org/{sid}/b{sid[1:]}.txt"
    try:
        with urllib.request.urlopen(url, timeout=FETCH_TIMEOUT) as resp:
            text = resp.read().decode("utf-8", errors="replace")
        seq = _parse_bfile(sid, text)
    except (urllib.error.URLError, OSError, TimeoutError):
        try:
            return load_fixture(sid)
        except OeisUnavailableError:
            raise OeisUnavailableError(
                f"network fetch of {sid} failed and no fixture is bundled"
            ) from None
    write_json_atomic(cache_path, seq.to_json_obj())
    return seq


# ---------------------------------------------------------------------------
# Alignment-tolerant comparison

ALIGN_WINDOW = 3
MIN_OVERLAP = 6


def _overlap_range(len_a: int, len_b: int, shift: int) -> range:
    """Indices i such that a[i] and b[i + shift] both exist."""
    return range(max(0, -shift), min(len_a, len_b - shift))


def compare(computed: list[int], seq: OeisSequence, *,
            window: int = ALIGN_WINDOW, min_overlap: int = MIN_OVERLAP) -> dict:
    """Slide `computed` against the sequence terms and report the best fit.

    Alignment shift s pairs computed[i] with seq.terms[i + s] for every i
    where both sides exist.  The report carries the best shift found,
    preferring full agreement, then longer overlap, then smaller |s|.
    "matched" requires that every overlapping pair agrees and that the
    overlap has at least min_overlap terms.
    """
    if not computed:
        raise ValueError("nothing computed to compare")
    terms = list(seq.terms)
    best = None
    for s in range(-window, window + 1):
        idx = _overlap_range(len(computed), len(terms), s)
        overlap = len(idx)
        agreements = sum(1 for i in idx if computed[i] == terms[i + s])
        exact = overlap > 0 and agreements == overlap
        first_diff = None
        if not exact:
            for i in idx:
                if computed[i] != terms[i + s]:
                    first_diff = {
                        "index": i,
                        "computed": str(computed[i]),
                        "sequence": str(terms[i + s]),
                    }
                    break
        cand = {
            "sequence": seq.id,
            "source": seq.source,
            "shift": s,
            "overlap": overlap,
            "agreements": agreements,
            "matched": exact and overlap >= min_overlap,
            "first_disagreement": first_diff,
        }
        key = (cand["matched"], exact, agreements, -abs(s))
        if best is None or key > best[0]:
            best = (key, cand)
    return best[1]


# ---------------------------------------------------------------------------
# Registered sequence identifications

@dataclass(frozen=True)
class OeisClaim:
    sequence: str  # A-number
    pattern: str  # which Q table the column comes from
    power: int  # coefficient of x^power
    start_n: int  # first n of the column
    note: str

    def computed_column(self, order: int = DEFAULT_ORDER) -> list[int]:
        s = gf_dispatch(self.pattern, order)
        return [coeff(s, n).coeff(self.power) for n in range(self.start_n, order + 1)]


OEIS_CLAIMS: tuple[OeisClaim, ...] = (
    OeisClaim("A000129", "1,0,2,0", 0, 1, "x=0 column is the Pell numbers"),
    OeisClaim("A052963", "2,0,2,0", 0, 1, "x=0 column, a(n)=3a(n-1)-a(n-3)"),
    OeisClaim("A077938", "1,0,3,0", 0, 1, "x=0 column, 1/(1-2t-t^2-2t^3)"),
    OeisClaim("A000337", "1,0,1,0", 1, 3, "x^1 column from n=3, (n-1)2^n+1 reindexed"),
    OeisClaim("A083329", "2,0,0,1", 0, 1, "x=0 column, 3*2^(n-1)-1"),
    OeisClaim("A116731", "0,2,0,1", 0, 1, "x=0 column"),
)


def verify_oeis(order: int = DEFAULT_ORDER, *, offline: bool = True,
                cache_dir: str | Path | None = None) -> list[dict]:
    """Check every registered claim; one report row per claim."""
    rows = []
    for claim in OEIS_CLAIMS:
        computed = claim.computed_column(order)
        seq = fetch(claim.sequence, offline=offline, cache_dir=cache_dir)
        rep = compare(computed, seq)
        rows.append(
            {
                "sequence": claim.sequence,
                "pattern": claim.pattern,
                "power": claim.power,
                "start_n": claim.start_n,
                "note": claim.note,
                "source": seq.source,
                "shift": rep["shift"],
                "overlap": rep["overlap"],
                "matched": rep["matched"],
                "first_disagreement": rep["first_disagreement"],
            }
        )
    return rows
