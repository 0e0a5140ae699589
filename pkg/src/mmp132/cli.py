"""Command-line interface.

Commands:
  count PERM PATTERN        match count of one pattern in one permutation
  table PATTERN N [ROUTE]   distribution polynomial rows Q_0 .. Q_N
  gf PATTERN [ORDER]        truncated series for Q(t, x); --x0 for Q(t, 0)
  verify SUITE              run a named verification suite
  oeis [A-NUMBER]           fetch a sequence, or check all registered claims

Exit codes are stable across commands: 0 success, 1 verification mismatch
(or an OEIS source being unavailable), 2 usage or parse errors, 3 pattern
shapes the requested route cannot handle.  All JSON output is canonical:
sorted keys, no floats, coefficients as decimal strings.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    CapExceededError,
    Mmp132Error,
    OeisUnavailableError,
    UnsupportedPatternError,
)
from .jsonio import canonical_json
from .oracle import DEFAULT_CAP, DistCache, build_tables
from .oeis import OEIS_CLAIMS, fetch
from .perms import mmp_count, parse_pattern, parse_permutation
from .recursions import gf_dispatch
from .series import DEFAULT_ORDER, coeff, specialize_x0, ts_to_json_obj
from .suites import SUITE_NAMES, run_suite


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="output format (default json)")
    p.add_argument("--order", type=int, default=None,
                   help="series truncation order where applicable")
    p.add_argument("--cache-dir", default=None,
                   help="directory for oracle/OEIS disk caches")
    p.add_argument("--offline", action="store_true",
                   help="never touch the network; use bundled OEIS fixtures")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"refuse brute-force enumeration beyond this n (default {DEFAULT_CAP})")
    return p


def _dist_cache(args) -> DistCache | None:
    return DistCache(args.cache_dir) if args.cache_dir else None


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# count

def cmd_count(args) -> int:
    sigma = parse_permutation(args.perm)
    pattern = parse_pattern(args.pattern)
    _emit(str(mmp_count(sigma, pattern)))
    return 0


# ---------------------------------------------------------------------------
# table

def _oracle_rows(pattern, n_max, args):
    table = build_tables([pattern], n_max, cap=args.cap, cache=_dist_cache(args))[0]
    return [list(table.rows[n].coeffs) or [0] for n in range(n_max + 1)]


def _series_rows(pattern, n_max, order):
    s = gf_dispatch(pattern, max(n_max, order or 0))
    return [list(coeff(s, n).coeffs) or [0] for n in range(n_max + 1)]


def _rows_to_csv(rows, agree=None) -> str:
    width = max(len(r) for r in rows)
    header = ["n"] + [f"c{i}" for i in range(width)]
    if agree is not None:
        header.append("agree")
    lines = [",".join(header)]
    for n, r in enumerate(rows):
        cells = [str(n)] + [str(r[i]) if i < len(r) else "0" for i in range(width)]
        if agree is not None:
            cells.append("true" if agree[n] else "false")
        lines.append(",".join(cells))
    return "\n".join(lines)


def cmd_table(args) -> int:
    pattern = parse_pattern(args.pattern)
    n_max = args.n
    if n_max < 0:
        raise ValueError("n must be non-negative")
    route = args.route
    if route in ("gf", "both"):
        # raises UnsupportedPatternError (exit 3) on shapes outside the
        # series route, e.g. anything with an empty-quadrant demand
        series_rows = _series_rows(pattern, n_max, args.order)
    if route in ("oracle", "both"):
        oracle_rows = _oracle_rows(pattern, n_max, args)

    agree = None
    if route == "both":
        rows = oracle_rows
        agree = [oracle_rows[n] == series_rows[n] for n in range(n_max + 1)]
    elif route == "oracle":
        rows = oracle_rows
    else:
        rows = series_rows

    if args.format == "csv":
        _emit(_rows_to_csv(rows, agree))
    else:
        obj = {
            "pattern": pattern.serialize(),
            "route": route,
            "n_max": n_max,
            "rows": [
                {"n": n, "coeffs": [str(c) for c in rows[n]]}
                for n in range(n_max + 1)
            ],
        }
        if agree is not None:
            for n, row in enumerate(obj["rows"]):
                row["agree"] = agree[n]
        _emit(canonical_json(obj))
    return 0


# ---------------------------------------------------------------------------
# gf

def cmd_gf(args) -> int:
    pattern = parse_pattern(args.pattern)
    order = args.n if args.n is not None else (args.order or DEFAULT_ORDER)
    if order < 0:
        raise ValueError("order must be non-negative")
    s = gf_dispatch(pattern, order)
    if args.x0:
        _emit(",".join(str(v) for v in specialize_x0(s)))
        return 0
    if args.format == "csv":
        rows = [list(coeff(s, n).coeffs) or [0] for n in range(order + 1)]
        _emit(_rows_to_csv(rows))
        return 0
    obj = {"pattern": pattern.serialize(), **ts_to_json_obj(s)}
    _emit(canonical_json(obj))
    return 0


# ---------------------------------------------------------------------------
# verify

def _verify_csv_lines(report) -> list[str]:
    suite = report["suite"]
    if suite == "all":
        out = []
        for sub in report["suites"]:
            out += _verify_csv_lines(sub)
        return out
    lines = []
    for r in report.get("rows", []):
        if suite == "oracle-gf":
            item, status = r["pattern"], "agree" if r["agree"] else "disagree"
        elif suite == "closed-forms":
            item = f"{r['formula_id']}:{r['pattern']}:n={r['n']}"
            status = r["status"]
        elif suite == "catalog":
            item, status = r["pattern"], r["status"]
        elif suite == "identities":
            item, status = r["id"], "ok" if r["ok"] else "fail"
        else:  # oeis
            item = f"{r['sequence']}:{r['pattern']}"
            status = "match" if r["matched"] else "mismatch"
        if "," in item:
            item = f'"{item}"'
        lines.append(f"{suite},{item},{status}")
    lines.append(f"{suite},_suite,{'ok' if report['ok'] else 'fail'}")
    return lines


def cmd_verify(args) -> int:
    report = run_suite(
        args.suite,
        deep=args.deep,
        order=args.order or DEFAULT_ORDER,
        cap=args.cap,
        cache=_dist_cache(args),
        cache_dir=args.cache_dir,
        offline=args.offline,
    )
    if args.format == "csv":
        _emit("\n".join(_verify_csv_lines(report)))
    else:
        _emit(canonical_json(report))
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# oeis

def cmd_oeis(args) -> int:
    if args.id is not None:
        seq = fetch(args.id, offline=args.offline, cache_dir=args.cache_dir)
        if args.format == "csv":
            lines = ["n,term"]
            lines += [f"{seq.offset + i},{t}" for i, t in enumerate(seq.terms)]
            _emit("\n".join(lines))
        else:
            _emit(canonical_json(seq.to_json_obj()))
        return 0
    report = run_suite(
        "oeis",
        order=args.order or DEFAULT_ORDER,
        offline=args.offline,
        cache_dir=args.cache_dir,
    )
    if args.format == "csv":
        _emit("\n".join(_verify_csv_lines(report)))
    else:
        _emit(canonical_json(report))
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    shared = _global_flags()
    parser = argparse.ArgumentParser(
        prog="mmp132",
        description="Distributions of quadrant marked mesh patterns over "
                    "132-avoiding permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[shared],
                       help="match count of PATTERN in one permutation")
    p.add_argument("perm", help="permutation, e.g. 471569283 or 4,7,1,5,6,9,2,8,3")
    p.add_argument("pattern", help="pattern string a,b,c,d (e for empty)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[shared],
                       help="distribution rows Q_0 .. Q_N")
    p.add_argument("pattern")
    p.add_argument("n", type=int)
    p.add_argument("route", nargs="?", choices=("oracle", "gf", "both"),
                   default="both")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gf", parents=[shared],
                       help="series for Q(t, x) to a given order")
    p.add_argument("pattern")
    p.add_argument("n", type=int, nargs="?", default=None, metavar="order")
    p.add_argument("--x0", action="store_true",
                   help="print the x=0 sequence instead of the series")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", parents=[shared],
                       help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--deep", action="store_true",
                   help="raise oracle-backed checks from n<=8 to n<=10")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", parents=[shared],
                       help="fetch one sequence or check all registered claims")
    p.add_argument("id", nargs="?", default=None,
                   help=f"A-number; omit to check all {len(OEIS_CLAIMS)} claims")
    p.set_defaults(func=cmd_oeis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedPatternError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OeisUnavailableError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (Mmp132Error, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
