"""Regenerate the bundled OEIS fixtures under src/mmp132/fixtures/.

Each fixture is computed from the sequence's own defining recurrence or
generating function as documented on its OEIS page, rather than typed in
by hand, so a transcription slip cannot corrupt the offline ground truth.
Run from anywhere:

    python3 scripts/gen_oeis_fixtures.py
"""

import json
import pathlib

N_TERMS = 30


def pell(n_terms):
    # A000129, offset 0: a(0)=0, a(1)=1, a(n) = 2*a(n-1) + a(n-2).
    a = [0, 1]
    while len(a) < n_terms:
        a.append(2 * a[-1] + a[-2])
    return a[:n_terms]


def a052963(n_terms):
    # A052963, offset 0: a(0)=1, a(1)=2, a(2)=5, a(n) = 3*a(n-1) - a(n-3).
    a = [1, 2, 5]
    while len(a) < n_terms:
        a.append(3 * a[-1] - a[-3])
    return a[:n_terms]


def a077938(n_terms):
    # A077938, offset 0: expansion of 1/(1 - 2x - x^2 - 2x^3), i.e.
    # a(n) = 2*a(n-1) + a(n-2) + 2*a(n-3) with a(0)=1, a(1)=2, a(2)=5.
    a = [1, 2, 5]
    while len(a) < n_terms:
        a.append(2 * a[-1] + a[-2] + 2 * a[-3])
    return a[:n_terms]


def a000337(n_terms):
    # A000337, offset 0: a(n) = (n-1)*2^n + 1.
    return [(n - 1) * 2**n + 1 for n in range(n_terms)]


def a083329(n_terms):
    # A083329, offset 0: a(0)=1, a(n) = 3*2^(n-1) - 1 for n >= 1.
    return [1] + [3 * 2 ** (n - 1) - 1 for n in range(1, n_terms)]


def a116731(n_terms):
    # A116731, offset 0: expansion of (1 - 3x + 4x^2 - x^3 + x^4) / (1-x)^4.
    num = [1, -3, 4, -1, 1]
    # 1/(1-x)^4 has coefficients binomial(n+3, 3)
    inv = [(n + 1) * (n + 2) * (n + 3) // 6 for n in range(n_terms)]
    return [
        sum(num[j] * inv[n - j] for j in range(len(num)) if n - j >= 0)
        for n in range(n_terms)
    ]


SEQUENCES = {
    "A000129": (0, pell),
    "A052963": (0, a052963),
    "A077938": (0, a077938),
    "A000337": (0, a000337),
    "A083329": (0, a083329),
    "A116731": (0, a116731),
}


def main():
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "src" / "mmp132" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    for seq_id, (offset, gen) in sorted(SEQUENCES.items()):
        terms = gen(N_TERMS)
        obj = {"id": seq_id, "offset": offset, "terms": [str(t) for t in terms]}
        path = out_dir / f"{seq_id.lower()}.json"
        path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")
        print(f"wrote {path.name}: {', '.join(str(t) for t in terms[:8])}, ...")


if __name__ == "__main__":
    main()
