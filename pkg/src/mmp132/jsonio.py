"""Canonical JSON helpers.

All machine output uses one canonical form so that serialize(parse(s)) == s
byte for byte: sorted keys, no insignificant whitespace, no floats anywhere
(big integers travel as decimal strings), trailing newline.
"""

from __future__ import annotations

import json
import os
import tempfile


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n"


def write_json_atomic(path, obj) -> None:
    """Write canonical JSON via a temp file and rename, so readers never
    see a half-written file."""
    path = os.fspath(path)
    d = os.path.dirname(path) or "."
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(canonical_json(obj))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def read_json(path):
    with open(path) as fh:
        return json.load(fh)
