#!/usr/bin/env python3
"""Regenerate the golden CLI transcripts under tests/golden/.

Each case in cases.json is an argv for the command-line front end; the
captured standard output becomes <name>.json. Transcripts must be
byte-stable under fixed seeds, so run this only when an output format
change is intended, and review the diff.
"""
from __future__ import annotations

import contextlib
import io
import json
import pathlib
import sys

from staralg.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def regenerate() -> int:
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for case in cases:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(case["argv"])
        if code != 0:
            print(f"{case['name']}: exit {code}, refusing to freeze", file=sys.stderr)
            return 1
        out = buf.getvalue()
        path = GOLDEN / f"{case['name']}.json"
        path.write_text(out)
        print(f"wrote {path.name} ({len(out)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(regenerate())
