#!/usr/bin/env python3
"""Full verification sweep at publication scale.

Runs every suite over the widest ranges used in the acceptance tests, writes
one JSON report per suite next to this script, prints a summary line each,
and exits nonzero if any check fails.
"""

import contextlib
import io
import json
import pathlib
import sys

from mhs.cli import main as cli_main

OUT = pathlib.Path(__file__).resolve().parent / "out"

SWEEPS = {
    "identities": ["--suite", "identities", "--nmax", "30"],
    "congruences": ["--suite", "congruences", "--pmin", "7", "--pmax", "97"],
    "theorem": ["--suite", "theorem", "--pmin", "7", "--pmax", "47", "--amin", "-6", "--amax", "6"],
    "corollary": ["--suite", "corollary", "--pmin", "7", "--pmax", "47"],
    "staver": ["--suite", "staver", "--nmax", "100"],
}


def main() -> int:
    OUT.mkdir(exist_ok=True)
    failures = 0
    for name, extra in SWEEPS.items():
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = cli_main(["verify", *extra, "--format", "json"])
        checks = json.loads(buffer.getvalue())
        path = OUT / f"report_{name}.json"
        path.write_text(json.dumps(checks, indent=2) + "\n")
        passed = sum(c["pass"] for c in checks)
        print(f"{name}: {passed}/{len(checks)} passed -> {path.name}")
        failures += code != 0
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
