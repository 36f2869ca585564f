#!/usr/bin/env python3
"""Regenerate both coefficient tables and write them next to this script.

Produces text, LaTeX, and JSON renderings for weights 4 and 5, plus a line
per erratum if any derived cell disagrees with the published reference grid.
"""

import pathlib
import sys

from mhs.tables import derive_table

OUT = pathlib.Path(__file__).resolve().parent / "out"


def main() -> int:
    OUT.mkdir(exist_ok=True)
    for weight in (4, 5):
        table = derive_table(weight)
        (OUT / f"table_w{weight}.txt").write_text(table.render_text() + "\n")
        (OUT / f"table_w{weight}.tex").write_text(table.render_latex() + "\n")
        (OUT / f"table_w{weight}.json").write_text(table.dumps() + "\n")
        status = "clean" if not table.errata else f"{len(table.errata)} errata"
        print(f"weight {weight}: {status}, wrote table_w{weight}.{{txt,tex,json}}")
        for erratum in table.errata:
            print(f"  erratum: {erratum.to_json()}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
