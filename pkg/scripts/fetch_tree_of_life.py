#!/usr/bin/env python3
"""Fetch grafted_solution.tre (OpenTree synthesis v9.1) into data/.

The file is ~700 KB of Newick text and is not vendored with the repository;
the size-report tests that use it skip themselves when it is absent.
"""

import sys
import urllib.request
from pathlib import Path

URL = (
    "https://files.opentreeoflife.org/synthesis/opentree9.1/output/"
    "grafted_solution/grafted_solution.tre"
)


def main() -> int:
    dest = Path(__file__).resolve().parent.parent / "data" / "grafted_solution.tre"
    dest.parent.mkdir(exist_ok=True)
    if dest.exists():
        print(f"already present: {dest} ({dest.stat().st_size} bytes)")
        return 0
    print(f"fetching {URL}")
    try:
        with urllib.request.urlopen(URL, timeout=60) as resp:
            data = resp.read()
    except OSError as exc:
        print(f"download failed: {exc}", file=sys.stderr)
        return 1
    dest.write_bytes(data)
    print(f"wrote {dest} ({len(data)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
