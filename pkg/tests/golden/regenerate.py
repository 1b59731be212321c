"""Rewrite the golden files from the current code.

Run from the repository root after a deliberate behaviour change:

    python3 tests/golden/regenerate.py

then review the diff.  The classification lists are also checked against
hand-entered values in the acceptance suite, so a regenerated file alone
cannot hide a regression there.
"""

import json
from pathlib import Path

from blowup_ulrich.classify import classify
from blowup_ulrich.families import family_count
from blowup_ulrich.lattice import polarization

HERE = Path(__file__).resolve().parent


def write(name, obj):
    (HERE / name).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def main():
    for n in range(7, 11):
        write(f"classify_n{n}_m4.json", classify(n, polarization(n, 4)).as_dict())
    rows = []
    for k in range(3, 61):
        m, count = family_count(k * k)
        rows.append({"n": k * k, "m": m, "count": count})
    write("family_count_squares.json", {
        "rows": rows,
        # largest count reached along the squares up to 3600; pinned from this scan
        "threshold_at_3600": rows[-1]["count"],
    })


if __name__ == "__main__":
    main()
