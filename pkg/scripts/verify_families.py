#!/usr/bin/env python3
"""Verify every closed-form prediction on the full parameter grids and
print one line per check; exits 1 on any mismatch.

This is the long-running companion of `revsense verify --family all
--quick`.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from revsense.harness import verify  # noqa: E402

GRIDS = [
    ("u_k", range(1, 101)),
    ("u_k_rev", range(1, 101)),
    ("T_p", range(1, 21)),
    ("T_p_rev", range(2, 21)),
    ("w_sigma", range(2, 201, 2)),
    ("w_sigma_rev", range(2, 201, 2)),
    ("c_fib_rev", range(9, 26, 2)),
    ("fib_plus", range(8, 25, 2)),
    ("unary_plus", range(2, 501)),
    ("unary_plus_rev", range(2, 501)),
    ("t55", [None]),
    ("t55_rev", [None]),
]


def main() -> int:
    failed = total = 0
    for family, params in GRIDS:
        rows = verify(family, list(params))
        bad = [r for r in rows if not r.ok]
        total += len(rows)
        failed += len(bad)
        print(f"{family:<16} {len(rows) - len(bad)}/{len(rows)} checks passed")
        for r in bad:
            print(f"  FAIL param={r.param} {r.check}: expected {r.expected}, got {r.computed}")
    print(f"total: {total - failed}/{total}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
