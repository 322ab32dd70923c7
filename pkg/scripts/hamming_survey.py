"""Survey which k are settled on H(q,d) across a range of alphabets.

Pure arithmetic: no graph is ever materialized, so arbitrary d are cheap.
For each (q, d) with a q-power factor in (q-1)d + 1 the row reports the
cover shape, the constructible k, and any k left open by the gap between
the p-power and q-power divisibility conditions.

Usage:
    python3 scripts/hamming_survey.py
    python3 scripts/hamming_survey.py --max-d 30 --all-rows
"""

from __future__ import annotations

import argparse
from typing import List, Tuple

from effdom.fields import GF
from effdom.hamming import feasibility

FIELDS: List[Tuple[int, int]] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]


def format_ks(ks: Tuple[int, ...], limit: int = 6) -> str:
    if len(ks) <= limit:
        return ",".join(str(k) for k in ks)
    head = ",".join(str(k) for k in ks[: limit - 1])
    return f"{head},..,{ks[-1]}"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-d", type=int, default=15, help="largest d per field")
    ap.add_argument(
        "--all-rows",
        action="store_true",
        help="include d where only the two constant functions exist",
    )
    args = ap.parse_args()

    header = f"{'q':>3} {'d':>3} {'r+1':>4} {'a':>2} {'m':>3}  {'shape':<18} {'constructed k':<22} open k"
    print(header)
    print("-" * len(header))
    for p, b in FIELDS:
        gf = GF(p, b)
        for d in range(1, args.max_d + 1):
            prof = feasibility(gf, d)
            if prof.a_q == 0 and not args.all_rows:
                continue
            open_part = format_ks(prof.open_k) if prof.open_k else "-"
            print(
                f"{prof.q:>3} {d:>3} {prof.r + 1:>4} {prof.a_q:>2} {prof.m_q:>3}"
                f"  {prof.partition_descriptor():<18}"
                f" {format_ks(prof.constructed_k):<22} {open_part}"
            )
    print()
    print("rows with open k (divisibility allows them, no construction is known):")
    shown = False
    for p, b in FIELDS:
        gf = GF(p, b)
        for d in range(1, args.max_d + 1):
            prof = feasibility(gf, d)
            if prof.open_k:
                shown = True
                print(f"  H({prof.q},{d}): k in {{{format_ks(prof.open_k, 12)}}}")
    if not shown:
        print("  none in range")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
