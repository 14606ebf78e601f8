#!/usr/bin/env python3
"""Print the four code-parameter tables (projective/affine/flats over F_2,
projective over F_4) for all design parameters with known constructions."""

import argparse

from designcodes.tables import TableRowSpec, table_row

# (t, v, k, lambda_known) per table; lambda_known is the smallest lambda for
# which a subspace design is known to exist.
KNOWN_Q2 = [
    (2, 3, 2, 1), (2, 4, 2, 1), (2, 4, 3, 3), (2, 5, 2, 1), (2, 5, 3, 7),
    (2, 5, 4, 7), (2, 6, 2, 1), (2, 6, 3, 3), (2, 6, 4, 35), (2, 6, 5, 15),
    (2, 7, 2, 1), (2, 7, 3, 3), (2, 7, 4, 15), (2, 7, 5, 155), (2, 7, 6, 31),
    (2, 8, 2, 1), (2, 8, 3, 21), (2, 8, 4, 7), (2, 8, 5, 465), (2, 8, 6, 651),
    (2, 8, 7, 63), (2, 9, 2, 1), (2, 9, 3, 7), (2, 9, 4, 21), (2, 9, 5, 93),
    (2, 9, 6, 651), (2, 9, 8, 127), (2, 10, 2, 1), (2, 10, 3, 15),
    (2, 10, 4, 595), (2, 10, 5, 765), (2, 10, 9, 255), (2, 11, 2, 1),
    (2, 11, 3, 7), (2, 11, 10, 511), (2, 12, 2, 1), (2, 12, 3, 1023),
    (2, 12, 11, 1023), (2, 13, 2, 1), (2, 13, 3, 1), (2, 13, 12, 2047),
]
KNOWN_Q2_AFFINE_EXTRA = [(3, 8, 4, 11)]  # t = 3 design with a known realization
KNOWN_Q4 = [(2, 7, 3, 21), (2, 7, 4, 357)]

HEADER = "design\tlambda_min\tlambda_max\t[n, dim, ell]\tr\tr_max/r"


def print_table(title, mode, q, rows):
    print(f"# {title}")
    print(HEADER)
    for t, v, k, lam in rows:
        print(table_row(TableRowSpec(t=t, v=v, k=k, lam=lam, q=q, mode=mode)).tsv())
    print()


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mode", choices=["projective", "affine", "flats", "all"], default="all")
    args = ap.parse_args()
    if args.mode in ("projective", "all"):
        print_table("projective construction, q = 2", "projective", 2, KNOWN_Q2)
    if args.mode in ("affine", "all"):
        rows = sorted(KNOWN_Q2 + KNOWN_Q2_AFFINE_EXTRA, key=lambda r: (r[1], r[2], r[0]))
        print_table("affine construction, q = 2", "affine", 2, rows)
    if args.mode in ("flats", "all"):
        print_table("flats construction, q = 2", "flats", 2, KNOWN_Q2)
    if args.mode in ("projective", "all"):
        print_table("projective construction, q = 4", "projective", 4, KNOWN_Q4)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
