#!/usr/bin/env python3
"""Tabulate the center scalars and optionally confirm them on the modules.

For sl2 this is a single column of quadratic values; for sl3 a grid of the
degree 2 and degree 3 scalars by highest weight, next to the module
dimension.  With --check, the center elements are evaluated on each module
and the scalar action is confirmed entry by entry.
"""

import argparse

from envlld.center import casimir_elements
from envlld.reps import (c_scalar, d2_scalar, d3_scalar, eval_element,
                         mat_identity, mat_scale, sl2_irrep)
from envlld.sl3reps import classical_dim, sl3_irrep


def sl2_table(top, check):
    C = casimir_elements("sl2")["C"] if check else None
    print(" k   scalar")
    for k in range(1, top + 1):
        mark = ""
        if check:
            R = sl2_irrep(k)
            ok = eval_element(C, R) == mat_scale(mat_identity(k), c_scalar(k))
            mark = "  ok" if ok else "  MISMATCH"
        print(f"{k:2d}   {c_scalar(k)!s:>6}{mark}")


def sl3_table(top, check):
    Z = casimir_elements("sl3") if check else None
    print("(m1,m2)   dim     deg2      deg3")
    for m1 in range(top + 1):
        for m2 in range(top + 1):
            dim = classical_dim(m1, m2)
            d2 = d2_scalar(m1, m2)
            d3 = d3_scalar(m1, m2)
            mark = ""
            if check:
                R = sl3_irrep((m1, m2))
                ok = (eval_element(Z["Z2"], R) ==
                      mat_scale(mat_identity(R.dim), d2) and
                      eval_element(Z["Z3"], R) ==
                      mat_scale(mat_identity(R.dim), d3))
                mark = "  ok" if ok else "  MISMATCH"
            print(f"({m1},{m2})   {dim:4d}   {d2!s:>6}   {d3!s:>7}{mark}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=12,
                    help="largest sl2 dimension to list")
    ap.add_argument("--max-weight", type=int, default=3,
                    help="largest sl3 weight coordinate to list")
    ap.add_argument("--check", action="store_true",
                    help="evaluate the center elements on every module")
    args = ap.parse_args()
    sl2_table(args.max_dim, args.check)
    print()
    sl3_table(args.max_weight, args.check)


if __name__ == "__main__":
    main()
