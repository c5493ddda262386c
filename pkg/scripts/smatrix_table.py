"""Print an N=2 or N=4 S-matrix as a grid with row and column labels.

    python3 scripts/smatrix_table.py n2 5 0 NS
    python3 scripts/smatrix_table.py n4 3 1 R --super
"""

import argparse

from mocktheta.scft_chars import n2_labels, n2_smatrix, n4_labels, n4_smatrix, scft_sector


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("algebra", choices=["n2", "n4"])
    ap.add_argument("M", type=int)
    ap.add_argument("m", type=int)
    ap.add_argument("sector", choices=["NS", "R"])
    ap.add_argument("--super", action="store_true", help="source labels are supercharacters")
    args = ap.parse_args()

    src = scft_sector(args.sector, args.super)
    dst = src.swapped()
    if args.algebra == "n2":
        labels, entry, idx = n2_labels, n2_smatrix, (lambda l: (l.j, l.k))
    else:
        labels, entry, idx = n4_labels, n4_smatrix, (lambda l: (l.jt, l.kt))
    rows, cols = labels(args.M, args.m, src), labels(args.M, args.m, dst)
    name = lambda l: "(" + ",".join(str(x) for x in idx(l)) + ")"  # noqa: E731
    print(" " * 12 + "".join(f"{name(c):>20s}" for c in cols))
    for r in rows:
        cells = []
        for c in cols:
            v = complex(entry(args.M, args.m, src, idx(r), idx(c)))
            v = complex(round(v.real, 12) + 0.0, round(v.imag, 12) + 0.0)
            cells.append(f"{v.real:+.4f}{v.imag:+.4f}i".rjust(20))
        print(f"{name(r):12s}" + "".join(cells))


if __name__ == "__main__":
    main()
