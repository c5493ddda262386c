"""Central charge, lowest energy and spin for every N=2 or N=4 label at one level.

    python3 scripts/number_tables.py n2 3 0
    python3 scripts/number_tables.py n4 5 2
"""

import argparse

from mocktheta.scft_chars import NS, R, n2_labels, n2_numbers, n4_labels, n4_numbers, scft_sector


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("algebra", choices=["n2", "n4"])
    ap.add_argument("M", type=int)
    ap.add_argument("m", type=int)
    args = ap.parse_args()
    for name in (NS, R):
        print(f"[{name}]")
        if args.algebra == "n2":
            for lab in n2_labels(args.M, args.m, scft_sector(name)):
                n = n2_numbers(lab)
                print(f"  j={str(lab.j):5s} k={str(lab.k):5s}  c={n.c}  h={n.h}  s={n.s}")
        else:
            for lab in n4_labels(args.M, args.m, scft_sector(name)):
                n = n4_numbers(lab)
                print(f"  jt={str(lab.jt):5s} kt={str(lab.kt):5s} family {lab.family}  c={n.c}  h={n.h}  s={n.s}")


if __name__ == "__main__":
    main()
