"""Count complete linear factorizations of x^n - 1 under both conventions."""

import argparse

from skewcode.central import enumerate_linear_factorizations
from skewcode.galois import SkewAutomorphism, gf
from skewcode.notation import format_poly, parse_field
from skewcode.skew_poly import x_n_minus_1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="GF(3^2)")
    ap.add_argument("--d", type=int, default=1)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--list", action="store_true", help="print every ordered chain")
    args = ap.parse_args()
    s = SkewAutomorphism(gf(*parse_field(args.field)), args.d)
    tree = enumerate_linear_factorizations(x_n_minus_1(s, args.n))
    print(f"x^{args.n} - 1 over {args.field}, sigma = theta^{args.d}")
    print(f"ordered chains:   {tree.ordered_count}")
    print(f"factor multisets: {tree.multiset_count}")
    if args.list:
        for chain in tree.chains:
            print(" * ".join(f"({format_poly(f)})" for f in tree.factors(chain)))


if __name__ == "__main__":
    main()
