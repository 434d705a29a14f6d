"""BCH bound against exact distance for every right divisor in a few small rings.

Prints one row per code plus the number of codes where the bound is tight.
"""

import argparse
import itertools

from skewcode.central import check_standing
from skewcode.cyclic_code import bch_bound, cyclic_from_generator, generator_matrix
from skewcode.distance_lab import exact_min_distance
from skewcode.galois import SkewAutomorphism, gf
from skewcode.notation import format_poly
from skewcode.skew_poly import SkewPoly, right_divide, x_n_minus_1

CASES = [(3, 2, 1, 4), (2, 2, 2, 3), (2, 2, 2, 5), (3, 2, 2, 4), (5, 2, 1, 2)]


def right_divisors(s, n):
    F, f = s.field, x_n_minus_1(s, n)
    for deg in range(1, n):
        for tail in itertools.product(range(F.q), repeat=deg):
            g = SkewPoly(s, tail + (1,))
            if not right_divide(f, g).remainder:
                yield g


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-words", type=int, default=10**5)
    args = ap.parse_args()
    total = tight = 0
    print(f"{'field':>6} {'d':>2} {'n':>2}  {'k':>2} {'bch':>3} {'exact':>5}  g")
    for p, m, d, n in CASES:
        s = SkewAutomorphism(gf(p, m), d)
        check_standing(s, n)
        for g in right_divisors(s, n):
            code = cyclic_from_generator(g, n)
            if s.field.q**code.k > args.max_words:
                continue
            delta = bch_bound(code).delta
            dist = exact_min_distance(generator_matrix(code)).exact_distance
            assert delta <= dist
            total += 1
            tight += delta == dist
            print(f"{p}^{m:<4} {d:>2} {n:>2}  {code.k:>2} {delta:>3} {dist:>5}  {format_poly(g)}")
    print(f"{total} codes, bound tight on {tight}")


if __name__ == "__main__":
    main()
