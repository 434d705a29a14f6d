"""Regenerate src/skewcode/data/conway.txt.

Every prime p < 100 and every m with p^m <= 2^20 gets one line
"p m c0 c1 ... cm" (low degree first).
"""

import argparse
from pathlib import Path

from skewcode.galois import conway_polynomial, is_prime

OUT = Path(__file__).resolve().parents[1] / "src" / "skewcode" / "data" / "conway.txt"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-prime", type=int, default=100)
    ap.add_argument("--max-size", type=int, default=1 << 20)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    lines = ["# Conway polynomials: p m c0 c1 ... cm (coefficients low degree first)"]
    for p in filter(is_prime, range(2, args.max_prime)):
        m = 1
        while p**m <= args.max_size:
            coeffs = conway_polynomial(p, m)
            lines.append(" ".join(map(str, (p, m, *coeffs))))
            m += 1
    args.out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} entries to {args.out}")


if __name__ == "__main__":
    main()
