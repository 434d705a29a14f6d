"""Small skew cyclic codes used across the test suite.

Right divisors of x^n - 1 are enumerated exhaustively when q^(n-1) is small,
otherwise sampled as gcrd(f, x^n - 1) for pseudo-random f.
"""

import functools
import itertools
import random

from skewcode.cyclic_code import cyclic_from_generator
from skewcode.galois import SkewAutomorphism, gf
from skewcode.skew_poly import SkewPoly, gcrd, right_divide, x_n_minus_1

# (p, m, d, n)
CASES = [
    (2, 1, 1, 7), (2, 1, 1, 9), (2, 2, 2, 3), (2, 2, 2, 5), (2, 3, 1, 3), (2, 3, 2, 3), (7, 1, 1, 3), (5, 1, 1, 4),
    (3, 1, 1, 4), (3, 1, 1, 8), (3, 2, 1, 2), (3, 2, 1, 4), (3, 2, 2, 4), (3, 2, 1, 8), (3, 2, 1, 10),
    (3, 4, 2, 2), (3, 4, 1, 4), (5, 2, 1, 2), (5, 2, 1, 4), (7, 2, 1, 2),
]

EXHAUSTIVE_LIMIT = 3000


@functools.lru_cache(maxsize=None)
def right_divisors(p, m, d, n, samples=60, seed=1):
    s = SkewAutomorphism(gf(p, m), d)
    F = s.field
    target = x_n_minus_1(s, n)
    found = {}
    if F.q ** (n - 1) <= EXHAUSTIVE_LIMIT:
        for k in range(n + 1):
            for cs in itertools.product(range(F.q), repeat=k):
                g = SkewPoly(s, cs + (1,))
                if not right_divide(target, g).remainder:
                    found[g.coeffs] = g
    else:
        rng = random.Random(seed)
        found[(1,)] = SkewPoly.one(s)
        found[target.coeffs] = target
        for _ in range(samples):
            f = SkewPoly(s, [rng.randrange(F.q) for _ in range(rng.randrange(1, n + 1))])
            if f:
                g = gcrd(f, target)
                found[g.coeffs] = g
    return tuple(found[c] for c in sorted(found, key=lambda c: (len(c), c)))


@functools.lru_cache(maxsize=None)
def corpus_codes(max_k_size=None):
    out = []
    for p, m, d, n in CASES:
        for g in right_divisors(p, m, d, n):
            code = cyclic_from_generator(g, n)
            if max_k_size is None or code.field.q**code.k <= max_k_size:
                out.append(code)
    return tuple(out)


def code_id(code):
    return f"GF{code.field.q}-d{code.sigma.d}-n{code.n}-{code.g}"
