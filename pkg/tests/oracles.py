"""Independent reference implementations used as test oracles.

Nothing here touches the log/Zech tables of skewcode.galois: elements are
coefficient tuples multiplied by schoolbook polynomial arithmetic mod the
modulus, and skew/commutative polynomials are plain lists.
"""

from __future__ import annotations

import itertools


class NaiveField:
    def __init__(self, p: int, modulus):
        self.p = p
        self.modulus = tuple(modulus)          # monic, low degree first
        self.m = len(modulus) - 1
        self.q = p**self.m

    # ints <-> tuples use the same base-p digit convention as the package
    def vec(self, a: int):
        return tuple((a // self.p**i) % self.p for i in range(self.m))

    def int(self, v) -> int:
        return sum(c * self.p**i for i, c in enumerate(v))

    def add(self, a, b):
        return self.int(tuple((x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))))

    def neg(self, a):
        return self.int(tuple((-x) % self.p for x in self.vec(a)))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        x, y = self.vec(a), self.vec(b)
        prod = [0] * (2 * self.m - 1)
        for i, u in enumerate(x):
            for j, w in enumerate(y):
                prod[i + j] = (prod[i + j] + u * w) % self.p
        for k in range(len(prod) - 1, self.m - 1, -1):
            c = prod[k]
            if c:
                for j in range(self.m + 1):
                    prod[k - self.m + j] = (prod[k - self.m + j] - c * self.modulus[j]) % self.p
        return self.int(tuple(prod[: self.m]))

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def frob(self, a, k=1):
        """a^(p^k) by repeated p-th powering (k ≥ 0)."""
        for _ in range(k):
            a = self.pow(a, self.p)
        return a


def naive_field_like(F) -> NaiveField:
    return NaiveField(F.p, F.modulus)


# ---------------------------------------------------------------------------
# skew polynomials as lists, schoolbook product with explicit Frobenius powers

def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def skew_mul(N: NaiveField, d: int, f, g):
    """(Σ a_i x^i)(Σ b_j x^j) = Σ a_i θ^{d i}(b_j) x^{i+j}."""
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = N.add(out[i + j], N.mul(a, N.frob(b, d * i % N.m if N.m else 0)))
    return trim(out)


def poly_mul(N: NaiveField, f, g):
    return skew_mul(N, 0, f, g)


def poly_divmod(N: NaiveField, f, g):
    f, g = trim(f), trim(g)
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    inv = N.inv(g[-1])
    for k in range(len(r) - len(g), -1, -1):
        c = N.mul(r[k + len(g) - 1], inv)
        q[k] = c
        for j, b in enumerate(g):
            r[k + j] = N.sub(r[k + j], N.mul(c, b))
    return trim(q), trim(r[: len(g) - 1])


def poly_gcd(N: NaiveField, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, poly_divmod(N, f, g)[1]
    if not f:
        return f
    inv = N.inv(f[-1])
    return [N.mul(inv, c) for c in f]


def xn1(N: NaiveField, n):
    return [N.neg(1)] + [0] * (n - 1) + [1]


# ---------------------------------------------------------------------------
# classical cyclic codes (σ = identity)

def classical_code_words(N: NaiveField, g, n):
    """All codewords a(x)·g(x) with deg a < n - deg g."""
    k = n - (len(trim(g)) - 1)
    words = set()
    for a in itertools.product(range(N.q), repeat=k):
        c = poly_mul(N, list(a), g)
        words.add(tuple(c + [0] * (n - len(c))))
    return words


def classical_min_distance(words):
    return min((sum(1 for x in w if x) for w in words if any(w)), default=None)


def brute_force_distance(N: NaiveField, rows):
    """Minimum weight over all nonzero combinations of rows (independent naive arithmetic)."""
    n = len(rows[0])
    best = None
    for msg in itertools.product(range(N.q), repeat=len(rows)):
        if not any(msg):
            continue
        w = [0] * n
        for a, r in zip(msg, rows):
            if a:
                w = [N.add(x, N.mul(a, y)) for x, y in zip(w, r)]
        wt = sum(1 for x in w if x)
        if wt and (best is None or wt < best):
            best = wt
    return best


def naive_rank(N: NaiveField, rows):
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = N.inv(M[rank][c])
        M[rank] = [N.mul(inv, a) for a in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [N.sub(a, N.mul(f, b)) for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def is_irreducible(N: NaiveField, f) -> bool:
    """No monic factor of degree 1..deg/2 (exhaustive trial division)."""
    f = trim(list(f))
    deg = len(f) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for cs in itertools.product(range(N.q), repeat=k):
            _, r = poly_divmod(N, f, list(cs) + [1])
            if not r:
                return False
    return True
