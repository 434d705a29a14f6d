"""Exact arithmetic in GF(p^m).

Elements are plain ints: the coefficient vector ``(c0, ..., c_{m-1})`` of an
element in the power basis of the modulus root is packed as ``sum(c_i p^i)``.
Multiplication goes through exp/log tables of the primitive element (the root
of the modulus, which is a Conway polynomial from the shipped table), and
addition in odd characteristic through Zech logarithms.
"""

from __future__ import annotations

import functools
import math
import os
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import AssumptionError, BudgetError

DEFAULT_SIZE_BUDGET = 1 << 24
FIELD_TABLE_ENV = "SKEWCODE_FIELD_TABLE"


# ---------------------------------------------------------------------------
# integer helpers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = 3
    while r * r <= n:
        if n % r == 0:
            return False
        r += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    r = 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1 if r == 2 else 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


# ---------------------------------------------------------------------------
# dense polynomials over GF(p), low degree first; only used to find moduli

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a, b, f, p):
    m = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for j in range(m + 1):
                prod[k - m + j] = (prod[k - m + j] - c * f[j]) % p
    return _fp_trim(prod[:m])


def _fp_powmod(a, e, f, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _fp_mulmod(base, base, f, p)
    return result


def _fp_eval_at(poly, point, f, p):
    """Evaluate ``poly`` (coefficients in GF(p)) at ``point`` modulo ``f`` (Horner)."""
    acc = []
    for c in reversed(poly):
        acc = _fp_mulmod(acc, point, f, p) if acc else []
        if c:
            acc = acc or [0]
            acc[0] = (acc[0] + c) % p
            _fp_trim(acc)
    return acc


def is_primitive_modulus(f, p: int) -> bool:
    """True iff the monic ``f`` is irreducible over GF(p) and its root has order p^m - 1."""
    m = len(f) - 1
    if m < 1 or f[-1] != 1 or f[0] % p == 0:
        return False
    order = p**m - 1
    x = [0, 1] if m > 1 else [(-f[0]) % p]
    if _fp_powmod(x, order, f, p) != [1]:
        return False
    # the order of x being exactly p^m - 1 forces irreducibility
    return all(_fp_powmod(x, order // r, f, p) != [1] for r in prime_factors(order))


def is_irreducible_modulus(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(f) - 1
    f = list(f)
    for deg in range(1, m // 2 + 1):
        for code in range(p**deg):
            g = [(code // p**i) % p for i in range(deg)] + [1]
            if _fp_divides(g, f, p):
                return False
    return True


def _fp_divides(g, f, p):
    r = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k] * inv % p
        if c:
            for j in range(dg + 1):
                r[k - dg + j] = (r[k - dg + j] - c * g[j]) % p
    return not any(r[:dg])


@functools.lru_cache(maxsize=None)
def conway_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Conway polynomial of degree m over GF(p), coefficients low degree first.

    Searched in the standard order: write f = x^m + sum (-1)^(m-i) a_i x^i and
    compare (a_{m-1}, ..., a_0) lexicographically; take the first primitive f
    whose root is norm-compatible with the Conway polynomials of every proper
    subfield.
    """
    sub = {k: conway_polynomial(p, k) for k in divisors(m) if k < m}
    order = p**m - 1
    for code in range(p**m):
        a = [(code // p**(m - 1 - j)) % p for j in range(m)]  # a[0] = a_{m-1}
        f = [0] * (m + 1)
        f[m] = 1
        for j, aj in enumerate(a):
            i = m - 1 - j
            f[i] = aj if (m - i) % 2 == 0 else (-aj) % p
        if not is_primitive_modulus(f, p):
            continue
        x = [0, 1] if m > 1 else [(-f[0]) % p]
        ok = True
        for k, ck in sub.items():
            y = _fp_powmod(x, order // (p**k - 1), f, p)
            if _fp_eval_at(list(ck), y, f, p):
                ok = False
                break
        if ok:
            return tuple(f)
    raise RuntimeError(f"no Conway polynomial found for p={p}, m={m}")


def parse_modulus_table(text: str) -> dict[tuple[int, int], tuple[int, ...]]:
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        nums = [int(tok) for tok in line.split()]
        p, m, coeffs = nums[0], nums[1], tuple(nums[2:])
        if len(coeffs) != m + 1 or coeffs[-1] != 1:
            raise ValueError(f"line {lineno}: expected {m + 1} coefficients ending in 1")
        table[(p, m)] = coeffs
    return table


@functools.lru_cache(maxsize=4)
def _load_table(path: str | None) -> dict[tuple[int, int], tuple[int, ...]]:
    if path is None:
        text = resources.files("skewcode.data").joinpath("conway.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_modulus_table(text)


def modulus_table() -> dict[tuple[int, int], tuple[int, ...]]:
    return _load_table(os.environ.get(FIELD_TABLE_ENV))


# ---------------------------------------------------------------------------
# fields

class FiniteField:
    """GF(p^m) with a fixed modulus; the root of the modulus is the primitive element."""

    def __init__(self, p: int, m: int, modulus):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        if not is_primitive_modulus(list(self.modulus), p):
            raise AssumptionError(f"modulus {self.modulus} is not primitive over GF({p})")
        self._q1 = self.q - 1
        self._build_tables()
        self.primitive_element = self.exp[1 % self._q1] if self.q > 2 else 1
        self.minus_one = self.neg(1)

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        low = self.modulus[:m]
        vec = [1] + [0] * (m - 1)
        exp = [0] * (q - 1)
        log = [-1] * q
        pw = [p**i for i in range(m)]
        for k in range(q - 1):
            v = 0
            for i in range(m):
                v += vec[i] * pw[i]
            exp[k] = v
            log[v] = k
            top = vec[m - 1]
            vec = [0] + vec[: m - 1]
            if top:
                for i in range(m):
                    vec[i] = (vec[i] - top * low[i]) % p
        self.exp = exp
        self.log_table = log
        zech = [-1] * (q - 1)
        for k in range(q - 1):
            v = exp[k]
            d0 = v % p
            w = v - d0 + (d0 + 1) % p
            zech[k] = log[w] if w else -1
        self.zech = zech

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.m, self.modulus) == (
            other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # arithmetic ----------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if not a:
            return b
        if not b:
            return a
        la = self.log_table[a]
        z = self.zech[(self.log_table[b] - la) % self._q1]
        return 0 if z < 0 else self.exp[(la + z) % self._q1]

    def neg(self, a: int) -> int:
        if self.p == 2 or not a:
            return a
        if self.m == 1:
            return self.p - a
        return self.exp[(self.log_table[a] + self._q1 // 2) % self._q1]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self.exp[(self.log_table[a] + self.log_table[b]) % self._q1]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.exp[(-self.log_table[a]) % self._q1]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp[(self.log_table[a] * e) % self._q1]

    def frobenius(self, a: int, d: int = 1) -> int:
        """a ↦ a^(p^d); d may be negative."""
        if not a:
            return 0
        e = pow(self.p, d % self.m, self._q1) if self._q1 > 1 else 1
        return self.exp[(self.log_table[a] * e) % self._q1]

    def element(self, k: int) -> int:
        """The k-th power of the primitive element."""
        return self.exp[k % self._q1]

    def log(self, a: int) -> int:
        if not a:
            raise ValueError("log of zero")
        return self.log_table[a]

    def order(self, a: int) -> int:
        return self._q1 // math.gcd(self.log(a), self._q1)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.m))

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"{len(coeffs)} coefficients for a degree-{self.m} field")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def is_in_subfield(self, a: int, e: int) -> bool:
        return self.frobenius(a, e) == a

    def subfield_elements(self, e: int) -> list[int]:
        if self.m % e:
            raise ValueError(f"GF({self.p}^{e}) is not a subfield of {self!r}")
        step = self._q1 // (self.p**e - 1)
        return [0] + sorted(self.exp[k] for k in range(0, self._q1, step))

    def elements(self) -> range:
        return range(self.q)

    # vectorised helpers used by the distance oracle ------------------------
    @functools.cached_property
    def exp_array(self) -> np.ndarray:
        return np.asarray(self.exp, dtype=np.int64)

    @functools.cached_property
    def log_array(self) -> np.ndarray:
        return np.asarray(self.log_table, dtype=np.int64)

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=a.dtype)
        pw = 1
        for _ in range(self.m):
            da = (a // pw) % self.p
            db = (b // pw) % self.p
            out += ((da + db) % self.p) * pw
            pw *= self.p
        return out

    def scale_array(self, c: int, a: np.ndarray) -> np.ndarray:
        table = np.asarray([self.mul(c, x) for x in range(self.q)], dtype=a.dtype)
        return table[a]


@functools.lru_cache(maxsize=64)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, m, modulus)


def gf(p: int, m: int = 1, budget: int = DEFAULT_SIZE_BUDGET) -> FiniteField:
    """Create GF(p^m) with the deterministic table modulus (cached)."""
    if not isinstance(p, int) or not is_prime(p):
        raise AssumptionError(f"characteristic {p!r} is not prime")
    if not isinstance(m, int) or m < 1:
        raise AssumptionError(f"extension degree {m!r} must be a positive integer")
    if p**m > budget:
        raise BudgetError(f"GF({p}^{m}) has {p**m} elements, over the budget of {budget}")
    modulus = modulus_table().get((p, m))
    if modulus is None:
        modulus = conway_polynomial(p, m)
    return _cached_field(p, m, tuple(modulus))


field_create = gf


# ---------------------------------------------------------------------------
# automorphisms and towers

@dataclass(frozen=True)
class SkewAutomorphism:
    """σ = θ^d on ``field``, θ the Frobenius a ↦ a^p.

    The exponent is kept modulo m (d = m is the identity). The fixed field is
    GF(p^gcd(d, m)); when d divides m this is GF(p^d) and σ has order m/d.
    """

    field: FiniteField
    d: int

    def __post_init__(self):
        m = self.field.m
        d = self.d % m or m
        object.__setattr__(self, "d", d)

    @property
    def fixed_degree(self) -> int:
        return math.gcd(self.d, self.field.m)

    @property
    def t(self) -> int:
        return self.field.m // self.fixed_degree

    @property
    def q0(self) -> int:
        return self.field.p**self.fixed_degree

    @property
    def is_identity(self) -> bool:
        return self.d == self.field.m

    def __call__(self, a: int, i: int = 1) -> int:
        return self.field.frobenius(a, self.d * i)

    def fixes(self, a: int) -> bool:
        return self(a) == a

    def fixed_field(self) -> list[int]:
        return self.field.subfield_elements(self.fixed_degree)

    def extend(self, top: FiniteField) -> "SkewAutomorphism":
        """θ^d on a larger field of the same characteristic."""
        if top.p != self.field.p or top.m % self.field.m:
            raise ValueError(f"{top!r} does not contain {self.field!r}")
        return SkewAutomorphism(top, self.d)

    def __repr__(self):
        return f"SkewAutomorphism({self.field!r}, d={self.d})"


def identity_automorphism(field: FiniteField) -> SkewAutomorphism:
    return SkewAutomorphism(field, field.m)


@dataclass(frozen=True)
class FieldTower:
    """An embedding of ``base`` into ``top`` fixed by the image of the base primitive element."""

    base: FiniteField
    top: FiniteField
    embed_image: int
    _image_log: int = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_image_log", self.top.log(self.embed_image))

    @property
    def s(self) -> int:
        return self.top.m // self.base.m

    def embed(self, a: int) -> int:
        if not a:
            return 0
        k = self.base.log(a)
        return self.top.exp[(k * self._image_log) % (self.top.q - 1)]

    def contains(self, y: int) -> bool:
        """True iff the top element y lies in the image of the base field."""
        return self.top.frobenius(y, self.base.m) == y

    def restrict(self, y: int) -> int:
        """Inverse of ``embed`` on its image."""
        if not y:
            return 0
        if not self.contains(y):
            raise ValueError("element is not in the embedded base field")
        qb1 = self.base.q - 1
        if qb1 == 1:
            return 1
        n = (self.top.q - 1) // qb1
        u = self._image_log // n
        k = (self.top.log(y) // n) * pow(u, -1, qb1)
        return self.base.exp[k % qb1]


def embedding(base: FiniteField, top: FiniteField) -> FieldTower:
    """Embed ``base`` in ``top``: send the base primitive element to the root of
    the base modulus in ``top`` with the smallest discrete logarithm."""
    if base.p != top.p or top.m % base.m:
        raise AssumptionError(f"{base!r} is not a subfield of {top!r}")
    qt1 = top.q - 1
    n = qt1 // (base.q - 1) if base.q > 2 else qt1
    for u in range(1, base.q):
        if base.q > 2 and math.gcd(u, base.q - 1) != 1:
            continue
        y = top.exp[(n * u) % qt1] if base.q > 2 else 1
        acc = 0
        for c in reversed(base.modulus):
            acc = top.add(top.mul(acc, y), c)
        if acc == 0:
            return FieldTower(base, top, y)
    raise RuntimeError(f"no root of the {base!r} modulus in {top!r}")


def smallest_splitting_extension(sigma: SkewAutomorphism, n: int,
                                 budget: int = DEFAULT_SIZE_BUDGET) -> FieldTower:
    """Smallest F_{q^s} ⊇ F_q containing F_{q0^n}, i.e. the least s with dn | ms."""
    base = sigma.field
    dn = sigma.fixed_degree * n
    s = dn // math.gcd(dn, base.m)
    top = gf(base.p, base.m * s, budget=budget)
    return embedding(base, top)


def subfield_generator(field: FiniteField, e: int) -> int:
    """A primitive element of the subfield GF(p^e) of ``field``."""
    if field.m % e:
        raise ValueError(f"GF({field.p}^{e}) is not a subfield of {field!r}")
    return field.element((field.q - 1) // (field.p**e - 1))
