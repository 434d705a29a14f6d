"""The skew polynomial ring R = F_q[x; σ] with (a x^i)(b x^j) = a σ^i(b) x^(i+j).

Orientation used throughout: g right-divides f when f = q·g. Right division,
gcrd and lclm (the monic generator of Rf ∩ Rg) work with left ideals; left
division, gcld and lcrm (generator of fR ∩ gR) with right ideals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import FieldTower, FiniteField, SkewAutomorphism


class SkewPoly:
    """An element of F_q[x; σ]; coefficients are field ints, index i ↔ x^i."""

    __slots__ = ("sigma", "coeffs")

    def __init__(self, sigma: SkewAutomorphism, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.sigma = sigma
        self.coeffs = tuple(c)

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, sigma):
        return cls(sigma)

    @classmethod
    def one(cls, sigma):
        return cls(sigma, (1,))

    @classmethod
    def constant(cls, sigma, c: int):
        return cls(sigma, (c,))

    @classmethod
    def monomial(cls, sigma, c: int, k: int):
        return cls(sigma, (0,) * k + (c,))

    @classmethod
    def x(cls, sigma):
        return cls(sigma, (0, 1))

    # basic properties ----------------------------------------------------
    @property
    def field(self) -> FiniteField:
        return self.sigma.field

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.sigma == other.sigma and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash((self.sigma.d, self.coeffs))

    def __repr__(self):
        from .notation import format_poly
        return f"SkewPoly({format_poly(self)!r})"

    def __str__(self):
        from .notation import format_poly
        return format_poly(self)

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.sigma != self.sigma:
            raise ValueError("skew polynomials over different fields or automorphisms")

    # ring operations -----------------------------------------------------
    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = F.add(out[i], y)
        return SkewPoly(self.sigma, out)

    def __neg__(self):
        F = self.field
        return SkewPoly(self.sigma, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale_right(other)
        return skew_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale_left(other)
        return NotImplemented

    def __pow__(self, e: int):
        result = SkewPoly.one(self.sigma)
        for _ in range(e):
            result = result * self
        return result

    def scale_left(self, c: int) -> "SkewPoly":
        """c·f."""
        F = self.field
        return SkewPoly(self.sigma, [F.mul(c, a) for a in self.coeffs])

    def scale_right(self, c: int) -> "SkewPoly":
        """f·c = Σ f_i σ^i(c) x^i."""
        F, s = self.field, self.sigma
        return SkewPoly(self.sigma, [F.mul(a, s(c, i)) for i, a in enumerate(self.coeffs)])

    def shift(self, k: int) -> "SkewPoly":
        """x^k · f."""
        s = self.sigma
        return SkewPoly(self.sigma, (0,) * k + tuple(s(a, k) for a in self.coeffs))

    def map_coeffs(self, fn, sigma: SkewAutomorphism | None = None) -> "SkewPoly":
        return SkewPoly(sigma or self.sigma, [fn(a) for a in self.coeffs])

    def left_monic(self) -> "SkewPoly":
        """lc^-1 · f, the monic generator of the same left ideal."""
        if not self:
            return self
        return self.scale_left(self.field.inv(self.lc))

    def right_monic(self) -> "SkewPoly":
        """f · c with c chosen so the result is monic; same right ideal."""
        if not self:
            return self
        c = self.sigma(self.field.inv(self.lc), -self.degree)
        return self.scale_right(c)

    def lift(self, tower: FieldTower) -> "SkewPoly":
        """Image in F_{q^s}[x; θ^d] under the tower embedding."""
        return SkewPoly(self.sigma.extend(tower.top), [tower.embed(a) for a in self.coeffs])

    def reduce_mod_xn1(self, n: int) -> "SkewPoly":
        """Right remainder modulo x^n - 1 (fold exponents mod n)."""
        F = self.field
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            out[i % n] = F.add(out[i % n], a)
        return SkewPoly(self.sigma, out)

    def vector(self, n: int) -> tuple[int, ...]:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return self.coeffs + (0,) * (n - len(self.coeffs))


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._check(g)
    if not f or not g:
        return SkewPoly(f.sigma)
    F, s = f.field, f.sigma
    add, mul = F.add, F.mul
    gc = g.coeffs
    out = [0] * (len(f.coeffs) + len(gc) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(gc):
            if b:
                out[i + j] = add(out[i + j], mul(a, s(b, i)))
    return SkewPoly(f.sigma, out)


def x_n_minus_1(sigma: SkewAutomorphism, n: int) -> SkewPoly:
    return SkewPoly(sigma, (sigma.field.minus_one,) + (0,) * (n - 1) + (1,))


# ---------------------------------------------------------------------------
# division

@dataclass(frozen=True)
class DivisionResult:
    quotient: SkewPoly
    remainder: SkewPoly
    side: str  # "right": f = q·g + r ; "left": f = g·q + r


def right_divide(f: SkewPoly, g: SkewPoly) -> DivisionResult:
    """f = q·g + r with deg r < deg g."""
    f._check(g)
    if not g:
        raise ZeroDivisionError("division by the zero skew polynomial")
    F, s = f.field, f.sigma
    dg = g.degree
    r = list(f.coeffs)
    q = [0] * max(len(r) - dg, 0)
    lg = g.lc
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        shift = k - dg
        coef = F.div(c, s(lg, shift))
        q[shift] = coef
        for j, b in enumerate(g.coeffs):
            if b:
                r[shift + j] = F.sub(r[shift + j], F.mul(coef, s(b, shift)))
    return DivisionResult(SkewPoly(f.sigma, q), SkewPoly(f.sigma, r[:dg]), "right")


def left_divide(f: SkewPoly, g: SkewPoly) -> DivisionResult:
    """f = g·q + r with deg r < deg g."""
    f._check(g)
    if not g:
        raise ZeroDivisionError("division by the zero skew polynomial")
    F, s = f.field, f.sigma
    dg = g.degree
    r = list(f.coeffs)
    q = [0] * max(len(r) - dg, 0)
    lg = g.lc
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        shift = k - dg
        # g · (coef x^shift) has leading term lg σ^dg(coef) x^k
        coef = s(F.div(c, lg), -dg)
        q[shift] = coef
        for j, b in enumerate(g.coeffs):
            if b:
                r[j + shift] = F.sub(r[j + shift], F.mul(b, s(coef, j)))
    return DivisionResult(SkewPoly(f.sigma, q), SkewPoly(f.sigma, r[:dg]), "left")


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    return not right_divide(f, g).remainder


def left_divides(g: SkewPoly, f: SkewPoly) -> bool:
    return not left_divide(f, g).remainder


# ---------------------------------------------------------------------------
# gcd / lcm

def _require_not_both_zero(f, g):
    f._check(g)
    if not f and not g:
        raise ValueError("gcd of two zero polynomials is undefined")


def extended_gcrd(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly, SkewPoly]:
    """(d, u, v) with u·f + v·g = d = gcrd(f, g), d monic."""
    _require_not_both_zero(f, g)
    one, zero = SkewPoly.one(f.sigma), SkewPoly.zero(f.sigma)
    r0, r1, u0, u1, v0, v1 = f, g, one, zero, zero, one
    while r1:
        res = right_divide(r0, r1)
        q, r = res.quotient, res.remainder
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = f.field.inv(r0.lc)
    return r0.scale_left(c), u0.scale_left(c), v0.scale_left(c)


def extended_gcld(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly, SkewPoly]:
    """(d, u, v) with f·u + g·v = d = gcld(f, g), d monic."""
    _require_not_both_zero(f, g)
    one, zero = SkewPoly.one(f.sigma), SkewPoly.zero(f.sigma)
    r0, r1, u0, u1, v0, v1 = f, g, one, zero, zero, one
    while r1:
        res = left_divide(r0, r1)
        q, r = res.quotient, res.remainder
        r0, r1 = r1, r
        u0, u1 = u1, u0 - u1 * q
        v0, v1 = v1, v0 - v1 * q
    c = r0.sigma(r0.field.inv(r0.lc), -r0.degree)
    return r0.scale_right(c), u0.scale_right(c), v0.scale_right(c)


def gcrd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _require_not_both_zero(f, g)
    while g:
        f, g = g, right_divide(f, g).remainder
    return f.left_monic()


def gcld(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _require_not_both_zero(f, g)
    while g:
        f, g = g, left_divide(f, g).remainder
    return f.right_monic()


def lclm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic generator of Rf ∩ Rg: the least common left multiple u·f = v·g."""
    f._check(g)
    if not f or not g:
        raise ValueError("lclm of a zero polynomial")
    one, zero = SkewPoly.one(f.sigma), SkewPoly.zero(f.sigma)
    r0, r1, u0, u1 = f, g, one, zero
    while r1:
        res = right_divide(r0, r1)
        r0, r1 = r1, res.remainder
        u0, u1 = u1, u0 - res.quotient * u1
    return (u1 * f).left_monic()


def lcrm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic generator of fR ∩ gR: the least common right multiple f·u = g·v."""
    f._check(g)
    if not f or not g:
        raise ValueError("lcrm of a zero polynomial")
    one, zero = SkewPoly.one(f.sigma), SkewPoly.zero(f.sigma)
    r0, r1, u0, u1 = f, g, one, zero
    while r1:
        res = left_divide(r0, r1)
        r0, r1 = r1, res.remainder
        u0, u1 = u1, u0 - u1 * res.quotient
    return (f * u1).right_monic()


def gcrd_many(polys) -> SkewPoly:
    polys = list(polys)
    acc = polys[0]
    for p in polys[1:]:
        acc = gcrd(acc, p) if (acc or p) else acc
    return acc.left_monic()


def lclm_many(polys) -> SkewPoly:
    polys = list(polys)
    acc = polys[0].left_monic()
    for p in polys[1:]:
        acc = lclm(acc, p)
    return acc


# ---------------------------------------------------------------------------
# norms and right roots

def norm(sigma: SkewAutomorphism, a: int, i: int) -> int:
    """N_{σ,i}(a) = σ^{i-1}(a) ··· σ(a) a, with N_{σ,0} = 1 (product form)."""
    F = sigma.field
    acc = 1
    for j in range(i):
        acc = F.mul(sigma(a, j), acc)
    return acc


def norm_closed(sigma: SkewAutomorphism, a: int, i: int) -> int:
    """a^((P^i - 1)/(P - 1)) with P = p^d."""
    F = sigma.field
    if not a:
        return 1 if i == 0 else 0
    q1 = F.q - 1
    P = pow(F.p, sigma.d, q1) if q1 > 1 else 0
    e = sum(pow(P, j, q1) for j in range(i)) % q1 if q1 > 1 else 0
    return F.pow(a, e)


def eval_right_remainder(f: SkewPoly, a: int) -> int:
    """Remainder of f on right division by x - a, as Σ f_i N_{σ,i}(a)."""
    F, s = f.field, f.sigma
    acc = 0
    n_i = 1
    for c in f.coeffs:
        if c:
            acc = F.add(acc, F.mul(c, n_i))
        n_i = F.mul(s(n_i), a)
    return acc


def is_right_root(f: SkewPoly, a: int) -> bool:
    return eval_right_remainder(f, a) == 0


def linear(sigma: SkewAutomorphism, a: int) -> SkewPoly:
    """x - a."""
    return SkewPoly(sigma, (sigma.field.neg(a), 1))


# ---------------------------------------------------------------------------
# Ore (linearised) polynomials

@dataclass(frozen=True)
class OrePoly:
    """a_0 Y + a_1 Y^P + ... + a_n Y^(P^n), P = p^d, under composition."""

    sigma: SkewAutomorphism
    coeffs: tuple[int, ...]

    @property
    def P(self) -> int:
        return self.sigma.field.p ** self.sigma.d

    def terms(self) -> list[tuple[int, int]]:
        """(coefficient, exponent of Y) pairs for the nonzero terms."""
        return [(c, self.P**i) for i, c in enumerate(self.coeffs) if c]

    def __call__(self, y: int) -> int:
        F = self.sigma.field
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = F.add(acc, F.mul(c, self.sigma(y, i)))
        return acc

    def __str__(self):
        from .notation import format_element
        F = self.sigma.field
        parts = []
        for c, e in sorted(self.terms(), key=lambda t: -t[1]):
            mono = "Y" if e == 1 else f"Y^{e}"
            parts.append(mono if c == 1 else f"{format_element(F, c)}*{mono}")
        return " + ".join(parts) or "0"


def ore_map(f: SkewPoly) -> OrePoly:
    return OrePoly(f.sigma, f.coeffs)


def ore_compose(A: OrePoly, B: OrePoly) -> OrePoly:
    """A∘B; coefficient i is Σ_{j+s=i} a_j b_s^(P^j)."""
    if A.sigma != B.sigma:
        raise ValueError("Ore polynomials over different rings")
    F, s = A.sigma.field, A.sigma
    if not A.coeffs or not B.coeffs:
        return OrePoly(A.sigma, ())
    out = [0] * (len(A.coeffs) + len(B.coeffs) - 1)
    for j, a in enumerate(A.coeffs):
        for k, b in enumerate(B.coeffs):
            out[j + k] = F.add(out[j + k], F.mul(a, s(b, j)))
    while out and out[-1] == 0:
        out.pop()
    return OrePoly(A.sigma, tuple(out))


# ---------------------------------------------------------------------------
# two-sided and central elements

def is_two_sided(f: SkewPoly) -> bool:
    """True iff Rf = fR, checked on the ring generators x and the primitive element."""
    if not f:
        return True
    gens = (SkewPoly.x(f.sigma), SkewPoly.constant(f.sigma, f.field.primitive_element))
    return all(right_divides(f, f * g) for g in gens)


def has_two_sided_shape(f: SkewPoly) -> bool:
    """f = (a_0 + a_1 x^t + ... + a_n x^(nt)) x^k, the necessary form for two-sidedness."""
    if not f:
        return True
    t = f.sigma.t
    idx = [i for i, c in enumerate(f.coeffs) if c]
    return all((i - idx[0]) % t == 0 for i in idx)


def is_central(f: SkewPoly) -> bool:
    """Coefficients in the fixed field and only powers x^(jt)."""
    s = f.sigma
    return all(not c or (i % s.t == 0 and s.fixes(c)) for i, c in enumerate(f.coeffs))


def reverse_anti_map(h: SkewPoly) -> SkewPoly:
    """h̃ with coefficient σ^i(h_{k-i}) at x^i, k = deg h."""
    if not h:
        raise ValueError("reverse_anti_map of the zero polynomial")
    if h.coeffs[0] == 0:
        raise ValueError("reverse_anti_map needs a nonzero constant term")
    k, s = h.degree, h.sigma
    return SkewPoly(s, [s(h.coeffs[k - i], i) for i in range(k + 1)])
