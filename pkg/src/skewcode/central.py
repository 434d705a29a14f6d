"""Factorisations of x^n - 1 in F_q[x; σ]: right roots, linear chains,
factorisation into two-sided maximal (t.s.m) elements and CRT idempotents."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import AssumptionError, BudgetError
from .galois import (
    DEFAULT_SIZE_BUDGET,
    FieldTower,
    FiniteField,
    SkewAutomorphism,
    embedding,
    gf,
    identity_automorphism,
    smallest_splitting_extension,
    subfield_generator,
)
from .skew_poly import (
    SkewPoly,
    eval_right_remainder,
    extended_gcrd,
    gcrd,
    has_two_sided_shape,
    is_two_sided,
    linear,
    right_divide,
    skew_mul,
    x_n_minus_1,
)

DEFAULT_CHAIN_CAP = 10**5


def check_standing(sigma: SkewAutomorphism, n: int) -> None:
    """t | n and gcd(n, q) = 1."""
    if n < 1:
        raise AssumptionError(f"length {n} must be positive")
    if n % sigma.t:
        raise AssumptionError(f"the order t={sigma.t} of σ does not divide n={n}")
    if math.gcd(n, sigma.field.q) != 1:
        raise AssumptionError(f"gcd(n={n}, q={sigma.field.q}) != 1")


# ---------------------------------------------------------------------------
# right roots

@dataclass(frozen=True)
class RightRootSet:
    n: int
    tower: FieldTower
    gamma: int                    # generator of F_{q0^n} inside tower.top
    exponents: tuple[int, ...]    # γ-exponents of the roots lying in the coefficient field
    elements: tuple[int, ...]     # the same roots as elements of the coefficient field
    over_base: bool

    def __contains__(self, beta: int) -> bool:
        return beta in set(self.elements)

    def __len__(self):
        return len(self.elements)


def right_roots_of_unity_poly(n: int, sigma: SkewAutomorphism, over: str = "base",
                              budget: int = DEFAULT_SIZE_BUDGET) -> RightRootSet:
    """Right roots of x^n - 1, computed as {a^q0 / a : a ∈ F_{q0^n}*}.

    ``over="base"`` keeps the roots inside F_q (returned as F_q elements),
    ``over="top"`` keeps all of them as elements of the splitting field.
    """
    check_standing(sigma, n)
    if over not in ("base", "top"):
        raise ValueError("over must be 'base' or 'top'")
    tower = smallest_splitting_extension(sigma, n, budget=budget)
    top = tower.top
    e = sigma.fixed_degree * n
    gamma = subfield_generator(top, e)
    order = sigma.q0**n - 1
    glog = top.log(gamma)
    exps = sorted({(j * (sigma.q0 - 1)) % order for j in range(order)})
    out_e, out_el = [], []
    for k in exps:
        y = top.exp[(glog * k) % (top.q - 1)]
        if over == "top":
            out_e.append(k)
            out_el.append(y)
        elif tower.contains(y):
            out_e.append(k)
            out_el.append(tower.restrict(y))
    return RightRootSet(n, tower, gamma, tuple(out_e), tuple(out_el), over == "base")


def right_roots_by_scan(f: SkewPoly, field_elems=None) -> list[int]:
    """All β in F_q (or the given iterable) with x - β right-dividing f."""
    elems = f.field.elements() if field_elems is None else field_elems
    return [b for b in elems if eval_right_remainder(f, b) == 0]


# ---------------------------------------------------------------------------
# complete linear factorisations

@dataclass(frozen=True)
class FactorizationTree:
    target: SkewPoly
    chains: tuple[tuple[int, ...], ...]   # β_1..β_k with target = (x-β_1)···(x-β_k)

    @property
    def ordered_count(self) -> int:
        return len(self.chains)

    @property
    def multiset_count(self) -> int:
        return len({tuple(sorted(c)) for c in self.chains})

    def factors(self, chain) -> list[SkewPoly]:
        return [linear(self.target.sigma, b) for b in chain]


def enumerate_linear_factorizations(target: SkewPoly, cap: int = DEFAULT_CHAIN_CAP) -> FactorizationTree:
    """Every ordered chain of monic linear factors over the coefficient field of ``target``."""
    if not target or not target.is_monic():
        raise ValueError("target must be monic")
    memo: dict[tuple, list[tuple[int, ...]]] = {}
    elems = list(target.field.elements())

    def chains(f: SkewPoly) -> list[tuple[int, ...]]:
        if f.degree == 0:
            return [()]
        key = f.coeffs
        if key in memo:
            return memo[key]
        out: list[tuple[int, ...]] = []
        for b in elems:
            if eval_right_remainder(f, b):
                continue
            q = right_divide(f, linear(f.sigma, b)).quotient
            for c in chains(q):
                out.append(c + (b,))
                if len(out) > cap:
                    raise BudgetError(f"more than {cap} factorisation chains")
        memo[key] = out
        return out

    return FactorizationTree(target, tuple(sorted(chains(target))))


# ---------------------------------------------------------------------------
# commutative factorisation (σ = identity), used in the variable Y = x^t

def _ident_poly(F: FiniteField, coeffs) -> SkewPoly:
    return SkewPoly(identity_automorphism(F), coeffs)


def _powmod(base: SkewPoly, e: int, mod: SkewPoly) -> SkewPoly:
    result = SkewPoly.one(base.sigma)
    base = right_divide(base, mod).remainder
    while e:
        if e & 1:
            result = right_divide(result * base, mod).remainder
        base = right_divide(base * base, mod).remainder
        e >>= 1
    return result


def _derivative(f: SkewPoly) -> SkewPoly:
    F = f.field
    return SkewPoly(f.sigma, [F.mul(F.from_int(i), c) for i, c in enumerate(f.coeffs)][1:])


def _pth_root(f: SkewPoly) -> SkewPoly:
    F = f.field
    p = F.p
    return SkewPoly(f.sigma, [F.frobenius(f.coeffs[i], -1) for i in range(0, len(f.coeffs), p)])


def _squarefree(f: SkewPoly) -> list[tuple[SkewPoly, int]]:
    """Square-free decomposition of a monic commutative polynomial."""
    out: list[tuple[SkewPoly, int]] = []
    if f.degree < 1:
        return out
    p = f.field.p
    df = _derivative(f)
    if not df:
        return [(g, e * p) for g, e in _squarefree(_pth_root(f))]
    c = gcrd(f, df)
    w = right_divide(f, c).quotient
    i = 1
    while w.degree > 0:
        y = gcrd(w, c)
        fac = right_divide(w, y).quotient
        if fac.degree > 0:
            out.append((fac.left_monic(), i))
        w, c = y, right_divide(c, y).quotient
        i += 1
    if c.degree > 0:
        out.extend((g, e * p) for g, e in _squarefree(_pth_root(c.left_monic())))
    return out


def _ddf(f: SkewPoly) -> list[tuple[SkewPoly, int]]:
    """Distinct-degree factorisation of a square-free monic polynomial."""
    F = f.field
    x = SkewPoly.x(f.sigma)
    out = []
    h = x
    i = 0
    while f.degree >= 2 * (i + 1):
        i += 1
        h = _powmod(h, F.q, f)
        g = gcrd(f, h - x)
        if g.degree > 0:
            out.append((g, i))
            f = right_divide(f, g).quotient
            h = right_divide(h, f).remainder
    if f.degree > 0:
        out.append((f.left_monic(), f.degree))
    return out


def _edf(f: SkewPoly, d: int, rng: random.Random) -> list[SkewPoly]:
    """Equal-degree splitting (Cantor–Zassenhaus)."""
    if f.degree == d:
        return [f]
    F = f.field
    while True:
        a = SkewPoly(f.sigma, [rng.randrange(F.q) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        if F.p == 2:
            acc, t = a, a
            for _ in range(F.m * d - 1):
                t = right_divide(t * t, f).remainder
                acc = acc + t
            b = acc
        else:
            b = _powmod(a, (F.q**d - 1) // 2, f) - SkewPoly.one(f.sigma)
        if not b:
            continue
        g = gcrd(f, b)
        if 0 < g.degree < f.degree:
            return _edf(g, d, rng) + _edf(right_divide(f, g).quotient.left_monic(), d, rng)


def factor_commutative(f: SkewPoly, seed: int = 0) -> list[SkewPoly]:
    """Monic irreducible factors (with multiplicity) of f over its field, σ = identity."""
    if not f.sigma.is_identity:
        raise ValueError("factor_commutative needs the identity automorphism")
    rng = random.Random(seed)
    out = []
    f = f.left_monic()
    for sq, e in _squarefree(f):
        for g, d in _ddf(sq):
            for irr in _edf(g, d, rng):
                out.extend([irr.left_monic()] * e)
    return sorted(out, key=_sort_key)


def _sort_key(f: SkewPoly):
    return (f.degree, f.coeffs)


# ---------------------------------------------------------------------------
# t.s.m factorisation and CRT idempotents

@dataclass(frozen=True)
class TsmFactorization:
    target: SkewPoly
    n: int | None                  # set when target = x^n - 1
    split: str                     # "center" or "field"
    factors: tuple[SkewPoly, ...]
    two_sided: tuple[bool, ...]
    cofactors: tuple[tuple[SkewPoly, SkewPoly], ...] = ()
    idempotents: tuple[SkewPoly, ...] = ()
    hats: tuple[SkewPoly, ...] = field(default=(), repr=False)

    def project(self, g: SkewPoly, i: int) -> SkewPoly:
        """g ↦ g·e_i mod x^n - 1."""
        if self.n is None or not self.idempotents:
            raise ValueError("no idempotents for this factorisation")
        return (g * self.idempotents[i]).reduce_mod_xn1(self.n)


def _substitute(F_target: SkewAutomorphism, Ypoly: SkewPoly, t: int, lift) -> SkewPoly:
    coeffs = [0] * (t * Ypoly.degree + 1)
    for i, c in enumerate(Ypoly.coeffs):
        coeffs[i * t] = lift(c)
    return SkewPoly(F_target, coeffs)


def tsm_factorization(target, sigma: SkewAutomorphism, split: str = "center",
                      seed: int = 0) -> TsmFactorization:
    """Factor x^n - 1 (target an int n) or a polynomial in x^t into irreducibles in Y = x^t.

    ``split="center"`` factors over the fixed field F_q0, giving central
    irreducibles, which are genuinely two-sided and maximal. ``split="field"``
    factors over F_q; the pieces have the two-sided shape but need not be
    two-sided when t > 1.
    """
    if split not in ("center", "field"):
        raise ValueError("split must be 'center' or 'field'")
    F, t = sigma.field, sigma.t
    n = None
    if isinstance(target, int):
        n = target
        check_standing(sigma, n)
        target = x_n_minus_1(sigma, n)
    if not target:
        raise ValueError("cannot factor the zero polynomial")
    lead = target.lc
    monic = target.left_monic()
    shift = next(i for i, c in enumerate(monic.coeffs) if c)
    core = SkewPoly(sigma, monic.coeffs[shift:])
    if any(c and i % t for i, c in enumerate(core.coeffs)):
        raise AssumptionError("input is not a polynomial in x^t times a power of x")
    ycoeffs = core.coeffs[::t]
    if split == "center":
        sub = gf(F.p, sigma.fixed_degree)
        tw = embedding(sub, F)
        if not all(tw.contains(c) for c in ycoeffs):
            raise AssumptionError("coefficients are not in the fixed field; input is not central")
        Y = _ident_poly(sub, [tw.restrict(c) for c in ycoeffs])
        lift = tw.embed
    else:
        Y = _ident_poly(F, ycoeffs)
        lift = lambda c: c  # noqa: E731
    pieces = [_substitute(sigma, g, t, lift) for g in factor_commutative(Y, seed)]
    pieces = [SkewPoly.x(sigma)] * shift + pieces
    pieces.sort(key=_sort_key)
    # the pieces commute pairwise (all lie in F_q[x^t] or are x), so the order is immaterial
    prod = SkewPoly.constant(sigma, lead)
    for p in pieces:
        prod = skew_mul(prod, p)
    if prod != target:
        raise RuntimeError("t.s.m factors do not multiply back to the input")
    res = TsmFactorization(target, n, split, tuple(pieces), tuple(is_two_sided(p) for p in pieces))
    if n is not None and len(set(pieces)) == len(pieces):
        res = crt_idempotents(pieces, n, split=split)
    return res


def crt_idempotents(factors, n: int, split: str = "center") -> TsmFactorization:
    """b_i, c_i with b_i·f̂_i + c_i·f_i = 1 and e_i = b_i·f̂_i mod x^n - 1; identities verified."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty factor list")
    sigma = factors[0].sigma
    target = x_n_minus_1(sigma, n)
    prod = SkewPoly.one(sigma)
    for f in factors:
        if not has_two_sided_shape(f):
            raise AssumptionError(f"{f} does not have the two-sided shape")
        prod = prod * f
    if prod != target:
        raise AssumptionError("factors do not multiply to x^n - 1")
    hats, cof, es = [], [], []
    for i, f in enumerate(factors):
        hat = SkewPoly.one(sigma)
        for j, g in enumerate(factors):
            if j != i:
                hat = hat * g
        d, b, c = extended_gcrd(hat, f)
        if d.degree != 0:
            raise AssumptionError("factors are not pairwise coprime")
        hats.append(hat)
        cof.append((b, c))
        es.append((b * hat).reduce_mod_xn1(n))
    one = SkewPoly.one(sigma)
    total = SkewPoly.zero(sigma)
    for i, e in enumerate(es):
        total = total + e
        if (e * e).reduce_mod_xn1(n) != e:
            raise RuntimeError("idempotent check failed")
        for j, e2 in enumerate(es):
            if i != j and (e * e2).reduce_mod_xn1(n):
                raise RuntimeError("orthogonality check failed")
    if total.reduce_mod_xn1(n) != one:
        raise RuntimeError("idempotents do not sum to 1")
    return TsmFactorization(target, n, split, tuple(factors),
                            tuple(is_two_sided(f) for f in factors),
                            tuple(cof), tuple(es), tuple(hats))
