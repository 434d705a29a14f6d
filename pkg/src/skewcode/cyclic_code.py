"""Skew cyclic codes: left ideals R g / R (x^n - 1) with g a right divisor of x^n - 1."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .central import check_standing
from .errors import AssumptionError
from .galois import DEFAULT_SIZE_BUDGET, FieldTower, FiniteField, smallest_splitting_extension, subfield_generator
from .linalg import in_row_space, rank
from .notation import format_element
from .skew_poly import (
    SkewPoly,
    gcrd,
    norm,
    reverse_anti_map,
    right_divide,
    x_n_minus_1,
)


@dataclass(frozen=True)
class CodeMatrix:
    field: FiniteField
    rows: tuple[tuple[int, ...], ...]
    role: str = "generator"
    width: int | None = None      # column count, needed when there are no rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else (self.width or 0)

    def rank(self) -> int:
        return rank(self.field, self.rows)

    def as_strings(self, vector: bool = False) -> list[list[str]]:
        return [[format_element(self.field, a, vector) for a in r] for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.asarray(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)


@dataclass(frozen=True)
class SkewCyclicCode:
    n: int
    g: SkewPoly
    h: SkewPoly          # x^n - 1 = h·g

    @property
    def sigma(self):
        return self.g.sigma

    @property
    def field(self) -> FiniteField:
        return self.g.field

    @property
    def k(self) -> int:
        return self.n - self.g.degree


def cyclic_from_generator(g: SkewPoly, n: int) -> SkewCyclicCode:
    check_standing(g.sigma, n)
    if not g or not g.is_monic():
        raise ValueError("generator must be monic")
    res = right_divide(x_n_minus_1(g.sigma, n), g)
    if res.remainder:
        raise AssumptionError(f"{g} does not right-divide x^{n} - 1")
    return SkewCyclicCode(n, g, res.quotient)


def cyclic_from_any(f: SkewPoly, n: int) -> SkewCyclicCode:
    """The code R f mod x^n - 1, generated by gcrd(f, x^n - 1)."""
    return cyclic_from_generator(gcrd(f, x_n_minus_1(f.sigma, n)), n)


def _shift_rows(f: SkewPoly, count: int, n: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    for i in range(count):
        rows.append((f.shift(i)).reduce_mod_xn1(n).vector(n))
    return tuple(rows)


def generator_matrix(code: SkewCyclicCode) -> CodeMatrix:
    """k × n, row i = coefficients of x^i·g."""
    return CodeMatrix(code.field, _shift_rows(code.g, code.k, code.n), "generator", code.n)


def dual_generator(code: SkewCyclicCode) -> SkewPoly:
    return reverse_anti_map(code.h).left_monic()


def dual_code(code: SkewCyclicCode) -> SkewCyclicCode:
    return cyclic_from_generator(dual_generator(code), code.n)


def dual_generator_matrix(code: SkewCyclicCode) -> CodeMatrix:
    """(n-k) × n rows x^i·h̃, a parity-check matrix for the code."""
    ht = dual_generator(code)
    return CodeMatrix(code.field, _shift_rows(ht, code.n - code.k, code.n), "dual-generator", code.n)


def contains(code: SkewCyclicCode, c: SkewPoly) -> bool:
    if c.degree >= code.n:
        raise ValueError(f"degree {c.degree} ≥ length {code.n}")
    return not (c * code.h).reduce_mod_xn1(code.n)


def contains_by_rows(code: SkewCyclicCode, c: SkewPoly) -> bool:
    return in_row_space(code.field, generator_matrix(code).rows, c.vector(code.n))


def is_classical_cyclic(code: SkewCyclicCode) -> bool:
    return all(code.sigma.fixes(c) for c in code.g.coeffs)


def generates_same_code(code: SkewCyclicCode, f: SkewPoly) -> bool:
    """True iff R f + R(x^n - 1) = R g, i.e. f = p·g with gcrd(p, h) = 1."""
    if f.degree >= code.n:
        raise ValueError(f"degree {f.degree} ≥ length {code.n}")
    if not f:
        return False
    res = right_divide(f, code.g)
    if res.remainder:
        return False
    return gcrd(res.quotient, code.h).degree == 0


def skew_cyclic_shift(c, sigma) -> tuple[int, ...]:
    """(c_0..c_{n-1}) ↦ (σ(c_{n-1}), σ(c_0), ..., σ(c_{n-2}))."""
    c = tuple(c)
    return tuple(sigma(a) for a in c[-1:] + c[:-1])


# ---------------------------------------------------------------------------
# BCH-type bound

@dataclass(frozen=True)
class BchBound:
    b: int
    delta: int
    tower: FieldTower
    gamma: int
    root_exponents: tuple[int, ...]

    @property
    def run(self) -> range:
        return range(self.b, self.b + self.delta - 1)


def _right_root_mask(g: SkewPoly, tower: FieldTower, gamma: int, count: int) -> np.ndarray:
    """mask[j] = (x - γ^j is a right divisor of g), for j < count.

    Uses N_i(γ^j) = γ^(j·(P^i - 1)/(P - 1)), so the whole scan is exponent arithmetic.
    """
    top = tower.top
    Q1 = top.q - 1
    P = top.p ** g.sigma.d
    glog = top.log(gamma)
    js = np.arange(count, dtype=np.int64)
    acc = np.zeros(count, dtype=np.int64)
    e_i = 0
    for c in g.coeffs:
        if c:
            cl = top.log(tower.embed(c))
            idx = (cl + (js * ((e_i * glog) % Q1)) % Q1) % Q1
            acc = top.add_arrays(acc, top.exp_array[idx])
        e_i = (e_i * P + 1) % Q1
    return acc == 0


def bch_bound(code: SkewCyclicCode, tower: FieldTower | None = None,
              budget: int = DEFAULT_SIZE_BUDGET) -> BchBound:
    """Longest run j = b..b+δ-2 (no wraparound) of right roots γ^j of g; returns δ."""
    sigma = code.sigma
    if tower is None:
        tower = smallest_splitting_extension(sigma, code.n, budget=budget)
    gamma = subfield_generator(tower.top, sigma.fixed_degree * code.n)
    count = sigma.q0**code.n - 1
    mask = _right_root_mask(code.g, tower, gamma, count)
    roots = tuple(int(j) for j in np.flatnonzero(mask))
    best_b, best_len, cur_b, cur_len = 0, 0, 0, 0
    for j, r in enumerate(mask):
        if r:
            if cur_len == 0:
                cur_b = j
            cur_len += 1
            if cur_len > best_len:
                best_b, best_len = cur_b, cur_len
        else:
            cur_len = 0
    return BchBound(best_b, best_len + 1, tower, gamma, roots)


def norm_parity_matrix(code: SkewCyclicCode, bound: BchBound) -> CodeMatrix:
    """Rows (1, N_1(γ^j), ..., N_{n-1}(γ^j)) for j in the BCH run, over the tower top."""
    top = bound.tower.top
    sig = code.sigma.extend(top)
    rows = []
    for j in bound.run:
        beta = top.pow(bound.gamma, j)
        rows.append(tuple(norm(sig, beta, i) for i in range(code.n)))
    return CodeMatrix(top, tuple(rows), "parity")
