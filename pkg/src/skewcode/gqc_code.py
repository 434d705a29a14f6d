"""Skew generalised quasi-cyclic codes: left R-submodules of
R/(x^{m_1}-1) × ... × R/(x^{m_l}-1).

Vectors are block-concatenated (block i occupies m_1+...+m_{i-1} onward).
QC codes (all m_i = m) are also used in the interleaved order where
position i·l + j holds coefficient i of block j; `interleave` converts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .central import TsmFactorization, check_standing, tsm_factorization
from .cyclic_code import CodeMatrix, bch_bound, cyclic_from_generator
from .distance_lab import exact_min_distance
from .errors import AssumptionError, BudgetError
from .galois import FieldTower, SkewAutomorphism, embedding, gf, subfield_generator
from .linalg import nullspace, rank, row_basis
from .skew_poly import SkewPoly, gcrd, gcrd_many, lclm, lclm_many, right_divide, x_n_minus_1


@dataclass(frozen=True)
class GqcCode:
    sigma: SkewAutomorphism
    block_lengths: tuple[int, ...]
    generators: tuple[tuple[SkewPoly, ...], ...]

    @property
    def field(self):
        return self.sigma.field

    @property
    def l(self) -> int:
        return len(self.block_lengths)

    @property
    def length(self) -> int:
        return sum(self.block_lengths)

    @property
    def rho(self) -> int:
        """Number of generator tuples supplied (an upper bound on the true ρ)."""
        return len(self.generators)

    @property
    def is_qc(self) -> bool:
        return len(set(self.block_lengths)) == 1

    def offsets(self) -> list[int]:
        return list(itertools.accumulate((0,) + self.block_lengths[:-1]))


def gqc_from_generators(block_lengths, generators, sigma: SkewAutomorphism | None = None) -> GqcCode:
    block_lengths = tuple(int(m) for m in block_lengths)
    gens = tuple(tuple(c) for c in generators)
    if not gens:
        raise ValueError("at least one generator tuple is required")
    sigma = sigma or gens[0][0].sigma
    for m in block_lengths:
        check_standing(sigma, m)
    for c in gens:
        if len(c) != len(block_lengths):
            raise ValueError(f"generator has {len(c)} blocks, expected {len(block_lengths)}")
        for ci, m in zip(c, block_lengths):
            if ci.sigma != sigma:
                raise ValueError("generators over different rings")
            if ci.degree >= m:
                raise ValueError(f"block component {ci} has degree ≥ {m}")
    return GqcCode(sigma, block_lengths, gens)


def tuple_vector(code: GqcCode, c) -> tuple[int, ...]:
    """Block-concatenated coefficient vector of a tuple, each block reduced mod x^{m_i} - 1."""
    out: tuple[int, ...] = ()
    for ci, m in zip(c, code.block_lengths):
        out += ci.reduce_mod_xn1(m).vector(m)
    return out


def vector_tuple(code: GqcCode, v) -> tuple[SkewPoly, ...]:
    out = []
    for off, m in zip(code.offsets(), code.block_lengths):
        out.append(SkewPoly(code.sigma, v[off:off + m]))
    return tuple(out)


def shifted_tuple(c, j: int):
    return tuple(ci.shift(j) for ci in c)


def spanning_rows(code: GqcCode) -> list[tuple[int, ...]]:
    """x^j·c^(r) for every generator r and j < min(Σ m_i, lcm m_i)."""
    J = min(code.length, math.lcm(*code.block_lengths))
    return [tuple_vector(code, shifted_tuple(c, j)) for c in code.generators for j in range(J)]


def code_basis(code: GqcCode) -> CodeMatrix:
    return CodeMatrix(code.field, tuple(map(tuple, row_basis(code.field, spanning_rows(code)))), "generator", code.length)


def dimension(code: GqcCode) -> int:
    return rank(code.field, spanning_rows(code))


# ---------------------------------------------------------------------------
# 1-generator theory

@dataclass(frozen=True)
class ParityCheck:
    h_blocks: tuple[SkewPoly, ...]
    h: SkewPoly


def _single(code: GqcCode):
    if code.rho != 1:
        raise ValueError(f"expected a 1-generator code, got {code.rho} generators")
    c = code.generators[0]
    if all(not ci.reduce_mod_xn1(m) for ci, m in zip(c, code.block_lengths)):
        raise ValueError("zero generator")
    return c


def block_annihilator(c: SkewPoly, m: int) -> SkewPoly:
    """Monic h with {p : p·c ≡ 0 mod x^m - 1} = R h."""
    c = c.reduce_mod_xn1(m)
    if not c:
        return SkewPoly.one(c.sigma)
    L = lclm(c, x_n_minus_1(c.sigma, m))
    return right_divide(L, c).quotient.left_monic()


def one_gen_parity_check(code: GqcCode) -> ParityCheck:
    c = _single(code)
    hs = tuple(block_annihilator(ci, m) for ci, m in zip(c, code.block_lengths))
    return ParityCheck(hs, lclm_many(hs))


def one_gen_dimension(code: GqcCode) -> int:
    return one_gen_parity_check(code).h.degree


def gqc_generator_matrix(code: GqcCode) -> CodeMatrix:
    """deg h rows; row j is x^j·c reduced blockwise."""
    c = _single(code)
    k = one_gen_dimension(code)
    return CodeMatrix(code.field, tuple(tuple_vector(code, shifted_tuple(c, j)) for j in range(k)), "generator", code.length)


@dataclass(frozen=True)
class OneGenBound:
    bound: int | None        # None for the zero code
    deltas: tuple[int, ...]  # BCH δ per block (run length + 1); 0 for a zero block
    block_generators: tuple[SkewPoly, ...]
    zero_set: tuple[int, ...]


def one_gen_distance_bound(code: GqcCode, max_blocks: int = 20) -> OneGenBound:
    """min over Z with lclm_{i∈Z} h_i ≠ h of Σ_{i∉Z} δ_i.

    A nonzero codeword f·c vanishes exactly on the blocks Z with f ∈ R h_i for
    i ∈ Z, so f ∈ R·lclm_Z h_i and that lclm cannot be h. Every other block is a
    nonzero word of the skew cyclic code R g_i, g_i = gcrd(c_i, x^{m_i} - 1),
    hence has weight at least its BCH δ_i.
    """
    c = _single(code)
    if code.l > max_blocks:
        raise BudgetError(f"subset search over {code.l} blocks exceeds {max_blocks}")
    pc = one_gen_parity_check(code)
    gs, deltas = [], []
    for ci, m in zip(c, code.block_lengths):
        gi = gcrd(ci.reduce_mod_xn1(m), x_n_minus_1(code.sigma, m))
        gs.append(gi)
        if gi.degree == m:
            deltas.append(0)
        else:
            deltas.append(bch_bound(cyclic_from_generator(gi, m)).delta)
    if pc.h.degree == 0:
        return OneGenBound(None, tuple(deltas), tuple(gs), ())
    best, best_z = None, ()
    idx = range(code.l)
    for size in range(code.l, -1, -1):
        for Z in itertools.combinations(idx, size):
            hz = lclm_many([pc.h_blocks[i] for i in Z]) if Z else SkewPoly.one(code.sigma)
            if hz == pc.h:
                continue
            val = sum(deltas[i] for i in idx if i not in Z)
            if best is None or val < best:
                best, best_z = val, Z
    return OneGenBound(best, tuple(deltas), tuple(gs), best_z)


# ---------------------------------------------------------------------------
# canonical decomposition

@dataclass(frozen=True)
class Component:
    factor: SkewPoly
    blocks: tuple[int, ...]          # i with d_{ik} = 1
    basis: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> Fraction:
        return Fraction(self.dimension, self.factor.degree)


@dataclass(frozen=True)
class GqcDecomposition:
    code: GqcCode
    split: str
    pool: tuple[SkewPoly, ...]
    flags: tuple[tuple[int, ...], ...]        # flags[i][k] = d_{ik}
    block_factorizations: tuple[TsmFactorization, ...]
    components: tuple[Component, ...]
    code_dimension: int
    lifts_in_code: bool
    lifted_span_dimension: int

    @property
    def ranks(self) -> tuple[Fraction, ...]:
        return tuple(c.rank for c in self.components)

    @property
    def is_direct(self) -> bool:
        return sum(c.dimension for c in self.components) == self.code_dimension

    @property
    def reconstructs(self) -> bool:
        return self.lifts_in_code and self.lifted_span_dimension == self.code_dimension


def canonical_decomposition(code: GqcCode, split: str = "center") -> GqcDecomposition:
    """Split C along the t.s.m factors of the x^{m_i} - 1 via CRT idempotents."""
    F = code.field
    facts = tuple(tsm_factorization(m, code.sigma, split=split) for m in code.block_lengths)
    pool = tuple(sorted({f for tf in facts for f in tf.factors}, key=lambda f: (f.degree, f.coeffs)))
    flags = tuple(tuple(int(g in tf.factors) for g in pool) for tf in facts)
    rows = spanning_rows(code)
    dim = rank(F, rows)
    offs = code.offsets()
    comps, lifted = [], []
    for k, g in enumerate(pool):
        blocks = tuple(i for i in range(code.l) if flags[i][k])
        proj_rows, lift_rows = [], []
        for r in rows:
            tup = vector_tuple(code, r)
            comp_vec: tuple[int, ...] = ()
            lift_vec = [0] * code.length
            for i in range(code.l):
                if not flags[i][k]:
                    continue
                tf = facts[i]
                e = tf.idempotents[tf.factors.index(g)]
                pe = (tup[i] * e).reduce_mod_xn1(code.block_lengths[i])
                comp_vec += right_divide(pe, g).remainder.vector(g.degree)
                lift_vec[offs[i]:offs[i] + code.block_lengths[i]] = pe.vector(code.block_lengths[i])
            proj_rows.append(comp_vec)
            lift_rows.append(tuple(lift_vec))
        basis = tuple(map(tuple, row_basis(F, proj_rows))) if blocks else ()
        comps.append(Component(g, blocks, basis))
        lifted.extend(lift_rows)
    lifts_in = rank(F, rows + lifted) == dim
    return GqcDecomposition(code, split, pool, flags, facts, tuple(comps), dim,
                            lifts_in, rank(F, lifted))


def rho_of_decomposition(dec: GqcDecomposition) -> int:
    return max((math.ceil(r) for r in dec.ranks), default=0)


def module_closure_contains(code: GqcCode, basis_rows, vec) -> bool:
    from .linalg import in_row_space
    return in_row_space(code.field, basis_rows, vec)


def min_generators_search(code: GqcCode, max_rho: int = 2, max_words: int = 10**4) -> int | None:
    """Smallest ρ ≤ max_rho such that ρ codewords generate C; None when undecided.

    ρ = 1 is decided exhaustively. For ρ = 2 candidate pairs are tried in a
    fixed order; a failure to find one is reported as None.
    """
    F = code.field
    B = code_basis(code)
    dim = B.nrows
    if dim == 0:
        return 0
    if F.q**dim > max_words:
        raise BudgetError(f"{F.q}^{dim} codewords exceed {max_words}")
    words = []
    for msg in itertools.product(range(F.q), repeat=dim):
        if any(msg):
            w = [0] * code.length
            for a, row in zip(msg, B.rows):
                if a:
                    w = [F.add(x, F.mul(a, y)) for x, y in zip(w, row)]
            words.append(tuple(w))

    def span_dim(ws):
        tmp = GqcCode(code.sigma, code.block_lengths, tuple(vector_tuple(code, w) for w in ws))
        return dimension(tmp)

    if any(span_dim([w]) == dim for w in words):
        return 1
    if max_rho < 2:
        return None
    for a, b in itertools.combinations(words, 2):
        if span_dim([a, b]) == dim:
            return 2
    return None


# ---------------------------------------------------------------------------
# QC specifics

def interleave(vec, l: int) -> tuple[int, ...]:
    """Block-concatenated (l blocks of length m) to interleaved order."""
    m = len(vec) // l
    return tuple(vec[j * m + i] for i in range(m) for j in range(l))


def deinterleave(vec, l: int) -> tuple[int, ...]:
    m = len(vec) // l
    return tuple(vec[i * l + j] for j in range(l) for i in range(m))


def qc_shift(u, l: int, sigma: SkewAutomorphism) -> tuple[int, ...]:
    """T_{σ,l}: rotate the m groups of l entries by one and apply σ (interleaved order)."""
    u = tuple(u)
    if l < 1 or len(u) % l:
        raise ValueError(f"length {len(u)} is not a multiple of l={l}")
    rot = u[-l:] + u[:-l]
    return tuple(sigma(a) for a in rot)


def conjugate(b: SkewPoly, m: int) -> SkewPoly:
    """Σ b_j x^j ↦ Σ σ^{-j}(b_j) x^{(m-j) mod m}."""
    s = b.sigma
    out = [0] * m
    F = b.field
    for j, c in enumerate(b.reduce_mod_xn1(m).coeffs):
        if c:
            k = (m - j) % m
            out[k] = F.add(out[k], s(c, -j))
    return SkewPoly(s, out)


def hermitian_product(a, b, m: int) -> SkewPoly:
    if len(a) != len(b):
        raise ValueError("tuples of different lengths")
    if not a:
        raise ValueError("empty tuples")
    acc = SkewPoly.zero(a[0].sigma)
    for ai, bi in zip(a, b):
        acc = acc + ai.reduce_mod_xn1(m) * conjugate(bi, m)
    return acc.reduce_mod_xn1(m)


def vector_to_qc_tuple(u, l: int, sigma: SkewAutomorphism) -> tuple[SkewPoly, ...]:
    """Interleaved vector to (u_0(x), ..., u_{l-1}(x)), u_j(x) = Σ_i u_{il+j} x^i."""
    m = len(u) // l
    return tuple(SkewPoly(sigma, [u[i * l + j] for i in range(m)]) for j in range(l))


@dataclass(frozen=True)
class LallyReport:
    bound: int
    d_tilde: int
    d_b: int
    tower: FieldTower
    xi: int
    sigma_tilde: SkewAutomorphism
    g_tilde: SkewPoly
    b_basis: tuple[tuple[int, ...], ...]


def lally_bound(code: GqcCode) -> LallyReport:
    """d(C) ≥ d(C̃)·d(B) via the F_{q^l} image v(x) = Σ_j c_j(x) ξ^j.

    ξ generates F_{p^{dl}} so that the extended automorphism σ̃ = θ^e
    (e ≡ d mod m, dl | e) fixes it; this needs gcd(l, t) = 1.
    """
    if not code.is_qc:
        raise AssumptionError("the Lally bound needs equal block lengths")
    sigma, F = code.sigma, code.field
    l, m = code.l, code.block_lengths[0]
    d, t = sigma.d, sigma.t
    if math.gcd(l, t) != 1:
        raise AssumptionError(f"gcd(l={l}, t={t}) must be 1 for a σ-fixed basis element")
    top = gf(F.p, F.m * l)
    tower = embedding(F, top)
    e = next(e for e in range(d, d * t * l + 1, F.m) if e % (sigma.fixed_degree * l) == 0)
    sig_t = SkewAutomorphism(top, e)
    xi = subfield_generator(top, sigma.fixed_degree * l)
    if sig_t(xi) != xi:
        raise RuntimeError("ξ is not fixed by the extended automorphism")
    if any(sig_t(tower.embed(a)) != tower.embed(sigma(a)) for a in range(F.q)):
        raise RuntimeError("extended automorphism does not restrict to σ")
    xi_pows = [top.pow(xi, j) for j in range(l)]
    vs = []
    for c in code.generators:
        coeffs = [0] * m
        for j, cj in enumerate(c):
            for i, a in enumerate(cj.reduce_mod_xn1(m).vector(m)):
                if a:
                    coeffs[i] = top.add(coeffs[i], top.mul(tower.embed(a), xi_pows[j]))
        vs.append(SkewPoly(sig_t, coeffs))
    g_t = gcrd_many(vs + [x_n_minus_1(sig_t, m)])
    k_t = m - g_t.degree
    if k_t == 0:
        raise ValueError("zero code")
    rows_t = tuple(g_t.shift(i).vector(m) for i in range(k_t))
    d_tilde = exact_min_distance(CodeMatrix(top, rows_t), method="auto").exact_distance
    # B: all columns V_{i} of the generators, closed under σ
    bvecs = []
    for c in code.generators:
        blocks = [cj.reduce_mod_xn1(m).vector(m) for cj in c]
        for i in range(m):
            v = tuple(blocks[j][i] for j in range(l))
            for r in range(t):
                bvecs.append(tuple(sigma(a, r) for a in v))
    b_basis = tuple(map(tuple, row_basis(F, bvecs)))
    d_b = exact_min_distance(CodeMatrix(F, b_basis), method="auto").exact_distance
    return LallyReport(d_tilde * d_b, d_tilde, d_b, tower, xi, sig_t, g_t, b_basis)


def dual_code_rows(code: GqcCode) -> list[list[int]]:
    """Euclidean dual (block-concatenated order) as a basis of row vectors."""
    return nullspace(code.field, spanning_rows(code), code.length)


def dual_as_gqc(code: GqcCode) -> GqcCode:
    gens = tuple(vector_tuple(code, r) for r in dual_code_rows(code))
    if not gens:
        gens = (tuple(SkewPoly.zero(code.sigma) for _ in code.block_lengths),)
    return GqcCode(code.sigma, code.block_lengths, gens)


@dataclass(frozen=True)
class DualGeneratorReport:
    K: int
    K_prime: int
    predicted_dual_generators: int
    self_dual_possible: bool
    one_generator_dual: bool
    ranks: tuple[Fraction, ...] = field(default=())


def qc_dual_generator_counts(dec: GqcDecomposition, l: int | None = None) -> DualGeneratorReport:
    code = dec.code
    if not code.is_qc:
        raise AssumptionError("dual generator counts need a QC code (equal block lengths)")
    l = code.l if l is None else l
    ranks = dec.ranks
    K = max((math.ceil(r) for r in ranks), default=0)
    k_min = min(ranks, default=Fraction(0))
    K_prime = math.floor(k_min)
    predicted = max(math.ceil(l - r) for r in ranks) if ranks else l
    self_dual_possible = l % 2 == 0 and l <= 2 * K
    one_gen_dual = l == 2 and all(r == 1 for r in ranks)
    return DualGeneratorReport(K, K_prime, predicted, self_dual_possible, one_gen_dual, ranks)
