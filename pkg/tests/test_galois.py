import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import NaiveField, naive_field_like
from skewcode import galois
from skewcode.errors import AssumptionError, BudgetError
from skewcode.galois import (
    SkewAutomorphism,
    conway_polynomial,
    embedding,
    field_create,
    gf,
    is_irreducible_modulus,
    smallest_splitting_extension,
)
from strategies import SMALL_FIELDS

# published Conway polynomials (low degree first)
KNOWN_CONWAY = {
    (2, 1): (1, 1), (2, 4): (1, 1, 0, 0, 1), (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1), (3, 2): (2, 2, 1), (3, 3): (1, 2, 0, 1), (3, 4): (2, 0, 0, 2, 1),
    (5, 1): (3, 1), (5, 2): (2, 4, 1), (7, 2): (3, 6, 1),
}


@pytest.mark.parametrize("pm,poly", KNOWN_CONWAY.items())
def test_conway_polynomials_match_published_values(pm, poly):
    assert conway_polynomial(*pm) == poly
    assert gf(*pm).modulus == poly


def test_gf9_modulus_and_primitive_relation():
    F = field_create(3, 2)
    a = F.primitive_element
    assert F.modulus == (2, 2, 1)
    assert F.mul(a, a) == F.add(a, 1)          # α² = α + 1
    N = naive_field_like(F)
    powers = {N.pow(a, k) for k in range(1, 9)}
    assert len(powers) == 8                     # order exactly 8
    assert is_irreducible_modulus(list(F.modulus), 3)


def test_prime_field_primitive_element():
    F = gf(3, 1)
    assert F.primitive_element == 2
    assert gf(3, 3).q == 27


def test_field_errors():
    with pytest.raises(AssumptionError):
        gf(4, 1)
    with pytest.raises(AssumptionError):
        gf(3, 0)
    with pytest.raises(BudgetError):
        gf(2, 30)
    with pytest.raises(BudgetError):
        gf(3, 4, budget=80)


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_table_arithmetic_matches_naive_exhaustively(pm):
    F = gf(*pm)
    N = naive_field_like(F)
    elems = range(F.q) if F.q <= 27 else list(range(0, F.q, 3)) + [F.q - 1]
    for a, b in itertools.product(elems, repeat=2):
        assert F.add(a, b) == N.add(a, b)
        assert F.mul(a, b) == N.mul(a, b)
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_frobenius_homomorphism_and_sigma_order(pm):
    F = gf(*pm)
    N = naive_field_like(F)
    for d in range(0, F.m + 1):
        for a in range(F.q):
            assert F.frobenius(a, d) == N.frob(a, d)
    for d in range(1, F.m + 1):
        s = SkewAutomorphism(F, d)
        fixed = [a for a in range(F.q) if s(a) == a]
        assert len(fixed) == s.q0
        assert fixed == [a for a in range(F.q) if F.pow(a, s.q0) == a]
        assert all(s(a, s.t) == a for a in range(F.q))


def test_frobenius_examples():
    F = gf(3, 2)
    a = F.primitive_element
    assert F.frobenius(a, 0) == a
    assert F.frobenius(a, 1) == F.element(3)
    assert F.frobenius(a, 2) == a


@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_frobenius_is_additive_and_multiplicative(pm, data):
    F = gf(*pm)
    a, b = data.draw(st.integers(0, F.q - 1)), data.draw(st.integers(0, F.q - 1))
    d = data.draw(st.integers(-F.m, 2 * F.m))
    assert F.frobenius(F.mul(a, b), d) == F.mul(F.frobenius(a, d), F.frobenius(b, d))
    assert F.frobenius(F.add(a, b), d) == F.add(F.frobenius(a, d), F.frobenius(b, d))


@pytest.mark.parametrize("base,top", [((3, 1), (3, 2)), ((3, 2), (3, 4)), ((2, 2), (2, 4)), ((3, 1), (3, 3)),
                                      ((2, 1), (2, 3)), ((5, 1), (5, 2))])
def test_embedding_is_injective_ring_homomorphism(base, top):
    B, T = gf(*base), gf(*top)
    tw = embedding(B, T)
    assert tw.embed(1) == 1 and tw.embed(0) == 0
    images = [tw.embed(a) for a in range(B.q)]
    assert len(set(images)) == B.q
    for a, b in itertools.product(range(B.q), repeat=2):
        assert tw.embed(B.add(a, b)) == T.add(tw.embed(a), tw.embed(b))
        assert tw.embed(B.mul(a, b)) == T.mul(tw.embed(a), tw.embed(b))
    assert all(tw.restrict(tw.embed(a)) == a for a in range(B.q))


def test_embedding_sends_alpha_to_xi10():
    tw = embedding(gf(3, 2), gf(3, 4))
    assert tw.top.log(tw.embed(tw.base.primitive_element)) == 10


@pytest.mark.parametrize("p,m,d,n,s", [(3, 2, 1, 4, 2), (3, 2, 2, 1, 1), (3, 2, 1, 8, 4), (2, 4, 2, 3, 3)])
def test_smallest_splitting_extension(p, m, d, n, s):
    tw = smallest_splitting_extension(SkewAutomorphism(gf(p, m), d), n)
    assert tw.s == s
    assert tw.top.m % (SkewAutomorphism(gf(p, m), d).fixed_degree * n) == 0


def test_splitting_extension_budget():
    with pytest.raises(BudgetError):
        smallest_splitting_extension(SkewAutomorphism(gf(3, 2), 1), 8, budget=1000)


def test_field_table_env_override(tmp_path, monkeypatch):
    # x^2 + x + 2 is another primitive quadratic over GF(3)
    path = tmp_path / "table.txt"
    path.write_text("# custom\n3 2 2 1 1\n")
    monkeypatch.setenv(galois.FIELD_TABLE_ENV, str(path))
    F = gf(3, 2)
    assert F.modulus == (2, 1, 1)
    N = NaiveField(3, (2, 1, 1))
    a = F.primitive_element
    assert F.mul(a, a) == N.mul(a, a)
    monkeypatch.delenv(galois.FIELD_TABLE_ENV)
    assert gf(3, 2).modulus == (2, 2, 1)


def test_shipped_table_is_consistent():
    table = galois.modulus_table()
    assert table[(3, 2)] == (2, 2, 1)
    for (p, m), poly in list(table.items())[:40]:
        assert galois.is_primitive_modulus(list(poly), p)


@pytest.mark.parametrize("pm", [(2, 3), (3, 2), (5, 1)])
def test_add_arrays_matches_scalar(pm):
    F = gf(*pm)
    a = np.arange(F.q).repeat(F.q)
    b = np.tile(np.arange(F.q), F.q)
    out = F.add_arrays(a, b)
    assert all(int(o) == F.add(int(x), int(y)) for o, x, y in zip(out, a, b))
