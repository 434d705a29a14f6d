import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from skewcode.cyclic_code import CodeMatrix, cyclic_from_generator, dual_generator_matrix, generator_matrix
from skewcode.distance_lab import exact_min_distance, reduce_rows, row_space_equal
from skewcode.galois import SkewAutomorphism, gf
from skewcode.linalg import nullspace, rank
from skewcode.notation import parse_poly
from skewcode.skew_poly import SkewPoly
from strategies import SMALL_FIELDS

FIELDS = [pm for pm in SMALL_FIELDS if pm[0] ** pm[1] <= 27]


@st.composite
def matrices(draw, max_n=8, max_q_k=2000):
    F = gf(*draw(st.sampled_from(FIELDS)))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    assume(F.q**k <= max_q_k)
    rows = [draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n)) for _ in range(k)]
    rows = reduce_rows(F, rows)
    assume(rows)
    return CodeMatrix(F, tuple(map(tuple, rows)), "generator", n)


@pytest.fixture
def ex27():
    s = SkewAutomorphism(gf(3, 2), 1)
    return cyclic_from_generator(parse_poly(s, "x - a^2"), 4)


def test_example_distance_and_weights(ex27):
    rep = exact_min_distance(generator_matrix(ex27))
    assert rep.exact_distance == 2 and rep.k == 3 and rep.n == 4
    assert rep.weight_distribution == (1, 0, 48, 224, 456)
    assert rep.enumerated == 729 and not rep.truncated
    assert rep.to_json() == {"k": 3, "d": 2, "truncated": False, "weights": [1, 0, 48, 224, 456],
                             "method": "enumerate"}


def test_identity_matrix():
    F = gf(3, 2)
    M = CodeMatrix(F, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert exact_min_distance(M).exact_distance == 1
    assert exact_min_distance(M, method="columns").exact_distance == 1


def test_errors_and_empty():
    F = gf(3)
    with pytest.raises(ValueError):
        exact_min_distance(CodeMatrix(F, ((1, 2), (2, 1))))
    with pytest.raises(ValueError):
        exact_min_distance(CodeMatrix(F, ((1, 0),)), method="fast")
    empty = exact_min_distance(CodeMatrix(F, (), "generator", 5))
    assert empty.exact_distance is None and empty.weight_distribution == (1, 0, 0, 0, 0, 0)


def test_truncation_is_flagged(ex27):
    rep = exact_min_distance(generator_matrix(ex27), budget=100)
    assert rep.truncated and rep.enumerated == 100
    assert sum(rep.weight_distribution) == 100
    assert rep.exact_distance >= 2
    auto = exact_min_distance(generator_matrix(ex27), budget=100, method="auto")
    assert auto.method == "columns" and auto.exact_distance == 2 and not auto.truncated


def test_row_space_equal_examples(ex27):
    G = generator_matrix(ex27)
    assert row_space_equal(G, G)
    s = ex27.sigma
    unit = SkewPoly.constant(s, s.field.element(5))
    other = cyclic_from_generator((unit * ex27.g).left_monic(), 4)
    scaled = CodeMatrix(G.field, tuple((unit * SkewPoly.monomial(s, 1, i) * ex27.g).vector(4) for i in range(3)))
    assert row_space_equal(G, scaled)
    assert row_space_equal(G, generator_matrix(other))
    assert not row_space_equal(G, dual_generator_matrix(ex27))
    with pytest.raises(ValueError):
        row_space_equal(G, CodeMatrix(G.field, ((1, 0),)))


def test_order_is_lexicographic():
    # partial enumeration of the first q messages only touches multiples of the last row
    F = gf(3)
    M = CodeMatrix(F, ((1, 0, 0, 0), (0, 1, 1, 1)))
    rep = exact_min_distance(M, budget=3)
    assert rep.weight_distribution == (1, 0, 0, 2, 0)


@given(matrices())
@settings(max_examples=500)
def test_enumeration_matches_naive_oracle(M):
    N = oracles.naive_field_like(M.field)
    rep = exact_min_distance(M)
    assert rep.exact_distance == oracles.brute_force_distance(N, M.rows)
    assert sum(rep.weight_distribution) == M.field.q**M.nrows
    assert rep.weight_distribution[0] == 1
    assert rep.exact_distance <= M.ncols - M.nrows + 1
    assert exact_min_distance(M, method="columns").exact_distance == rep.exact_distance


@given(matrices(max_n=7), st.data())
@settings(max_examples=500)
def test_adding_a_row_never_increases_distance(M, data):
    extra = data.draw(st.lists(st.integers(0, M.field.q - 1), min_size=M.ncols, max_size=M.ncols))
    rows = list(M.rows) + [tuple(extra)]
    assume(rank(M.field, rows) == len(rows) and M.field.q ** len(rows) <= 20000)
    bigger = CodeMatrix(M.field, tuple(rows))
    assert exact_min_distance(bigger).exact_distance <= exact_min_distance(M).exact_distance


@given(matrices(max_n=7))
@settings(max_examples=500)
def test_dual_distance_two_ways(M):
    """Enumerating the nullspace basis and reading dependent columns of M itself agree."""
    F = M.field
    H = nullspace(F, M.rows, M.ncols)
    assume(H and F.q ** len(H) <= 20000)
    via_null = exact_min_distance(CodeMatrix(F, tuple(map(tuple, H)))).exact_distance
    # M is a parity-check matrix of the dual: d(dual) = least number of dependent columns of M
    cols = list(zip(*M.rows))
    via_cols = next(w for w in range(1, M.ncols + 1)
                    if any(rank(F, [cols[i] for i in S]) < w for S in itertools.combinations(range(M.ncols), w)))
    assert via_null == via_cols
    if F.q ** len(H) <= 729:
        assert via_null == oracles.brute_force_distance(oracles.naive_field_like(F), H)


@pytest.mark.parametrize("pm,d,n,g", [((3, 2), 1, 4, "x - a^2"), ((3, 2), 1, 4, "x^2 - 1"), ((2, 2), 2, 5, "x + 1"),
                                      ((3, 1), 1, 8, "x^2 + 1"), ((5, 2), 1, 4, "x - a^4")])
def test_cyclic_dual_distance_two_ways(pm, d, n, g):
    s = SkewAutomorphism(gf(*pm), d)
    code = cyclic_from_generator(parse_poly(s, g), n)
    F = s.field
    from_dual_matrix = exact_min_distance(dual_generator_matrix(code)).exact_distance
    H = nullspace(F, generator_matrix(code).rows, n)
    from_nullspace = exact_min_distance(CodeMatrix(F, tuple(map(tuple, H)))).exact_distance
    assert from_dual_matrix == from_nullspace
