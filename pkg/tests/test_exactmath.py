import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sdisc.exactmath import (
    MultiPoly,
    RationalMatrix,
    as_scalar,
    char_poly,
    coefficient_matrix,
    det,
    det_expand,
    det_leibniz,
    format_scalar,
    inverse,
    nullspace,
    poly_arith,
    rank,
    rref,
)

X = ("x",)
XY = ("x1", "x2")


def rationals(bound=20, den=6):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, den))


def polys(variables=XY, max_terms=5, max_exp=3):
    monos = st.tuples(*[st.integers(0, max_exp) for _ in variables])
    return st.dictionaries(monos, rationals(), max_size=max_terms).map(lambda t: MultiPoly(variables, t))


def matrices(n):
    return st.lists(st.lists(rationals(), min_size=n, max_size=n), min_size=n, max_size=n)


# -- scalars -----------------------------------------------------------------


def test_scalar_parsing_and_printing_round_trip():
    for text in ["0", "-3", "7/2", "-11/4"]:
        assert format_scalar(as_scalar(text)) == text
    assert format_scalar(Fraction(4, 2)) == "2"
    assert as_scalar("6/4") == Fraction(3, 2)
    with pytest.raises(TypeError):
        as_scalar(0.5)


@given(rationals(10**6, 10**6))
def test_scalar_round_trip_property(q):
    assert as_scalar(format_scalar(q)) == q


# -- polynomials -------------------------------------------------------------


def test_difference_of_squares():
    x = MultiPoly.var("x", X)
    assert poly_arith(x + 1, x - 1, "mul") == x * x - 1


def test_annihilator():
    f = MultiPoly(XY, {(2, 1): 3, (0, 0): -1})
    assert (f * MultiPoly.zero(XY)).is_zero()
    assert (f * 0).is_zero()


def test_square_of_difference():
    x1, x2 = MultiPoly.var("x1", XY), MultiPoly.var("x2", XY)
    d = poly_arith(x1, x2, "sub")
    assert poly_arith(d, d, "mul") == MultiPoly(XY, {(2, 0): 1, (1, 1): -2, (0, 2): 1})
    assert str(d * d) == "x1^2 - 2*x1*x2 + x2^2"


def test_zero_coefficients_are_never_stored():
    f = MultiPoly(XY, {(1, 0): 1, (0, 1): 0})
    assert list(f.terms) == [(1, 0)]
    assert (f - f).terms == {}


def test_alignment_by_union_of_variables():
    a = MultiPoly.var("x", ("x",))
    b = MultiPoly.var("y", ("y",))
    s = a + b
    assert set(s.variables) == {"x", "y"}
    assert s.evaluate({"x": 2, "y": 5}) == 7


def test_homogeneity_and_degree():
    f = MultiPoly(XY, {(2, 1): 1, (0, 3): -4})
    assert f.degree() == 3
    assert f.is_homogeneous(3)
    assert not (f + 1).is_homogeneous()


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_distributivity(f, g, h):
    assert (f + g) * h == f * h + g * h


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), rationals(), rationals())
def test_evaluation_is_a_ring_map(f, g, a, b):
    point = [a, b]
    assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
    assert (f - g).evaluate(point) == f.evaluate(point) - g.evaluate(point)


def test_integer_and_rational_evaluation_agree():
    f = MultiPoly(XY, {(3, 1): Fraction(1, 3), (0, 2): -2, (0, 0): Fraction(5, 7)})
    for p in [(2, 3), (-4, 1), (0, 0)]:
        assert f.evaluate(p) == f.evaluate([Fraction(v) for v in p])


def test_substitute():
    f = MultiPoly(("u", "v"), {(2, 0): 1, (0, 1): -1})
    x1, x2 = MultiPoly.var("x1", XY), MultiPoly.var("x2", XY)
    g = f.substitute({"u": x1 + x2, "v": x1 * x2}, XY)
    assert g == x1 * x1 + x1 * x2 + x2 * x2


def test_coefficient_matrix_rank():
    x1, x2 = MultiPoly.var("x1", XY), MultiPoly.var("x2", XY)
    rows, monos = coefficient_matrix([x1 * x1, x1 * x2, (x1 + x2) * x1])
    assert len(monos) == 2
    assert rank(rows) == 2


# -- matrices ----------------------------------------------------------------


def test_char_poly_examples():
    one = Fraction(1)
    assert char_poly(RationalMatrix.identity(2)) == [one, -2, one]
    assert char_poly(RationalMatrix.diag([1, 2, 3])) == [-6, 11, -6, 1]
    assert char_poly(RationalMatrix.zero(3)) == [0, 0, 0, 1]


def _char_poly_oracle(grid):
    # det(xI - A) expanded by Laplace over polynomial entries
    n = len(grid)
    x = MultiPoly.var("x", X)
    m = [[(x if i == j else MultiPoly.zero(X)) - grid[i][j] for j in range(n)] for i in range(n)]
    p = det_expand(m)
    return [p.terms.get((d,), Fraction(0)) for d in range(n + 1)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(matrices))
def test_char_poly_matches_determinant_oracle(grid):
    assert char_poly(RationalMatrix(grid)) == _char_poly_oracle(grid)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(matrices), st.integers(0, 10**6))
def test_char_poly_similarity_invariance(grid, seed):
    rng = random.Random(seed)
    n = len(grid)
    while True:
        q = RationalMatrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        if det(q.entries):
            break
    a = RationalMatrix(grid)
    assert char_poly(q @ a @ q.inverse()) == char_poly(a)


def test_rank_examples():
    assert rank(RationalMatrix.identity(3).entries) == 3
    assert rank([[1, 1, 1]] * 3) == 1
    assert rank([[1, 2], [2, 4], [3, 6]]) == 1
    assert rank([]) == 0


def test_det_examples():
    for n in range(1, 5):
        assert det(RationalMatrix.identity(n).entries) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[2, 1], [1, 2]]) == 3


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(matrices))
def test_det_matches_leibniz(grid):
    assert det(grid) == det_leibniz(grid)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4).flatmap(matrices), st.data())
def test_det_with_equal_rows_is_zero(grid, data):
    i = data.draw(st.integers(0, len(grid) - 1))
    j = data.draw(st.integers(0, len(grid) - 1).filter(lambda j: j != i))
    grid = [list(r) for r in grid]
    grid[j] = list(grid[i])
    assert det(grid) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.lists(st.lists(rationals(3, 2), min_size=4, max_size=4), min_size=r, max_size=r)))
def test_rank_agrees_with_rref_and_nullspace(grid):
    reduced, pivots = rref(grid)
    r = rank(grid)
    assert r == len(pivots)
    kernel = nullspace(grid)
    assert r + len(kernel) == 4
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in grid)


def test_inverse():
    a = [[2, 1], [1, 1]]
    assert inverse(a) == [[1, -1], [-1, 2]]
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])


def test_symmetric_flag_is_validated():
    RationalMatrix([[1, 2], [2, 3]], symmetric=True)
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3, 4]], symmetric=True)


def test_matrix_arithmetic():
    rng = random.Random(3)
    a = RationalMatrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)])
    assert a @ RationalMatrix.identity(3) == a
    assert (a + a) == a.scale(2)
    assert a.power(3) == a @ a @ a
    assert (a @ a.transpose()).is_symmetric()
