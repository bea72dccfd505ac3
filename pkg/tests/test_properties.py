""" Property-based tests over random staircases and matrices. """

from hypothesis import given, settings, strategies as st

from knot_upsilon.checks import (
    check_additivity,
    check_negation,
    check_nu_minus_bound,
    check_slopes_realized,
)
from knot_upsilon.complex import staircase
from knot_upsilon.gf2 import GF2Matrix, GF2Span, GF2Vector, kernel_basis, quotient_dim, rank
from knot_upsilon.operators import tensor
from knot_upsilon.tcomplex import transform_check, upsilon_alt
from knot_upsilon.upsilon import tau, tau_from_region, upsilon_at, upsilon_pl


@st.composite
def palindromic_steps(draw, max_width=8):
    """Half a step list, mirrored; the width is the sum of the half."""
    half = []
    budget = max_width
    while budget and (not half or draw(st.booleans())):
        step = draw(st.integers(min_value=1, max_value=min(budget, 3)))
        half.append(step)
        budget -= step
    return half + half[::-1]


parameters = st.fractions(min_value=0, max_value=2, max_denominator=12)
positive_parameters = parameters.filter(lambda t: t > 0)


@st.composite
def matrices(draw, max_size=6):
    rows = draw(st.integers(min_value=0, max_value=max_size))
    cols = draw(st.integers(min_value=0, max_value=max_size))
    cells = [(row, col) for row in range(rows) for col in range(cols)]
    entries = draw(st.sets(st.sampled_from(cells))) if cells else set()
    return GF2Matrix(rows, cols, entries)


def row_reduce_rank(matrix: GF2Matrix) -> int:
    """Rank by Gaussian elimination on rows, as lists of 0/1."""
    rows = [[0] * matrix.cols for _ in range(matrix.rows)]
    for row, col in matrix.entries:
        rows[row][col] = 1
    rank_found = 0
    for col in range(matrix.cols):
        pivot = next(
            (r for r in range(rank_found, len(rows)) if rows[r][col]), None
        )
        if pivot is None:
            continue
        rows[rank_found], rows[pivot] = rows[pivot], rows[rank_found]
        for r in range(len(rows)):
            if r != rank_found and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[rank_found])]
        rank_found += 1
    return rank_found


@settings(max_examples=200, deadline=None)
@given(
    palindromic_steps(),
    st.lists(parameters, min_size=20, max_size=20),
    st.lists(positive_parameters, min_size=3, max_size=3),
)
def test_random_staircases(steps, ts, oracle_ts):
    """Random staircases are admissible and every engine agrees on them."""
    c = staircase(steps)
    assert c.admissible
    assert c.width == sum(steps) // 2

    f = upsilon_pl(c)
    assert f(0) == 0
    for t in ts:
        assert f(t) == upsilon_at(c, t)
        assert f(2 - t) == f(t)
    for t in oracle_ts:
        assert upsilon_alt(c, t) == upsilon_at(c, t)
        assert transform_check(c, t)

    assert all(abs(slope) <= c.width for slope in f.slopes())
    assert check_slopes_realized(c, f)
    assert check_nu_minus_bound(c, f)
    assert tau(c) == tau_from_region(c)


@settings(max_examples=50, deadline=None)
@given(palindromic_steps(), palindromic_steps(), positive_parameters)
def test_random_additivity(a, b, t):
    """Tensor products of random staircases: additivity and engine agreement."""
    left, right = staircase(a), staircase(b)
    p = tensor(left, right)
    assert p.admissible
    assert check_additivity(left, right)
    assert tau(p) == tau_from_region(p) == tau(left) + tau(right)
    assert upsilon_alt(p, t) == upsilon_at(p, t)


@settings(max_examples=50, deadline=None)
@given(palindromic_steps())
def test_random_negation(steps):
    assert check_negation(staircase(steps))


@given(matrices())
def test_rank_properties(matrix):
    assert rank(matrix) == rank(matrix.transpose()) == row_reduce_rank(matrix)
    assert matrix.cols == rank(matrix) + len(kernel_basis(matrix))
    assert rank(matrix) <= min(matrix.rows, matrix.cols)


@given(
    st.lists(st.sets(st.integers(min_value=0, max_value=5)), max_size=5),
    st.lists(st.sets(st.integers(min_value=0, max_value=5)), max_size=5),
)
def test_quotient_dim_property(space, sub):
    space = [GF2Vector(6, support) for support in space]
    sub = [GF2Vector(6, support) for support in sub]
    both = GF2Span(6, space + sub)
    intersection = len(GF2Span(6, space)) + len(GF2Span(6, sub)) - len(both)
    assert quotient_dim(space, sub) + intersection == len(GF2Span(6, space))
