""" Test the t-modified complex. """

from fractions import Fraction

import pytest

from knot_upsilon.complex import staircase, unknot
from knot_upsilon.library import load_example
from knot_upsilon.pl import FiltrationParameterError
from knot_upsilon.tcomplex import (
    TArrow,
    build_tcomplex,
    check_square_zero,
    forward,
    inverse,
    transform_check,
    upsilon_alt,
)
from knot_upsilon.upsilon import upsilon_at

ORACLE_TS = ["1/3", "1/2", "2/3", "4/5", "1", "3/2", "2"]
EXAMPLES = ["unknot", "t23", "t25", "t37", "t23_t23"]


@pytest.fixture
def t23():
    yield staircase([1, 1], name="T(2,3)")


def test_build_gradings(t23):
    tc = build_tcomplex(t23, "1/2")
    assert [tgen.grt for tgen in tc.tgenerators] == [
        Fraction(-1, 2),
        Fraction(1),
        Fraction(1, 2),
    ]
    assert tc.tdifferential["x1"] == (
        TArrow("x0", Fraction(-1, 2), Fraction(3, 2)),
        TArrow("x2", Fraction(1, 2), Fraction(1, 2)),
    )
    assert tc.violations() == []
    assert check_square_zero(tc)


@pytest.mark.parametrize("t", [0, "-1/2", "5/2"])
def test_build_rejects_parameter(t23, t):
    with pytest.raises(FiltrationParameterError):
        build_tcomplex(t23, t)


def test_levels_match_ft_levels(t23):
    tc = build_tcomplex(t23, 1)
    assert tc.levels == [Fraction(1, 2)] * 3


@pytest.mark.parametrize("name", EXAMPLES)
@pytest.mark.parametrize("t", ORACLE_TS)
def test_oracle_agreement(name, t):
    """Both definitions of Upsilon agree on every bundled complex."""
    c = load_example(name)
    assert upsilon_alt(c, t) == upsilon_at(c, t)
    assert transform_check(c, t)


def test_upsilon_alt_values(t23):
    assert upsilon_alt(t23, 1) == -1
    assert upsilon_alt(unknot(), "2/3") == 0
    assert upsilon_alt(load_example("t37"), "4/5") == -4


def test_transform_inverse():
    t = Fraction(2, 3)
    point = (3, -2)
    assert inverse(forward(point, t), t) == point
    assert forward(point, t)[0] == Fraction(4, 3)


def test_transform_rejects_zero(t23):
    with pytest.raises(FiltrationParameterError):
        transform_check(t23, 0)
