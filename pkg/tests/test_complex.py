""" Test complexes, validation and staircases. """

import pytest

from knot_upsilon.complex import (
    Axiom,
    Complex,
    Generator,
    InadmissibleComplex,
    InvalidStaircase,
    boundary_matrix,
    grading_slice,
    staircase,
    torus_knot_steps,
    unknot,
    validate,
    width,
)


def gen(gen_id, maslov, alg, alex):
    return Generator(id=gen_id, maslov=maslov, alg=alg, alex=alex)


@pytest.fixture
def t23():
    yield staircase([1, 1], name="T(2,3)")


@pytest.fixture
def t37():
    yield staircase([1, 2, 1, 2, 2, 1, 2, 1], name="T(3,7)")


def test_unknot_admissible():
    report = validate(unknot())
    assert report.admissible
    assert not report
    assert str(report) == "admissible"


def test_t37_admissible(t37):
    assert t37.admissible
    assert len(t37) == 9
    assert width(t37) == 6


def test_staircase_shapes(t23):
    assert [g.lattice_point for g in t23] == [(0, 1), (1, 1), (1, 0)]
    assert [g.maslov for g in t23] == [0, 1, 0]
    assert t23.boundary("x1") == {"x0", "x2"}
    assert [g.lattice_point for g in staircase([1, 1, 1, 1])] == [
        (0, 2),
        (1, 2),
        (1, 1),
        (2, 1),
        (2, 0),
    ]


def test_staircase_default_name():
    assert staircase([2, 1, 1, 2]).name == "staircase(2,1,1,2)"


@pytest.mark.parametrize("steps", [[], [1], [1, 0], [1, -1], [1, 2, 3]])
def test_invalid_staircase(steps):
    with pytest.raises(InvalidStaircase):
        staircase(steps)


@pytest.mark.parametrize(
    "p, q, steps",
    [
        (2, 3, [1, 1]),
        (2, 5, [1, 1, 1, 1]),
        (3, 7, [1, 2, 1, 2, 2, 1, 2, 1]),
        (3, 4, [1, 2, 2, 1]),
    ],
)
def test_torus_knot_steps(p, q, steps):
    assert torus_knot_steps(p, q) == steps


def test_torus_knot_steps_rejects_links():
    with pytest.raises(InvalidStaircase):
        torus_knot_steps(2, 4)


def test_grading_slices(t37):
    zero = grading_slice(t37, 0)
    assert [element.gen.id for element in zero] == ["x0", "x2", "x4", "x6", "x8"]
    assert {element.upower for element in zero} == {0}
    shifted = grading_slice(t37, -2)
    assert {element.upower for element in shifted} == {1}
    assert [element.lattice_point for element in shifted] == [
        (-1, 5),
        (0, 3),
        (1, 1),
        (3, 0),
        (5, -1),
    ]
    assert grading_slice(unknot(), 1) == []


def test_boundary_matrices(t23, t37):
    assert boundary_matrix(unknot(), 0).is_zero()
    assert boundary_matrix(t23, 1).entries == {(0, 0), (1, 0)}
    assert boundary_matrix(t37, 1) == boundary_matrix(t37, 3)
    assert boundary_matrix(t37, 0) == boundary_matrix(t37, -2)


def test_unfiltered_arrow():
    """An arrow raising the Alexander filtration is reported."""
    c = Complex(
        [gen("a", 0, 0, 0), gen("b", 1, 0, -1)],
        {"b": ["a"]},
        name="bad",
    )
    assert Axiom.FILTERED in c.report.axioms
    assert "differential not filtered" in str(c.report)
    with pytest.raises(InadmissibleComplex):
        c.report.raise_for_violations(c.name)


def test_structural_violations():
    c = Complex(
        [gen("a", 0, 0, 0), gen("a", 0, 0, 0), gen("b", 0, 1, 1)],
        {"b": ["a", "z"]},
    )
    assert c.report.axioms == {Axiom.UNIQUE_IDS, Axiom.KNOWN_IDS, Axiom.GRADING}


def test_homology_violation():
    c = Complex([gen("a", 0, 0, 0), gen("b", 0, 0, 0)])
    assert c.report.axioms == {Axiom.HOMOLOGY}


def test_square_zero_violation():
    c = Complex(
        [gen("a", 2, 0, 0), gen("b", 1, 0, 0), gen("c", 0, 0, 0)],
        {"a": ["b"], "b": ["c"]},
    )
    assert Axiom.SQUARE_ZERO in c.report.axioms


def test_normalization_violation():
    c = Complex([gen("a", 0, 1, 0)])
    assert c.report.axioms == {Axiom.NORMALIZATION}
    assert "least algebraic level is 1" in str(c.report)


def test_generator_strict_integers():
    with pytest.raises(ValueError):
        Generator(id="a", maslov="0", alg=0, alex=0)


def test_complex_equality(t23):
    assert t23 == staircase([1, 1])
    assert t23 != unknot()
    assert "x1" in t23
    assert t23["x2"].lattice_point == (1, 0)


def test_palindromic_symmetry(t37):
    """Palindromic steps give a staircase symmetric under (i, j) -> (j, i)."""
    points = {g.lattice_point for g in t37}
    assert points == {(j, i) for i, j in points}
