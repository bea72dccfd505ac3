""" Test property checks on the bundled examples. """

from itertools import combinations, combinations_with_replacement

import pytest

from knot_upsilon.checks import (
    check_additivity,
    check_negation,
    check_nu_minus_bound,
    check_oracle,
    check_pl_agreement,
    check_slice_vanishing,
    check_slopes_realized,
    check_tau_additivity,
    sample_points,
    verify_complex,
)
from knot_upsilon.complex import Complex, Generator, boundary_matrix, staircase
from knot_upsilon.gf2 import GF2Span, GF2Vector
from knot_upsilon.library import list_examples, load_example
from knot_upsilon.operators import dual, tensor
from knot_upsilon.upsilon import (
    check_singularity_denominators,
    genus_bounds,
    jump_spectrum,
    nu_minus,
    tau,
    tau_from_region,
    upsilon_pl,
)

TORUS = {"t23": [1, 1], "t25": [1, 1, 1, 1], "t37": [1, 2, 1, 2, 2, 1, 2, 1]}


@pytest.fixture(params=list_examples())
def example(request):
    yield load_example(request.param)


@pytest.mark.parametrize("a, b", list(combinations_with_replacement(TORUS, 2)))
def test_additivity(a, b):
    left, right = staircase(TORUS[a]), staircase(TORUS[b])
    assert check_additivity(left, right)
    assert check_tau_additivity(left, right)


def test_negation_and_vanishing(example):
    assert check_negation(example)
    assert check_slice_vanishing(example)


def test_tau_methods_on_tensors():
    c = tensor(staircase(TORUS["t25"]), staircase(TORUS["t37"]))
    assert tau(c) == tau_from_region(c) == 8


def test_pl_structure(example):
    f = upsilon_pl(example)
    assert check_pl_agreement(example, sample_points(12), f)
    assert check_slopes_realized(example, f)
    assert all(jump.satisfies_denominator_constraint() for jump in jump_spectrum(f))


def test_t37_denominators_against_genus():
    jumps = jump_spectrum(upsilon_pl(load_example("t37")))
    assert check_singularity_denominators(jumps, 6)


def test_t37_bounds_tight():
    bounds = genus_bounds(upsilon_pl(load_example("t37")))
    assert min(bounds.g3, bounds.g4, bounds.gc) >= 6


def test_nu_minus_bound(example):
    assert check_nu_minus_bound(example)


def region_search_nu_minus(c: Complex):
    """Least m whose region {alg <= 0, alex <= m} holds a non-boundary cycle.

    Every subset of grading 0 elements in the region is tried as a chain.
    """
    elements = c.grading_zero.elements
    differential = boundary_matrix(c, 0)
    boundaries = GF2Span.of_columns(boundary_matrix(c, 1))
    region = [index for index, element in enumerate(elements) if element.alg <= 0]
    for m in sorted({elements[index].alex for index in region}):
        inside = [index for index in region if elements[index].alex <= m]
        for size in range(1, len(inside) + 1):
            for subset in combinations(inside, size):
                chain = GF2Vector(len(elements), subset)
                if differential.apply(chain).is_zero() and chain not in boundaries:
                    return m
    return None


@pytest.mark.parametrize("name, expected", [("t23", 1), ("t37", 6)])
def test_nu_minus_region_search(name, expected):
    c = load_example(name)
    assert region_search_nu_minus(c) == nu_minus(c) == expected


@pytest.mark.parametrize(
    "c",
    [
        load_example("t23_t23"),
        tensor(staircase(TORUS["t23"]), dual(staircase(TORUS["t25"]))),
    ],
)
def test_nu_minus_region_search_on_tensors(c):
    found = region_search_nu_minus(c)
    assert nu_minus(c) == found
    assert found >= tau(c)


def test_oracle(example):
    assert check_oracle(example, ["1/3", "1/2", "2/3", "4/5", "1", "3/2", "2"])


def test_verify_complex(example):
    results = verify_complex(example, samples=4)
    assert list(results)[0] == "admissible"
    assert all(results.values()), results


def test_verify_inadmissible():
    bad = Complex([Generator(id="a", maslov=0, alg=0, alex=1)])
    assert verify_complex(bad) == {"admissible": False}
