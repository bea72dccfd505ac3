"""Upsilon, tau, nu-minus and genus bounds of a knot complex.

The filtration F_t = (t/2) Alex + (1 - t/2) Alg sweeps from the algebraic
filtration (t = 0) to the Alexander filtration (t = 2). nu(C, F_t) is the least
F_t level whose sublevel complex carries a grading 0 cycle that is nontrivial
in homology, and Upsilon(t) = -2 nu(C, F_t).

>>> from knot_upsilon.complex import staircase
>>> upsilon_at(staircase([1, 2, 1, 2, 2, 1, 2, 1]), "4/5")
Fraction(-4, 1)
"""

from fractions import Fraction
from itertools import combinations
import logging
import math
from typing import List, NamedTuple, Optional, Sequence

from sortedcontainers import SortedDict, SortedSet

from .complex import Complex, SliceElement
from .pl import (
    DOMAIN_END,
    DOMAIN_START,
    PLFunction,
    RationalLike,
    check_parameter,
    format_rational,
)
from .utils import requires_admissible


LOGGER = logging.getLogger(__name__)


class InconsistentInvariant(Exception):
    """Raised when independent computations of one quantity disagree."""


class JumpRecord(NamedTuple):
    """Jump of the derivative: right slope minus left slope at t."""

    t: Fraction
    delta: Fraction

    def satisfies_denominator_constraint(self) -> bool:
        """(t/2) * delta is k * p for t = p/q, k integral (p odd) or half-integral.

        >>> JumpRecord(Fraction(2, 3), Fraction(6)).satisfies_denominator_constraint()
        True
        """
        p = self.t.numerator
        k = self.t / 2 * self.delta / p
        if p % 2:
            return k.denominator == 1
        return k.denominator in (1, 2)


class BoundsReport(NamedTuple):
    """Lower bounds on three-genus, four-genus and concordance genus."""

    g3: int
    g4: int
    gc: int
    small_t_threshold: Fraction


def ft_level(alg: int, alex: int, t: RationalLike) -> Fraction:
    """F_t level of the bifiltration (alg, alex).

    >>> ft_level(0, 6, Fraction(4, 5))
    Fraction(12, 5)
    >>> ft_level(2, 2, Fraction(4, 5))
    Fraction(2, 1)
    """
    t = check_parameter(t)
    half = t / 2
    return half * alex + (1 - half) * alg


def _nu(c: Complex, t: Fraction) -> Fraction:
    half = t / 2

    def level(element: SliceElement) -> Fraction:
        return half * element.alex + (1 - half) * element.alg

    nu = c.grading_zero.least_level(level)
    if nu is None:
        raise InconsistentInvariant(f"No grading 0 class found at t = {t}")
    return Fraction(nu)


@requires_admissible
def nu_at(c: Complex, t: RationalLike) -> Fraction:
    """nu(C, F_t) over the finite set of grading 0 element levels."""
    return _nu(c, check_parameter(t))


@requires_admissible
def upsilon_at(c: Complex, t: RationalLike) -> Fraction:
    """Upsilon(t) = -2 nu(C, F_t)."""
    return -2 * _nu(c, check_parameter(t))


def breakpoint_candidates(c: Complex) -> SortedSet:
    """Every t in [0, 2] at which two grading 0 lattice points share an F_t level.

    The endpoints 0 and 2 are always included.
    """
    candidates = SortedSet([DOMAIN_START, DOMAIN_END])
    points = sorted(set(c.grading_zero.lattice_points))
    for (i, j), (i2, j2) in combinations(points, 2):
        di, dj = i - i2, j - j2
        if di == dj:
            continue
        t = Fraction(2 * di, di - dj)
        if DOMAIN_START < t < DOMAIN_END:
            candidates.add(t)
    return candidates


@requires_admissible
def upsilon_pl(c: Complex) -> PLFunction:
    """Upsilon as an exact piecewise-linear function on [0, 2].

    Upsilon is affine between consecutive candidate breakpoints, so it is
    evaluated at each candidate and the midpoint of each gap is checked
    against linear interpolation.
    """
    candidates = breakpoint_candidates(c)
    LOGGER.debug(
        "Evaluating %r at %d candidate breakpoints", c.name, len(candidates)
    )

    samples = SortedDict((t, -2 * _nu(c, t)) for t in candidates)
    for left, right in zip(candidates, candidates[1:]):
        middle = (left + right) / 2
        value = -2 * _nu(c, middle)
        if 2 * value != samples[left] + samples[right]:
            raise InconsistentInvariant(
                "Upsilon of {!r} not affine on [{}, {}]".format(
                    c.name, format_rational(left), format_rational(right)
                )
            )
        samples[middle] = value

    return PLFunction(samples.items())


def jump_spectrum(f: PLFunction) -> List[JumpRecord]:
    """Jumps of the derivative at interior vertices."""
    jumps = []
    segments = f.segments()
    for left, right in zip(segments, segments[1:]):
        record = JumpRecord(left.end, right.slope - left.slope)
        if not record.satisfies_denominator_constraint():
            LOGGER.warning(
                "Jump %s at t = %s violates the denominator constraint",
                format_rational(record.delta),
                format_rational(record.t),
            )
        jumps.append(record)
    return jumps


def small_t_threshold(f: PLFunction) -> Fraction:
    """End of the initial affine piece, where Upsilon stops being -tau * t."""
    return f.breakpoints[1]


def tau_from_slope(f: PLFunction) -> int:
    """Negated initial slope."""
    slope = f.segments()[0].slope
    if slope.denominator != 1:
        raise InconsistentInvariant(f"Initial slope {slope} is not an integer")
    return -int(slope)


@requires_admissible
def tau_from_region(c: Complex) -> int:
    """Least m whose region {alg <= 0, alex <= m} | {alg < 0} carries a class."""

    def level(element: SliceElement) -> Optional[float]:
        if element.alg < 0:
            return -math.inf
        if element.alg == 0:
            return element.alex
        return None

    m = c.grading_zero.least_level(level)
    if m is None or m == -math.inf:
        raise InconsistentInvariant(
            f"Region search for tau on {c.name!r} ended at {m}"
        )
    return int(m)


@requires_admissible
def tau(c: Complex) -> int:
    """tau by the initial slope of Upsilon, cross-checked by region search."""
    f = upsilon_pl(c)
    by_slope = tau_from_slope(f)
    by_region = tau_from_region(c)
    if by_slope != by_region:
        raise InconsistentInvariant(
            f"tau of {c.name!r}: slope gives {by_slope}, region gives {by_region}"
        )

    if c.width:
        LOGGER.debug(
            "Upsilon of %r equals -%d t up to t = %s (width %d predicts 1/%d)",
            c.name,
            by_slope,
            format_rational(small_t_threshold(f)),
            c.width,
            c.width,
        )
    else:
        LOGGER.debug("Upsilon of %r vanishes on [0, 2]", c.name)
    return by_slope


@requires_admissible
def nu_minus(c: Complex) -> int:
    """Least m whose region {alg <= 0, alex <= m} carries a class."""
    m = c.grading_zero.least_level(
        lambda element: element.alex if element.alg <= 0 else None
    )
    if m is None:
        raise InconsistentInvariant(f"Region {{alg <= 0}} of {c.name!r} is empty")
    return m


def _jump_genus(t: Fraction) -> int:
    if t.numerator % 2:
        return t.denominator
    return -(-t.denominator // 2)


def genus_bounds(
    f: PLFunction, jumps: Optional[Sequence[JumpRecord]] = None
) -> BoundsReport:
    """Genus lower bounds read off Upsilon and its jumps."""
    if jumps is None:
        jumps = jump_spectrum(f)

    slope_bound = max((math.ceil(abs(slope)) for slope in f.slopes()), default=0)
    jump_bound = max((_jump_genus(jump.t) for jump in jumps), default=0)
    g3 = max(slope_bound, jump_bound)
    g4 = max(
        (math.ceil(abs(value) / t) for t, value in f if t > 0),
        default=0,
    )
    return BoundsReport(g3=g3, g4=g4, gc=g3, small_t_threshold=small_t_threshold(f))


def check_crossing_change(f_minus: PLFunction, f_plus: PLFunction) -> bool:
    """f_plus <= f_minus <= f_plus + t on [0, 1]."""
    one = Fraction(1)
    ts = {t for t in f_minus.breakpoints + f_plus.breakpoints if t <= one}
    ts.update((DOMAIN_START, one))
    return all(f_plus(t) <= f_minus(t) <= f_plus(t) + t for t in ts)


def check_four_genus_bound(f: PLFunction, g4: int) -> bool:
    """|Upsilon(t)| <= t * g4 on [0, 2]."""
    return all(abs(value) <= t * g4 for t, value in f)


def check_singularity_denominators(jumps: Sequence[JumpRecord], g3: int) -> bool:
    """Jumps at t = p/q have q <= g3 for odd p and q <= 2 g3 for even p."""
    for jump in jumps:
        limit = g3 if jump.t.numerator % 2 else 2 * g3
        if jump.t.denominator > limit:
            return False
    return True
