"""Structural properties of Upsilon checked on concrete complexes.

Each check returns a bool; :func:`verify_complex` runs every single-complex
check and reports them by name.
"""

from collections import OrderedDict
from fractions import Fraction
import logging
from typing import Callable, Iterable, List, Optional, Sequence

from .complex import Complex
from .operators import dual, tensor
from .pl import PLFunction, RationalLike, as_rational
from .tcomplex import build_tcomplex, check_square_zero, transform_check, upsilon_alt
from .upsilon import (
    InconsistentInvariant,
    check_four_genus_bound,
    check_singularity_denominators,
    genus_bounds,
    jump_spectrum,
    nu_minus,
    tau,
    upsilon_at,
    upsilon_pl,
)

LOGGER = logging.getLogger(__name__)

DEFAULT_ORACLE_TS = ("2/3", "1")


def sample_points(samples: int) -> List[Fraction]:
    """The parameters 2k/samples for k = 0 .. samples.

    >>> [str(t) for t in sample_points(4)]
    ['0', '1/2', '1', '3/2', '2']
    """
    if samples < 1:
        raise ValueError("Need at least one sample interval")
    return [Fraction(2 * k, samples) for k in range(samples + 1)]


def check_additivity(a: Complex, b: Complex) -> bool:
    """Upsilon of a tensor product is the sum."""
    return upsilon_pl(tensor(a, b)) == upsilon_pl(a) + upsilon_pl(b)


def check_tau_additivity(a: Complex, b: Complex) -> bool:
    return tau(tensor(a, b)) == tau(a) + tau(b)


def check_negation(c: Complex) -> bool:
    """Upsilon of the dual is the negative, and so is tau."""
    mirrored = dual(c)
    return upsilon_pl(mirrored) == -upsilon_pl(c) and tau(mirrored) == -tau(c)


def check_slice_vanishing(c: Complex) -> bool:
    """c (x) dual(c) is slice, so its Upsilon vanishes identically."""
    return upsilon_pl(tensor(c, dual(c))) == PLFunction.constant(0)


def check_pl_agreement(
    c: Complex, ts: Iterable[RationalLike], f: Optional[PLFunction] = None
) -> bool:
    """The PL function matches direct evaluation at each t."""
    if f is None:
        f = upsilon_pl(c)
    for t in ts:
        t = as_rational(t)
        if f(t) != upsilon_at(c, t):
            LOGGER.debug("Upsilon of %r disagrees with its PL form at %s", c.name, t)
            return False
    return True


def check_slopes_realized(c: Complex, f: Optional[PLFunction] = None) -> bool:
    """Each slope of Upsilon is alg - alex of some grading 0 lattice point."""
    if f is None:
        f = upsilon_pl(c)
    realized = {i - j for i, j in c.grading_zero.lattice_points}
    return all(slope in realized for slope in f.slopes())


def check_nu_minus_bound(c: Complex, f: Optional[PLFunction] = None) -> bool:
    """-Upsilon(t) <= t nu^-(c)."""
    if f is None:
        f = upsilon_pl(c)
    bound = nu_minus(c)
    return all(-value <= t * bound for t, value in f)


def check_oracle(c: Complex, ts: Sequence[RationalLike] = DEFAULT_ORACLE_TS) -> bool:
    """The t-modified complex agrees with the F_t search at each t."""
    for t in ts:
        t = as_rational(t)
        if not transform_check(c, t):
            return False
        if upsilon_alt(c, t) != upsilon_at(c, t):
            LOGGER.debug("Definitions of Upsilon disagree for %r at %s", c.name, t)
            return False
    return True


def _tau_methods_agree(c: Complex) -> bool:
    try:
        tau(c)
    except InconsistentInvariant:
        return False
    return True


def verify_complex(c: Complex, samples: int = 8) -> "OrderedDict[str, bool]":
    """Run every single-complex property check; admissibility is checked first."""
    results: "OrderedDict[str, bool]" = OrderedDict(admissible=c.admissible)
    if not c.admissible:
        return results

    f = upsilon_pl(c)
    jumps = jump_spectrum(f)
    bounds = genus_bounds(f, jumps)
    checks: "OrderedDict[str, Callable[[], bool]]" = OrderedDict(
        [
            ("upsilon_zero", lambda: f(0) == 0),
            ("pl_agreement", lambda: check_pl_agreement(c, sample_points(samples), f)),
            ("slopes_realized", lambda: check_slopes_realized(c, f)),
            ("slopes_within_width", lambda: all(abs(s) <= c.width for s in f.slopes())),
            (
                "jump_denominators",
                lambda: all(jump.satisfies_denominator_constraint() for jump in jumps),
            ),
            (
                "singularity_denominators",
                lambda: check_singularity_denominators(jumps, bounds.g3),
            ),
            ("four_genus_bound", lambda: check_four_genus_bound(f, bounds.g4)),
            ("tau_methods", lambda: _tau_methods_agree(c)),
            ("nu_minus_bound", lambda: check_nu_minus_bound(c, f)),
            ("negation", lambda: check_negation(c)),
            ("slice_vanishing", lambda: check_slice_vanishing(c)),
            (
                "square_zero",
                lambda: all(
                    check_square_zero(build_tcomplex(c, t)) for t in DEFAULT_ORACLE_TS
                ),
            ),
            ("oracle", lambda: check_oracle(c)),
        ]
    )
    for name, check in checks.items():
        results[name] = check()
        LOGGER.debug("%s on %r: %s", name, c.name, results[name])
    return results
