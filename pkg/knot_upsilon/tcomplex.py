"""Upsilon through the t-modified complex over F[v^(1/n)].

For t = m/n each generator x gets the grading gr_t(x) = M(x) - t (A(x) - Alg(x))
and each arrow x -> y the v-power alpha = t((j - j') - (i - i')), where (i, j)
and (i', j') are the bifiltrations of x and y. Upsilon(t) is then read off the
grading 0 slice of the resulting complex, independently of the F_t sublevel
search in :mod:`knot_upsilon.upsilon`.
"""

from fractions import Fraction
import logging
from typing import Dict, Iterable, List, NamedTuple, Tuple

from sortedcontainers import SortedSet

from .complex import Complex, Generator
from .gf2 import GF2Matrix, GF2Vector, compose, kernel_basis, quotient_dim
from .pl import FiltrationParameterError, RationalLike, as_rational
from .upsilon import InconsistentInvariant, ft_level
from .utils import requires_admissible

LOGGER = logging.getLogger(__name__)


def t_grading(maslov: int, alg: int, alex: int, t: Fraction) -> Fraction:
    """gr_t = M - t (A - Alg)."""
    return maslov - t * (alex - alg)


def prime_level(maslov: int, alg: int, alex: int, t: Fraction) -> Fraction:
    """Algebraic level of the grading 0 element v^gr_t x.

    Each power of v lowers both filtrations by one half.

    >>> prime_level(0, 0, 6, Fraction(4, 5))
    Fraction(12, 5)
    """
    return alg - t_grading(maslov, alg, alex, t) / 2


class TGenerator(NamedTuple):
    base: Generator
    grt: Fraction

    @property
    def alg_prime(self) -> int:
        return self.base.alg

    @property
    def level(self) -> Fraction:
        return self.alg_prime - self.grt / 2


class TArrow(NamedTuple):
    """Arrow to ``target`` weighted by v^alpha.

    ``exponent`` is the v-power of the target relative to the source's F_t
    level, twice the F_t drop along the arrow; it is never negative.
    """

    target: str
    alpha: Fraction
    exponent: Fraction


class TComplex:
    """The t-modified complex of a knot complex at t = m/n."""

    def __init__(
        self,
        t: Fraction,
        tgenerators: Iterable[TGenerator],
        tdifferential: Dict[str, Tuple[TArrow, ...]],
        *,
        name: str = "",
    ):
        self.t = t
        self.name = name
        self.tgenerators: Tuple[TGenerator, ...] = tuple(tgenerators)
        self.tdifferential = tdifferential
        self._index = {
            tgen.base.id: index for index, tgen in enumerate(self.tgenerators)
        }

    def __len__(self) -> int:
        return len(self.tgenerators)

    def __getitem__(self, gen_id: str) -> TGenerator:
        return self.tgenerators[self._index[gen_id]]

    @property
    def levels(self) -> List[Fraction]:
        """Level of each grading 0 basis element, in generator order."""
        return [tgen.level for tgen in self.tgenerators]

    def violations(self) -> List[str]:
        """Broken invariants of the t-modified complex; empty when consistent."""
        problems = []
        n = self.t.denominator
        for tgen in self.tgenerators:
            if (tgen.grt * n).denominator != 1:
                problems.append(f"gr_t({tgen.base.id}) = {tgen.grt} not in (1/{n})Z")

        for source, arrows in self.tdifferential.items():
            x = self[source]
            for arrow in arrows:
                y = self[arrow.target]
                expected = self.t * (
                    (x.base.alex - y.base.alex) - (x.base.alg - y.base.alg)
                )
                if arrow.alpha != expected:
                    problems.append(
                        f"alpha({source} -> {arrow.target}) = {arrow.alpha}, "
                        f"expected {expected}"
                    )
                if y.grt - arrow.alpha != x.grt - 1:
                    problems.append(
                        f"{source} -> {arrow.target} does not lower gr_t by one"
                    )
                if arrow.exponent < 0:
                    problems.append(
                        f"{source} -> {arrow.target} has v-power {arrow.exponent}"
                    )
        return problems

    def boundary_matrix(self) -> GF2Matrix:
        """Differential between consecutive grading slices.

        Every slice has one basis element v^(gr_t(x) - g) x per generator, so
        the matrix is the same for all g.
        """
        return GF2Matrix(
            len(self),
            len(self),
            (
                (self._index[arrow.target], self._index[source])
                for source, arrows in self.tdifferential.items()
                for arrow in arrows
            ),
        )


@requires_admissible
def build_tcomplex(c: Complex, t: RationalLike) -> TComplex:
    """Build the t-modified complex; t must lie in (0, 2]."""
    t = as_rational(t)
    if not 0 < t <= 2:
        raise FiltrationParameterError(
            f"t-modified complex needs 0 < t <= 2; got t = {t}"
        )

    tgenerators = [
        TGenerator(gen, t_grading(gen.maslov, gen.alg, gen.alex, t)) for gen in c
    ]
    tdifferential = {}
    for gen in c:
        arrows = []
        for target_id in sorted(c.boundary(gen.id)):
            target = c[target_id]
            di, dj = gen.alg - target.alg, gen.alex - target.alex
            alpha = t * (dj - di)
            arrows.append(TArrow(target_id, alpha, alpha + 2 * di))
        if arrows:
            tdifferential[gen.id] = tuple(arrows)

    tc = TComplex(t, tgenerators, tdifferential, name=c.name)
    problems = tc.violations()
    if problems:
        raise InconsistentInvariant(
            "t-modified complex of {!r} at t = {}: {}".format(
                c.name, t, "; ".join(problems)
            )
        )
    return tc


def check_square_zero(tc: TComplex) -> bool:
    """The t-modified differential squares to zero."""
    matrix = tc.boundary_matrix()
    return compose(matrix, matrix).is_zero()


def upsilon_alt(c: Complex, t: RationalLike) -> Fraction:
    """Upsilon(t) from the grading 0 homology of the t-modified complex.

    Each candidate level s is tested on its own: the cycles supported on
    elements of level at most s are compared with the boundaries of the
    whole grading 1 slice.
    """
    tc = build_tcomplex(c, t)
    matrix = tc.boundary_matrix()
    boundaries = matrix.columns()
    levels = tc.levels

    for s in SortedSet(levels):
        indices = [index for index, level in enumerate(levels) if level <= s]
        cycles = [
            GF2Vector(len(tc), (indices[k] for k in vector.support))
            for vector in kernel_basis(matrix.restrict(indices))
        ]
        if quotient_dim(cycles, boundaries):
            LOGGER.debug("t-modified complex of %r escapes at level %s", c.name, s)
            return -2 * s

    raise InconsistentInvariant(
        f"t-modified complex of {c.name!r} has no grading 0 class at t = {tc.t}"
    )


def forward(point: Tuple[int, int], t: Fraction) -> Tuple[Fraction, Fraction]:
    """(i, j) -> ((1 - t/2) i + (t/2) j, -(t/2) i + (1 + t/2) j)."""
    i, j = point
    half = t / 2
    return ((1 - half) * i + half * j, -half * i + (1 + half) * j)


def inverse(
    point: Tuple[Fraction, Fraction], t: Fraction
) -> Tuple[Fraction, Fraction]:
    """Inverse of :func:`forward`."""
    x, y = point
    half = t / 2
    return ((1 + half) * x - half * y, half * x + (1 - half) * y)


@requires_admissible
def transform_check(c: Complex, t: RationalLike) -> bool:
    """Check the affine change of coordinates relating F_t and the t-modified levels.

    On every grading 0 lattice point the forward map and its inverse compose to
    the identity, the first coordinate equals the F_t level and the level in
    the t-modified complex, the second coordinate equals the shifted Alexander
    level, and the point lies on the line j = (1 - 2/t) i + (2/t) s of its
    level s. Sublevel sets agree for every candidate level.
    """
    t = as_rational(t)
    if not 0 < t <= 2:
        raise FiltrationParameterError(f"Transform needs 0 < t <= 2; got t = {t}")

    ft_levels, prime_levels = [], []
    for element in c.grading_zero.elements:
        point = element.lattice_point
        i, j = point
        image = forward(point, t)
        if inverse(image, t) != point:
            LOGGER.debug("Transform at t = %s does not invert at %s", t, point)
            return False

        level = ft_level(i, j, t)
        primed = prime_level(element.maslov, i, j, t)
        grt = t_grading(element.maslov, i, j, t)
        if not (image[0] == level == primed) or image[1] != j - grt / 2:
            LOGGER.debug("Transform at t = %s moves %s to %s", t, point, image)
            return False
        if j != (1 - 2 / t) * i + (2 / t) * level:
            return False
        ft_levels.append(level)
        prime_levels.append(primed)

    for s in SortedSet(ft_levels):
        below = {index for index, level in enumerate(ft_levels) if level <= s}
        if below != {index for index, level in enumerate(prime_levels) if level <= s}:
            return False
    return True
