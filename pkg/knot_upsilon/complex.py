"""Bifiltered knot complexes over F[U, U^-1].

A complex stores one generator per U-orbit. The translate U^k x sits at
Maslov grading M(x) - 2k and bifiltration (alg - k, alex - k), so every fixed
grading slice is finite with one element per generator of matching parity.
"""

from enum import Enum
from functools import cached_property
import logging
import math
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

from pydantic import BaseModel, Extra, StrictInt, StrictStr

from .gf2 import GF2Matrix, GF2Span, compose, first_escape, kernel_basis, rank


LOGGER = logging.getLogger(__name__)

Level = TypeVar("Level")


class Generator(BaseModel):
    """Bifiltered, graded basis element of a complex."""

    id: StrictStr
    maslov: StrictInt
    alg: StrictInt
    alex: StrictInt

    class Config:
        allow_mutation = False
        frozen = True
        extra = Extra.forbid

    @property
    def lattice_point(self) -> Tuple[int, int]:
        return (self.alg, self.alex)


class SliceElement(NamedTuple):
    """The translate U^upower * gen."""

    gen: Generator
    upower: int

    @property
    def maslov(self) -> int:
        return self.gen.maslov - 2 * self.upower

    @property
    def alg(self) -> int:
        return self.gen.alg - self.upower

    @property
    def alex(self) -> int:
        return self.gen.alex - self.upower

    @property
    def lattice_point(self) -> Tuple[int, int]:
        return (self.alg, self.alex)


class Axiom(Enum):
    """Complex axioms checked by validation."""

    UNIQUE_IDS = "generator ids not unique"
    KNOWN_IDS = "differential references unknown generator"
    GRADING = "differential does not lower maslov grading by one"
    FILTERED = "differential not filtered"
    SQUARE_ZERO = "differential does not square to zero"
    HOMOLOGY = "homology is not F[U, U^-1] generated in grading 0"
    NORMALIZATION = "grading 0 homology generator not normalized"


class Violation(NamedTuple):
    axiom: Axiom
    detail: str

    def __str__(self):
        return f"{self.axiom.value}: {self.detail}"


class InadmissibleComplex(Exception):
    """Raised when an operation requires an admissible complex and gets another."""

    def __init__(self, report: "ValidationReport", name: str = ""):
        self.report = report
        label = f"Complex {name!r}" if name else "Complex"
        super().__init__(
            "{} is not admissible: {}".format(
                label, "; ".join(str(violation) for violation in report)
            )
        )


class ValidationReport:
    """Violated complex axioms; empty for an admissible complex."""

    def __init__(self, violations: Iterable[Violation] = ()):
        self._violations = tuple(violations)

    @property
    def violations(self) -> Tuple[Violation, ...]:
        return self._violations

    @property
    def admissible(self) -> bool:
        return not self._violations

    @property
    def axioms(self) -> FrozenSet[Axiom]:
        return frozenset(violation.axiom for violation in self._violations)

    def raise_for_violations(self, name: str = ""):
        """Raise InadmissibleComplex unless the report is empty."""
        if self._violations:
            raise InadmissibleComplex(self, name)

    def __iter__(self) -> Iterator[Violation]:
        return iter(self._violations)

    def __len__(self) -> int:
        return len(self._violations)

    def __str__(self):
        if self.admissible:
            return "admissible"
        return "\n".join(str(violation) for violation in self._violations)


class Complex:
    """Finitely generated free F[U, U^-1]-complex with two filtrations.

    >>> c = Complex([Generator(id="x", maslov=0, alg=0, alex=0)], name="unknot")
    >>> len(c), c.width
    (1, 0)
    """

    def __init__(
        self,
        generators: Iterable[Generator],
        differential: Optional[Mapping[str, Iterable[str]]] = None,
        *,
        name: str = "",
    ):
        self.name = name
        self._generators: Tuple[Generator, ...] = tuple(generators)
        self._by_id: Dict[str, Generator] = {gen.id: gen for gen in self._generators}
        self._differential: Dict[str, FrozenSet[str]] = {}
        for source, targets in (differential or {}).items():
            targets = frozenset(targets)
            if targets:
                self._differential[source] = targets

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return self._generators

    @property
    def differential(self) -> Mapping[str, FrozenSet[str]]:
        return dict(self._differential)

    def __getitem__(self, gen_id: str) -> Generator:
        return self._by_id[gen_id]

    def __contains__(self, gen_id: str) -> bool:
        return gen_id in self._by_id

    def __iter__(self) -> Iterator[Generator]:
        return iter(self._generators)

    def __len__(self) -> int:
        return len(self._generators)

    def boundary(self, gen_id: str) -> FrozenSet[str]:
        """Ids y with an arrow gen_id -> y."""
        return self._differential.get(gen_id, frozenset())

    def arrows(self) -> Iterator[Tuple[str, str]]:
        for source, targets in self._differential.items():
            for target in targets:
                yield source, target

    @property
    def width(self) -> int:
        """Largest |alex - alg| over generators."""
        return max((abs(gen.alex - gen.alg) for gen in self._generators), default=0)

    @cached_property
    def report(self) -> ValidationReport:
        """Validation report, computed once."""
        return validate(self)

    @property
    def admissible(self) -> bool:
        return self.report.admissible

    @cached_property
    def grading_zero(self) -> "GradingZeroSlice":
        """Grading 0 slice with its cycle and boundary data."""
        return GradingZeroSlice(self)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return False
        return (
            self._generators == other._generators
            and self._differential == other._differential
        )

    def __hash__(self):
        return hash(self._generators)

    def __repr__(self):
        return "Complex({!r}, {} generators, {} arrows)".format(
            self.name, len(self), sum(1 for _ in self.arrows())
        )


def grading_slice(c: Complex, grading: int) -> List[SliceElement]:
    """Basis of the grading slice, in generator order.

    One element U^((M(x) - g) / 2) x per generator with M(x) of the parity of g.
    """
    return [
        SliceElement(gen, (gen.maslov - grading) // 2)
        for gen in c.generators
        if (gen.maslov - grading) % 2 == 0
    ]


def boundary_matrix(c: Complex, grading: int) -> GF2Matrix:
    """Matrix of the differential from slice ``grading`` to slice ``grading - 1``.

    Columns follow the source slice, rows the target slice. Arrows to ids that
    are unknown or of the wrong parity are left out (validation reports them).
    """
    sources = grading_slice(c, grading)
    targets = {
        element.gen.id: row for row, element in enumerate(grading_slice(c, grading - 1))
    }
    return GF2Matrix(
        len(targets),
        len(sources),
        (
            (targets[target], col)
            for col, element in enumerate(sources)
            for target in c.boundary(element.gen.id)
            if target in targets
        ),
    )


class GradingZeroSlice:
    """Grading 0 slice of a complex, prepared for sublevel searches.

    Elements are the grading 0 translates; cycles are the kernel of the
    differential into grading -1 and boundaries the image from grading 1.
    """

    def __init__(self, c: Complex):
        self.elements: Tuple[SliceElement, ...] = tuple(grading_slice(c, 0))
        self.cycles = boundary_matrix(c, 0)
        self.boundaries = GF2Span.of_columns(boundary_matrix(c, 1))

    @property
    def lattice_points(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(element.lattice_point for element in self.elements)

    def least_level(
        self, level_of: Callable[[SliceElement], Optional[Level]]
    ) -> Optional[Level]:
        """Least level whose sublevel set carries a cycle that is not a boundary.

        ``level_of`` assigns each element a level, or None to leave it out of
        every sublevel set. Returns None if no sublevel set ever escapes.
        """
        keyed = []
        for index, element in enumerate(self.elements):
            level = level_of(element)
            if level is not None:
                keyed.append((level, index))
        keyed.sort()

        position = first_escape(
            self.cycles, [index for _, index in keyed], self.boundaries
        )
        if position is None:
            return None
        return keyed[position][0]


def _structural_violations(c: Complex) -> List[Violation]:
    violations = []
    seen = set()
    for gen in c.generators:
        if gen.id in seen:
            violations.append(Violation(Axiom.UNIQUE_IDS, f"duplicate id {gen.id!r}"))
        seen.add(gen.id)

    for source, target in sorted(c.arrows()):
        if source not in c or target not in c:
            violations.append(
                Violation(Axiom.KNOWN_IDS, f"arrow {source!r} -> {target!r}")
            )
            continue
        x, y = c[source], c[target]
        if y.maslov != x.maslov - 1:
            violations.append(
                Violation(
                    Axiom.GRADING,
                    f"{source!r} (M={x.maslov}) -> {target!r} (M={y.maslov})",
                )
            )
        if y.alg > x.alg or y.alex > x.alex:
            violations.append(
                Violation(
                    Axiom.FILTERED,
                    f"{source!r} {x.lattice_point} -> {target!r} {y.lattice_point}",
                )
            )
    return violations


def _homology_violations(c: Complex) -> List[Violation]:
    even, odd = boundary_matrix(c, 0), boundary_matrix(c, 1)
    violations = []

    # Slices of equal parity share their matrices, so gradings 0 and 1 cover all.
    if not compose(odd, even).is_zero() or not compose(even, odd).is_zero():
        violations.append(Violation(Axiom.SQUARE_ZERO, "nonzero composite slice map"))
        return violations

    even_homology = len(kernel_basis(even)) - rank(odd)
    odd_homology = len(kernel_basis(odd)) - rank(even)
    if even_homology != 1 or odd_homology != 0:
        violations.append(
            Violation(
                Axiom.HOMOLOGY,
                f"even slices have dimension {even_homology}, "
                f"odd slices {odd_homology}",
            )
        )
    return violations


def _normalization_violations(c: Complex) -> List[Violation]:
    model = c.grading_zero
    violations = []
    for label, level_of in (
        ("algebraic", lambda element: element.alg),
        ("Alexander", lambda element: element.alex),
    ):
        level = model.least_level(level_of)
        if level != 0:
            violations.append(
                Violation(Axiom.NORMALIZATION, f"least {label} level is {level}")
            )
    return violations


def validate(c: Complex) -> ValidationReport:
    """Check every complex axiom; violations are report entries, never raised."""
    violations = _structural_violations(c)
    if not violations:
        violations = _homology_violations(c)
        if not violations:
            violations = _normalization_violations(c)
    elif all(violation.axiom is Axiom.FILTERED for violation in violations):
        violations += _homology_violations(c)

    if violations:
        LOGGER.debug("Complex %r failed validation: %s", c.name, violations)
    return ValidationReport(violations)


def width(c: Complex) -> int:
    """Genus width g(C)."""
    return c.width


class InvalidStaircase(ValueError):
    """Raised for empty, odd-length or non-positive staircase step lists."""


def staircase(steps: Sequence[int], *, name: str = "") -> Complex:
    """Staircase complex read from the topmost vertex.

    Steps alternate rightward and downward moves; the topmost vertex sits at
    (0, total downward drop). Even-numbered vertices have Maslov grading 0 and
    odd-numbered ones grading 1, each of the latter hitting both neighbours.

    >>> [gen.lattice_point for gen in staircase([1, 1])]
    [(0, 1), (1, 1), (1, 0)]
    """
    steps = list(steps)
    if not steps or len(steps) % 2:
        raise InvalidStaircase(
            f"Staircase needs a nonempty, even-length step list; got {steps}"
        )
    for step in steps:
        if isinstance(step, bool) or not isinstance(step, int) or step <= 0:
            raise InvalidStaircase(f"Staircase steps must be positive integers: {steps}")

    alg, alex = 0, sum(steps[1::2])
    points = [(alg, alex)]
    for index, step in enumerate(steps):
        if index % 2 == 0:
            alg += step
        else:
            alex -= step
        points.append((alg, alex))

    generators = [
        Generator(id=f"x{index}", maslov=index % 2, alg=alg, alex=alex)
        for index, (alg, alex) in enumerate(points)
    ]
    differential = {
        f"x{index}": {f"x{index - 1}", f"x{index + 1}"}
        for index in range(1, len(points), 2)
    }
    return Complex(
        generators,
        differential,
        name=name or "staircase({})".format(",".join(map(str, steps))),
    )


def unknot() -> Complex:
    """One generator at grading 0 and bifiltration (0, 0)."""
    return Complex([Generator(id="x0", maslov=0, alg=0, alex=0)], name="unknot")


def torus_knot_steps(p: int, q: int) -> List[int]:
    """Staircase steps of the positive torus knot T(p, q).

    The gaps of the semigroup generated by p and q fix the staircase: the
    Alexander polynomial's exponents alternate between outer and inner corners.

    >>> torus_knot_steps(3, 7)
    [1, 2, 1, 2, 2, 1, 2, 1]
    >>> torus_knot_steps(2, 3)
    [1, 1]
    """
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise InvalidStaircase(f"T({p}, {q}) is not a nontrivial torus knot")

    genus = (p - 1) * (q - 1) // 2
    semigroup = {a * p + b * q for a in range(q) for b in range(p)}
    # Run-length encode membership of 0 .. 2g - 1 in the semigroup.
    runs: List[int] = []
    current = None
    for n in range(2 * genus):
        member = n in semigroup
        if member == current:
            runs[-1] += 1
        else:
            runs.append(1)
            current = member
    return runs
