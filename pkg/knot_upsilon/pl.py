"""Exact piecewise-linear functions on [0, 2]."""

from fractions import Fraction
from typing import Iterable, Iterator, List, NamedTuple, Tuple, Union

from sortedcontainers import SortedDict

RationalLike = Union[int, Fraction, str]

DOMAIN_START = Fraction(0)
DOMAIN_END = Fraction(2)


class FiltrationParameterError(ValueError):
    """Raised when a parameter t falls outside the admissible range."""


class RationalParseError(ValueError):
    """Raised when text does not spell a rational number."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction; floats are refused.

    >>> as_rational("4/5")
    Fraction(4, 5)
    >>> as_rational(-3)
    Fraction(-3, 1)
    """
    if isinstance(value, bool):
        raise TypeError("Expected a rational, got bool")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise RationalParseError(f"Invalid rational {value!r}") from err
    raise TypeError(
        "Expected int, Fraction or str; got {}".format(type(value).__name__)
    )


def format_rational(value: Fraction) -> str:
    """Exact text form: "p/q", or "p" for integers.

    >>> format_rational(Fraction(-12, 18))
    '-2/3'
    """
    return str(Fraction(value))


def check_parameter(t: RationalLike) -> Fraction:
    """Return t as a Fraction, raising unless 0 <= t <= 2."""
    t = as_rational(t)
    if not DOMAIN_START <= t <= DOMAIN_END:
        raise FiltrationParameterError(f"t = {t} outside [0, 2]")
    return t


class Segment(NamedTuple):
    """Affine piece between two consecutive vertices."""

    start: Fraction
    end: Fraction
    start_value: Fraction
    end_value: Fraction

    @property
    def slope(self) -> Fraction:
        return (self.end_value - self.start_value) / (self.end - self.start)


def _collinear(a, b, c) -> bool:
    (t0, v0), (t1, v1), (t2, v2) = a, b, c
    return (v1 - v0) * (t2 - t0) == (v2 - v0) * (t1 - t0)


class PLFunction:
    """Continuous piecewise-linear function on [0, 2] with rational vertices.

    Collinear interior vertices are dropped on construction, so equal
    functions have equal vertex lists.

    >>> f = PLFunction([(0, 0), ("1/2", "-1/2"), (1, -1), (2, 0)])
    >>> [(str(t), str(value)) for t, value in f]
    [('0', '0'), ('1', '-1'), ('2', '0')]
    >>> f("3/2")
    Fraction(-1, 2)
    """

    def __init__(self, vertices: Iterable[Tuple[RationalLike, RationalLike]]):
        table = SortedDict()
        for t, value in vertices:
            t, value = as_rational(t), as_rational(value)
            if t in table and table[t] != value:
                raise ValueError(f"Conflicting values at t = {t}")
            table[t] = value

        keys = table.keys()
        if not table or keys[0] != DOMAIN_START or keys[-1] != DOMAIN_END:
            raise ValueError("Vertices must start at t = 0 and end at t = 2")

        kept: List[Tuple[Fraction, Fraction]] = []
        for point in table.items():
            while len(kept) >= 2 and _collinear(kept[-2], kept[-1], point):
                kept.pop()
            kept.append(point)
        self._table = SortedDict(kept)

    @classmethod
    def constant(cls, value: RationalLike = 0) -> "PLFunction":
        return cls([(DOMAIN_START, value), (DOMAIN_END, value)])

    @classmethod
    def linear(cls, slope: RationalLike) -> "PLFunction":
        """The function t -> slope * t."""
        slope = as_rational(slope)
        return cls([(DOMAIN_START, 0), (DOMAIN_END, slope * DOMAIN_END)])

    @property
    def vertices(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return tuple(self._table.items())

    @property
    def breakpoints(self) -> Tuple[Fraction, ...]:
        return tuple(self._table.keys())

    def __call__(self, t: RationalLike) -> Fraction:
        return self.evaluate(t)

    def evaluate(self, t: RationalLike) -> Fraction:
        """Exact value at t."""
        t = check_parameter(t)
        if t in self._table:
            return self._table[t]
        index = self._table.bisect_right(t)
        t0, v0 = self._table.peekitem(index - 1)
        t1, v1 = self._table.peekitem(index)
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)

    def segments(self) -> List[Segment]:
        points = self.vertices
        return [
            Segment(t0, t1, v0, v1)
            for (t0, v0), (t1, v1) in zip(points, points[1:])
        ]

    def slopes(self) -> List[Fraction]:
        return [segment.slope for segment in self.segments()]

    def __iter__(self) -> Iterator[Tuple[Fraction, Fraction]]:
        return iter(self._table.items())

    def __add__(self, other: "PLFunction") -> "PLFunction":
        if not isinstance(other, PLFunction):
            return NotImplemented
        ts = set(self.breakpoints) | set(other.breakpoints)
        return PLFunction((t, self(t) + other(t)) for t in ts)

    def __neg__(self) -> "PLFunction":
        return PLFunction((t, -value) for t, value in self)

    def __sub__(self, other: "PLFunction") -> "PLFunction":
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, PLFunction):
            return False
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "PLFunction([{}])".format(
            ", ".join(
                "({}, {})".format(format_rational(t), format_rational(value))
                for t, value in self
            )
        )
