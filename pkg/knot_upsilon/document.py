"""JSON documents for complexes and computed invariants."""

import csv
import io
import json
from typing import Any, Dict, List

from pydantic import BaseModel, Extra, Field, StrictStr, ValidationError, validator
from semver import VersionInfo

from .complex import Complex, Generator
from .pl import PLFunction, format_rational


class DocumentError(ValueError):
    """Raised when a document cannot be parsed or describes no complex."""


class UnknownGeneratorError(DocumentError):
    """Raised when the differential names an id with no generator."""


class DuplicateArrowError(DocumentError):
    """Raised when the differential lists the same arrow more than once."""


class Arrow(BaseModel):
    """All arrows out of one generator."""

    source: StrictStr = Field(alias="from")
    to: List[StrictStr]

    class Config:
        extra = Extra.forbid
        allow_population_by_field_name = True


class ComplexDocument(BaseModel):
    """Serialized form of a :class:`~knot_upsilon.complex.Complex`."""

    name: StrictStr = ""
    generators: List[Generator]
    differential: List[Arrow] = []

    class Config:
        extra = Extra.forbid

    @classmethod
    def from_complex(cls, c: Complex) -> "ComplexDocument":
        order = {gen.id: index for index, gen in enumerate(c)}
        return cls(
            name=c.name,
            generators=list(c.generators),
            differential=[
                Arrow(source=gen.id, to=sorted(c.boundary(gen.id), key=order.get))
                for gen in c
                if c.boundary(gen.id)
            ],
        )

    def to_complex(self) -> Complex:
        """Build the complex.

        Ids in the differential must name generators, and each arrow may be
        listed once: a generator appears as ``from`` at most once and its
        ``to`` list has no repeats.
        """
        known = {gen.id for gen in self.generators}
        differential: Dict[str, set] = {}
        for arrow in self.differential:
            for gen_id in [arrow.source, *arrow.to]:
                if gen_id not in known:
                    raise UnknownGeneratorError(
                        f"Differential names unknown generator {gen_id!r}"
                    )
            if arrow.source in differential:
                raise DuplicateArrowError(
                    f"Generator {arrow.source!r} appears twice as 'from'"
                )
            targets = set(arrow.to)
            if len(targets) != len(arrow.to):
                raise DuplicateArrowError(
                    f"Arrows from {arrow.source!r} list a target twice"
                )
            differential[arrow.source] = targets
        return Complex(self.generators, differential, name=self.name)

    def serialize(self) -> str:
        return json.dumps(self.dict(by_alias=True), indent=2, ensure_ascii=False)

    @classmethod
    def deserialize(cls, serialized: str) -> "ComplexDocument":
        """Parse a document, reporting JSON syntax errors by line and column."""
        try:
            value = json.loads(serialized)
        except json.JSONDecodeError as err:
            raise DocumentError(
                f"Invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}"
            ) from err
        try:
            return cls.parse_obj(value)
        except ValidationError as err:
            raise DocumentError(f"Invalid complex document:\n{err}") from err


def _reject_floats(value: Any):
    if isinstance(value, float):
        raise ValueError("Results carry exact rationals as strings, not floats")
    if isinstance(value, dict):
        for item in value.values():
            _reject_floats(item)
    elif isinstance(value, (list, tuple)):
        for item in value:
            _reject_floats(item)


class ResultDocument(BaseModel):
    """Computed invariant of one input, tagged with the engine version."""

    invariant: StrictStr
    input: StrictStr
    payload: Any
    engine_version: StrictStr

    class Config:
        extra = Extra.forbid

    @validator("payload")
    @classmethod
    def _exact_payload(cls, value):
        _reject_floats(value)
        return value

    @validator("engine_version")
    @classmethod
    def _semver(cls, value):
        VersionInfo.parse(value)
        return value

    def serialize(self) -> str:
        return json.dumps(self.dict(), indent=2, ensure_ascii=False)


def parse_complex(text: str, *, check: bool = True) -> Complex:
    """Complex described by a JSON document.

    With ``check`` the complex is validated and InadmissibleComplex raised,
    carrying the report, if any axiom fails.
    """
    c = ComplexDocument.deserialize(text).to_complex()
    if check:
        c.report.raise_for_violations(c.name)
    return c


def emit_complex(c: Complex) -> str:
    return ComplexDocument.from_complex(c).serialize()


def pl_payload(f: PLFunction) -> List[Dict[str, str]]:
    """Vertices as {"t": "p/q", "value": "p/q"} records."""
    return [
        {"t": format_rational(t), "value": format_rational(value)} for t, value in f
    ]


def emit_pl(f: PLFunction, fmt: str = "json") -> str:
    """Vertex list as JSON, or CSV with header t,value,approx.

    >>> print(emit_pl(PLFunction([(0, 0), (1, -1), (2, 0)]), "csv"), end="")
    t,value,approx
    0,0,0.000000
    1,-1,-1.000000
    2,0,0.000000
    """
    if fmt == "json":
        return json.dumps(pl_payload(f))
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["t", "value", "approx"])
        for t, value in f:
            writer.writerow(
                [format_rational(t), format_rational(value), f"{float(value):.6f}"]
            )
        return buffer.getvalue()
    raise ValueError(f"Unknown format {fmt!r}; expected json or csv")
