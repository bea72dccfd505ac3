"""Command line interface.

Exit codes: 0 on success or a true property, 1 when a property check fails,
2 on bad input (unreadable or inadmissible documents, bad parameters, usage).
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .checks import check_additivity, check_oracle, sample_points, verify_complex
from .complex import InadmissibleComplex, InvalidStaircase, staircase, torus_knot_steps
from .config import Settings
from .document import (
    ComplexDocument,
    DocumentError,
    ResultDocument,
    emit_complex,
    emit_pl,
    parse_complex,
)
from .library import UnknownExample, example_path, list_examples, resolve_input
from .operators import dual, tensor
from .pl import (
    FiltrationParameterError,
    RationalParseError,
    as_rational,
    format_rational,
)
from .upsilon import (
    InconsistentInvariant,
    check_crossing_change,
    genus_bounds,
    jump_spectrum,
    nu_minus,
    tau,
    upsilon_at,
    upsilon_pl,
)

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

INPUT_ERRORS = (
    DocumentError,
    InadmissibleComplex,
    FiltrationParameterError,
    InvalidStaircase,
    RationalParseError,
    UnknownExample,
    ValidationError,
    OSError,
)


class Command:
    """State shared by the command handlers of one invocation."""

    def __init__(self, settings: Settings, out: Callable[[str], None] = print):
        self.settings = settings
        self.out = out

    def load(self, path: str, *, check: bool = True):
        resolved = resolve_input(path, self.settings)
        LOGGER.debug("Reading complex from %s", resolved)
        return parse_complex(resolved.read_text(encoding="utf-8"), check=check)

    def result(self, invariant: str, source: str, payload) -> int:
        self.out(
            ResultDocument(
                invariant=invariant,
                input=source,
                payload=payload,
                engine_version=__version__,
            ).serialize()
        )
        return EXIT_OK

    def verdict(self, holds: bool) -> int:
        self.out("true" if holds else "false")
        return EXIT_OK if holds else EXIT_FAILED

    def validate(self, args) -> int:
        c = self.load(args.file, check=False)
        self.out(str(c.report))
        return EXIT_OK if c.admissible else EXIT_FAILED

    def upsilon(self, args) -> int:
        self.out(emit_pl(upsilon_pl(self.load(args.file)), args.format).rstrip("\n"))
        return EXIT_OK

    def eval(self, args) -> int:
        self.out(format_rational(upsilon_at(self.load(args.file), as_rational(args.t))))
        return EXIT_OK

    def tau(self, args) -> int:
        self.out(str(tau(self.load(args.file))))
        return EXIT_OK

    def nu_minus(self, args) -> int:
        self.out(str(nu_minus(self.load(args.file))))
        return EXIT_OK

    def bounds(self, args) -> int:
        report = genus_bounds(upsilon_pl(self.load(args.file)))
        return self.result(
            "genus_bounds",
            args.file,
            {
                "g3": report.g3,
                "g4": report.g4,
                "gc": report.gc,
                "small_t_threshold": format_rational(report.small_t_threshold),
            },
        )

    def jumps(self, args) -> int:
        records = jump_spectrum(upsilon_pl(self.load(args.file)))
        return self.result(
            "jumps",
            args.file,
            [
                {
                    "t": format_rational(record.t),
                    "delta": format_rational(record.delta),
                    "constraint": record.satisfies_denominator_constraint(),
                }
                for record in records
            ],
        )

    def sum(self, args) -> int:
        self.out(emit_complex(tensor(self.load(args.file_a), self.load(args.file_b))))
        return EXIT_OK

    def mirror(self, args) -> int:
        self.out(emit_complex(dual(self.load(args.file))))
        return EXIT_OK

    def check_additivity(self, args) -> int:
        return self.verdict(
            check_additivity(self.load(args.file_a), self.load(args.file_b))
        )

    def alt_check(self, args) -> int:
        c = self.load(args.file)
        ts = [as_rational(args.t)]
        if args.samples:
            ts += [t for t in sample_points(args.samples) if t > 0]
        return self.verdict(check_oracle(c, ts))

    def crossing_check(self, args) -> int:
        return self.verdict(
            check_crossing_change(
                upsilon_pl(self.load(args.file_minus)),
                upsilon_pl(self.load(args.file_plus)),
            )
        )

    def staircase(self, args) -> int:
        if args.torus:
            p, q = args.torus
            steps = torus_knot_steps(p, q)
            name = args.name or f"T({p},{q})"
        else:
            steps = args.steps
            name = args.name
        self.out(emit_complex(staircase(steps, name=name)))
        return EXIT_OK

    def examples(self, args) -> int:
        if args.name is None:
            for name in list_examples(self.settings):
                self.out(name)
        else:
            path = example_path(args.name, self.settings)
            self.out(path.read_text(encoding="utf-8").rstrip("\n"))
        return EXIT_OK

    def verify(self, args) -> int:
        results = verify_complex(self.load(args.file, check=False), args.samples)
        self.result("verify", args.file, dict(results))
        return EXIT_OK if all(results.values()) else EXIT_FAILED

    def schema(self, _args) -> int:
        self.out(ComplexDocument.schema_json(indent=2))
        return EXIT_OK


def _steps(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(",")]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"invalid step list {value!r}") from err


def _samples(value: str) -> int:
    samples = int(value)
    if samples < 1:
        raise argparse.ArgumentTypeError("--samples must be positive")
    return samples


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upsilon",
        description="Exact Upsilon, tau, nu-minus and genus bounds of knot complexes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log-level", help="Logging level (default: $UPSILON_LOG_LEVEL or WARNING)"
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def command(name: str, help_text: str, *files: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text, description=help_text)
        for file_arg in files:
            sub.add_argument(file_arg, help="complex document or example path")
        return sub

    command("validate", "Check the complex axioms", "file")
    sub = command("upsilon", "Upsilon as an exact PL function", "file")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub = command("eval", "Upsilon at one t", "file")
    sub.add_argument("--t", required=True, help="rational p/q in [0, 2]")
    command("tau", "The tau invariant", "file")
    command("nu-minus", "nu-minus", "file")
    command("bounds", "Genus lower bounds", "file")
    command("jumps", "Jumps of the derivative of Upsilon", "file")
    command("sum", "Tensor product (connected sum)", "file_a", "file_b")
    command("mirror", "Dual complex (mirror image)", "file")
    command("check-additivity", "Check Upsilon additivity", "file_a", "file_b")
    sub = command("alt-check", "Compare with the t-modified complex", "file")
    sub.add_argument("--t", required=True, help="rational p/q in (0, 2]")
    sub.add_argument("--samples", type=_samples, default=0)
    command(
        "crossing-check", "Check the crossing change bounds", "file_minus", "file_plus"
    )
    sub = command("staircase", "Emit a staircase complex")
    shape = sub.add_mutually_exclusive_group(required=True)
    shape.add_argument("--steps", type=_steps, help="comma separated steps")
    shape.add_argument(
        "--torus", type=int, nargs=2, metavar=("P", "Q"), help="torus knot T(P, Q)"
    )
    sub.add_argument("--name", default="")
    sub = command("examples", "List bundled examples or print one")
    sub.add_argument("name", nargs="?")
    sub = command("verify", "Run every property check on one complex", "file")
    sub.add_argument("--samples", type=_samples, default=8)
    command("schema", "Print the complex document JSON schema")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_INPUT if err.code else EXIT_OK

    try:
        settings = Settings()
        logging.basicConfig(level=(args.log_level or settings.log_level).upper())
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT

    handler = Command(settings)
    handlers: Dict[str, Callable] = {
        name: getattr(handler, name.replace("-", "_"))
        for name in (
            "validate",
            "upsilon",
            "eval",
            "tau",
            "nu-minus",
            "bounds",
            "jumps",
            "sum",
            "mirror",
            "check-additivity",
            "alt-check",
            "crossing-check",
            "staircase",
            "examples",
            "verify",
            "schema",
        )
    }
    try:
        return handlers[args.command](args)
    except InconsistentInvariant as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAILED
    except INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())
