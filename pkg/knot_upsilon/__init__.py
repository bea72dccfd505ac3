""" Exact Upsilon invariants of bifiltered knot complexes.
"""

__version__ = "0.1.0"

from .complex import (
    Complex,
    Generator,
    InadmissibleComplex,
    InvalidStaircase,
    ValidationReport,
    staircase,
    torus_knot_steps,
    unknot,
    validate,
)
from .document import (
    DocumentError,
    DuplicateArrowError,
    emit_complex,
    emit_pl,
    parse_complex,
)
from .gf2 import GF2DimensionError, GF2Matrix, GF2Vector
from .library import UnknownExample, load_example
from .operators import connected_sum, dual, mirror, tensor
from .pl import FiltrationParameterError, PLFunction, RationalParseError
from .upsilon import (
    InconsistentInvariant,
    genus_bounds,
    jump_spectrum,
    nu_at,
    nu_minus,
    tau,
    upsilon_at,
    upsilon_pl,
)
from .tcomplex import build_tcomplex, transform_check, upsilon_alt
from . import checks

__all__ = [
    "Complex",
    "DocumentError",
    "DuplicateArrowError",
    "FiltrationParameterError",
    "GF2DimensionError",
    "GF2Matrix",
    "GF2Vector",
    "Generator",
    "InadmissibleComplex",
    "InconsistentInvariant",
    "InvalidStaircase",
    "PLFunction",
    "RationalParseError",
    "UnknownExample",
    "ValidationReport",
    "build_tcomplex",
    "checks",
    "connected_sum",
    "dual",
    "emit_complex",
    "emit_pl",
    "genus_bounds",
    "jump_spectrum",
    "load_example",
    "mirror",
    "nu_at",
    "nu_minus",
    "parse_complex",
    "staircase",
    "tau",
    "tensor",
    "torus_knot_steps",
    "transform_check",
    "unknot",
    "upsilon_alt",
    "upsilon_at",
    "upsilon_pl",
    "validate",
]
