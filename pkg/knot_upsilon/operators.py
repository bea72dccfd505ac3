"""Tensor product and dual of knot complexes.

Tensor corresponds to connected sum of knots and dual to the mirror image, so
Upsilon is additive under the first and changes sign under the second.
"""

from functools import reduce
import logging
from typing import Dict, Set

from .complex import Complex, Generator, InadmissibleComplex, unknot
from .utils import requires_admissible

LOGGER = logging.getLogger(__name__)

TENSOR = "⊗"
DUAL_MARK = "*"


def pair_id(left: str, right: str) -> str:
    """Id of the tensor generator left (x) right."""
    return f"{left}{TENSOR}{right}"


def dual_id(gen_id: str) -> str:
    """Toggle a trailing "*", so dual ids are involutive.

    >>> dual_id("x0"), dual_id("x0*")
    ('x0*', 'x0')
    """
    if gen_id.endswith(DUAL_MARK):
        return gen_id[: -len(DUAL_MARK)]
    return gen_id + DUAL_MARK


def _dual_name(name: str) -> str:
    if name.startswith("-"):
        return name[1:]
    return f"-{name}" if name else ""


@requires_admissible
def tensor(a: Complex, b: Complex) -> Complex:
    """Tensor product over F[U, U^-1] with the Leibniz differential.

    Generators pair as x (x) y in the order ``for x in a for y in b``; gradings
    and both filtrations add.
    """
    generators = [
        Generator(
            id=pair_id(x.id, y.id),
            maslov=x.maslov + y.maslov,
            alg=x.alg + y.alg,
            alex=x.alex + y.alex,
        )
        for x in a
        for y in b
    ]

    differential: Dict[str, Set[str]] = {}
    for x in a:
        for y in b:
            targets = {pair_id(dx, y.id) for dx in a.boundary(x.id)}
            targets ^= {pair_id(x.id, dy) for dy in b.boundary(y.id)}
            if targets:
                differential[pair_id(x.id, y.id)] = targets

    LOGGER.debug(
        "Tensor of %r and %r has %d generators", a.name, b.name, len(generators)
    )
    return Complex(generators, differential, name=f"{a.name}#{b.name}")


def dual(c: Complex) -> Complex:
    """Dual complex: gradings and filtrations negated, arrows reversed.

    The result is validated; an inadmissible dual is logged and raised.
    """
    generators = [
        Generator(id=dual_id(gen.id), maslov=-gen.maslov, alg=-gen.alg, alex=-gen.alex)
        for gen in c
    ]
    differential: Dict[str, Set[str]] = {}
    for source, target in c.arrows():
        differential.setdefault(dual_id(target), set()).add(dual_id(source))

    result = Complex(generators, differential, name=_dual_name(c.name))
    if not result.admissible:
        LOGGER.warning("Dual of %r is not admissible:\n%s", c.name, result.report)
        raise InadmissibleComplex(result.report, result.name)
    return result


mirror = dual


def connected_sum(*complexes: Complex) -> Complex:
    """Left fold of tensor; the empty sum is the unknot."""
    if not complexes:
        return unknot()
    return reduce(tensor, complexes)
