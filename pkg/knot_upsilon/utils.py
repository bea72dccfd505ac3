""" General utils """
from functools import wraps
from typing import Callable

from .complex import Complex


def preprocess_complexes(preprocessor: Callable[[Complex], Complex]):
    """Run every positional Complex argument through preprocessor before calling.

    Preprocessors return the complex to pass on (usually unchanged) and raise
    if the complex is unacceptable.
    """

    def _preprocess_decorated(func):
        @wraps(func)
        def _wrapped(*args, **kwargs):
            args = tuple(
                preprocessor(arg) if isinstance(arg, Complex) else arg for arg in args
            )
            return func(*args, **kwargs)

        return _wrapped

    return _preprocess_decorated


def _ensure_admissible(c: Complex) -> Complex:
    c.report.raise_for_violations(c.name)
    return c


def requires_admissible(func):
    """Raise InadmissibleComplex unless every complex argument is admissible."""
    return preprocess_complexes(_ensure_admissible)(func)
