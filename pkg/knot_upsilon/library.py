"""Bundled example complexes.

Examples are complex documents named ``<name>.json`` in the examples directory,
which defaults to the package's ``library`` directory.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

from .complex import Complex
from .config import Settings
from .document import parse_complex

LOGGER = logging.getLogger(__name__)


class UnknownExample(LookupError):
    """Raised when no bundled example carries the requested name."""


def examples_dir(settings: Optional[Settings] = None) -> Path:
    return (settings or Settings()).examples_dir


def list_examples(settings: Optional[Settings] = None) -> List[str]:
    """Names of the available examples, sorted."""
    return sorted(path.stem for path in examples_dir(settings).glob("*.json"))


def example_path(name: str, settings: Optional[Settings] = None) -> Path:
    path = examples_dir(settings) / f"{name}.json"
    if not path.is_file():
        raise UnknownExample(
            "No example named {!r}; available: {}".format(
                name, ", ".join(list_examples(settings))
            )
        )
    return path


def load_example(name: str, settings: Optional[Settings] = None) -> Complex:
    """Parse and validate the named example."""
    return parse_complex(example_path(name, settings).read_text(encoding="utf-8"))


def resolve_input(path: Union[str, Path], settings: Optional[Settings] = None) -> Path:
    """Path of a complex document given on the command line.

    Existing files are used as given. Otherwise a path whose stem names a
    bundled example (``examples/t37.json``) resolves to that example.
    """
    path = Path(path)
    if path.is_file():
        return path
    LOGGER.debug("%s not found; looking up example %r", path, path.stem)
    try:
        return example_path(path.stem, settings)
    except UnknownExample as err:
        raise FileNotFoundError(f"No such complex document: {path}") from err
