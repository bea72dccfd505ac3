""" Test bundled examples and settings. """

import pytest

from knot_upsilon.complex import staircase, unknot
from knot_upsilon.config import LIBRARY_DIR, Settings
from knot_upsilon.library import (
    UnknownExample,
    example_path,
    list_examples,
    load_example,
    resolve_input,
)

BUNDLED = {
    "unknot": None,
    "t23": [1, 1],
    "t25": [1, 1, 1, 1],
    "t37": [1, 2, 1, 2, 2, 1, 2, 1],
}


def test_list_examples():
    assert list_examples() == ["t23", "t23_t23", "t25", "t37", "unknot"]


@pytest.mark.parametrize("name, steps", BUNDLED.items())
def test_bundled_staircases(name, steps):
    expected = unknot() if steps is None else staircase(steps)
    c = load_example(name)
    assert c == expected
    assert c.admissible


def test_bundled_names():
    assert load_example("t37").name == "T(3,7)"
    assert load_example("t23_t23").name == "T(2,3)#T(2,3)"


def test_unknown_example():
    with pytest.raises(UnknownExample, match="available"):
        example_path("t99")


def test_resolve_input(tmp_path):
    assert resolve_input("examples/t37.json") == LIBRARY_DIR / "t37.json"
    existing = tmp_path / "mine.json"
    existing.write_text("{}")
    assert resolve_input(existing) == existing
    with pytest.raises(FileNotFoundError):
        resolve_input(tmp_path / "missing.json")


def test_settings_from_environment(monkeypatch, tmp_path):
    (tmp_path / "only.json").write_text(
        (LIBRARY_DIR / "t23.json").read_text(encoding="utf-8"), encoding="utf-8"
    )
    monkeypatch.setenv("UPSILON_EXAMPLES_DIR", str(tmp_path))
    monkeypatch.setenv("UPSILON_LOG_LEVEL", "DEBUG")
    settings = Settings()
    assert settings.examples_dir == tmp_path
    assert settings.log_level == "DEBUG"
    assert list_examples(settings) == ["only"]
    assert load_example("only", settings) == staircase([1, 1])
