""" Test utilities. """

import pytest

from knot_upsilon import utils
from knot_upsilon.complex import Complex, Generator, InadmissibleComplex, unknot


@pytest.fixture
def bad():
    yield Complex([Generator(id="a", maslov=0, alg=0, alex=1)], name="bad")


def test_preprocess_complexes():
    """Test preprocessing decorator touches only complex arguments."""
    seen = []

    def preprocessor(c):
        seen.append(c.name)
        return c

    @utils.preprocess_complexes(preprocessor)
    def handler(c, label):
        return label

    assert handler(unknot(), "x") == "x"
    assert seen == ["unknot"]


def test_requires_admissible(bad):
    @utils.requires_admissible
    def handler(c):
        return len(c)

    assert handler(unknot()) == 1
    with pytest.raises(InadmissibleComplex, match="'bad' is not admissible"):
        handler(bad)
