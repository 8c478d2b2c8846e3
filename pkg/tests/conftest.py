import random

import pytest

from topinv import catalog


@pytest.fixture(scope="session")
def fixtures():
    """Named closed-manifold fixtures, shared across the whole run."""
    return catalog.manifold_fixtures()


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)
