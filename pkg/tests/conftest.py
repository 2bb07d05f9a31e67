import random

import pytest

from setfix import CompactSet, FiniteMatrixSpace, TableMap


def line_space(positions):
    """Finite-matrix space whose points sit at the given line coordinates."""
    n = len(positions)
    return FiniteMatrixSpace(
        [[abs(float(positions[i]) - float(positions[j])) for j in range(n)] for i in range(n)]
    )


def table_map(space, images):
    return TableMap(space, [CompactSet.from_points(img) for img in images])


@pytest.fixture
def rng():
    return random.Random(20240817)
