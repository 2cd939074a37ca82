import numpy as np
import pytest

from fractaldim import GridSpec, cantor_midpoints


@pytest.fixture(scope="session")
def cantor_mid10():
    """Midpoints of the 1024 level-10 middle-thirds intervals."""
    return cantor_midpoints(10)


@pytest.fixture(scope="session")
def triadic_grid():
    return GridSpec(base=3.0, origin=0.0, levels=(1, 8))


@pytest.fixture(scope="session")
def filled_square():
    """256 x 256 lattice of cell centers: exactly one point per 2^-8 cell."""
    g = (np.arange(256) + 0.5) / 256.0
    xx, yy = np.meshgrid(g, g)
    return np.column_stack([xx.ravel(), yy.ravel()])
