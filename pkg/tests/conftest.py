import numpy as np
import pytest

from orlab.grids import GridSpec, bump, gauss, poisson_slice
from orlab.growth import power, powerlog, tlog


@pytest.fixture(scope="session")
def spec():
    return GridSpec(L=256.0, N=2 ** 15)


@pytest.fixture(scope="session")
def corpus_fns(spec):
    return [
        gauss(spec, 0.0, 1.0),
        poisson_slice(spec, 1.0),
        bump(spec, 0.0, 1.0),
        bump(spec, 1.0, 2.0),
    ]


@pytest.fixture(scope="session")
def corpus_phis():
    return [power(2.0), power(3.0), powerlog(2.0, 1.0)]


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260826)
