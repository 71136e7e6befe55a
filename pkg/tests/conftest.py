import numpy as np
import pytest


def random_hermitian(rng, trace_one=False):
    mat = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    herm = mat + mat.conj().T
    if trace_one:
        herm = herm / herm.trace().real
    return herm


def random_density(rng):
    mat = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = mat @ mat.conj().T
    return rho / rho.trace().real


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
