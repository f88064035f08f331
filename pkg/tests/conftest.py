import numpy as np
import pytest
from hypothesis import settings

from sep_core.matlin import SubsystemDims, DensityState
from sep_core.states import werner, horodecki_3x3, maximally_mixed

settings.register_profile('sepscope', max_examples=40, deadline=None)
settings.load_profile('sepscope')

SEPARABLE_GRID = (-1.0, -1 / 3, 0.0, 0.5, 2 / 3, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def dims33():
    return SubsystemDims(3, 3)


@pytest.fixture
def werner_entangled():
    return werner(3, -1).state


@pytest.fixture
def horodecki_half():
    return horodecki_3x3(0.5).state


@pytest.fixture
def mixed_22():
    return maximally_mixed(SubsystemDims(2, 2)).state


@pytest.fixture
def config_path(tmp_path):
    return str(tmp_path / 'config.json')


def random_complex(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_hermitian(rng: np.random.Generator, size: int) -> np.ndarray:
    g = random_complex(rng, size, size)
    return (g + g.conj().T) / 2


def phi_plus() -> DensityState:
    psi = np.array([1, 0, 0, 1], dtype=np.complex128).reshape(-1, 1) / np.sqrt(2)
    return DensityState(SubsystemDims(2, 2), psi @ psi.conj().T)
