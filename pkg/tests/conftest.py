import numpy as np
import pytest

from tangent_casimir import LatticeParams


@pytest.fixture
def unit() -> LatticeParams:
    """Unit lattice a = tau = v_f = 1 (gamma = 1)."""
    return LatticeParams(a=1.0, tau=1.0, v_f=1.0)


@pytest.fixture
def complex_grid_100() -> np.ndarray:
    """Deterministic 100-point complex energy grid in the upper half plane."""
    re = np.linspace(-2.4, 2.4, 10)
    im = np.linspace(0.1, 2.1, 10)
    return (re[:, None] + 1j * im[None, :]).ravel()
