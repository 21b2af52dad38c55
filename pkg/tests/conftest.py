import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from modframe import ModuleVector


def random_vector(d: int, k: int, rng, scale: float = 1.0) -> ModuleVector:
    vals = (rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))) * scale / np.sqrt(d)
    return ModuleVector(vals)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
