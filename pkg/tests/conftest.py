import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ellf4.special_functions import EllipticBase  # noqa: E402


@pytest.fixture
def base():
    return EllipticBase(0.1, 0.15)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
