import os
import sys

import numpy as np
import pytest

# Same layout the entry points set up: backend for api/config, src for the library
backend_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(backend_dir, 'src'))
sys.path.insert(0, backend_dir)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
