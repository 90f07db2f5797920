"""
Shared fixtures
"""
import json
import os

os.environ.setdefault('IMMGEO_ENV', 'testing')

import numpy as np
import pytest

from immgeo.geometry.imm_poly import MatTuple


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def identity_point():
    return MatTuple.identity(3, 2)


@pytest.fixture
def random_point(rng):
    return MatTuple.random(3, 2, rng)


@pytest.fixture
def write_point_file(tmp_path):
    """Write a point-file document and return its path"""
    def _write(document, name='point.json'):
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write
