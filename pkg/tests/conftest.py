"""Shared test fixtures - SIC systems, seeded generators, random operators."""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from sic import build_sic, builtin_fiducial, find_fiducial  # noqa: E402


@pytest.fixture(scope="session")
def sic_d2():
    return build_sic(builtin_fiducial(2))


@pytest.fixture(scope="session")
def sic_d3():
    return build_sic(builtin_fiducial(3))


@pytest.fixture(scope="session")
def sic_d4():
    return build_sic(find_fiducial(4, seed=4))


@pytest.fixture(scope="session")
def sics(sic_d2, sic_d3, sic_d4):
    return {2: sic_d2, 3: sic_d3, 4: sic_d4}


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
