"""
Shared fixtures for the Ellisflux tests
"""

import os
import random
import sys

import pytest

# Add src directory to path
current_dir = os.path.dirname(os.path.abspath(__file__))
src_dir = os.path.join(os.path.dirname(current_dir), 'src')
sys.path.insert(0, src_dir)

from config.engine import EngineConfig
from onetypes.allocation import LevelAllocator
from series.laurent import LaurentSeries


@pytest.fixture
def config():
    return EngineConfig()


@pytest.fixture
def small_config():
    """Narrow label range for oracle-heavy tests"""
    return EngineConfig(coset_bound=1)


@pytest.fixture
def allocator(config):
    return LevelAllocator.from_config(config)


@pytest.fixture
def rng():
    return random.Random(7)


@pytest.fixture
def t():
    """t(k) = t^k over the default context"""
    return lambda k: LaurentSeries.t_power(k)


@pytest.fixture
def series():
    """series({exponent: coefficient}) as an exact Laurent polynomial"""
    return lambda terms: LaurentSeries.from_terms(terms)
