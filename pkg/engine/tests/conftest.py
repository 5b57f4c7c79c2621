"""
Shared fixtures for the engine test suite
"""
import random

import pytest

from models.lattice import HomologyClass, simple_root, simple_root_indices
from routers.class_literal import parse_class
from services.enumeration_service import EnumerationService
from services.memo_store import MemoStore


@pytest.fixture
def cls():
    """Class factory: a literal string or coordinates a, b_1, ..., b_n"""

    def make(a, *b):
        if isinstance(a, str):
            return parse_class(a)
        return HomologyClass.of(a, *b)

    return make


@pytest.fixture
def rng():
    """Seeded generator for property tests"""
    return random.Random(20240917)


@pytest.fixture
def memo():
    """Isolated in-memory memo store"""
    return MemoStore()


@pytest.fixture
def enumerator(memo):
    return EnumerationService(memo)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    """Temporary cache directory exported through the environment"""
    directory = tmp_path / "memo"
    monkeypatch.setenv("RATSURF_CACHE_DIR", str(directory))
    return directory


@pytest.fixture
def orbits(enumerator):
    """Exceptional and root orbits of X_n within a degree bound, as sets"""
    cache = {}

    def make(n, bound):
        if (n, bound) not in cache:
            exceptional = set(enumerator.orbit_bfs(HomologyClass.exceptional(n, n), bound))
            roots = set()
            # l_0 spans its own component on three points
            for index in simple_root_indices(n):
                if index in (0, 1):
                    roots |= set(enumerator.orbit_bfs(simple_root(n, index), bound))
            cache[n, bound] = (exceptional, roots)
        return cache[n, bound]

    return make
