"""
Shared fixtures
"""
from pathlib import Path

import pytest

from src.basegraph.corpus import builtin_f3c6, builtin_j42
from src.models.base_graph import CombinedBaseGraph

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

F3C6_SPECTRUM = [4, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0, -1, -1, -1, -1, -2, -2, -2, -2, -4]
J42_SPECTRUM = [4, 0, 0, 0, -2, -2]


@pytest.fixture
def f3c6() -> CombinedBaseGraph:
    return builtin_f3c6()


@pytest.fixture
def j42() -> CombinedBaseGraph:
    return builtin_j42()


@pytest.fixture
def coarse_pair() -> CombinedBaseGraph:
    """Two index-2 vertices over Z_4; their coset intersections have size 2"""
    return CombinedBaseGraph.from_edges(m=4, vertices=[("a", 2), ("b", 2)], edges=[("a", "b", 0)])
