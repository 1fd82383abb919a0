import numpy as np
import pytest
from fastapi.testclient import TestClient

from coclust_api.main import app
from coclust_api.synth import planted_bipartite
from tests.helpers import graph_of


@pytest.fixture
def client():
    """Test client for FastAPI app."""
    return TestClient(app)


@pytest.fixture
def rng():
    """Seeded generator for randomized property tests."""
    return np.random.default_rng(20240611)


@pytest.fixture
def two_edge_graph():
    """2 users, 2 items, edges (u1,v1) and (u2,v2)."""
    return graph_of(("u1", "v1"), ("u2", "v2"))


@pytest.fixture
def k22_graph():
    """Complete bipartite K2,2."""
    return graph_of(("a", "x"), ("a", "y"), ("b", "x"), ("b", "y"))


@pytest.fixture
def planted_blocks():
    """Two disjoint K5,5 blocks with their block labels."""
    return planted_bipartite(2, 5, 5, 1.0, 0.0, seed=0)


@pytest.fixture
def two_edge_file(tmp_path):
    """Edge-list file for the 2×2 two-edge instance."""
    path = tmp_path / "tiny.tsv"
    path.write_text("u1\tv1\nu2\tv2\n", encoding="utf-8")
    return str(path)
