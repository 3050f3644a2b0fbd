import pytest

from gpdim.graph import bfs_oracle


@pytest.fixture(scope="session")
def oracle():
    """Session-wide cache of BFS oracles keyed by (n, m)."""
    cache = {}

    def get(n, m=3):
        if (n, m) not in cache:
            cache[(n, m)] = bfs_oracle(n, m)
        return cache[(n, m)]

    return get
