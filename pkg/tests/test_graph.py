"""Construction and BFS-oracle tests, cross-checked against networkx."""

import random

import networkx as nx
import numpy as np
import pytest

from gpdim.graph import (
    GPParams,
    ParameterDomainError,
    VertexRef,
    bfs_all_pairs,
    build_graph,
    wrap,
)

U, V = VertexRef.u, VertexRef.v


def to_networkx(g):
    G = nx.Graph()
    for pos in range(g.num_vertices):
        for nb in g.adjacency[pos]:
            G.add_edge(pos, int(nb))
    return G


def test_smallest_legal_instance():
    g = build_graph(GPParams(3, 1))
    assert g.num_vertices == 6
    assert g.num_edges == 9
    degrees = [len(g.neighbors(VertexRef.from_lin(p, 3))) for p in range(6)]
    assert degrees == [3] * 6


def test_u1_neighbors_in_p38_3():
    g = build_graph(GPParams(38, 3))
    assert g.neighbors(U(1)) == [U(2), U(38), V(1)]


def test_inner_neighbors_wrap():
    g = build_graph(GPParams(39, 3))
    assert g.neighbors(V(1)) == [U(1), V(4), V(37)]
    assert g.neighbors(U(39)) == [U(1), U(38), V(39)]
    g2 = build_graph(GPParams(10, 2))
    assert g2.neighbors(V(2)) == [U(2), V(4), V(10)]


@pytest.mark.parametrize("n,m", [(38, 19), (8, 4), (2, 1), (5, 0)])
def test_parameter_domain_rejected(n, m):
    with pytest.raises(ParameterDomainError):
        GPParams(n, m)


def test_p8_3_is_legal():
    # floor((8-1)/2) = 3, so m = 3 is inside the domain (the Moebius-Kantor
    # graph); only m = 4 falls outside for n = 8.
    g = build_graph(GPParams(8, 3))
    assert g.num_vertices == 16


def test_wrap():
    assert wrap(0, 39) == 39
    assert wrap(40, 39) == 1
    assert wrap(-2, 39) == 37


def test_vertex_ref_roundtrip():
    assert VertexRef.parse("u17") == U(17)
    assert VertexRef.parse("v38") == V(38)
    assert V(5).lin(39) == 43
    assert VertexRef.from_lin(43, 39) == V(5)
    assert U(3).corresponding() == V(3)


def test_bfs_diagonal_and_spoke(oracle):
    o = oracle(39)
    assert o.distance(U(1), U(1)) == 0
    assert o.distance(U(1), V(1)) == 1


def test_bfs_derived_distances(oracle):
    # Frozen from the BFS oracle; u1-u20 cross-checks the closed form
    # gap_cost(19) + 2 = 9, and v1-v20 lands on 9 as well.
    o = oracle(38)
    assert o.distance(U(1), U(20)) == 9
    assert o.distance(V(1), V(20)) == 9


@pytest.mark.parametrize("n,m", [(10, 2), (17, 5), (38, 3), (39, 3), (61, 7)])
def test_bfs_matches_networkx(n, m):
    g = build_graph(GPParams(n, m))
    o = bfs_all_pairs(g)
    lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(g)))
    for src in range(2 * n):
        for dst in range(2 * n):
            assert o.matrix[src, dst] == lengths[src][dst]


@pytest.mark.parametrize("n,m", [(38, 3), (97, 11), (200, 3), (200, 99)])
def test_matrix_invariants(n, m):
    o = bfs_all_pairs(build_graph(GPParams(n, m)))
    mat = o.matrix
    assert np.array_equal(mat, mat.T)
    assert not mat.diagonal().any()
    assert mat.max() <= n
    rng = random.Random(1318)
    for _ in range(1000):
        a, b, c = (rng.randrange(2 * n) for _ in range(3))
        assert mat[a, c] <= mat[a, b] + mat[b, c]


def test_every_vertex_cubic():
    for n, m in [(3, 1), (11, 2), (38, 3), (45, 3)]:
        g = build_graph(GPParams(n, m))
        for pos in range(g.num_vertices):
            nbs = g.adjacency[pos]
            assert len(set(int(x) for x in nbs)) == 3


def _inner_component_count(n):
    g = build_graph(GPParams(n, 3))
    G = nx.Graph()
    G.add_nodes_from(range(n, 2 * n))
    for pos in range(n, 2 * n):
        for nb in g.adjacency[pos]:
            if nb >= n:
                G.add_edge(pos, int(nb))
    return nx.number_connected_components(G)


def test_inner_cycle_structure():
    # m = 3 splits the inside into three n/3-cycles exactly when 3 | n.
    assert _inner_component_count(39) == 3
    assert _inner_component_count(45) == 3
    assert _inner_component_count(38) == 1
    assert _inner_component_count(40) == 1


def test_oracle_matrix_immutable(oracle):
    o = oracle(38)
    with pytest.raises(ValueError):
        o.matrix[0, 0] = 5
