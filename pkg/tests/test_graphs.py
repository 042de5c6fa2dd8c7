"""Graph construction, invariants (with networkx as oracle), and exports."""
import json
import math

import networkx as nx
import pytest

from sumess import (
    CliqueSearchCapExceeded,
    build_module,
    enumerate_lattice,
    export_json,
    integer_module,
    matrix_ring_presentation,
    n_partite_witness,
    proper_sum_essential_graph,
    sum_essential_graph,
)

INF = float("inf")


def _nx_graph(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertex_ids)
    G.add_edges_from(g.edges())
    return G


def _label_degrees(az, g):
    return {az.lattice.subs[v].label: g.degree(v) for v in g.vertex_ids}


# -- frozen examples -----------------------------------------------------------------


def test_z8z2_proper_graph_frozen(z8z2):
    n = z8z2.n_graph
    assert n.n_vertices == 7
    assert n.n_edges() == 15
    assert _label_degrees(z8z2, n) == {
        "<(4,0)>": 2,
        "<(0,1)>": 6,
        "<(4,1)>": 6,
        "<(2,0)>": 3,
        "<(2,1)>": 5,
        "<(1,0)>": 4,
        "<(1,1)>": 4,
    }
    assert n.is_connected()
    assert n.diameter() == 2
    assert n.girth() == 3


def test_z8z2_full_graph_frozen(z8z2):
    s = z8z2.s_graph
    assert s.n_vertices == 9
    assert s.girth() == 3
    assert s.is_connected()
    # universal vertices of S are essential or simple
    lat = z8z2.lattice
    for v in s.universal_vertices():
        assert lat.is_essential(v) or v in lat.atoms


def test_z4z3_path(z4z3):
    n = z4z3.n_graph
    assert n.n_vertices == 3
    assert n.n_edges() == 2
    assert sorted(n.degrees().values()) == [1, 1, 2]
    assert n.is_tree()
    assert n.is_star()
    center = n.star_center()
    assert z4z3.lattice.subs[center].size == 3  # the order-3 factor
    assert n.girth() == INF


def test_z4z9_four_cycle(z4z9):
    n = z4z9.n_graph
    assert n.n_vertices == 4
    assert n.k_regular() == 2
    assert n.girth() == 4
    assert not n.is_tree()
    assert n.triangle_free()
    assert n.diameter() == 2


def test_z8z3_star(z8z3):
    n = z8z3.n_graph
    assert n.is_star()
    assert n.girth() == INF
    centers = n.star_centers()
    assert len(centers) == 1
    assert z8z3.lattice.subs[centers[0]].size == 3


def test_z2z3z5_degrees(z2z3z5):
    n = z2z3z5.n_graph
    assert sorted(n.degrees().values()) == [1, 1, 1, 3, 3, 3]
    assert n.diameter() == 3
    assert n.n_vertices == 6


def test_matrix_ring_triangle():
    lat = enumerate_lattice(build_module(matrix_ring_presentation()))
    s = sum_essential_graph(lat)
    n = proper_sum_essential_graph(lat)
    assert s.n_vertices == n.n_vertices == 3
    assert s.is_complete() and n.is_complete()
    assert s.k_regular() == 2


# -- oracles over the corpus ----------------------------------------------------------


def test_invariants_match_networkx(corpus_analyses):
    for name, az in corpus_analyses.items():
        for g in (az.s_graph, az.n_graph):
            if g.n_vertices == 0:
                continue
            G = _nx_graph(g)
            assert g.n_edges() == G.number_of_edges(), name
            assert g.is_connected() == nx.is_connected(G), name
            assert g.component_count() == nx.number_connected_components(G), name
            if g.is_connected() and g.n_vertices > 1:
                assert g.diameter() == nx.diameter(G), name
            nx_girth = nx.girth(G)
            assert g.girth() == nx_girth, name
            tri = sum(nx.triangles(G).values()) > 0
            assert (not g.triangle_free()) == tri, name


def test_adjacency_is_essential_sum(corpus_analyses):
    for name in ("z8z2", "z4z9", "z2z2z3", "m2f2"):
        az = corpus_analyses[name]
        lat = az.lattice
        for g in (az.s_graph, az.n_graph):
            for a in g.vertex_ids:
                for b in g.vertex_ids:
                    if a == b:
                        continue
                    assert g.adjacent(a, b) == lat.is_essential(lat.join(a, b))


def test_proper_graph_is_induced_subgraph(corpus_analyses):
    for name, az in corpus_analyses.items():
        lat, s, n = az.lattice, az.s_graph, az.n_graph
        expect_vertices = [v for v in s.vertex_ids if not lat.is_essential(v)]
        assert list(n.vertex_ids) == expect_vertices, name
        keep = set(expect_vertices)
        expect_edges = {(a, b) for a, b in s.edges() if a in keep and b in keep}
        assert set(n.edges()) == expect_edges, name


def test_degree_monotone_under_containment(z8z2, z2z3z5):
    """A submodule's graph neighborhood only grows when the submodule grows."""
    for az in (z8z2, z2z3z5):
        lat = az.lattice
        for g in (az.s_graph, az.n_graph):
            for x in g.vertex_ids:
                for a in g.vertex_ids:
                    if x != a and lat.leq(x, a):
                        nx_, na = set(g.neighbors(x)), set(g.neighbors(a))
                        assert nx_ - {a} <= na | {x}


# -- searches -------------------------------------------------------------------------


def test_triangle_returns_real_triangle(z8z2):
    n = z8z2.n_graph
    t = n.triangle()
    assert t is not None
    a, b, c = t
    assert n.adjacent(a, b) and n.adjacent(b, c) and n.adjacent(a, c)


def test_find_clique(z8z2):
    n = z8z2.n_graph
    c4 = n.find_clique(4)
    if c4 is not None:
        assert n.is_clique(c4)
    c3 = n.find_clique(3)
    assert c3 is not None and n.is_clique(c3)
    assert n.find_clique(8) is None  # only 7 vertices


def test_find_clique_cap():
    lat = enumerate_lattice(build_module(integer_module("m", 2, 2, 2)))
    s = sum_essential_graph(lat)
    with pytest.raises(CliqueSearchCapExceeded):
        s.find_clique(5, max_nodes=1)


def test_complete_multipartite_parts():
    lat = enumerate_lattice(build_module(integer_module("m", 2, 3)))
    s = sum_essential_graph(lat)
    parts = s.complete_multipartite_parts()
    assert parts is not None
    assert sorted(len(p) for p in parts) == [1, 1]
    # the path on 3 vertices is the star K_{1,2}, so it does qualify
    lat2 = enumerate_lattice(build_module(integer_module("m", 4, 3)))
    n2 = proper_sum_essential_graph(lat2)
    assert sorted(len(p) for p in n2.complete_multipartite_parts()) == [1, 2]


def test_not_complete_multipartite(z8z2):
    # degree 2 with 7 vertices would force a part of size 5, degree 3 a part
    # of size 4, and so on; the sizes cannot tile the vertex set
    assert z8z2.n_graph.complete_multipartite_parts() is None


def test_npartite_witness_semisimple(corpus_analyses):
    az = corpus_analyses["z2z2z3"]
    w = n_partite_witness(az.lattice, az.s_graph)
    assert w.kind == "partition"
    assert w.valid
    assert len(w.parts) == len(az.lattice.coatoms)


def test_npartite_witness_clique(z8z2):
    w = n_partite_witness(z8z2.lattice, z8z2.s_graph)
    assert w.kind == "clique"
    assert w.valid
    assert len(w.clique) == len(z8z2.lattice.coatoms) + 1


# -- exports --------------------------------------------------------------------------


def test_dot_deterministic_and_wellformed(z8z2):
    s = z8z2.s_graph
    d1 = s.export_dot("z8z2_s")
    d2 = s.export_dot("z8z2_s")
    assert d1 == d2
    assert d1.startswith("graph ")
    assert d1.count(" -- ") == s.n_edges()
    assert d1.count("label=") == s.n_vertices


def test_json_report_roundtrip(z4z3):
    n = z4z3.n_graph
    data = json.loads(export_json(n))
    assert data["vertex_count"] == 3
    assert data["edge_count"] == 2
    assert data["girth"] == "inf"
    assert data["is_tree"] is True
    s = json.loads(export_json(z4z3.s_graph))
    assert s["kind"] == "s"


def test_report_histogram(z2z3z5):
    rep = z2z3z5.n_graph.report()
    assert rep.degree_histogram == {1: 3, 3: 3}
    assert rep.min_degree == 1
    assert rep.max_degree == 3
