import pytest

from hemicones import graphs
from hemicones.cones import build_cone_h, build_cone_p
from hemicones.dd import facets_from_rays, incidence, rays_from_inequalities
from hemicones.errors import GraphTooLarge
from hemicones.graphs import (
    Graph,
    clique_product,
    complete_graph,
    complete_minus_cliques,
    complete_minus_cycle,
    complete_multipartite,
    cube_graph,
    cycle_graph,
    diameter,
    empty_graph,
    face_neighbors,
    identify_graph,
    isomorphic,
    johnson_graph,
    local_graph,
    octahedron_graph,
    petersen_graph,
    ridge,
    skeleton,
    subdivide,
)


def test_graph_basics():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edge_count == 3
    assert g.degree(1) == 2
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.degree_sequence() == [1, 1, 2, 2]
    assert g.is_connected()
    assert diameter(g) == 3


def test_graph_complement():
    g = cycle_graph(5)
    assert isomorphic(g.complement(), cycle_graph(5))
    k = complete_graph(4)
    assert k.complement().edge_count == 0


def test_bfs_and_diameter():
    assert diameter(petersen_graph()) == 2
    assert diameter(cycle_graph(6)) == 3
    assert diameter(complete_graph(7)) == 1
    assert diameter(empty_graph(1)) == 0


def test_diameter_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert diameter(g) == float("inf")


def test_constructions_counts():
    assert octahedron_graph().edge_count == 12
    assert cube_graph().edge_count == 12
    assert johnson_graph(5, 2).nv == 10
    assert petersen_graph().edge_count == 15
    assert complete_multipartite([4] * 5).edge_count == (20 * 16) // 2
    assert clique_product([2, 2, 2]).edge_count == cube_graph().edge_count


def test_johnson_is_triangular_graph():
    # J(5,2) is the complement of Petersen
    assert isomorphic(johnson_graph(5, 2), petersen_graph().complement())


def test_clique_product_vs_cube():
    assert isomorphic(clique_product([2, 2, 2]), cube_graph())
    assert isomorphic(clique_product([3]), complete_graph(3))
    # K_2 x K_3 is the triangular prism, i.e. the complement of C_6
    assert isomorphic(clique_product([2, 3]), cycle_graph(6).complement())


def test_identify_graph_catalog():
    assert identify_graph(complete_graph(1)) == "K_1"
    assert identify_graph(empty_graph(3)) == "empty"
    assert identify_graph(complete_graph(6)) == "K_6"
    assert identify_graph(cycle_graph(5)) == "C_5"
    assert identify_graph(petersen_graph()) == "Petersen"
    assert identify_graph(octahedron_graph()) == "octahedron"
    assert identify_graph(cube_graph()) == "cube"
    assert identify_graph(complete_multipartite([4] * 5)) == "K_{4,4,4,4,4}"
    assert identify_graph(johnson_graph(6, 2)) == "J(6,2)"
    assert identify_graph(complete_minus_cycle(9, 4)) == "K_9 - C_4"
    assert identify_graph(complete_minus_cliques(45, 15, 3)) == "K_45 - 15K_3"
    assert identify_graph(clique_product([6, 7])) == "H(6,7)"
    assert identify_graph(subdivide(petersen_graph())) == "Petersen subdivision"


def test_identify_graph_prism():
    # K_6 minus a hexagon is the triangular prism's complement pattern
    g = complete_minus_cycle(6, 6)
    assert identify_graph(g) == "K_6 - C_6"


def test_identify_graph_multipartite_vs_difference():
    # complement = 5 disjoint K_4 blocks: named as multipartite (q small)
    assert identify_graph(complete_multipartite([4, 4, 4, 4, 4])) == "K_{4,4,4,4,4}"
    # many blocks: named as a clique difference
    assert identify_graph(complete_minus_cliques(45, 15, 3)) == "K_45 - 15K_3"


def test_identify_graph_complement_of_johnson():
    g = johnson_graph(6, 3).complement()
    assert identify_graph(g) == "complement of J(6,3)"


def test_identify_unknown_returns_none():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
                             (6, 0), (0, 3)])
    assert identify_graph(g) is None


def test_identify_graph_too_large():
    with pytest.raises(GraphTooLarge):
        identify_graph(empty_graph(65))


def test_local_graph():
    g = octahedron_graph()
    lg = local_graph(g, 0)
    assert isomorphic(lg, cycle_graph(4))


def test_skeleton_p42_is_octahedron():
    rays = rays_from_inequalities(build_cone_h("nhm", 4, 2))
    facets = facets_from_rays(rays)
    inc = incidence(facets, rays)
    sk = skeleton(rays, facets, inc=inc)
    assert sk.kind == "skeleton"
    assert identify_graph(sk.graph) == "octahedron"


def test_ridge_p42_is_cube():
    rays = rays_from_inequalities(build_cone_h("nhm", 4, 2))
    facets = facets_from_rays(rays)
    inc = incidence(facets, rays)
    rg = ridge(facets, rays, inc=inc)
    assert rg.kind == "ridge"
    assert identify_graph(rg.graph) == "cube"


def test_skeleton_methods_agree():
    cone = build_cone_h("nhm", 5, 2)
    rays = rays_from_inequalities(cone)
    facets = facets_from_rays(rays)
    inc = incidence(facets, rays)
    a = skeleton(rays, facets, inc=inc, method="rank")
    b = skeleton(rays, facets, inc=inc, method="witness")
    assert set(a.graph.edges()) == set(b.graph.edges())
    assert a.graph.edge_count == 420


def test_ridge_methods_agree():
    cone = build_cone_h("nhm", 5, 2)
    rays = rays_from_inequalities(cone)
    facets = facets_from_rays(rays)
    inc = incidence(facets, rays)
    a = ridge(facets, rays, inc=inc, method="rank")
    b = ridge(facets, rays, inc=inc, method="witness")
    assert set(a.graph.edges()) == set(b.graph.edges())
    assert a.graph.edge_count == 355


def test_face_neighbors_matches_skeleton():
    cone = build_cone_h("nhm", 5, 2)
    rays = rays_from_inequalities(cone)
    facets = facets_from_rays(rays)
    inc = incidence(facets, rays)
    sk = skeleton(rays, facets, inc=inc)
    words = inc.ray_words()
    for i in range(len(rays)):
        assert sorted(face_neighbors(words, i, rays.dim)) == sorted(
            sk.graph.neighbors(i))


def test_named_edges():
    rays = rays_from_inequalities(build_cone_h("nhm", 4, 2))
    facets = facets_from_rays(rays)
    inc = incidence(facets, rays)
    names = [f"r{i}" for i in range(len(rays))]
    sk = skeleton(rays, facets, inc=inc, names=names)
    assert sk.names == names
    assert all(a in names and b in names for a, b in sk.named_edges())
