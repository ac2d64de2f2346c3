import pytest
from hypothesis import given, settings, strategies as st

from d2color import library
from d2color.generate import GenSpec, generate
from d2color.planar import (EmbeddedGraph, EmbeddingError, bridges, face_label, is_4plus_quad,
                            is_5553, structural_predicates, triangle_count)

POLYHEDRA = {
    # name: (V, E, F, face degree)
    "tetrahedron": (4, 6, 4, 3),
    "cube": (8, 12, 6, 4),
    "octahedron": (6, 12, 8, 3),
    "icosahedron": (12, 30, 20, 3),
    "dodecahedron": (20, 30, 12, 5),
}


@pytest.mark.parametrize("name", sorted(POLYHEDRA))
def test_polyhedron_counts(name):
    g = library.NAMED[name]()
    v, e, f, k = POLYHEDRA[name]
    assert (g.num_vertices, g.num_edges, len(g.faces())) == (v, e, f)
    assert all(face.degree == k for face in g.faces())
    g.check_planar()


def test_triangle_has_two_faces():
    g = EmbeddedGraph.from_rotations({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    faces = g.faces()
    assert len(faces) == 2
    assert all(f.degree == 3 for f in faces)


def test_path_single_face_walks_edges_twice():
    g = library.path(4)
    faces = g.faces()
    assert len(faces) == 1
    assert faces[0].degree == 6
    assert faces[0].has_repeated_vertex


def test_every_half_edge_in_one_face():
    g = library.icosahedron()
    seen = [h for f in g.faces() for h in f.half_edges]
    assert len(seen) == len(set(seen)) == 2 * g.num_edges
    for i, f in enumerate(g.faces()):
        assert all(g.face_of(h) == i for h in f.half_edges)


def test_twisted_rotation_is_not_planar():
    g = EmbeddedGraph.from_rotations({0: [1, 2, 3], 1: [0, 2, 3], 2: [0, 1, 3], 3: [0, 1, 2]})
    with pytest.raises(EmbeddingError):
        g.check_planar()


@pytest.mark.parametrize("rot, msg", [
    ({0: [1], 1: []}, "asymmetric"),
    ({0: [0]}, "loop"),
    ({0: [1, 1], 1: [0, 0]}, "parallel"),
])
def test_bad_rotations_rejected(rot, msg):
    with pytest.raises(EmbeddingError, match=msg):
        EmbeddedGraph.from_rotations(rot)


def test_triangle_count_octahedron():
    g = library.octahedron()
    assert all(triangle_count(g, v) == 4 for v in g.vertices)


def test_cube_has_no_triangles():
    g = library.cube()
    assert all(triangle_count(g, v) == 0 for v in g.vertices)


def test_face_classes():
    # signatures are sorted descending
    assert is_5553((5, 5, 5, 3))
    assert not is_5553((5, 5, 4, 3))
    assert is_4plus_quad((5, 4, 4, 4))
    assert not is_4plus_quad((5, 5, 4, 3))
    assert face_label((5, 5, 4)) == "(5,5,4)"


def test_bridges_on_path_and_cycle():
    assert len(bridges(library.path(5))) == 4
    assert bridges(library.cycle(5)) == []


def test_remove_edge_merges_faces():
    g = library.cube()
    e = g.edge_ids()[0]
    g.remove_edge(e)
    g.check_planar()
    assert len(g.faces()) == 5
    assert sorted(f.degree for f in g.faces()) == [4, 4, 4, 4, 6]


def test_remove_vertex_keeps_embedding():
    g = library.octahedron()
    g.remove_vertex(0)
    g.check_planar()
    assert g.num_vertices == 5 and g.num_edges == 8


def test_structural_predicates_on_cube():
    res = {p.name: p for p in structural_predicates(library.cube())}
    # every vertex of the cube has degree 3
    assert not res["L4"].ok
    assert res["L1"].ok


def _graphs():
    return st.builds(lambda s, n, m: generate(GenSpec(s, n, m)),
                     st.integers(0, 2 ** 64 - 1), st.integers(3, 40),
                     st.sampled_from(["triangulation-prune", "grid-patch"]))


@settings(max_examples=60, deadline=None)
@given(_graphs())
def test_handshake_and_euler(g):
    g.validate()
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.num_edges
    assert sum(f.degree for f in g.faces()) == 2 * g.num_edges
    assert g.is_connected()
    assert g.num_vertices - g.num_edges + len(g.faces()) == 2


@settings(max_examples=40, deadline=None)
@given(_graphs(), st.data())
def test_face_signature_matches_degrees(g, data):
    f = data.draw(st.sampled_from(g.faces()))
    assert tuple(sorted((g.degree(v) for v in f.vertices), reverse=True)) == f.signature
    assert len(f.vertices) == f.degree
