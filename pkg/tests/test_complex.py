import random

import pytest

from branetft.complex import (
    ColorClash,
    DanglingCell,
    LoopEdge,
    NonSimpleFaceBoundary,
    UnknownVertex,
    Vertex,
    canonical_form,
    complex_key,
    disjoint_union,
    link,
    star_involution,
    validate_complex,
)
from branetft.lab import bigon_circle, point, random_relabeling, theta_graph
from branetft.surgery import (
    MissingCut,
    NonContiguousSplit,
    compatible_complex,
    contract_along_cut,
    find_cuts,
    foam_complex,
    is_brane,
    sphere_complex,
    suspension,
)

from oracles import transversal_cuts


def bigon_sphere_cells(reverse_e2=False):
    e2 = ("e2", "q2", "q1", "c2") if reverse_e2 else ("e2", "q1", "q2", "c2")
    s = -1 if reverse_e2 else 1
    return (["q1", "q2"], [("e1", "q1", "q2", "c1"), e2],
            [("f1", "c3", [("e1", 1), ("e2", -s)]), ("f2", "c4", [("e2", s), ("e1", -1)])])


def single_edge():
    return validate_complex(["q1", "q2"], [("e1", "q1", "q2", "a")])


# validation


def test_bigon_sphere_is_valid():
    cx = validate_complex(*bigon_sphere_cells())
    assert (len(cx.vertices), len(cx.edges), len(cx.faces), cx.dim) == (2, 2, 2, 2)
    assert cx.euler_characteristic() == 2


def test_loop_edge_rejected():
    with pytest.raises(LoopEdge):
        validate_complex(["q1"], [("e1", "q1", "q1", "a")])


def test_shared_edge_color_rejected():
    with pytest.raises(ColorClash):
        validate_complex(["a", "b", "c"], [("e1", "a", "b", "red"), ("e2", "b", "c", "red")])


def test_same_color_in_different_components_allowed():
    cx = validate_complex(["a", "b", "c", "d"], [("e1", "a", "b", "red"), ("e2", "c", "d", "red")])
    assert len(cx.components) == 2


@pytest.mark.parametrize("faces, exc", [
    ([("f1", "x", [("e1", 1)])], NonSimpleFaceBoundary),
    ([("f1", "x", [("e1", 1), ("e1", -1)])], NonSimpleFaceBoundary),
    ([("f1", "x", [("e1", 1), ("e2", 1)])], NonSimpleFaceBoundary),
])
def test_bad_face_boundaries(faces, exc):
    with pytest.raises(exc):
        validate_complex(["q1", "q2"], [("e1", "q1", "q2", "a"), ("e2", "q1", "q2", "b")], faces)


def test_dangling_and_unknown_cells():
    with pytest.raises(DanglingCell):
        validate_complex(["q1", "q2", "q3"], [("e1", "q1", "q2", "a")])
    with pytest.raises(UnknownVertex):
        validate_complex(["q1"], [("e1", "q1", "q9", "a")])


def test_all_violations_are_collected():
    with pytest.raises(LoopEdge) as info:
        validate_complex(["q1", "q2"], [("e1", "q1", "q1", "a"), ("e2", "q2", "q2", "b")])
    assert len(info.value.violations) == 2


# canonical form


def test_canonical_form_isomorphism_invariance(catalog):
    rng = random.Random(7)
    for name, bc in catalog.items():
        key = complex_key(bc.complex)
        for _ in range(500):
            other, _ = random_relabeling(bc, rng)
            assert complex_key(other.complex) == key, name


def test_catalog_keys_are_distinct(catalog):
    keys = [complex_key(bc.complex) for bc in catalog.values()]
    assert len(set(keys)) == len(keys)


def test_orientation_is_part_of_the_key():
    a = validate_complex(*bigon_sphere_cells())
    b = validate_complex(*bigon_sphere_cells(reverse_e2=True))
    assert complex_key(a) != complex_key(b)


def test_sphere_sizes_have_different_keys():
    assert complex_key(sphere_complex(3).complex) != complex_key(sphere_complex(4).complex)


def test_canonical_map_is_an_isomorphism(catalog):
    for bc in catalog.values():
        cf = canonical_form(bc.complex)
        for e in bc.complex.edges:
            ce = cf.complex.edge[cf.edge_map[e.id]]
            assert (ce.tail, ce.head, ce.color) == (cf.vertex_map[e.tail], cf.vertex_map[e.head], e.color)


# links and star


def test_equator_link_is_bigon_circle():
    for n in (3, 4):
        bc = sphere_complex(n)
        for q in bc.vertex_ids:
            lk = link(bc.complex, q).complex
            assert (len(lk.vertices), len(lk.edges), lk.dim) == (2, 2, 1)


def test_suspension_apex_link_is_sigma():
    for sigma in (point(), bigon_circle(), theta_graph()):
        bc = suspension(sigma)
        q1 = bc.orders[0][0]
        assert complex_key(link(bc.complex, q1).complex) == complex_key(sigma)


def test_single_edge_link_is_point():
    lk = link(single_edge(), "q1").complex
    assert (len(lk.vertices), len(lk.edges)) == (1, 0)


def test_star_reverses_edges():
    cx = validate_complex(["a", "b"], [("e", "a", "b", "c")])
    e = star_involution(cx).edge["e"]
    assert (e.tail, e.head) == ("b", "a")
    circ = star_involution(bigon_circle())
    assert all(e.tail != f.tail for e, f in zip(circ.edges, bigon_circle().edges))


def test_star_is_an_involution(catalog):
    for bc in catalog.values():
        assert complex_key(star_involution(star_involution(bc.complex))) == complex_key(bc.complex)
    s = sphere_complex(3).complex
    ss = star_involution(star_involution(s))
    assert (ss.vertices, ss.edges, ss.faces) == (s.vertices, s.edges, s.faces)


# cuts


def test_sphere4_equatorial_cut_matches_exhaustive_search():
    bc = sphere_complex(4)
    plus, minus = {"q1", "q2"}, {"q3", "q4"}
    cuts = find_cuts(bc, plus, minus)
    assert len(cuts) == 1
    (c,) = cuts
    assert len(c.crossed_edges) == 2 and set(c.crossed_faces) == {"N", "S"}
    brute = transversal_cuts(bc.complex, plus, minus)
    assert brute == [(frozenset(c.crossed_edges),
                      frozenset((f, frozenset(ij)) for f, ij in c.crossed_faces.items()))]
    g = c.gamma
    assert (len(g.vertices), len(g.edges)) == (2, 2)


def test_every_certificate_cut_matches_exhaustive_search(catalog):
    for name, bc in catalog.items():
        if len(bc.complex.edges) > 6:
            continue
        for c in bc.certificate.values():
            brute = transversal_cuts(bc.complex, c.plus, c.minus)
            assert len(brute) == 1, name
            assert brute[0][0] == frozenset(c.crossed_edges), name


def test_single_edge_cut_is_a_point():
    (c,) = find_cuts(single_edge(), {"q1"}, {"q2"})
    assert (len(c.gamma.vertices), len(c.gamma.edges)) == (1, 0)


def test_triangle_graph_has_no_cut():
    tri = validate_complex(["a", "b", "c"], [("x", "a", "b", "1"), ("y", "b", "c", "2"), ("z", "c", "a", "3")])
    for plus in ({"a"}, {"b"}, {"a", "b"}):
        assert find_cuts(tri, plus, {"a", "b", "c"} - plus) == []
        assert transversal_cuts(tri, plus, {"a", "b", "c"} - plus) == []


def test_non_contiguous_split_rejected():
    with pytest.raises(NonContiguousSplit):
        find_cuts(sphere_complex(4), {"q1", "q3"}, {"q2", "q4"})


# brane structure


def test_sphere3_is_brane_for_every_order():
    from itertools import permutations
    cx = sphere_complex(3).complex
    for order in permutations(["q1", "q2", "q3"]):
        assert is_brane(cx, [order]).orders == (order,)


def test_sphere4_brane_orders_are_the_dihedral_ones():
    # a split into two non-adjacent pairs needs two chords in a polar face
    from itertools import permutations
    cx = sphere_complex(4).complex
    for order in permutations(["q1", "q2", "q3", "q4"]):
        pairs = [{order[0], order[1]}, {order[1], order[2]}]
        separable = all(transversal_cuts(cx, p, {"q1", "q2", "q3", "q4"} - p) for p in pairs)
        if separable:
            assert is_brane(cx, [order]).orders == (order,)
        else:
            with pytest.raises(MissingCut):
                is_brane(cx, [order])


def test_single_edge_is_brane():
    assert is_brane(single_edge(), [("q1", "q2")])


def test_path_graph_missing_cut():
    path = validate_complex(["q1", "q2", "q3"], [("a", "q2", "q1", "x"), ("b", "q1", "q3", "y")])
    with pytest.raises(MissingCut) as info:
        is_brane(path, [("q1", "q2", "q3")])
    plus, minus = info.value.split
    assert {frozenset(plus), frozenset(minus)} == {frozenset({"q1"}), frozenset({"q2", "q3"})}


# surgery


def test_sphere4_contracts_to_two_sphere3():
    bc = sphere_complex(4)
    out, qp, qm = contract_along_cut(bc, bc.cut({"q1", "q2"}))
    comps = out.complex.components
    assert len(comps) == 2
    from branetft.complex import isomorphic_up_to_recoloring
    for comp in comps:
        piece = out.complex.subcomplex(comp)
        assert isomorphic_up_to_recoloring(piece, sphere_complex(3).complex)
    assert qp in out.vertex_ids and qm in out.vertex_ids


def test_suspension_cut_gives_two_suspensions():
    from branetft.complex import isomorphic_up_to_recoloring
    for sigma in (point(), bigon_circle(), theta_graph()):
        bc = suspension(sigma)
        (c,) = bc.certificate.values()
        out, _, _ = contract_along_cut(bc, c)
        for comp in out.complex.components:
            assert isomorphic_up_to_recoloring(out.complex.subcomplex(comp), bc.complex)


def test_single_edge_cut_gives_two_edges():
    bc = is_brane(single_edge(), [("q1", "q2")])
    out, _, _ = contract_along_cut(bc, bc.cut({"q1"}))
    assert [len(out.complex.subcomplex(c).edges) for c in out.complex.components] == [1, 1]


def test_suspensions_and_spheres():
    assert len(suspension(point()).complex.edges) == 1
    assert complex_key(suspension(bigon_circle()).complex)[0][1].__len__() == 2
    th = suspension(theta_graph())
    assert (len(th.complex.edges), len(th.complex.faces)) == (2, 3)
    for n, (v, e, f) in {2: (2, 2, 2), 3: (3, 3, 2)}.items():
        s = sphere_complex(n).complex
        assert (len(s.vertices), len(s.edges), len(s.faces)) == (v, e, f)
    assert sphere_complex(4).complex.euler_characteristic() == 2


def test_foam_links_are_theta_graphs():
    bc = foam_complex(3)
    for q in bc.vertex_ids:
        lk = link(bc.complex, q).complex
        assert (len(lk.vertices), len(lk.edges)) == (2, 3)


# reconstruction


def test_reconstruction_from_own_links(catalog):
    for name, bc in catalog.items():
        order = bc.orders[0]
        rebuilt = compatible_complex([link(bc.complex, q).complex for q in order])
        assert rebuilt is not None, name
        assert complex_key(rebuilt.complex) == complex_key(bc.complex), name


def test_bigon_and_its_star_rebuild_the_bigon_sphere():
    sigma = link(sphere_complex(2).complex, "q1").complex
    rebuilt = compatible_complex([sigma, star_involution(sigma)])
    assert complex_key(rebuilt.complex) == complex_key(sphere_complex(2).complex)


def test_three_points_have_no_compatible_complex():
    assert compatible_complex([point("a", 1), point("a", -1), point("b", 1)]) is None
    assert compatible_complex([point(), point(), point()]) is None


def test_disjoint_union_counts():
    u = disjoint_union(sphere_complex(3).complex, single_edge())
    assert len(u.components) == 2 and len(u.vertices) == 5
    assert isinstance(u.vertices[0], Vertex)
