import subprocess
import sys
from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np
import pytest

from branetft import kernels
from branetft.complex import ComplexError, validate_complex
from branetft.coverings import (
    ConstraintMismatch,
    Covering,
    SearchBounds,
    SearchBoundsExceeded,
    automorphism_order,
    brane_setup,
    classify,
    covering_classes,
    covering_from_class,
    enumerate_coverings,
    gauge_group_order,
    glue_along_cut,
    hurwitz_d,
    labeled_count,
    local_invariant,
    restrict_to_cut,
    symmetric_cached,
)
from branetft.lab import bigon_circle, point, theta_graph
from branetft.surgery import is_brane, sphere_complex

from oracles import brute_automorphisms, monodromy_count, sphere_hurwitz

PARTS = {1: ["[1]"], 2: ["[1,1]", "[2]"], 3: ["[1,1,1]", "[2,1]", "[3]"], 4: ["[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"]}


def single_edge():
    return is_brane(validate_complex(["q1", "q2"], [("e1", "q1", "q2", "a")]), [("q1", "q2")])


def trivial_cover(bc, d):
    g = symmetric_cached(d)
    cx = bc.complex
    return Covering(cx, g, {key: g.identity for key, _, _ in brane_setup(cx, g).plan.arcs})


# sector classes


def test_bigon_circle_classes_degree2():
    cls = covering_classes(bigon_circle(), 2)
    assert [(c.name, c.aut_order) for c in cls] == [("[1,1]", 2), ("[2]", 2)]


def test_bigon_circle_classes_degree3():
    cls = covering_classes(bigon_circle(), 3)
    assert [(c.name, c.aut_order) for c in cls] == [("[1,1,1]", 6), ("[2,1]", 2), ("[3]", 3)]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_point_has_one_class(d):
    (c,) = covering_classes(point(), d)
    assert c.aut_order == factorial(d)


@pytest.mark.parametrize("d", [2, 3])
def test_theta_class_count_matches_orbit_count(d):
    # classes of pairs of free loops up to simultaneous conjugation, counted by Burnside
    perms = symmetric_cached(d).perms
    pairs = set(product(range(len(perms)), repeat=2))
    g = symmetric_cached(d)
    orbits = {min((g.conj(h, a), g.conj(h, b)) for h in range(len(g))) for a, b in pairs}
    cls = covering_classes(theta_graph(), d)
    assert len(cls) == len(orbits)
    assert sum(Fraction(1, c.aut_order) for c in cls) == Fraction(len(g) ** 2, len(g))


# enumeration


def test_bigon_sphere_transposition_pair():
    (c,) = enumerate_coverings(sphere_complex(2), 2, {"q1": "[2]", "q2": "[2]"})
    assert c.aut_order == 2


def test_parity_obstruction():
    assert enumerate_coverings(sphere_complex(3), 2, {q: "[2]" for q in ("q1", "q2", "q3")}) == []
    assert hurwitz_d(sphere_complex(3), 2, {q: "[2]" for q in ("q1", "q2", "q3")}).value == 0


def test_single_edge_unconstrained():
    (c,) = enumerate_coverings(single_edge(), 3)
    assert c.aut_order == 6


def test_unknown_constraint_vertex():
    with pytest.raises(ConstraintMismatch):
        hurwitz_d(sphere_complex(2), 2, {"nope": "[2]"})


def test_bounds_exceeded():
    with pytest.raises(SearchBoundsExceeded):
        hurwitz_d(sphere_complex(4), 4, {}, SearchBounds(4, 12, 10))


@pytest.mark.parametrize("d,n", [(d, n) for d in (1, 2, 3) for n in (2, 3, 4)])
def test_sphere_values_match_monodromy_count(d, n):
    bc = sphere_complex(n)
    for names in product(PARTS[d], repeat=n):
        got = hurwitz_d(bc, d, dict(zip(bc.vertex_ids, names))).value
        assert got == sphere_hurwitz(d, names), names


def test_named_sphere_values():
    s3, s4 = sphere_complex(3), sphere_complex(4)
    assert hurwitz_d(s3, 2, {"q1": "[2]", "q2": "[2]", "q3": "[1,1]"}).value == Fraction(1, 2)
    assert hurwitz_d(s4, 3, {q: "[2,1]" for q in s4.vertex_ids}).value == Fraction(9, 2)
    assert hurwitz_d(s3, 3, {q: "[3]" for q in s3.vertex_ids}).value == Fraction(1, 3)


# automorphisms


def test_trivial_cover_automorphisms():
    for d in (1, 2, 3):
        for bc in (sphere_complex(2), sphere_complex(3), single_edge()):
            assert automorphism_order(trivial_cover(bc, d)) == factorial(d)


def test_connected_cyclic_cover_of_circle():
    g = symmetric_cached(3)
    (c,) = [c for c in covering_classes(bigon_circle(), 3) if c.name == "[3]"]
    from branetft.coverings import sector_covering
    cov = sector_covering(c, g)
    assert automorphism_order(cov) == 3 == brute_automorphisms(cov)


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_automorphisms_match_brute_force(n, d):
    bc = sphere_complex(n)
    g = symmetric_cached(d)
    for names in product(PARTS[d], repeat=n):
        for c in enumerate_coverings(bc, d, dict(zip(bc.vertex_ids, names))):
            cov = covering_from_class(bc, g, c)
            assert automorphism_order(cov) == brute_automorphisms(cov) == c.aut_order


def test_bigon_sphere_transposition_cover_automorphisms():
    bc = sphere_complex(2)
    (c,) = enumerate_coverings(bc, 2, {"q1": "[2]", "q2": "[2]"})
    assert automorphism_order(covering_from_class(bc, symmetric_cached(2), c)) == 2


# local invariants and fibers


def test_trivial_cover_local_invariants():
    cov = trivial_cover(sphere_complex(3), 3)
    for q in ("q1", "q2", "q3"):
        assert local_invariant(cov, q).name == "[1,1,1]"
    assert cov.vertex_fibers() == {"q1": 3, "q2": 3, "q3": 3}
    with pytest.raises(ComplexError):
        local_invariant(cov, "zz")


def test_transposition_cover_local_invariants():
    bc = sphere_complex(2)
    (c,) = enumerate_coverings(bc, 2, {"q1": "[2]", "q2": "[2]"})
    cov = covering_from_class(bc, symmetric_cached(2), c)
    assert local_invariant(cov, "q1").name == local_invariant(cov, "q2").name == "[2]"
    assert cov.vertex_fibers() == {"q1": 1, "q2": 1}


# Burnside


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_labeled_count_is_gauge_times_hurwitz(n, d):
    bc = sphere_complex(n)
    g = symmetric_cached(d)
    gauge = gauge_group_order(bc, g)
    for names in product(PARTS[d], repeat=n):
        cons = dict(zip(bc.vertex_ids, names))
        lab = labeled_count(bc, g, cons)
        assert lab == gauge * monodromy_count(d, [tuple(map(int, x.strip("[]").split(","))) for x in names]) // factorial(d)
        assert Fraction(lab, gauge) == sum(Fraction(1, c.aut_order) for c in enumerate_coverings(bc, d, cons))


# cut and glue


def test_trivial_cover_restricts_to_trivial():
    bc = sphere_complex(4)
    gcov, _, _, _ = restrict_to_cut(trivial_cover(bc, 3), bc.cut({"q1", "q2"}), bc)
    assert classify(gcov).name == "[1,1,1]"


def test_transposition_cover_equatorial_cut():
    bc = sphere_complex(4)
    (c,) = enumerate_coverings(bc, 2, {q: "[2]" for q in bc.vertex_ids})
    cov = covering_from_class(bc, symmetric_cached(2), c)
    gcov, _, _, _ = restrict_to_cut(cov, bc.cut({"q1", "q2"}), bc)
    assert classify(gcov).name == "[1,1]"


def test_cut_glue_round_trip(catalog):
    for name, bc in catalog.items():
        for d in (1, 2, 3):
            g = symmetric_cached(d)
            try:
                classes = enumerate_coverings(bc, d, {}, SearchBounds(3, 12, 300_000))
            except SearchBoundsExceeded:
                continue
            for cut in bc.certificate.values():
                for c in classes:
                    cov = covering_from_class(bc, g, c)
                    _, pieces, _, _ = restrict_to_cut(cov, cut, bc)
                    assert classify(glue_along_cut(bc, cut, pieces)).class_key == c.class_key, name


# kernels


def test_backends_agree():
    backs = kernels.backends()
    bc = sphere_complex(3)
    g = symmetric_cached(3)
    args, _ = brane_setup(bc, g)._kernel_args(reduced=False)
    outs = [m.local_codes(g.table, g.inverse, identity=g.identity, **args) for m in backs.values()]
    assert all(np.array_equal(o, outs[0]) for o in outs)
    rng = np.random.default_rng(3)
    tuples = rng.integers(0, len(g), size=(500, 3))
    canon = [m.conj_canon(g.table, g.inverse, tuples, [0, 0, 0], 1) for m in backs.values()]
    for a, b in zip(canon, canon[1:]):
        assert all(np.array_equal(x, y) for x, y in zip(a, b))


def test_pure_fallback_selected_by_environment():
    code = ("import branetft.kernels as k; from branetft.coverings import hurwitz_d;"
            "from branetft.surgery import sphere_complex;"
            "print(k.BACKEND, hurwitz_d(sphere_complex(4), 3, {q: '[2,1]' for q in ('q1','q2','q3','q4')}))")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"BRANETFT_PURE": "1", "PATH": ""}, check=True).stdout.split()
    assert out == ["python", "9/2"]
