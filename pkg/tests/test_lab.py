from fractions import Fraction

import pytest

from branetft.complex import link
from branetft.coverings import SearchBounds, hurwitz_d
from branetft.frobenius import copairing_identity_holds, verify_algebra_axioms
from branetft.groups import cyclic, symmetric
from branetft.lab import (
    OutOfBounds,
    TheoryConfig,
    TruncationInsufficient,
    bigon_circle,
    build_hurwitz_algebra,
    character_oracle,
    character_oracle_tables,
    cross_check_evaluator,
    default_catalog,
    point,
    theta_graph,
    verify_burnside,
    verify_gluing_identity,
    verify_sd_coincidence,
    verify_tft_axioms,
)
from branetft.surgery import sphere_complex, suspension

H = Fraction(1, 2)


@pytest.fixture(scope="module")
def small_catalog():
    cat = default_catalog()
    return {k: cat[k] for k in ("bigon_sphere", "sphere3", "sphere4")}


def theory(cfg):
    return build_hurwitz_algebra(cfg)


def test_degree2_bigon_gram():
    th = theory(TheoryConfig.degree(2, sectors=[bigon_circle()]))
    sid = th.sector_id(bigon_circle())
    assert th.algebra.basis[sid] == ("[1,1]", "[2]")
    assert th.algebra.gram[sid] == ((H, 0), (0, H)) or [list(r) for r in th.algebra.gram[sid]] == [[H, 0], [0, H]]


def test_degree2_trilinear_matches_sphere3_values(catalog):
    th = theory(TheoryConfig.degree(2, [catalog["sphere3"]]))
    A = th.algebra
    sids = [th.sector_id(link(catalog["sphere3"].complex, q).complex) for q in ("q1", "q2", "q3")]
    i11, i2 = A.basis[sids[0]].index("[1,1]"), A.basis[sids[0]].index("[2]")
    assert A.tri(*sids, i11, i11, i11) == H
    assert A.tri(*sids, i2, i2, i11) == H
    assert A.tri(*sids, i2, i2, i2) == 0


def test_degree1_algebra_is_trivial(catalog):
    A = theory(TheoryConfig.degree(1, catalog.values())).algebra
    for s in A.ids():
        assert A.dim(s) == 1 and [list(r) for r in A.gram[s]] == [[1]]
    for key in A.allowed:
        assert A.tri(*key, 0, 0, 0) == 1
    assert all(r.passed for r in verify_algebra_axioms(A))


def test_c2_bigon_gram():
    th = theory(TheoryConfig.of_group(cyclic(2), sectors=[bigon_circle()]))
    sid = th.sector_id(bigon_circle())
    assert [list(r) for r in th.algebra.gram[sid]] == [[H, 0], [0, H]]


def test_unknown_sector_is_reported():
    th = theory(TheoryConfig.degree(2, sectors=[point()]))
    with pytest.raises(TruncationInsufficient):
        th.sector_id(theta_graph())


@pytest.mark.parametrize("cfg", [TheoryConfig.degree(2), TheoryConfig.of_group("C2")], ids=["d2", "C2"])
def test_tft_axioms_pass(cfg, small_catalog):
    cfg = TheoryConfig(cfg.group, cfg.kind, tuple(small_catalog.values()))
    th = theory(cfg)
    rep = verify_tft_axioms(th, small_catalog, relabelings=5, unions=5)
    assert rep.passed, [c.line() for c in rep.failures()]
    names = {c.name for c in rep.checks}
    assert names == {"axiom1_invariance", "axiom2_nondegenerate", "axiom3_cut", "axiom4_union"}


def test_gluing_sphere4_degree2():
    bc = sphere_complex(4)
    rep = verify_gluing_identity(bc, bc.cut({"q1", "q2"}), TheoryConfig.degree(2))
    assert rep.passed
    assert hurwitz_d(bc, 2, {q: "[2]" for q in bc.vertex_ids}).value == H


def test_gluing_suspension_degree3():
    bc = suspension(bigon_circle())
    (cut,) = bc.certificate.values()
    assert verify_gluing_identity(bc, cut, TheoryConfig.degree(3)).passed


def test_gluing_mutation_fails(catalog):
    cfg = TheoryConfig.degree(2)
    for name, bc in catalog.items():
        for cut in bc.certificate.values():
            rep = verify_gluing_identity(bc, cut, cfg, aut_shift=1, instance=name)
            assert not rep.passed, name
            (c,) = rep.checks
            assert "FAIL" in c.line()


def test_character_oracle_examples():
    assert character_oracle("degree", 4, ["[2,1]"] * 4, d=3) == Fraction(9, 2)
    assert character_oracle("degree", 3, ["[2]", "[2]", "[1,1]"], d=2) == H
    assert character_oracle("group", 2, ["[3]", "[3]"], group="S3") == Fraction(1, 3)
    assert character_oracle_tables("degree", ["[2,1]"] * 4, d=3) == Fraction(9, 2)
    with pytest.raises(OutOfBounds):
        character_oracle("degree", 2, ["[5]", "[5]"], d=5)


@pytest.mark.parametrize("cfg,names", [
    (TheoryConfig.degree(2), ("sphere4",)),
    (TheoryConfig.degree(1), tuple(default_catalog())),
    (TheoryConfig.of_group("C2"), ("sphere4",)),
], ids=["d2", "d1", "C2"])
def test_evaluator_matches_enumeration(cfg, names, catalog):
    cfg = TheoryConfig(cfg.group, cfg.kind, tuple(catalog[n] for n in names))
    th = theory(cfg)
    for n in names:
        rep = cross_check_evaluator(th, catalog[n], n)
        assert rep.passed, [c.line() for c in rep.failures()]
        assert rep.checks


def test_burnside_on_catalog(catalog):
    for cfg in (TheoryConfig.degree(2), TheoryConfig.degree(3), TheoryConfig.of_group("S3")):
        for name, bc in catalog.items():
            rep = verify_burnside(bc, cfg, name)
            assert rep.passed, (cfg.label, name)


def test_copairing_identity_every_sector(catalog):
    A = theory(TheoryConfig.degree(3, catalog.values())).algebra
    assert all(copairing_identity_holds(A, s) for s in A.ids())


@pytest.mark.parametrize("d", [2, 3])
def test_sd_coincidence(d, small_catalog):
    sym = theory(TheoryConfig.of_group(symmetric(d), small_catalog.values()))
    deg = theory(TheoryConfig.degree(d, small_catalog.values()))
    rep = verify_sd_coincidence(sym, deg)
    assert rep.passed and rep.checks


def test_tight_bounds_refuse_large_enumerations():
    from branetft.coverings import SearchBoundsExceeded
    cfg = TheoryConfig.degree(4, [sphere_complex(4)], bounds=SearchBounds(4, 12, 1000))
    th = build_hurwitz_algebra(cfg)  # only two- and three-vertex complexes are enumerated
    with pytest.raises(SearchBoundsExceeded):
        cross_check_evaluator(th, sphere_complex(4))
