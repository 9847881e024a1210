"""Hurwitz theories as Colored Frobenius algebras, and their verification.

A theory is fixed by a structure group (``S_d`` for degree d) and a catalog of
brane complexes.  Its sectors are the vertex links of the catalog, the cut
complexes of their certificate cuts, and the stars of all of these.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Mapping, Sequence

import numpy as np

from .complex import (
    ColoredComplex,
    Edge,
    Vertex,
    canonical_form,
    complex_key,
    disjoint_union,
    link,
    relabel,
    star_involution,
)
from .coverings import (
    DEFAULT_BOUNDS,
    SearchBounds,
    brane_setup,
    enumerate_classes,
    format_fraction,
    hurwitz_table,
    gauge_group_order,
    sector_theory,
    star_class,
    symmetric_cached,
)
from .frobenius import (
    FrobeniusAlgebra,
    SectorLabel,
    assemble_algebra,
    copairing,
    evaluate_phi,
    inverse,
)
from .gcoverings import sd_correspondence
from .groups import FiniteGroup, character_count, make_group
from .surgery import (
    BraneComplex,
    Cut,
    CutMismatch,
    compatible_complex,
    contract_along_cut,
    foam_complex,
    is_brane,
    sphere_complex,
    suspension,
)


class TruncationInsufficient(ValueError):
    pass


class OutOfBounds(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TheoryConfig:
    group: FiniteGroup
    kind: str = "group"
    complexes: tuple = ()
    sectors: tuple = ()
    bounds: SearchBounds = DEFAULT_BOUNDS

    @staticmethod
    def degree(d: int, complexes: Iterable = (), sectors: Iterable = (),
               bounds: SearchBounds = DEFAULT_BOUNDS) -> "TheoryConfig":
        return TheoryConfig(symmetric_cached(d), "degree", tuple(complexes), tuple(sectors), bounds)

    @staticmethod
    def of_group(g: FiniteGroup | str, complexes: Iterable = (), sectors: Iterable = (),
                 bounds: SearchBounds = DEFAULT_BOUNDS) -> "TheoryConfig":
        if isinstance(g, str):
            g = make_group(g)
        return TheoryConfig(g, "group", tuple(complexes), tuple(sectors), bounds)

    @property
    def label(self) -> str:
        return f"degree{len(self.group.perms[0])}" if self.kind == "degree" else f"group{self.group.name}"


# ---------------------------------------------------------------------------
# catalogs


def bigon_circle(colors=("a", "b"), edge_colors=("u", "v")) -> ColoredComplex:
    """Directed 2-cycle: the link of an equator vertex of a sphere."""
    return ColoredComplex(
        (Vertex("x", colors[0], 1), Vertex("y", colors[1], -1)),
        (Edge("u", "x", "y", edge_colors[0]), Edge("v", "y", "x", edge_colors[1])), ())


def parallel_bigon(colors=("a", "b"), edge_colors=("u", "v")) -> ColoredComplex:
    """Two edges pointing the same way: the link of a pole of two equally oriented discs."""
    return ColoredComplex(
        (Vertex("x", colors[0], -1), Vertex("y", colors[1], 1)),
        (Edge("u", "x", "y", edge_colors[0]), Edge("v", "x", "y", edge_colors[1])), ())


def theta_graph(colors=("a", "b"), edge_colors=("u", "v", "w")) -> ColoredComplex:
    return ColoredComplex(
        (Vertex("x", colors[0], -1), Vertex("y", colors[1], 1)),
        tuple(Edge(c, "x", "y", c) for c in edge_colors), ())


def point(color: str = "a", sign: int = 1) -> ColoredComplex:
    return ColoredComplex((Vertex("x", color, sign),), (), ())


def default_catalog(max_vertices: int = 4) -> dict[str, BraneComplex]:
    """Named brane complexes used as the verification universe."""
    cat = {
        "edge": suspension(point()),
        "bigon_sphere": suspension(bigon_circle()),
        "pillow": suspension(parallel_bigon()),
        "theta_suspension": suspension(theta_graph()),
        "sphere3": sphere_complex(3),
        "foam3": foam_complex(3, "++-"),
    }
    if max_vertices >= 4:
        cat["sphere4"] = sphere_complex(4)
    return cat


def sector_name(sigma: ColoredComplex) -> str:
    if sigma.dim == 0:
        v = sigma.vertices[0]
        return f"pt:{v.color}{'+' if v.sign > 0 else '-'}"
    cols = ",".join(sorted(f"{v.color}{'+' if v.sign > 0 else '-'}" for v in sigma.vertices))
    return f"{len(sigma.vertices)}v{len(sigma.edges)}e:{cols}"


def collect_sectors(complexes: Iterable, extra: Iterable[ColoredComplex] = ()) -> dict[tuple, ColoredComplex]:
    """Canonical sector complexes keyed by canonical key, closed under star."""
    found: dict[tuple, ColoredComplex] = {}

    def add(sigma: ColoredComplex):
        for s in (sigma, star_involution(sigma)):
            cf = canonical_form(s)
            found.setdefault(cf.key, cf.complex)

    for bc in complexes:
        cx = bc.complex if isinstance(bc, BraneComplex) else bc
        for v in cx.vertices:
            add(link(cx, v.id).complex)
        if isinstance(bc, BraneComplex) and bc.certificate:
            for cut in bc.certificate.values():
                add(cut.gamma)
    for s in extra:
        add(s)
    return found


@dataclass
class Theory:
    """A built algebra plus the bookkeeping tying sectors back to complexes."""

    config: TheoryConfig
    algebra: FrobeniusAlgebra
    sector_of_key: dict
    complexes: dict

    def sector_id(self, sigma: ColoredComplex) -> str:
        key = complex_key(sigma)
        if key not in self.sector_of_key:
            raise TruncationInsufficient(f"sector {sector_name(sigma)} is not in the algebra")
        return self.sector_of_key[key]


def _color_profile(sigma: ColoredComplex):
    return Counter(v.color for v in sigma.vertices)


def _table_by_vertex(bc, group, bounds) -> tuple[list[str], dict[tuple, Fraction]]:
    setup = brane_setup(bc, group, bounds)
    return setup.vertices, hurwitz_table(bc, group, bounds)


def _compatible_tuples(keys, sectors, profiles, n: int):
    """Sector n-tuples (as key tuples) whose compatible complex exists, with it."""
    out = []

    def grow(prefix, counts):
        if len(prefix) == n:
            if all(x == 2 for x in counts.values()):
                bc = compatible_complex([sectors[k] for k in prefix])
                if bc is not None:
                    out.append((tuple(prefix), bc))
            return
        for k in keys:
            c = counts + profiles[k]
            # every edge of the candidate complex is seen from exactly its two ends
            if any(x > 2 for x in c.values()):
                continue
            grow(prefix + [k], c)

    grow([], Counter())
    return out


def _close_under_channels(sectors: dict, max_rounds: int = 6) -> list:
    """Add the cut sectors of every four-point complex until nothing new appears."""
    for _ in range(max_rounds):
        keys = sorted(sectors)
        profiles = {k: _color_profile(sectors[k]) for k in keys}
        quads = _compatible_tuples(keys, sectors, profiles, 4)
        before = len(sectors)
        for _, bc in quads:
            for plus in (("q1", "q2"), ("q4", "q1")):
                gamma = bc.cut(plus).gamma
                for x in (gamma, star_involution(gamma)):
                    cf = canonical_form(x)
                    sectors.setdefault(cf.key, cf.complex)
        if len(sectors) == before:
            return quads
    raise TruncationInsufficient("sector set does not close under four-point channels")


def build_hurwitz_algebra(cfg: TheoryConfig, check: bool = True) -> Theory:
    """Basis: covering classes per sector; Gram from suspensions; trilinear
    from three-vertex compatible complexes; crossing channels from four-vertex
    ones.  Assembly checks every axiom."""
    g = cfg.group
    sectors = collect_sectors(cfg.complexes, cfg.sectors)
    quads = _close_under_channels(sectors)
    keys = sorted(sectors)
    sid = {k: f"s{i}" for i, k in enumerate(keys)}
    labels = []
    basis, gram = {}, {}
    for k in keys:
        sigma = sectors[k]
        star_key = complex_key(star_involution(sigma))
        labels.append(SectorLabel(sid[k], k, sid[star_key], sector_name(sigma)))
        th = sector_theory(sigma, g)
        basis[sid[k]] = tuple(c.name for c in th.classes)
        bc = suspension(sigma)
        verts, table = _table_by_vertex(bc, g, cfg.bounds)
        n1, n2 = len(th.classes), len(sector_theory(star_involution(sigma), g).classes)
        first = verts.index("q1")
        m = [[Fraction(0)] * n2 for _ in range(n1)]
        for idx, val in table.items():
            i, j = (idx[0], idx[1]) if first == 0 else (idx[1], idx[0])
            m[i][j] = val
        gram[sid[k]] = m
    profiles = {k: _color_profile(sectors[k]) for k in keys}
    trilinear, allowed, witness = {}, set(), {}
    for ks, bc in _compatible_tuples(keys, sectors, profiles, 3):
        trip = tuple(sid[k] for k in ks)
        allowed.add(trip)
        if min(trip[r:] + trip[:r] for r in range(3)) != trip:
            continue
        witness[trip] = sector_name_complex(bc)
        verts, table = _table_by_vertex(bc, g, cfg.bounds)
        pos = [verts.index(q) for q in ("q1", "q2", "q3")]
        trilinear[trip] = {tuple(idx[p] for p in pos): val for idx, val in table.items() if val}
    channels = {}
    for ks, bc in quads:
        c12 = sid[complex_key(bc.cut(("q1", "q2")).gamma)]
        c41 = sid[complex_key(bc.cut(("q4", "q1")).gamma)]
        channels[tuple(sid[k] for k in ks)] = (c12, c41)
    A = assemble_algebra(labels, basis, gram, trilinear, allowed, witness, check=check, channels=channels)
    return Theory(cfg, A, sid, dict(sectors))


def sector_name_complex(bc: BraneComplex) -> str:
    cx = bc.complex
    return f"V{len(cx.vertices)}E{len(cx.edges)}F{len(cx.faces)}"


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Check:
    name: str
    instance: str
    expected: object
    computed: object
    passed: bool

    def line(self) -> str:
        def fmt(x):
            return format_fraction(x) if isinstance(x, (int, Fraction)) else str(x)
        return (f"CHECK {self.name} {self.instance.replace(' ', '_')} {fmt(self.expected)} "
                f"{fmt(self.computed)} {'PASS' if self.passed else 'FAIL'}")


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name, instance, expected, computed, passed=None):
        if passed is None:
            passed = expected == computed
        self.checks.append(Check(name, instance, expected, computed, bool(passed)))

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def named_table(bc, group, bounds=DEFAULT_BOUNDS) -> dict[tuple, Fraction]:
    """Hurwitz numbers keyed by sorted ``(vertex, class key)`` pairs; zeros omitted."""
    setup = brane_setup(bc, group, bounds)
    out = {}
    for idx, val in hurwitz_table(bc, group, bounds).items():
        if val:
            key = tuple(sorted((q, setup.theories[i].classes[c].class_key)
                               for i, (q, c) in enumerate(zip(setup.vertices, idx))))
            out[key] = val
    return out


def random_relabeling(bc: BraneComplex, rng: random.Random) -> tuple[BraneComplex, dict]:
    """Isomorphic copy with shuffled ids, cell order and face starting points."""
    cx = bc.complex
    vid = [v.id for v in cx.vertices]
    new_v = [f"v{i}" for i in rng.sample(range(len(vid)), len(vid))]
    vmap = dict(zip(vid, new_v))
    emap = {e.id: f"E{i}" for e, i in zip(cx.edges, rng.sample(range(len(cx.edges)), len(cx.edges)))}
    fmap = {f.id: f"F{i}" for f, i in zip(cx.faces, rng.sample(range(len(cx.faces)), len(cx.faces)))}
    rot = {f.id: rng.randrange(len(f.boundary)) for f in cx.faces}
    moved = relabel(cx, vmap, emap, fmap, rot)
    shuffled = ColoredComplex(tuple(rng.sample(moved.vertices, len(moved.vertices))),
                              tuple(rng.sample(moved.edges, len(moved.edges))),
                              tuple(rng.sample(moved.faces, len(moved.faces))))
    orders = []
    for o in bc.orders:
        k = rng.randrange(len(o))
        orders.append(tuple(vmap[q] for q in o[k:] + o[:k]))
    return is_brane(shuffled, orders), vmap


def _sum(table: Mapping) -> Fraction:
    return sum(table.values(), Fraction(0))


def verify_gluing_identity(bc: BraneComplex, cut: Cut, cfg: TheoryConfig,
                           aut_shift: int = 0, instance: str = "") -> VerificationReport:
    """``H(Ω, x) = sum_β H(Ω+, x+, β) |Aut β| H(Ω-, β*, x-)`` for every tuple ``x``.

    ``aut_shift`` adds a constant to every automorphism order (mutation test).
    """
    g, bounds = cfg.group, cfg.bounds
    if bc.certificate is None or cut not in bc.certificate.values():
        found = [c for c in (bc.certificate or {}).values() if c.plus == cut.plus or c.plus == cut.minus]
        if not found:
            raise CutMismatch("cut is not in the certificate")
    new, qp, qm = contract_along_cut(bc, cut)
    whole = named_table(bc, g, bounds)
    setup = brane_setup(new, g, bounds)
    pieces = hurwitz_table(new, g, bounds)
    ip, im = setup.vertices.index(qp), setup.vertices.index(qm)
    th_p = setup.theories[ip]
    glued: dict[tuple, Fraction] = {}
    for idx, val in pieces.items():
        if not val:
            continue
        beta = th_p.classes[idx[ip]]
        if star_class(beta, g) != setup.theories[im].classes[idx[im]]:
            continue
        key = tuple(sorted((q, setup.theories[i].classes[c].class_key)
                           for i, (q, c) in enumerate(zip(setup.vertices, idx)) if q not in (qp, qm)))
        glued[key] = glued.get(key, Fraction(0)) + val * (beta.aut_order + aut_shift)
    glued = {k: v for k, v in glued.items() if v}
    name = instance or sector_name_complex(bc)
    split = "|".join(sorted(cut.plus)) + "/" + "|".join(sorted(cut.minus))
    rep = VerificationReport()
    rep.add("gluing", f"{cfg.label}:{name}:{split}", _sum(whole), _sum(glued), whole == glued)
    return rep


def _cut_morphism_table(theory: Theory, bc: BraneComplex, cut: Cut) -> dict[tuple, Fraction]:
    """``H(Ω[γ], x (x) K)``: pieces evaluated against the algebra's copairing."""
    cfg = theory.config
    g = cfg.group
    new, qp, qm = contract_along_cut(bc, cut)
    setup = brane_setup(new, g, cfg.bounds)
    ip, im = setup.vertices.index(qp), setup.vertices.index(qm)
    s_plus = theory.sector_id(link(new.complex, qp).complex)
    s_minus = theory.sector_id(link(new.complex, qm).complex)
    if theory.algebra.star(s_plus) != s_minus:
        raise TruncationInsufficient("cut sectors are not star partners")
    K = copairing(theory.algebra, s_plus)
    out: dict[tuple, Fraction] = {}
    for idx, val in hurwitz_table(new, g, cfg.bounds).items():
        k = K[idx[ip]][idx[im]]
        if not val or not k:
            continue
        key = tuple(sorted((q, setup.theories[i].classes[c].class_key)
                           for i, (q, c) in enumerate(zip(setup.vertices, idx)) if q not in (qp, qm)))
        out[key] = out.get(key, Fraction(0)) + val * k
    return {k: v for k, v in out.items() if v}


def verify_tft_axioms(theory: Theory, catalog: Mapping[str, BraneComplex], relabelings: int = 100,
                      unions: int = 20, seed: int = 0) -> VerificationReport:
    cfg = theory.config
    g, bounds = cfg.group, cfg.bounds
    rng = random.Random(seed)
    rep = VerificationReport()
    tables = {name: named_table(bc, g, bounds) for name, bc in catalog.items()}
    for name, bc in catalog.items():
        base = tables[name]
        for r in range(relabelings):
            moved, vmap = random_relabeling(bc, rng)
            back = {v: k for k, v in vmap.items()}
            t = {tuple(sorted((back[q], c) for q, c in key)): v for key, v in named_table(moved, g, bounds).items()}
            rep.add("axiom1_invariance", f"{cfg.label}:{name}:#{r}", _sum(base), _sum(t), t == base)
    A = theory.algebra
    for s in A.sectors:
        ok = inverse(A.gram[s.id]) is not None
        rep.add("axiom2_nondegenerate", f"{cfg.label}:{s.id}:{s.name}", "invertible",
                "invertible" if ok else "singular", ok)
    for name, bc in catalog.items():
        for cut in (bc.certificate or {}).values():
            for oriented in (cut, bc.cut(cut.minus)):
                lhs = tables[name]
                rhs = _cut_morphism_table(theory, bc, oriented)
                split = "|".join(sorted(oriented.plus)) + "/" + "|".join(sorted(oriented.minus))
                rep.add("axiom3_cut", f"{cfg.label}:{name}:{split}", _sum(lhs), _sum(rhs), lhs == rhs)
    names = sorted(catalog)
    pairs = [(a, b) for a in names for b in names
             if _fits(catalog[a], catalog[b], g, bounds)]
    for a, b in rng.sample(pairs, min(unions, len(pairs))) if pairs else []:
        ua, ub = catalog[a], catalog[b]
        cx = disjoint_union(ua.complex, ub.complex, prefixes=["L.", "R."])
        orders = [tuple("L." + q for q in o) for o in ua.orders] + [tuple("R." + q for q in o) for o in ub.orders]
        u = is_brane(cx, orders)
        got = named_table(u, g, bounds)
        want = {}
        for ka, va in tables[a].items():
            for kb, vb in tables[b].items():
                key = tuple(sorted([("L." + q, c) for q, c in ka] + [("R." + q, c) for q, c in kb]))
                want[key] = va * vb
        rep.add("axiom4_union", f"{cfg.label}:{a}+{b}", _sum(want), _sum(got), got == want)
    return rep


def _fits(a: BraneComplex, b: BraneComplex, g: FiniteGroup, bounds: SearchBounds) -> bool:
    cells = sum(len(x.complex.edges) + len(x.complex.faces) for x in (a, b))
    free = sum(len(brane_setup(x, g, bounds).plan.free_arcs) for x in (a, b))
    return cells <= bounds.max_cells and len(g) ** free <= bounds.max_tuples


def verify_burnside(bc: BraneComplex, cfg: TheoryConfig, instance: str = "",
                    limit: int = 20_000_000) -> VerificationReport:
    """Orbit sum against the raw labeled count, for every tuple of local invariants."""
    g = cfg.group
    setup = brane_setup(bc, g, cfg.bounds)
    rep = VerificationReport()
    name = instance or sector_name_complex(bc)
    if len(g) ** len(setup.plan.arcs) > limit:
        rep.add("burnside", f"{cfg.label}:{name}", "labeled<=limit", "too-large", False)
        return rep
    full = brane_setup(bc, g, SearchBounds(cfg.bounds.max_degree, cfg.bounds.max_cells, limit))
    codes, counts = np.unique(full.local_codes(reduced=False), return_counts=True)
    labeled = dict(zip(codes.tolist(), counts.tolist()))
    denom = gauge_group_order(bc, g)
    for code in sorted(labeled):
        local = setup.decode(code)
        classes = enumerate_classes(bc, g, local, cfg.bounds)
        orbit = sum((Fraction(1, c.aut_order) for c in classes), Fraction(0))
        tag = ",".join(f"{q}={local[q].name}" for q in setup.vertices)
        rep.add("burnside", f"{cfg.label}:{name}:{tag}", Fraction(labeled[code], denom), orbit)
    return rep


def cross_check_evaluator(theory: Theory, bc: BraneComplex, instance: str = "") -> VerificationReport:
    """The chain formula against direct enumeration on every basis tuple."""
    cfg = theory.config
    g = cfg.group
    A = theory.algebra
    if len(bc.orders) != 1:
        raise ValueError("the chain formula needs a connected brane complex")
    order = bc.orders[0]
    cx = bc.complex
    sids = [theory.sector_id(link(cx, q).complex) for q in order]
    for k in range(2, len(order) - 1):
        cut = bc.cut(order[:k])
        theory.sector_id(cut.gamma)
    setup = brane_setup(bc, g, cfg.bounds)
    table = hurwitz_table(bc, g, cfg.bounds)
    pos = [setup.vertices.index(q) for q in order]
    rep = VerificationReport()
    name = instance or sector_name_complex(bc)
    ranges = [range(A.dim(s)) for s in sids]
    for idx in iproduct(*ranges):
        key = [0] * len(order)
        for p, i in zip(pos, idx):
            key[p] = i
        direct = table.get(tuple(key), Fraction(0))
        phi = evaluate_phi(A, sids, list(idx))
        labels = ",".join(A.basis[s][i] for s, i in zip(sids, idx))
        rep.add("evaluator", f"{cfg.label}:{name}:{labels}", direct, phi)
    return rep


def verify_sd_coincidence(sym: Theory, deg: Theory) -> VerificationReport:
    """Structure constants of the ``S_d`` algebra against the degree-d algebra.

    Both theories must be built over the same complexes, so sector ids agree.
    Each ``S_d`` basis class is sent through :func:`sd_correspondence` to a
    degree-d class; Gram and trilinear entries are compared after reindexing.
    """
    g = sym.config.group
    if sym.sector_of_key != deg.sector_of_key:
        raise ValueError("theories were built over different sector sets")
    A, B = sym.algebra, deg.algebra
    index = {}
    for key, sid in sym.sector_of_key.items():
        sigma = sym.complexes[key]
        src = sector_theory(sigma, g).classes
        dst = sector_theory(sigma, deg.config.group).classes
        index[sid] = [dst.index(sd_correspondence(c, g)) for c in src]
    label = f"{sym.config.label}~{deg.config.label}"
    rep = VerificationReport()
    for s in A.ids():
        t, m = A.star(s), index[s]
        moved = [[B.gram[s][m[i]][index[t][j]] for j in range(A.dim(t))] for i in range(A.dim(s))]
        rep.add("sd_gram", f"{label}:{s}", sum((x for r in A.gram[s] for x in r), Fraction(0)),
                sum((x for r in moved for x in r), Fraction(0)), moved == [list(r) for r in A.gram[s]])
    for key in sorted(set(A.trilinear) | set(B.trilinear)):
        a = A.trilinear.get(key, {})
        b = {tuple(index[x].index(i) for x, i in zip(key, idx)): v
             for idx, v in B.trilinear.get(key, {}).items()}
        rep.add("sd_trilinear", f"{label}:{','.join(key)}", _sum(a), _sum(b), a == b)
    return rep


# ---------------------------------------------------------------------------
# classical oracle for the sphere family


def character_oracle(kind: str, n: int, classes: Sequence[str], d: int | None = None,
                     group: FiniteGroup | str | None = None) -> Fraction:
    """Tuples ``(g_1..g_n)`` with ``g_i`` in the named classes and product one, over ``|G|``.

    Direct enumeration; the shipped character tables are only a second opinion
    (see :func:`character_oracle_tables`).
    """
    if kind == "degree":
        if d is None or not 1 <= d <= 4:
            raise OutOfBounds("degree oracle supports 1 <= d <= 4")
        g = symmetric_cached(d)
    elif kind == "group":
        g = make_group(group) if isinstance(group, str) else group
        if g is None:
            raise OutOfBounds("group oracle needs a group")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if len(classes) != n or n < 1 or n > 6:
        raise OutOfBounds("need 1 <= n <= 6 and one class per point")
    members = [g.classes[g.class_index(c)] for c in classes]
    total = 1
    for m in members:
        total *= len(m)
    if total > 5_000_000:
        raise OutOfBounds("too many tuples for direct enumeration")
    count = 0
    for tup in iproduct(*members):
        acc = g.identity
        for x in tup:
            acc = g.mul(acc, x)
        count += acc == g.identity
    return Fraction(count, len(g))


def character_oracle_tables(kind: str, classes: Sequence[str], d: int | None = None,
                            group: FiniteGroup | str | None = None) -> Fraction | None:
    g = symmetric_cached(d) if kind == "degree" else (make_group(group) if isinstance(group, str) else group)
    c = character_count(g, classes)
    return None if c is None else c / len(g)
