"""Cellwise coverings of colored complexes and their Hurwitz numbers.

A covering is described by sheet data on cells and one group element per
incidence: over a brane complex every (face, boundary position) carries the
map from face sheets to edge sheets; over a vertex complex (a graph) every
(edge, endpoint) carries the map from edge sheets to vertex sheets.  A
degree-d covering uses ``S_d`` acting on ``{0..d-1}``; a principal G-covering
uses ``G`` acting on itself, so both are handled by one engine.

Relabeling sheets over a cell ``c`` by ``h_c`` sends the element on an
incidence ``src -> dst`` to ``h_dst g h_src^-1``.  Fixing the elements on a
spanning forest of the incidence graph to the identity leaves one free
element per remaining incidence and a residual simultaneous conjugation per
forest component; classes are conjugation orbits and automorphism groups
are their stabilizers.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import kernels
from .complex import ColoredComplex, ComplexError, canonical_form, complex_key, link, star_involution
from .groups import FiniteGroup, symmetric
from .surgery import BraneComplex, Cut, CutMismatch, contract_with_provenance


class ConstraintMismatch(ValueError):
    pass


class SearchBoundsExceeded(ValueError):
    pass


class LinkNotConnected(ComplexError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    max_degree: int = 4
    max_cells: int = 12
    max_tuples: int = 2_000_000


DEFAULT_BOUNDS = SearchBounds()


# ---------------------------------------------------------------------------
# incidence plans


@dataclass(frozen=True, eq=False)
class Plan:
    """Spanning-forest gauge for an incidence graph.

    ``arcs[i] = (key, src, dst)`` with node indices; ``gen_words[j]`` expresses
    the j-th free incidence, after gauge fixing, as a word in the raw
    incidence elements (pairs ``(arc index, +1/-1)``, leftmost factor last).
    """

    nodes: tuple
    arcs: tuple
    tree: tuple
    free_arcs: tuple
    var_comp: tuple
    ncomp: int
    gen_words: tuple
    arc_index: Mapping = field(repr=False)


def _inverse_word(word):
    return [(a, -x) for a, x in reversed(word)]


def build_plan(nodes: Sequence, arcs: Sequence[tuple]) -> Plan:
    node_idx = {n: i for i, n in enumerate(nodes)}
    arc_list = [(key, node_idx[s], node_idx[d]) for key, s, d in arcs]
    adj: list[list[tuple[int, int, int]]] = [[] for _ in nodes]
    for i, (_, s, d) in enumerate(arc_list):
        adj[s].append((i, d, +1))
        adj[d].append((i, s, -1))
    path: list[list | None] = [None] * len(nodes)
    comp = [-1] * len(nodes)
    tree = [False] * len(arc_list)
    ncomp = 0
    for root in range(len(nodes)):
        if path[root] is not None:
            continue
        path[root] = []
        comp[root] = ncomp
        queue = [root]
        while queue:
            x = queue.pop(0)
            for a, y, direction in adj[x]:
                if path[y] is None:
                    path[y] = [(a, direction)] + path[x]
                    comp[y] = ncomp
                    tree[a] = True
                    queue.append(y)
        ncomp += 1
    free = [i for i in range(len(arc_list)) if not tree[i]]
    words = []
    for a in free:
        _, s, d = arc_list[a]
        words.append(tuple(_inverse_word(path[d]) + [(a, 1)] + path[s]))
    return Plan(tuple(nodes), tuple(arc_list), tuple(tree), tuple(free),
                tuple(comp[arc_list[a][1]] for a in free), ncomp, tuple(words),
                {key: i for i, (key, _, _) in enumerate(arc_list)})


def eval_word(group: FiniteGroup, word, values: Sequence[int]) -> int:
    acc = group.identity
    for a, x in word:
        g = values[a] if x > 0 else group.inv(values[a])
        acc = group.mul(acc, g)
    return acc


def graph_plan(cx: ColoredComplex) -> Plan:
    nodes = [("v", v.id) for v in cx.vertices] + [("e", e.id) for e in cx.edges]
    arcs = []
    for e in cx.edges:
        arcs.append(((e.id, e.tail), ("e", e.id), ("v", e.tail)))
        arcs.append(((e.id, e.head), ("e", e.id), ("v", e.head)))
    return build_plan(nodes, arcs)


def brane_plan(cx: ColoredComplex) -> Plan:
    nodes = [("e", e.id) for e in cx.edges] + [("f", f.id) for f in cx.faces]
    arcs = []
    for f in cx.faces:
        for pos, (eid, _) in enumerate(f.boundary):
            arcs.append(((f.id, pos), ("f", f.id), ("e", eid)))
    return build_plan(nodes, arcs)


def _encode(rows: np.ndarray, n: int) -> np.ndarray:
    code = np.zeros(len(rows), dtype=np.int64)
    scale = 1
    for j in range(rows.shape[1]):
        code += rows[:, j] * scale
        scale *= n
    return code


def _all_tuples(n: int, k: int) -> np.ndarray:
    idx = np.arange(n ** k, dtype=np.int64)
    return np.stack([(idx // n ** j) % n for j in range(k)], axis=1) if k else np.zeros((1, 0), np.int64)


# ---------------------------------------------------------------------------
# classes over vertex complexes


@dataclass(frozen=True)
class CoveringClass:
    """Equivalence class of a covering.

    Over a vertex complex ``class_key`` is the least conjugate of the free
    incidence elements in the sector's canonical gauge and ``local`` is
    empty; over a brane complex it is the per-component least conjugate and
    ``local`` lists the local invariant at every vertex.
    """

    base_key: tuple = field(repr=False)
    group: str
    class_key: tuple
    aut_order: int
    local: tuple = ()
    name: str = field(default="", compare=False)

    @property
    def degree(self) -> int | None:
        return int(self.group[1:]) if self.group.startswith("S") and self.group[1:].isdigit() else None


class SectorTheory:
    """Covering classes of one connected vertex complex (in canonical form) over ``group``."""

    def __init__(self, sector: ColoredComplex, group: FiniteGroup):
        if not sector.is_connected() or sector.dim > 1:
            raise LinkNotConnected("a sector must be a connected complex of dimension <= 1")
        self.sector = sector
        self.key = complex_key(sector)
        self.group = group
        self.plan = graph_plan(sector)
        n, k = len(group), len(self.plan.free_arcs)
        if n ** k > DEFAULT_BOUNDS.max_tuples:
            raise SearchBoundsExceeded(f"{n}^{k} monodromy tuples over this sector")
        rows = _all_tuples(n, k)
        best, stab = kernels.conj_canon(group.table, group.inverse, rows, [0] * k, 1)
        reps = sorted({tuple(int(x) for x in r) for r in best})
        index = {r: i for i, r in enumerate(reps)}
        self.lookup = np.array([index[tuple(int(x) for x in r)] for r in best], dtype=np.int32)
        aut = {}
        for r, s in zip(best, stab):
            aut[tuple(int(x) for x in r)] = int(s)
        self.classes = [
            CoveringClass(self.key, group.name, r, aut[r], (), self._name(i, r))
            for i, r in enumerate(reps)
        ]

    def _name(self, i: int, rep: tuple) -> str:
        g = self.group
        if self.sector.dim == 0:
            return g.class_name(int(g.class_of[g.identity]))
        hol = self.circle_holonomy(self.values_from_rep(rep))
        if hol is None:
            return f"#{i}"
        return g.class_name(int(g.class_of[hol]))

    def values_from_rep(self, rep: Sequence[int]) -> list[int]:
        values = [self.group.identity] * len(self.plan.arcs)
        for a, g in zip(self.plan.free_arcs, rep):
            values[a] = int(g)
        return values

    def circle_holonomy(self, values: Sequence[int]) -> int | None:
        """Holonomy around the sector when it is a circle, read along edge ``e0``."""
        cx = self.sector
        if cx.dim != 1 or len(cx.edges) != len(cx.vertices):
            return None
        incident: dict[str, list] = {v.id: [] for v in cx.vertices}
        for e in cx.edges:
            incident[e.tail].append(e)
            incident[e.head].append(e)
        if any(len(x) != 2 for x in incident.values()):
            return None
        g = self.group
        idx = self.plan.arc_index
        e, v = cx.edges[0], cx.edges[0].tail
        acc = g.identity
        for _ in range(len(cx.edges)):
            w = e.head if e.tail == v else e.tail
            step = g.mul(values[idx[(e.id, w)]], g.inv(values[idx[(e.id, v)]]))
            acc = g.mul(step, acc)
            v = w
            e = next(x for x in incident[v] if x.id != e.id)
        return acc

    def classify(self, values: Sequence[int]) -> CoveringClass:
        """Class of a covering given by one element per arc of ``self.plan``."""
        n = len(self.group)
        code, scale = 0, 1
        for word in self.plan.gen_words:
            code += eval_word(self.group, word, values) * scale
            scale *= n
        return self.classes[int(self.lookup[code])]

    def by_name(self, name: str) -> CoveringClass:
        name = name.replace(" ", "")
        hits = [c for c in self.classes if c.name.replace(" ", "") == name]
        if len(hits) == 1:
            return hits[0]
        if name.startswith("#") and name[1:].isdigit() and int(name[1:]) < len(self.classes):
            return self.classes[int(name[1:])]
        raise KeyError(f"no unique class named {name!r} over this sector "
                       f"(known: {[c.name for c in self.classes]})")

    def trivial(self) -> CoveringClass:
        return self.classify([self.group.identity] * len(self.plan.arcs))


_SECTOR_CACHE: dict[tuple, SectorTheory] = {}
_STANDARD = {f"S{n}" for n in range(1, 6)} | {f"C{n}" for n in range(1, 13)} | {"V4"}


def _group_tag(group: FiniteGroup) -> tuple:
    # standard names determine the table; custom tables are told apart by identity
    return (group.name, 0 if group.name in _STANDARD else id(group.table))


def sector_theory(sigma: ColoredComplex, group: FiniteGroup) -> SectorTheory:
    """Theory of the canonical representative of ``sigma`` (cached by key)."""
    key = (complex_key(sigma), _group_tag(group))
    if key not in _SECTOR_CACHE:
        _SECTOR_CACHE[key] = SectorTheory(canonical_form(sigma).complex, group)
    return _SECTOR_CACHE[key]


def sector_classes(sigma: ColoredComplex, group: FiniteGroup) -> list[CoveringClass]:
    return list(sector_theory(sigma, group).classes)


def star_class(beta: CoveringClass, group: FiniteGroup) -> CoveringClass:
    """The class over ``sigma*`` carried by the same incidence data as ``beta``."""
    th = _theory_for(beta, group)
    values = th.values_from_rep(beta.class_key)
    starred = star_involution(th.sector)
    cf = canonical_form(starred)
    st = sector_theory(cf.complex, group)
    moved = [0] * len(st.plan.arcs)
    for (eid, vid), a in th.plan.arc_index.items():
        moved[st.plan.arc_index[(cf.edge_map[eid], cf.vertex_map[vid])]] = values[a]
    return st.classify(moved)


def _theory_for(beta: CoveringClass, group: FiniteGroup) -> SectorTheory:
    try:
        return _SECTOR_CACHE[(beta.base_key, _group_tag(group))]
    except KeyError:
        raise KeyError("class over a sector that has not been enumerated for this group") from None


# ---------------------------------------------------------------------------
# labeled coverings


@dataclass(frozen=True, eq=False)
class Covering:
    """A concrete covering: ``values[arc key]`` is the incidence element.

    ``kind`` is ``"brane"`` for coverings of brane complexes (vertices are
    completed from the link coverings) and ``"graph"`` for coverings of vertex
    complexes (every cell, vertices included, has a full fiber).
    """

    base: ColoredComplex
    group: FiniteGroup
    values: Mapping
    kind: str = "brane"

    @property
    def plan(self) -> Plan:
        return graph_plan(self.base) if self.kind == "graph" else _brane_plan_cached(self.base)

    def value_list(self, plan: Plan | None = None) -> list[int]:
        plan = plan or self.plan
        return [int(self.values[key]) for key, _, _ in plan.arcs]

    def bijection(self, arc) -> tuple[int, ...]:
        if self.group.perms is None:
            raise ValueError("bijections are only defined for symmetric groups")
        return self.group.perms[self.values[arc]]

    def vertex_fibers(self) -> dict[str, int]:
        """Number of preimages of every vertex (components of the link covering)."""
        if self.kind == "graph":
            return {v.id: len(self.group) for v in self.base.vertices}
        out = {}
        for v in self.base.vertices:
            out[v.id] = _count_fiber_components(self, v.id)
        return out


def _count_fiber_components(cov: Covering, q: str) -> int:
    """Orbits of the link covering's sheets, counted with the defining action."""
    g = cov.group
    lk = link(cov.base, q)
    points = g.perms[0] if g.perms is not None else range(len(g))
    npts = len(points)

    def act(elem, x):
        return g.perms[elem][x] if g.perms is not None else g.mul(elem, x)

    parent = {(e.id, x): (e.id, x) for e in lk.complex.vertices for x in range(npts)}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for le in lk.complex.edges:
        i, j = lk.corner[le.id]
        gi, gj = cov.values[(le.id, i)], cov.values[(le.id, j)]
        for x in range(npts):
            a, b = find((le.tail, act(gi, x))), find((le.head, act(gj, x)))
            if a != b:
                parent[a] = b
    return len({find(p) for p in parent})


_BRANE_PLANS: "weakref.WeakKeyDictionary[ColoredComplex, Plan]" = weakref.WeakKeyDictionary()


def _brane_plan_cached(cx: ColoredComplex) -> Plan:
    if cx not in _BRANE_PLANS:
        _BRANE_PLANS[cx] = brane_plan(cx)
    return _BRANE_PLANS[cx]


def automorphism_order(cov: Covering) -> int:
    """Order of the group of per-cell relabelings fixing every incidence element.

    Backtracking over the relabeling of one root cell per forest component;
    the tree determines the rest, the free incidences are then checked.
    """
    g = cov.group
    plan = cov.plan
    values = cov.value_list(plan)
    order = 1
    for c in range(plan.ncomp):
        nodes = [i for i in range(len(plan.nodes)) if _node_comp(plan, i) == c]
        arcs = [i for i, (_, s, _) in enumerate(plan.arcs) if s in nodes]
        count = 0
        for h0 in range(len(g)):
            h = {nodes[0]: h0}
            pending = list(arcs)
            ok = True
            while pending and ok:
                progress = False
                for a in list(pending):
                    _, s, d = plan.arcs[a]
                    x = values[a]
                    if s in h and d not in h:
                        h[d] = g.conj(x, h[s])
                    elif d in h and s not in h:
                        h[s] = g.conj(g.inv(x), h[d])
                    elif s in h and d in h:
                        if h[d] != g.conj(x, h[s]):
                            ok = False
                            break
                    else:
                        continue
                    pending.remove(a)
                    progress = True
                if not progress:
                    break
            count += ok
        order *= count
    return order


def _node_comp(plan: Plan, node: int) -> int:
    comps = getattr(plan, "_node_comps", None)
    if comps is None:
        parent = list(range(len(plan.nodes)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for _, s, d in plan.arcs:
            parent[find(s)] = find(d)
        roots: dict[int, int] = {}
        comps = []
        for i in range(len(plan.nodes)):
            comps.append(roots.setdefault(find(i), len(roots)))
        object.__setattr__(plan, "_node_comps", comps)
    return comps[node]


# ---------------------------------------------------------------------------
# brane bases: local invariants and enumeration


class BraneSetup:
    """Precomputed gauge plan, link words and lookup tables for one base and group."""

    def __init__(self, base: BraneComplex | ColoredComplex, group: FiniteGroup,
                 bounds: SearchBounds = DEFAULT_BOUNDS):
        cx = base.complex if isinstance(base, BraneComplex) else base
        self.complex = cx
        self.group = group
        self.bounds = bounds
        if group.perms is not None and len(group.perms[0]) > bounds.max_degree:
            raise SearchBoundsExceeded(f"degree {len(group.perms[0])} exceeds {bounds.max_degree}")
        if len(cx.edges) + len(cx.faces) > bounds.max_cells:
            raise SearchBoundsExceeded(
                f"{len(cx.edges) + len(cx.faces)} positive-dimensional cells exceed {bounds.max_cells}")
        self.plan = _brane_plan_cached(cx)
        self.vertices = [v.id for v in cx.vertices]
        self.theories: list[SectorTheory] = []
        self.words: list[list] = []
        for q in self.vertices:
            lk = link(cx, q)
            if not lk.complex.is_connected():
                raise LinkNotConnected(f"the link of {q!r} is not connected", q)
            cf = canonical_form(lk.complex)
            th = sector_theory(cf.complex, group)
            inv_e = {c: orig for orig, c in cf.edge_map.items()}
            inv_v = {c: orig for orig, c in cf.vertex_map.items()}
            to_base = []
            for (ce, cv), _, _ in th.plan.arcs:
                face, edge = inv_e[ce], inv_v[cv]
                i, j = lk.corner[face]
                pos = i if lk.complex.edge[face].tail == edge else j
                to_base.append(self.plan.arc_index[(face, pos)])
            self.theories.append(th)
            self.words.append([[(to_base[a], x) for a, x in w] for w in th.plan.gen_words])

    def local_invariants(self, values: Sequence[int]) -> dict[str, CoveringClass]:
        out = {}
        n = len(self.group)
        for q, th, words in zip(self.vertices, self.theories, self.words):
            code, scale = 0, 1
            for w in words:
                code += eval_word(self.group, w, values) * scale
                scale *= n
            out[q] = th.classes[int(th.lookup[code])]
        return out

    def _kernel_args(self, reduced: bool):
        plan = self.plan
        var_of = {a: j for j, a in enumerate(plan.free_arcs)} if reduced else None
        word_start, word_var, word_exp, vgen_start = [0], [], [], [0]
        for words in self.words:
            for w in words:
                for a, x in w:
                    if reduced:
                        if plan.tree[a]:
                            continue
                        a = var_of[a]
                    word_var.append(a)
                    word_exp.append(x)
                word_start.append(len(word_var))
            vgen_start.append(len(word_start) - 1)
        lookups, lookup_start, mult = [], [], []
        m = 1
        for th in self.theories:
            lookup_start.append(sum(len(x) for x in lookups))
            lookups.append(th.lookup)
            mult.append(m)
            m *= len(th.classes)
        nvars = len(plan.free_arcs) if reduced else len(plan.arcs)
        total = len(self.group) ** nvars
        return dict(
            nvars=nvars,
            word_start=np.array(word_start, np.int64), word_var=np.array(word_var, np.int32),
            word_exp=np.array(word_exp, np.int32), vgen_start=np.array(vgen_start, np.int64),
            lookup=np.concatenate(lookups).astype(np.int32) if lookups else np.zeros(1, np.int32),
            lookup_start=np.array(lookup_start, np.int64), mult=np.array(mult, np.int64),
        ), total

    def decode(self, code: int) -> dict[str, CoveringClass]:
        out = {}
        for q, th in zip(self.vertices, self.theories):
            k = len(th.classes)
            out[q] = th.classes[code % k]
            code //= k
        return out

    def constraint_filter(self, codes: np.ndarray, constraints: Mapping[str, CoveringClass]) -> np.ndarray:
        mask = np.ones(len(codes), dtype=bool)
        m = 1
        for q, th in zip(self.vertices, self.theories):
            k = len(th.classes)
            if q in constraints:
                beta = constraints[q]
                if beta.base_key != th.key or beta.group != self.group.name:
                    raise ConstraintMismatch(f"constraint at {q!r} is not a class over its link")
                mask &= (codes // m) % k == th.classes.index(beta)
            m *= k
        return mask

    def local_codes(self, reduced: bool = True) -> np.ndarray:
        args, total = self._kernel_args(reduced)
        if total > self.bounds.max_tuples:
            raise SearchBoundsExceeded(f"{total} assignments exceed {self.bounds.max_tuples}")
        g = self.group
        return kernels.local_codes(g.table, g.inverse, identity=g.identity, **args)

    def resolve(self, constraints: Mapping | None) -> dict[str, CoveringClass]:
        """Accept classes or class names keyed by vertex id."""
        out = {}
        for q, beta in (constraints or {}).items():
            if q not in self.vertices:
                raise ConstraintMismatch(f"unknown vertex {q!r}")
            th = self.theories[self.vertices.index(q)]
            out[q] = th.by_name(beta) if isinstance(beta, str) else beta
        return out


_SETUPS: "weakref.WeakKeyDictionary[ColoredComplex, dict]" = weakref.WeakKeyDictionary()


def brane_setup(base: BraneComplex | ColoredComplex, group: FiniteGroup,
                bounds: SearchBounds = DEFAULT_BOUNDS) -> BraneSetup:
    cx = base.complex if isinstance(base, BraneComplex) else base
    per = _SETUPS.setdefault(cx, {})
    key = (id(group), bounds)
    if key not in per:
        per[key] = BraneSetup(cx, group, bounds)
    return per[key]


@dataclass(frozen=True)
class HurwitzValue:
    value: Fraction
    breakdown: tuple = ()

    def __str__(self) -> str:
        return format_fraction(self.value)


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}" if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def enumerate_classes(base: BraneComplex | ColoredComplex, group: FiniteGroup,
                      constraints: Mapping | None = None,
                      bounds: SearchBounds = DEFAULT_BOUNDS) -> list[CoveringClass]:
    """Isomorphism classes of coverings of ``base`` with the given local invariants.

    Sorted by class key.  Coverings are enumerated in the spanning-forest gauge,
    filtered by their local invariants and deduplicated by least conjugate;
    the automorphism order is the stabilizer of that conjugation action.
    """
    setup = brane_setup(base, group, bounds)
    constraints = setup.resolve(constraints)
    codes = setup.local_codes(reduced=True)
    keep = np.nonzero(setup.constraint_filter(codes, constraints))[0]
    plan = setup.plan
    k = len(plan.free_arcs)
    n = len(group)
    rows = np.stack([(keep // n ** j) % n for j in range(k)], axis=1) if k else np.zeros((len(keep), 0), np.int64)
    if len(keep) == 0:
        return []
    best, stab = kernels.conj_canon(group.table, group.inverse, rows, list(plan.var_comp), plan.ncomp)
    base_key = complex_key(setup.complex)
    seen: dict[tuple, CoveringClass] = {}
    for i, r in enumerate(best):
        key = tuple(int(x) for x in r)
        if key in seen:
            continue
        local = setup.decode(int(codes[keep[i]]))
        seen[key] = CoveringClass(base_key, group.name, key, int(stab[i]),
                                  tuple(sorted(local.items())), "")
    return [seen[k] for k in sorted(seen)]


def hurwitz(base: BraneComplex | ColoredComplex, group: FiniteGroup,
            constraints: Mapping | None = None,
            bounds: SearchBounds = DEFAULT_BOUNDS) -> HurwitzValue:
    """Sum of ``1/|Aut|`` over covering classes with the prescribed local invariants."""
    classes = enumerate_classes(base, group, constraints, bounds)
    parts = tuple((c, Fraction(1, c.aut_order)) for c in classes)
    return HurwitzValue(sum((p for _, p in parts), Fraction(0)), parts)


_TABLE_CACHE = None


def use_table_cache(cache) -> None:
    """Install (or with ``None`` remove) a store with ``get(key)`` / ``put(key, table)``."""
    global _TABLE_CACHE
    _TABLE_CACHE = cache


def hurwitz_table(base: BraneComplex | ColoredComplex, group: FiniteGroup,
                  bounds: SearchBounds = DEFAULT_BOUNDS) -> dict[tuple, Fraction]:
    """Hurwitz numbers for every tuple of local invariants at once.

    Keys are tuples of class indices in vertex order; the weight of every
    gauge-fixed tuple is ``1/|G|^components`` (orbit counting), which sums to
    the same value as ``hurwitz`` per class tuple.
    """
    setup = brane_setup(base, group, bounds)
    if _TABLE_CACHE is None:
        return _hurwitz_table(setup)
    from .cache import group_fingerprint

    cf = canonical_form(setup.complex)
    canon = [cf.vertex_map[q] for q in setup.vertices]
    order = sorted(range(len(canon)), key=lambda i: canon[i])
    key = repr((cf.key, group_fingerprint(group)))
    stored = _TABLE_CACHE.get(key)
    if stored is None:
        table = _hurwitz_table(setup)
        _TABLE_CACHE.put(key, {tuple(idx[i] for i in order): v for idx, v in table.items()})
        return table
    out = {}
    for cidx, v in stored.items():
        idx = [0] * len(order)
        for pos, i in enumerate(order):
            idx[i] = cidx[pos]
        out[tuple(idx)] = v
    return out


def _hurwitz_table(setup: "BraneSetup") -> dict[tuple, Fraction]:
    group = setup.group
    codes = setup.local_codes(reduced=True)
    uniq, counts = np.unique(codes, return_counts=True)
    w = Fraction(1, len(group) ** setup.plan.ncomp)
    out = {}
    for code, cnt in zip(uniq, counts):
        local = setup.decode(int(code))
        key = tuple(setup.theories[i].classes.index(local[q]) for i, q in enumerate(setup.vertices))
        out[key] = int(cnt) * w
    return out


def labeled_count(base: BraneComplex | ColoredComplex, group: FiniteGroup,
                  constraints: Mapping | None = None,
                  bounds: SearchBounds = DEFAULT_BOUNDS) -> int:
    """Number of raw incidence assignments (no gauge fixing) with these local invariants."""
    setup = brane_setup(base, group, bounds)
    constraints = setup.resolve(constraints)
    codes = setup.local_codes(reduced=False)
    return int(np.count_nonzero(setup.constraint_filter(codes, constraints)))


def gauge_group_order(base: BraneComplex | ColoredComplex, group: FiniteGroup) -> int:
    cx = base.complex if isinstance(base, BraneComplex) else base
    return len(group) ** (len(cx.edges) + len(cx.faces))


def local_invariant(cov: Covering, q: str) -> CoveringClass:
    if q not in cov.base.vertex:
        raise ComplexError(f"unknown vertex {q!r}", q)
    setup = brane_setup(cov.base, cov.group)
    return setup.local_invariants(cov.value_list(setup.plan))[q]


def classify(cov: Covering) -> CoveringClass:
    """Class of a concrete covering (base-identity equivalence)."""
    g = cov.group
    if cov.kind == "graph":
        cf = canonical_form(cov.base)
        th = sector_theory(cf.complex, g)
        moved = [0] * len(th.plan.arcs)
        for (eid, vid), v in cov.values.items():
            moved[th.plan.arc_index[(cf.edge_map[eid], cf.vertex_map[vid])]] = v
        return th.classify(moved)
    setup = brane_setup(cov.base, g)
    plan = setup.plan
    values = cov.value_list(plan)
    tup = [eval_word(g, w, values) for w in plan.gen_words]
    best, stab = kernels.conj_canon(g.table, g.inverse, np.array([tup], np.int64).reshape(1, len(tup)),
                                    list(plan.var_comp), plan.ncomp)
    local = setup.local_invariants(values)
    return CoveringClass(complex_key(cov.base), g.name, tuple(int(x) for x in best[0]),
                         int(stab[0]), tuple(sorted(local.items())), "")


def covering_from_class(base: BraneComplex | ColoredComplex, group: FiniteGroup,
                        cls: CoveringClass) -> Covering:
    """A concrete representative: identity on the forest, class key on free incidences."""
    cx = base.complex if isinstance(base, BraneComplex) else base
    plan = _brane_plan_cached(cx)
    values = [group.identity] * len(plan.arcs)
    for a, x in zip(plan.free_arcs, cls.class_key):
        values[a] = x
    return Covering(cx, group, {key: values[i] for i, (key, _, _) in enumerate(plan.arcs)})


def sector_covering(beta: CoveringClass, group: FiniteGroup) -> Covering:
    th = _theory_for(beta, group)
    values = th.values_from_rep(beta.class_key)
    return Covering(th.sector, group, {key: values[i] for i, (key, _, _) in enumerate(th.plan.arcs)},
                    kind="graph")


# ---------------------------------------------------------------------------
# cutting and gluing


def restrict_to_cut(cov: Covering, cut: Cut, bc: BraneComplex | None = None):
    """Split a covering along a cut.

    Returns ``(gamma covering, covering of the contracted complex, q_plus,
    q_minus)``; the covering of ``cut.gamma`` has the crossed edges as vertices
    and the crossed faces as edges.
    """
    cx = cov.base
    if bc is None:
        bc = BraneComplex(cx, tuple(tuple(sorted(c)) for c in cx.components))
    if bc.complex is not cx:
        raise CutMismatch("brane complex does not match the covering base")
    new, qp, qm, prov = contract_with_provenance(bc, cut)
    gvalues = {}
    for fid, (i, j) in cut.crossed_faces.items():
        f = cx.face[fid]
        gvalues[(fid, f.boundary[i][0])] = cov.values[(fid, i)]
        gvalues[(fid, f.boundary[j][0])] = cov.values[(fid, j)]
    gamma_cov = Covering(cut.gamma, cov.group, gvalues, kind="graph")
    values = {}
    for f in new.complex.faces:
        orig, positions = prov[f.id]
        for pos, p in enumerate(positions):
            values[(f.id, pos)] = cov.values[(orig, p)]
    return gamma_cov, Covering(new.complex, cov.group, values), qp, qm


def glue_along_cut(bc: BraneComplex, cut: Cut, pieces: Covering) -> Covering:
    """Inverse of ``restrict_to_cut``: rebuild the covering of ``bc``.

    The two copies of each crossed incidence must already agree, i.e. the
    pieces are glued along the identity equivalence of the cut coverings.
    """
    new, _, _, prov = contract_with_provenance(bc, cut)
    if complex_key(new.complex) != complex_key(pieces.base):
        raise CutMismatch("pieces do not cover the contracted complex")
    values: dict = {}
    for f in new.complex.faces:
        orig, positions = prov[f.id]
        for pos, p in enumerate(positions):
            x = pieces.values[(f.id, pos)]
            if values.setdefault((orig, p), x) != x:
                raise CutMismatch(f"pieces disagree on the crossed incidence {(orig, p)}")
    return Covering(bc.complex, pieces.group, values)


# ---------------------------------------------------------------------------
# degree-d front end


def covering_classes(sigma: ColoredComplex, d: int) -> list[CoveringClass]:
    """Classes of d-sheeted coverings of a connected vertex complex."""
    return sector_classes(sigma, symmetric(d))


def enumerate_coverings(bc: BraneComplex, d: int, constraints: Mapping | None = None,
                        bounds: SearchBounds = DEFAULT_BOUNDS) -> list[CoveringClass]:
    return enumerate_classes(bc, symmetric_cached(d), constraints, bounds)


def hurwitz_d(bc: BraneComplex, d: int, constraints: Mapping | None = None,
              bounds: SearchBounds = DEFAULT_BOUNDS) -> HurwitzValue:
    return hurwitz(bc, symmetric_cached(d), constraints, bounds)


_SYM: dict[int, FiniteGroup] = {}


def symmetric_cached(d: int) -> FiniteGroup:
    if d not in _SYM:
        _SYM[d] = symmetric(d)
    return _SYM[d]
