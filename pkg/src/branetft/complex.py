"""Colored simple CW-complexes of dimension at most 2.

A complex is stored combinatorially: vertices, directed edges and faces
whose boundary is a cyclic sequence of ``(edge id, direction)`` entries.
Vertices carry an optional color and sign; both are only set on complexes
produced as vertex links (and on the sectors derived from them), where a
link vertex remembers the color of the parent edge and whether that edge
points into the linked vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class ComplexError(ValueError):
    """Base class of all structural errors raised by the cw-kernel."""

    def __init__(self, message: str, cell=None):
        super().__init__(message)
        self.cell = cell
        self.violations: list[ComplexError] = [self]


class LoopEdge(ComplexError):
    pass


class NonSimpleFaceBoundary(ComplexError):
    pass


class DanglingCell(ComplexError):
    pass


class ColorClash(ComplexError):
    pass


class UnknownCell(ComplexError):
    pass


class UnknownVertex(UnknownCell):
    pass


class DuplicateId(ComplexError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: str
    color: str | None = None
    sign: int = 0


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    color: str


@dataclass(frozen=True)
class Face:
    id: str
    color: str
    boundary: tuple[tuple[str, int], ...]


@dataclass(frozen=True, eq=False)
class ColoredComplex:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()
    faces: tuple[Face, ...] = ()

    @cached_property
    def dim(self) -> int:
        if self.faces:
            return 2
        return 1 if self.edges else 0

    @cached_property
    def vertex(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def face(self) -> dict[str, Face]:
        return {f.id: f for f in self.faces}

    def face_vertices(self, face_id: str) -> list[str]:
        """Vertices visited by the boundary walk; entry ``i`` starts at item ``i``."""
        out = []
        for eid, sgn in self.face[face_id].boundary:
            e = self.edge[eid]
            out.append(e.tail if sgn > 0 else e.head)
        return out

    @cached_property
    def components(self) -> list[frozenset[str]]:
        """Vertex sets of the connected components, in first-vertex order."""
        parent = {v.id: v.id for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            a, b = find(e.tail), find(e.head)
            if a != b:
                parent[a] = b
        groups: dict[str, list[str]] = {}
        for v in self.vertices:
            groups.setdefault(find(v.id), []).append(v.id)
        return [frozenset(g) for g in groups.values()]

    def component_of(self, vertex_id: str) -> frozenset[str]:
        for comp in self.components:
            if vertex_id in comp:
                return comp
        raise UnknownVertex(f"unknown vertex {vertex_id!r}", vertex_id)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def subcomplex(self, vertex_ids: Iterable[str]) -> "ColoredComplex":
        """The full subcomplex spanned by a union of components."""
        keep = set(vertex_ids)
        edges = tuple(e for e in self.edges if e.tail in keep)
        eids = {e.id for e in edges}
        faces = tuple(f for f in self.faces if f.boundary[0][0] in eids)
        return ColoredComplex(tuple(v for v in self.vertices if v.id in keep), edges, faces)

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def __repr__(self) -> str:
        return (f"ColoredComplex(V={len(self.vertices)}, E={len(self.edges)}, "
                f"F={len(self.faces)}, dim={self.dim})")


def _as_vertex(v) -> Vertex:
    if isinstance(v, Vertex):
        return v
    if isinstance(v, str):
        return Vertex(v)
    return Vertex(*v)


def _as_edge(e) -> Edge:
    return e if isinstance(e, Edge) else Edge(*e)


def _as_face(f) -> Face:
    if isinstance(f, Face):
        return f
    fid, color, boundary = f
    return Face(fid, color, tuple((eid, 1 if sgn > 0 else -1) for eid, sgn in boundary))


def validate_complex(vertices: Iterable, edges: Iterable = (), faces: Iterable = ()) -> ColoredComplex:
    """Build a complex from raw cell lists and check every structural invariant.

    Vertices may be ids or ``Vertex`` records, edges ``(id, tail, head, color)``
    and faces ``(id, color, [(edge id, +1/-1), ...])``.  All violations are
    collected; the first one is raised and carries the full list in
    ``.violations``.
    """
    vs = tuple(_as_vertex(v) for v in vertices)
    es = tuple(_as_edge(e) for e in edges)
    fs = tuple(_as_face(f) for f in faces)
    bad: list[ComplexError] = []

    seen: set[str] = set()
    for kind, cells in (("vertex", vs), ("edge", es), ("face", fs)):
        for c in cells:
            if c.id in seen:
                bad.append(DuplicateId(f"duplicate {kind} id {c.id!r}", c.id))
            seen.add(c.id)
    vids = {v.id for v in vs}
    eids = {e.id: e for e in es}
    for v in vs:
        if v.sign not in (-1, 0, 1):
            bad.append(ComplexError(f"vertex {v.id!r} has sign {v.sign}", v.id))
    for e in es:
        if not e.color:
            bad.append(ColorClash(f"edge {e.id!r} has an empty color", e.id))
        for end in (e.tail, e.head):
            if end not in vids:
                bad.append(UnknownVertex(f"edge {e.id!r} ends at unknown vertex {end!r}", e.id))
        if e.tail == e.head:
            bad.append(LoopEdge(f"edge {e.id!r} is a loop at {e.tail!r}", e.id))
    if bad:
        _raise(bad)

    for f in fs:
        if not f.color:
            bad.append(ColorClash(f"face {f.id!r} has an empty color", f.id))
        b = f.boundary
        if any(eid not in eids for eid, _ in b):
            bad.append(UnknownCell(f"face {f.id!r} uses an unknown edge", f.id))
            continue
        if len(b) < 2:
            bad.append(NonSimpleFaceBoundary(f"face {f.id!r} has fewer than 2 boundary edges", f.id))
            continue
        if len({eid for eid, _ in b}) != len(b):
            bad.append(NonSimpleFaceBoundary(f"face {f.id!r} repeats an edge", f.id))
            continue
        starts, ends = [], []
        for eid, sgn in b:
            e = eids[eid]
            starts.append(e.tail if sgn > 0 else e.head)
            ends.append(e.head if sgn > 0 else e.tail)
        if any(ends[i] != starts[(i + 1) % len(b)] for i in range(len(b))):
            bad.append(NonSimpleFaceBoundary(f"face {f.id!r} boundary is not a closed walk", f.id))
        elif len(set(starts)) != len(starts):
            bad.append(NonSimpleFaceBoundary(f"face {f.id!r} boundary revisits a vertex", f.id))

    if fs:
        on_face = {eid for f in fs for eid, _ in f.boundary}
        for e in es:
            if e.id not in on_face:
                bad.append(DanglingCell(f"edge {e.id!r} lies on no face", e.id))
    if es:
        on_edge = {x for e in es for x in (e.tail, e.head)}
        for v in vs:
            if v.id not in on_edge:
                bad.append(DanglingCell(f"vertex {v.id!r} lies on no edge", v.id))
    if bad:
        _raise(bad)

    cx = ColoredComplex(vs, es, fs)
    for comp in cx.components:
        for kind, cells in (
            ("vertex", [v for v in vs if v.id in comp and v.color is not None]),
            ("edge", [e for e in es if e.tail in comp]),
            ("face", [f for f in fs if eids[f.boundary[0][0]].tail in comp]),
        ):
            colors: dict[str, str] = {}
            for c in cells:
                if c.color in colors:
                    bad.append(ColorClash(
                        f"{kind}s {colors[c.color]!r} and {c.id!r} share color {c.color!r}", c.id))
                colors[c.color] = c.id
    if bad:
        _raise(bad)
    return cx


def _raise(bad: list[ComplexError]):
    first = bad[0]
    first.violations = list(bad)
    raise first


# ---------------------------------------------------------------------------
# canonical form


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical key plus the isomorphism from the input onto the canonical copy."""

    key: tuple
    vertex_map: Mapping[str, str]
    edge_map: Mapping[str, str]
    face_map: Mapping[str, str]
    complex: ColoredComplex = field(repr=False, compare=False)


def _component_form(cx: ColoredComplex, comp: frozenset[str]):
    edges = sorted((e for e in cx.edges if e.tail in comp), key=lambda e: e.color)
    if edges:
        order: list[str] = []
        for e in edges:
            for x in (e.tail, e.head):
                if x not in order:
                    order.append(x)
    else:
        order = sorted(comp)
    vidx = {v: i for i, v in enumerate(order)}
    eidx = {e.id: i for i, e in enumerate(edges)}
    faces = sorted((f for f in cx.faces if f.boundary[0][0] in eidx), key=lambda f: f.color)
    fkeys = []
    for f in faces:
        seq = [(eidx[eid], sgn) for eid, sgn in f.boundary]
        r = min(range(len(seq)), key=lambda i: seq[i:] + seq[:i])
        fkeys.append((f.color, tuple(seq[r:] + seq[:r])))
    vkeys = tuple((cx.vertex[v].color or "", cx.vertex[v].sign) for v in order)
    key = (vkeys, tuple((e.color, vidx[e.tail], vidx[e.head]) for e in edges), tuple(fkeys))
    return key, order, edges, faces


def canonical_form(cx: ColoredComplex) -> CanonicalForm:
    """Complete isomorphism invariant for colored complexes.

    Inside a component edge and face colors are distinct, so the complex is
    rigid once edges are ordered by color: vertices are numbered by first
    appearance along the sorted edges and each face boundary is rotated to
    its least rotation.  Components are then sorted by their keys.
    """
    parts = sorted((_component_form(cx, comp) for comp in cx.components), key=lambda p: p[0])
    vmap: dict[str, str] = {}
    emap: dict[str, str] = {}
    fmap: dict[str, str] = {}
    vertices, edges, faces = [], [], []
    for key, order, comp_edges, comp_faces in parts:
        first_edge = len(edges)
        for v in order:
            vmap[v] = f"v{len(vertices)}"
            src = cx.vertex[v]
            vertices.append(Vertex(vmap[v], src.color, src.sign))
        for e in comp_edges:
            emap[e.id] = f"e{len(edges)}"
            edges.append(Edge(emap[e.id], vmap[e.tail], vmap[e.head], e.color))
        for f, (color, seq) in zip(comp_faces, key[2]):
            fmap[f.id] = f"f{len(faces)}"
            faces.append(Face(fmap[f.id], color,
                              tuple((edges[first_edge + i].id, s) for i, s in seq)))
    canon = ColoredComplex(tuple(vertices), tuple(edges), tuple(faces))
    return CanonicalForm(tuple(p[0] for p in parts), vmap, emap, fmap, canon)


def complex_key(cx: ColoredComplex) -> tuple:
    return canonical_form(cx).key


def is_isomorphic(a: ColoredComplex, b: ColoredComplex) -> bool:
    return complex_key(a) == complex_key(b)


# ---------------------------------------------------------------------------
# links and the star involution


@dataclass(frozen=True)
class LinkGraph:
    """Vertex complex of ``vertex`` together with where each link cell came from.

    Link vertices reuse the parent edge ids and link edges reuse the parent
    face ids.  ``corner`` maps a link edge to the boundary positions of the
    entering and leaving parent edges.
    """

    complex: ColoredComplex
    vertex: str
    corner: Mapping[str, tuple[int, int]]


def link(cx: ColoredComplex, q: str) -> LinkGraph:
    if q not in cx.vertex:
        raise UnknownVertex(f"unknown vertex {q!r}", q)
    lverts = []
    for e in cx.edges:
        if q in (e.tail, e.head):
            lverts.append(Vertex(e.id, e.color, 1 if e.head == q else -1))
    ledges, corner = [], {}
    for f in cx.faces:
        starts = cx.face_vertices(f.id)
        if q not in starts:
            continue
        out_pos = starts.index(q)
        in_pos = (out_pos - 1) % len(starts)
        ledges.append(Edge(f.id, f.boundary[in_pos][0], f.boundary[out_pos][0], f.color))
        corner[f.id] = (in_pos, out_pos)
    return LinkGraph(ColoredComplex(tuple(lverts), tuple(ledges), ()), q, corner)


def star_involution(cx: ColoredComplex) -> ColoredComplex:
    """Reverse every orientation: edges, face boundaries and vertex signs."""
    return ColoredComplex(
        tuple(Vertex(v.id, v.color, -v.sign) for v in cx.vertices),
        tuple(Edge(e.id, e.head, e.tail, e.color) for e in cx.edges),
        tuple(Face(f.id, f.color, tuple((eid, sgn) for eid, sgn in reversed(f.boundary)))
              for f in cx.faces),
    )


def relabel(cx: ColoredComplex, vmap: Mapping[str, str], emap: Mapping[str, str],
            fmap: Mapping[str, str], rotations: Mapping[str, int] | None = None) -> ColoredComplex:
    """Rename cells; ``rotations`` shifts the starting point of face boundaries."""
    rotations = rotations or {}
    faces = []
    for f in cx.faces:
        b = [(emap[eid], s) for eid, s in f.boundary]
        r = rotations.get(f.id, 0) % len(b)
        faces.append(Face(fmap[f.id], f.color, tuple(b[r:] + b[:r])))
    return ColoredComplex(
        tuple(Vertex(vmap[v.id], v.color, v.sign) for v in cx.vertices),
        tuple(Edge(emap[e.id], vmap[e.tail], vmap[e.head], e.color) for e in cx.edges),
        tuple(faces),
    )


def disjoint_union(*parts: ColoredComplex, prefixes: Sequence[str] | None = None) -> ColoredComplex:
    prefixes = prefixes or [f"c{i}." for i in range(len(parts))]
    out = []
    for p, cx in zip(prefixes, parts):
        out.append(relabel(cx, {v.id: p + v.id for v in cx.vertices},
                           {e.id: p + e.id for e in cx.edges},
                           {f.id: p + f.id for f in cx.faces}))
    return ColoredComplex(
        tuple(v for c in out for v in c.vertices),
        tuple(e for c in out for e in c.edges),
        tuple(f for c in out for f in c.faces),
    )


def recolor(cx: ColoredComplex, colors: Mapping[str, str]) -> ColoredComplex:
    return ColoredComplex(
        tuple(Vertex(v.id, colors.get(v.color, v.color) if v.color else v.color, v.sign)
              for v in cx.vertices),
        tuple(Edge(e.id, e.tail, e.head, colors.get(e.color, e.color)) for e in cx.edges),
        tuple(Face(f.id, colors.get(f.color, f.color), f.boundary) for f in cx.faces),
    )


def isomorphic_up_to_recoloring(a: ColoredComplex, b: ColoredComplex) -> bool:
    """Isomorphism allowing any renaming of colors that respects cell dimension.

    Exhaustive over color bijections; meant for small complexes.
    """
    from itertools import permutations

    def palette(cx):
        return (sorted({v.color for v in cx.vertices if v.color}),
                sorted({e.color for e in cx.edges}), sorted({f.color for f in cx.faces}))

    pa, pb = palette(a), palette(b)
    if [len(x) for x in pa] != [len(x) for x in pb]:
        return False
    target = complex_key(b)
    for pv in permutations(pb[0]):
        for pe in permutations(pb[1]):
            for pf in permutations(pb[2]):
                m = dict(zip(pa[0], pv)) | dict(zip(pa[1], pe)) | dict(zip(pa[2], pf))
                if complex_key(recolor(a, m)) == target:
                    return True
    return False
