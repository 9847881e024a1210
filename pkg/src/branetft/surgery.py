"""Brane complexes: cyclic orders, cuts, contraction and reconstruction."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .complex import (
    ColoredComplex, ComplexError, Edge, Face, Vertex, canonical_form, link,
    validate_complex,
)


class NonContiguousSplit(ComplexError):
    pass


class MissingCut(ComplexError):
    def __init__(self, split):
        a, b = split
        super().__init__(f"no cut realizes {{{','.join(sorted(a))}}}|{{{','.join(sorted(b))}}}", split)
        self.split = split


class CutMismatch(ComplexError):
    pass


class NotConnected(ComplexError):
    pass


@dataclass(frozen=True)
class Cut:
    """A transversal separating ``plus`` from ``minus`` inside one component.

    ``crossed_faces[f] = (i, j)``: the chord of ``f`` runs between boundary
    positions ``i`` (where the boundary walk leaves ``plus``) and ``j``
    (where it comes back).  ``gamma`` is the cut complex, oriented so that it
    is the link of the new vertex capping the ``plus`` piece.
    """

    component: frozenset[str]
    plus: frozenset[str]
    minus: frozenset[str]
    crossed_edges: tuple[str, ...]
    crossed_faces: Mapping[str, tuple[int, int]]
    gamma: ColoredComplex = field(compare=False)

    @property
    def bipartition(self) -> tuple[frozenset[str], frozenset[str]]:
        return self.plus, self.minus


@dataclass(frozen=True, eq=False)
class BraneComplex:
    complex: ColoredComplex
    orders: tuple[tuple[str, ...], ...]
    certificate: Mapping[frozenset, Cut] | None = None

    @property
    def vertex_ids(self) -> list[str]:
        return [q for order in self.orders for q in order]

    def cut(self, plus: Iterable[str]) -> Cut:
        """Certificate cut whose plus side is ``plus`` (reoriented if needed)."""
        plus = frozenset(plus)
        comp = self.complex.component_of(next(iter(plus)))
        minus = comp - plus
        if self.certificate is None or frozenset((plus, minus)) not in self.certificate:
            raise MissingCut((plus, minus))
        c = self.certificate[frozenset((plus, minus))]
        return c if c.plus == plus else find_cuts(self, plus, minus)[0]

    def __repr__(self) -> str:
        return f"BraneComplex({self.complex!r}, orders={self.orders})"


def _is_contiguous(order: Sequence[str], part: frozenset[str]) -> bool:
    flags = [q in part for q in order]
    return sum(flags[i] != flags[i - 1] for i in range(len(flags))) == 2


def contiguous_splits(order: Sequence[str]) -> list[tuple[frozenset[str], frozenset[str]]]:
    """Unordered nontrivial contiguous splits; the first part holds ``order[0]``."""
    n = len(order)
    out, seen = [], set()
    for start in range(n):
        for length in range(1, n):
            arc = frozenset(order[(start + i) % n] for i in range(length))
            rest = frozenset(order) - arc
            if order[0] not in arc:
                arc, rest = rest, arc
            key = frozenset((arc, rest))
            if key not in seen:
                seen.add(key)
                out.append((arc, rest))
    return out


def _connected(vertices: frozenset[str], edges: Iterable[Edge]) -> bool:
    if not vertices:
        return False
    adj: dict[str, list[str]] = {v: [] for v in vertices}
    for e in edges:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    start = next(iter(vertices))
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def find_cuts(bc: BraneComplex | ColoredComplex, plus: Iterable[str], minus: Iterable[str],
              order: Sequence[str] | None = None) -> list[Cut]:
    """All cuts realizing the split ``plus | minus``.

    Every crossing of the transversal with an edge switches sides, so the
    crossed edges are exactly the edges joining the two parts and a face is
    crossed iff its boundary meets both parts; a single chord per face then
    forces exactly two side changes along its boundary.  The candidate is
    therefore unique and the list has at most one element.
    """
    cx = bc.complex if isinstance(bc, BraneComplex) else bc
    plus, minus = frozenset(plus), frozenset(minus)
    if not plus or not minus or plus & minus:
        raise NonContiguousSplit("split parts must be disjoint and nonempty", (plus, minus))
    comp = cx.component_of(next(iter(plus)))
    if plus | minus != comp:
        raise NonContiguousSplit("split must cover exactly one component", (plus, minus))
    if order is None and isinstance(bc, BraneComplex):
        order = next(o for o in bc.orders if o[0] in comp)
    if order is not None and not _is_contiguous(order, plus):
        raise NonContiguousSplit("split is not contiguous in the cyclic order", (plus, minus))

    comp_edges = [e for e in cx.edges if e.tail in comp]
    crossed = [e for e in comp_edges if (e.tail in plus) != (e.head in plus)]
    if not crossed:
        return []
    if not _connected(plus, [e for e in comp_edges if e.tail in plus and e.head in plus]):
        return []
    if not _connected(minus, [e for e in comp_edges if e.tail in minus and e.head in minus]):
        return []
    crossed_ids = {e.id for e in crossed}
    chords: dict[str, tuple[int, int]] = {}
    for f in cx.faces:
        if cx.edge[f.boundary[0][0]].tail not in comp:
            continue
        starts = cx.face_vertices(f.id)
        side = [q in plus for q in starts]
        if all(side) or not any(side):
            continue
        leave = [i for i in range(len(side)) if side[i] and not side[(i + 1) % len(side)]]
        back = [i for i in range(len(side)) if not side[i] and side[(i + 1) % len(side)]]
        if len(leave) != 1:
            return []
        chords[f.id] = (leave[0], back[0])

    gverts = tuple(Vertex(e.id, e.color, 1 if e.tail in plus else -1) for e in crossed)
    gedges = tuple(Edge(fid, cx.face[fid].boundary[i][0], cx.face[fid].boundary[j][0],
                        cx.face[fid].color) for fid, (i, j) in chords.items())
    gamma = ColoredComplex(gverts, gedges, ())
    if not _connected(frozenset(v.id for v in gverts), gedges):
        return []
    return [Cut(comp, plus, minus, tuple(sorted(crossed_ids)), dict(chords), gamma)]


def is_brane(cx: ColoredComplex, orders: Sequence[Sequence[str]]) -> BraneComplex:
    """Check every contiguous split has a cut; return the certified brane complex."""
    orders = tuple(tuple(o) for o in orders)
    listed = [q for o in orders for q in o]
    if sorted(listed) != sorted(v.id for v in cx.vertices) or len(set(listed)) != len(listed):
        raise ComplexError("cyclic orders must list every vertex exactly once")
    for o in orders:
        if cx.component_of(o[0]) != frozenset(o):
            raise ComplexError(f"cyclic order {o} is not a connected component")
    certificate: dict[frozenset, Cut] = {}
    for o in orders:
        for plus, minus in contiguous_splits(o):
            cuts = find_cuts(cx, plus, minus, order=o)
            if not cuts:
                raise MissingCut((plus, minus))
            certificate[frozenset((plus, minus))] = cuts[0]
    return BraneComplex(cx, orders, certificate)


def _fresh(name: str, taken: set[str]) -> str:
    out, i = name, 1
    while out in taken:
        out, i = f"{name}{i}", i + 1
    taken.add(out)
    return out


def contract_along_cut(bc: BraneComplex, cut: Cut) -> tuple[BraneComplex, str, str]:
    """Cut the component open along ``cut`` and cone each side to a new vertex.

    Returns ``(new complex, q_plus, q_minus)``; ``link(new, q_plus)`` is
    isomorphic to ``cut.gamma`` and ``link(new, q_minus)`` to its star.  Split
    cells keep their ids with a ``+`` / ``-`` suffix and their colors.
    """
    new, qp, qm, _ = contract_with_provenance(bc, cut)
    return new, qp, qm


def contract_with_provenance(bc: BraneComplex, cut: Cut):
    """``contract_along_cut`` plus, for every face of the result, the original
    face id and the original boundary position of each of its boundary entries."""
    cx = bc.complex
    again = find_cuts(cx, cut.plus, cut.minus)
    if not again or again[0] != cut:
        raise CutMismatch("cut does not belong to this complex", cut.plus)
    taken = {v.id for v in cx.vertices} | {e.id for e in cx.edges} | {f.id for f in cx.faces}
    qp, qm = _fresh("q+", taken), _fresh("q-", taken)
    half = {}
    for eid in cut.crossed_edges:
        half[eid] = (_fresh(eid + "+", taken), _fresh(eid + "-", taken))

    vertices = list(cx.vertices) + [Vertex(qp), Vertex(qm)]
    edges = []
    for e in cx.edges:
        if e.id not in half:
            edges.append(e)
            continue
        ep, em = half[e.id]
        if e.tail in cut.plus:
            edges += [Edge(ep, e.tail, qp, e.color), Edge(em, qm, e.head, e.color)]
        else:
            edges += [Edge(ep, qp, e.head, e.color), Edge(em, e.tail, qm, e.color)]
    faces = []
    prov = {}
    for f in cx.faces:
        if f.id not in cut.crossed_faces:
            faces.append(f)
            prov[f.id] = (f.id, tuple(range(len(f.boundary))))
            continue
        starts = cx.face_vertices(f.id)
        for sign, side, suffix in ((0, cut.plus, "+"), (1, cut.minus, "-")):
            seq = []
            for pos, (eid, s) in enumerate(f.boundary):
                if eid in half:
                    seq.append((pos, (half[eid][sign], s)))
                elif starts[pos] in side:
                    seq.append((pos, (eid, s)))
            fid = _fresh(f.id + suffix, taken)
            faces.append(Face(fid, f.color, tuple(x for _, x in seq)))
            prov[fid] = (f.id, tuple(p for p, _ in seq))

    orders = []
    for o in bc.orders:
        if o[0] not in cut.component:
            orders.append(o)
            continue
        n = len(o)
        for side, q in ((cut.plus, qp), (cut.minus, qm)):
            start = next(i for i in range(n) if o[i] in side and o[i - 1] not in side)
            arc = []
            i = start
            while o[i % n] in side:
                arc.append(o[i % n])
                i += 1
            orders.append(tuple(arc) + (q,))
    new = ColoredComplex(tuple(vertices), tuple(edges), tuple(faces))
    return BraneComplex(new, tuple(orders), None), qp, qm, prov


def suspension(sigma: ColoredComplex) -> BraneComplex:
    """Two-vertex brane complex whose links are ``sigma`` and its star.

    Each vertex of ``sigma`` becomes an edge between ``q1`` and ``q2`` (pointing
    into ``q1`` iff the vertex sign is positive) and each edge of ``sigma``
    becomes a bigon face.
    """
    if not sigma.is_connected() or sigma.dim > 1:
        raise NotConnected("suspension needs a connected complex of dimension <= 1")
    edges = {}
    for v in sigma.vertices:
        color = v.color if v.color is not None else v.id
        edges[v.id] = Edge(v.id, "q2", "q1", color) if v.sign > 0 else Edge(v.id, "q1", "q2", color)
    faces = []
    for e in sigma.edges:
        ev, eu = edges[e.head], edges[e.tail]
        faces.append(Face(e.id, e.color, ((ev.id, 1 if ev.tail == "q1" else -1),
                                          (eu.id, 1 if eu.tail == "q2" else -1))))
    cx = validate_complex(["q1", "q2"], edges.values(), faces)
    return is_brane(cx, [("q1", "q2")])


def sphere_complex(n: int, prefix: str = "") -> BraneComplex:
    """n vertices on an equator, n equator edges and two polar n-gons."""
    if n < 2:
        raise ValueError("sphere_complex needs n >= 2")
    qs = [f"q{i + 1}" for i in range(n)]
    edges = [(f"e{i + 1}", qs[i], qs[(i + 1) % n], f"{prefix}e{i + 1}") for i in range(n)]
    north = ("N", f"{prefix}N", [(f"e{i + 1}", 1) for i in range(n)])
    south = ("S", f"{prefix}S", [(f"e{i + 1}", -1) for i in reversed(range(n))])
    return is_brane(validate_complex(qs, edges, [north, south]), [qs])


def foam_complex(n: int, orientations: str = "++-", prefix: str = "") -> BraneComplex:
    """n equator vertices and one face per character of ``orientations``, each
    bounded by the whole equator (``+`` forward, ``-`` reversed).  Vertex links
    are graphs with two vertices and one edge per face."""
    if n < 2 or not orientations or set(orientations) - {"+", "-"}:
        raise ValueError("foam_complex needs n >= 2 and a nonempty string over '+-'")
    qs = [f"q{i + 1}" for i in range(n)]
    edges = [(f"e{i + 1}", qs[i], qs[(i + 1) % n], f"{prefix}e{i + 1}") for i in range(n)]
    faces = []
    for k, o in enumerate(orientations):
        fwd = [(f"e{i + 1}", 1) for i in range(n)]
        bnd = fwd if o == "+" else [(eid, -s) for eid, s in reversed(fwd)]
        faces.append((f"f{k + 1}", f"{prefix}f{k + 1}", bnd))
    return is_brane(validate_complex(qs, edges, faces), [qs])


def compatible_complex(sigmas: Sequence[ColoredComplex]) -> BraneComplex | None:
    """Reconstruct the brane complex with vertex links ``sigmas`` in cyclic order.

    Edges are read off link-vertex colors (each must occur at exactly two
    vertices with opposite signs) and face boundaries are stitched from the
    corners recorded by link edges.  Any inconsistency gives ``None``.
    """
    n = len(sigmas)
    if n < 2 or len({s.dim for s in sigmas}) != 1 or sigmas[0].dim > 1:
        return None
    if not all(s.is_connected() for s in sigmas):
        return None
    qs = [f"q{i + 1}" for i in range(n)]
    ends: dict[str, list[tuple[int, int]]] = {}
    for i, s in enumerate(sigmas):
        for v in s.vertices:
            if v.color is None or v.sign == 0:
                return None
            ends.setdefault(v.color, []).append((i, v.sign))
    edges = {}
    for color, occ in sorted(ends.items()):
        if len(occ) != 2 or occ[0][0] == occ[1][0] or occ[0][1] == occ[1][1]:
            return None
        head = qs[occ[0][0]] if occ[0][1] > 0 else qs[occ[1][0]]
        tail = qs[occ[1][0]] if head == qs[occ[0][0]] else qs[occ[0][0]]
        edges[color] = Edge(color, tail, head, color)

    corners: dict[str, dict[tuple[int, str], str]] = {}
    for i, s in enumerate(sigmas):
        for e in s.edges:
            cin, cout = s.vertex[e.tail].color, s.vertex[e.head].color
            slot = corners.setdefault(e.color, {})
            if (i, cin) in slot:
                return None
            slot[(i, cin)] = cout
    faces = []
    for color, slot in sorted(corners.items()):
        start = min(slot)
        i, cin = start
        boundary, used = [], set()
        while True:
            if (i, cin) not in slot or (i, cin) in used:
                return None
            used.add((i, cin))
            cout = slot[(i, cin)]
            e = edges[cout]
            if qs[i] == e.tail:
                boundary.append((cout, 1))
                j = qs.index(e.head)
            elif qs[i] == e.head:
                boundary.append((cout, -1))
                j = qs.index(e.tail)
            else:
                return None
            i, cin = j, cout
            if (i, cin) == start:
                break
        if used != set(slot):
            return None
        faces.append((color, color, boundary))
    try:
        cx = validate_complex(qs, edges.values(), faces)
    except ComplexError:
        return None
    if not cx.is_connected():
        return None
    for q, s in zip(qs, sigmas):
        if canonical_form(link(cx, q).complex).key != canonical_form(s).key:
            return None
    try:
        return is_brane(cx, [qs])
    except ComplexError:
        return None
