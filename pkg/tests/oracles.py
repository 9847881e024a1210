"""Brute-force references, independent of the engine's search code.

Only the plain data model (cells, boundaries, permutations as tuples) is
shared with the package; every count here is an exhaustive loop.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

from branetft.complex import ColoredComplex


def cycle_type(p) -> tuple[int, ...]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


def parse_partition(name: str) -> tuple[int, ...]:
    return tuple(sorted((int(x) for x in name.strip("[]").split(",")), reverse=True))


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def monodromy_count(d: int, partitions) -> int:
    """Tuples (s_1..s_n) in S_d with cycle types ``partitions`` and s_1...s_n = id."""
    ident = tuple(range(d))
    pools = [[p for p in permutations(range(d)) if cycle_type(p) == lam] for lam in partitions]
    count = 0
    for tup in product(*pools):
        acc = ident
        for p in tup:
            acc = compose(acc, p)
        count += acc == ident
    return count


def sphere_hurwitz(d: int, names) -> Fraction:
    return Fraction(monodromy_count(d, [parse_partition(n) for n in names]), factorial(d))


def cyclic_hurwitz(n: int, elements) -> Fraction:
    """H^{C_n} on a sphere: one tuple if the elements sum to zero, divided by |G|."""
    return Fraction(1 if sum(elements) % n == 0 else 0, n)


def brute_automorphisms(cov) -> int:
    """Families of sheet permutations, one per cell, commuting with every incidence."""
    g = cov.group
    d = len(g.perms[0])
    plan = cov.plan
    perms = list(permutations(range(d)))
    arcs = [(cov.bijection(key), s, t) for key, s, t in plan.arcs]
    count = 0
    for family in product(perms, repeat=len(plan.nodes)):
        if all(f[family[s][i]] == family[t][f[i]] for f, s, t in arcs for i in range(d)):
            count += 1
    return count


def transversal_cuts(cx: ColoredComplex, plus, minus) -> list[tuple[frozenset, frozenset]]:
    """Every connected codimension-1 transversal separating ``plus`` from ``minus``.

    Candidates are any set of crossed edges together with, per face, either no
    chord or a chord between two crossed boundary edges.  A candidate counts
    when cutting along it leaves exactly the two requested vertex groups
    connected internally and apart from each other, every crossed edge is met
    by the transversal, and the transversal itself is connected.
    Returns ``(crossed edge ids, {(face, {i, j})})`` per valid candidate.
    """
    plus, minus = frozenset(plus), frozenset(minus)
    verts = plus | minus
    edges = [e for e in cx.edges if e.tail in verts]
    faces = [f for f in cx.faces if cx.edge[f.boundary[0][0]].tail in verts]
    found = []
    for k in range(1, len(edges) + 1):
        for crossed in combinations(edges, k):
            cids = {e.id for e in crossed}
            choices = []
            for f in faces:
                pos = [i for i, (eid, _) in enumerate(f.boundary) if eid in cids]
                choices.append([None] + list(combinations(pos, 2)))
            for chords in product(*choices):
                if _separates(cx, verts, edges, faces, cids, chords, plus, minus) and \
                        _transversal_connected(faces, cids, chords, len(faces) == 0):
                    found.append((frozenset(cids),
                                  frozenset((f.id, frozenset(c)) for f, c in zip(faces, chords) if c)))
    return found


def _separates(cx, verts, edges, faces, cids, chords, plus, minus) -> bool:
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def join(a, b):
        parent[find(a)] = find(b)

    for e in edges:
        if e.id not in cids:
            join(e.tail, e.head)
    for f, chord in zip(faces, chords):
        starts = cx.face_vertices(f.id)
        m = len(starts)
        if chord is None:
            arcs = [starts]
        else:
            i, j = chord
            arcs = [[starts[(t) % m] for t in range(i + 1, j + 1)],
                    [starts[(t) % m] for t in range(j + 1, i + 1 + m)]]
        for arc in arcs:
            for a in arc[1:]:
                join(arc[0], a)
    rp = {find(v) for v in plus}
    rm = {find(v) for v in minus}
    if len(rp) != 1 or len(rm) != 1 or rp == rm:
        return False
    # each crossing really changes sides
    return all((e.tail in plus) != (e.head in plus) for e in edges if e.id in cids)


def _transversal_connected(faces, cids, chords, dim1: bool) -> bool:
    if dim1:
        return len(cids) == 1
    met = set()
    parent = {e: e for e in cids}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for f, chord in zip(faces, chords):
        if chord is None:
            continue
        a, b = (f.boundary[i][0] for i in chord)
        met |= {a, b}
        parent[find(a)] = find(b)
    return met == cids and len({find(e) for e in cids}) == 1
