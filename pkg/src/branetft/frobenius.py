"""Colored Frobenius algebras over the rationals.

An algebra is graded by a finite set of sectors closed under a star
involution.  It carries a bilinear form pairing each sector with its star
(Gram blocks) and a cyclically symmetric trilinear form (sparse blocks on
sector triples).  All arithmetic uses :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import lcm
from typing import Iterable, Mapping, Sequence

Matrix = tuple  # tuple of row tuples of Fraction


class DegenerateGram(ValueError):
    def __init__(self, sector: str):
        super().__init__(f"Gram block of sector {sector!r} is singular")
        self.sector = sector


class IllegalBlock(ValueError):
    pass


class CrossingFailure(ValueError):
    def __init__(self, sectors, witness, lhs, rhs):
        super().__init__(f"crossing fails on sectors {sectors} at basis {witness}: {lhs} != {rhs}")
        self.sectors, self.witness, self.lhs, self.rhs = sectors, witness, lhs, rhs


class UnknownSector(KeyError):
    pass


class SectorMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# exact linear algebra


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in bt) for r in a)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def inverse(a: Matrix) -> Matrix | None:
    """Gauss-Jordan inverse, or ``None`` if singular."""
    n = len(a)
    m = [list(r) + list(e) for r, e in zip(a, identity(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(r[n:]) for r in m)


def format_fraction(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}" if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# algebra data


@dataclass(frozen=True)
class SectorLabel:
    id: str
    key: tuple = field(repr=False, compare=False)
    star: str = ""
    name: str = field(default="", compare=False)


@dataclass(frozen=True, eq=False)
class FrobeniusAlgebra:
    """``gram[s][i][j] = (b_i^s, b_j^{s*})``; ``trilinear[(s1, s2, s3)][(i, j, k)]``
    holds the nonzero entries, stored for every cyclic rotation."""

    sectors: tuple[SectorLabel, ...]
    basis: Mapping[str, tuple[str, ...]]
    gram: Mapping[str, Matrix]
    trilinear: Mapping[tuple, Mapping[tuple, Fraction]]
    allowed: frozenset | None = None
    witness: Mapping[tuple, str] = field(default_factory=dict)
    channels: Mapping[tuple, tuple] | None = None
    copair: Mapping[str, Matrix] = field(default_factory=dict, repr=False)

    def sector(self, sid: str) -> SectorLabel:
        for s in self.sectors:
            if s.id == sid:
                return s
        raise UnknownSector(sid)

    def star(self, sid: str) -> str:
        return self.sector(sid).star

    def dim(self, sid: str) -> int:
        return len(self.basis[sid])

    def ids(self) -> list[str]:
        return [s.id for s in self.sectors]

    def tri(self, s1: str, s2: str, s3: str, i: int, j: int, k: int) -> Fraction:
        return self.trilinear.get((s1, s2, s3), {}).get((i, j, k), Fraction(0))


def copairing(A: FrobeniusAlgebra, sid: str) -> Matrix:
    """``K[i][j]``: coefficient of ``b_i^s (x) b_j^{s*}`` in the copairing.

    Pairing ``K`` with ``x1 (x) x2`` as ``sum K[i][j] (x1, b_j^{s*}) (b_i^s, x2)``
    gives back ``(x1, x2)`` exactly when ``K = (G^-1)^T``.
    """
    A.sector(sid)
    if sid not in A.copair:
        inv = inverse(A.gram[sid])
        if inv is None:
            raise DegenerateGram(sid)
        A.copair[sid] = transpose(inv)
    return A.copair[sid]


def copairing_identity_holds(A: FrobeniusAlgebra, sid: str) -> bool:
    g = A.gram[sid]
    k = copairing(A, sid)
    n, m = len(g), len(g[0]) if g else 0
    for a in range(n):
        for c in range(m):
            val = sum((k[i][j] * g[a][j] * g[i][c] for i in range(n) for j in range(m)), Fraction(0))
            if val != g[a][c]:
                return False
    return True


def assemble_algebra(sectors: Sequence[SectorLabel], basis: Mapping[str, Sequence[str]],
                     gram: Mapping[str, Sequence[Sequence]], trilinear: Mapping[tuple, Mapping[tuple, object]],
                     allowed: Iterable[tuple] | None = None, witness: Mapping | None = None,
                     check: bool = True, channels: Mapping[tuple, tuple] | None = None) -> FrobeniusAlgebra:
    """Validate shapes, fill cyclic rotations and check every axiom.

    ``allowed`` lists the sector triples with a nonempty compatible complex;
    ``None`` allows all triples.  ``channels`` maps every sector 4-tuple with a
    nonempty four-point complex to its two cut sectors ``(s_12|34, s_41|23)``;
    the crossing identity is then checked on exactly those tuples and
    channels.  Without it every 4-tuple is checked with all sectors summed.
    """
    ids = {s.id for s in sectors}
    for s in sectors:
        if s.star not in ids:
            raise UnknownSector(f"star partner {s.star!r} of {s.id!r} missing")
    g = {}
    for s in sectors:
        if s.id not in gram:
            raise IllegalBlock(f"no Gram block for sector {s.id!r}")
        m = mat(gram[s.id])
        partner = {x.id: x for x in sectors}[s.star]
        if len(m) != len(basis[s.id]) or any(len(r) != len(basis[partner.id]) for r in m):
            raise IllegalBlock(f"Gram block of {s.id!r} has the wrong shape")
        g[s.id] = m
    tri: dict[tuple, dict] = {}
    for key, block in trilinear.items():
        if len(key) != 3 or any(x not in ids for x in key):
            raise IllegalBlock(f"trilinear block on unknown sectors {key}")
        for idx, val in block.items():
            val = Fraction(val)
            if val == 0:
                continue
            for r in range(3):
                rk, ri = key[r:] + key[:r], idx[r:] + idx[:r]
                if any(not 0 <= x < len(basis[s]) for x, s in zip(ri, rk)):
                    raise IllegalBlock(f"basis index {idx} out of range on {key}")
                old = tri.setdefault(rk, {}).get(ri)
                if old is not None and old != val:
                    raise IllegalBlock(f"trilinear entries on {key} are not cyclically symmetric")
                tri[rk][ri] = val
    if channels is not None:
        for quad, chans in channels.items():
            if len(quad) != 4 or len(chans) != 2 or any(x not in ids for x in quad + tuple(chans)):
                raise IllegalBlock(f"channel record {quad} -> {chans} names unknown sectors")
        channels = {tuple(k): tuple(v) for k, v in channels.items()}
    A = FrobeniusAlgebra(tuple(sectors), {k: tuple(v) for k, v in basis.items()}, g, tri,
                         frozenset(allowed) if allowed is not None else None, dict(witness or {}),
                         channels)
    if check:
        report = verify_algebra_axioms(A)
        for entry in report:
            if not entry.passed:
                raise entry.error or ValueError(entry.detail)
    return A


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    detail: str = ""
    error: Exception | None = field(default=None, compare=False, repr=False)


def verify_algebra_axioms(A: FrobeniusAlgebra, exhaustive: bool = True) -> list[AxiomResult]:
    """Pass/fail for sector pairing, non-degeneracy, trilinear support and crossing."""
    out = []
    bad = [s.id for s in A.sectors if A.gram[s.star] != transpose(A.gram[s.id])]
    out.append(AxiomResult("pairing", not bad, f"asymmetric Gram blocks: {bad}" if bad else "",
                           IllegalBlock(f"Gram of {bad[0]} is not the transpose of its star's") if bad else None))
    sing = [s.id for s in A.sectors if inverse(A.gram[s.id]) is None]
    out.append(AxiomResult("nondegenerate", not sing, f"singular: {sing}" if sing else "",
                           DegenerateGram(sing[0]) if sing else None))
    illegal = []
    if A.allowed is not None:
        illegal = [k for k, b in A.trilinear.items() if b and k not in A.allowed]
    out.append(AxiomResult("trilinear_support", not illegal,
                           f"nonzero blocks without compatible complex: {illegal}" if illegal else "",
                           IllegalBlock(f"nonzero block on {illegal[0]}") if illegal else None))
    if sing:
        out.append(AxiomResult("crossing", False, "skipped: singular Gram"))
        return out
    fail = crossing_failure(A, exhaustive)
    out.append(AxiomResult("crossing", fail is None, str(fail) if fail else "", fail))
    return out


def _channels(A: FrobeniusAlgebra):
    """``pairs[(s1, s2)] = [(s, block)]`` for every nonzero block ``(s1, s2, s)``."""
    pairs: dict[tuple, list] = {}
    for (s1, s2, s3), block in A.trilinear.items():
        if block:
            pairs.setdefault((s1, s2), []).append((s3, block))
    return pairs


def _four_point(A, pairs, s1, s2, s3, s4, only: str | None = None) -> dict:
    """``sum_b (x1, x2, b) K (b*, x3, x4)`` as a sparse 4-tensor on basis indices,
    over every intermediate sector or just ``only``."""
    out: dict[tuple, Fraction] = {}
    for s, left in pairs.get((s1, s2), []):
        if only is not None and s != only:
            continue
        right = A.trilinear.get((A.star(s), s3, s4))
        if not right:
            continue
        k = copairing(A, s)
        by_first: dict[int, list] = {}
        for (j, c, d), v in right.items():
            by_first.setdefault(j, []).append((c, d, v))
        for (a, b, i), u in left.items():
            row = k[i]
            for j, lst in by_first.items():
                kij = row[j]
                if kij == 0:
                    continue
                for c, d, v in lst:
                    key = (a, b, c, d)
                    out[key] = out.get(key, Fraction(0)) + u * kij * v
    return {k: v for k, v in out.items() if v != 0}


def crossing_failure(A: FrobeniusAlgebra, exhaustive: bool = True) -> CrossingFailure | None:
    """First violation of ``sum (x1,x2,b)F(b*,x3,x4) = sum (x4,x1,b)F(b*,x2,x3)``."""
    pairs = _channels(A)
    if A.channels is not None:
        quads = [(q, c) for q, c in sorted(A.channels.items())]
    else:
        quads = [(q, (None, None)) for q in iproduct(A.ids(), repeat=4)
                 if (q[0], q[1]) in pairs or (q[3], q[0]) in pairs]
    for (s1, s2, s3, s4), (c12, c41) in quads:
        lhs = _four_point(A, pairs, s1, s2, s3, s4, c12)
        rot = _four_point(A, pairs, s4, s1, s2, s3, c41)
        rhs = {(a, b, c, d): v for (d, a, b, c), v in rot.items()}
        if lhs != rhs:
            for key in sorted(set(lhs) | set(rhs)):
                if lhs.get(key, 0) != rhs.get(key, 0):
                    return CrossingFailure((s1, s2, s3, s4), key, lhs.get(key, Fraction(0)),
                                           rhs.get(key, Fraction(0)))
    return None


# ---------------------------------------------------------------------------
# elements, product, chain evaluation


@dataclass(frozen=True)
class AlgebraElement:
    coeffs: Mapping[tuple, Fraction]

    @staticmethod
    def basis(sector: str, i: int) -> "AlgebraElement":
        return AlgebraElement({(sector, i): Fraction(1)})

    def vector(self, A: FrobeniusAlgebra, sector: str) -> list[Fraction]:
        v = [Fraction(0)] * A.dim(sector)
        for (s, i), c in self.coeffs.items():
            if s == sector:
                v[i] += c
        return v

    def sectors(self) -> set[str]:
        return {s for (s, _), c in self.coeffs.items() if c != 0}

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return AlgebraElement({k: v for k, v in out.items() if v != 0})

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement({k: v * Fraction(c) for k, v in self.coeffs.items() if v * c != 0})


def pairing(A: FrobeniusAlgebra, x: AlgebraElement, y: AlgebraElement) -> Fraction:
    total = Fraction(0)
    for (s, i), a in x.coeffs.items():
        g = A.gram[s]
        for (t, j), b in y.coeffs.items():
            if t == A.star(s):
                total += a * b * g[i][j]
    return total


def triple(A: FrobeniusAlgebra, x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> Fraction:
    total = Fraction(0)
    for (s1, i), a in x.coeffs.items():
        for (s2, j), b in y.coeffs.items():
            for (s3, k), c in z.coeffs.items():
                total += a * b * c * A.tri(s1, s2, s3, i, j, k)
    return total


def product(A: FrobeniusAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """The element ``xy`` with ``(xy, z) = (x, y, z)`` for every basis ``z``."""
    out: dict[tuple, Fraction] = {}
    for s in A.ids():
        # (xy)_t pairs with z in B_s where t = s*
        t = A.star(s)
        vals = [triple(A, x, y, AlgebraElement.basis(s, k)) for k in range(A.dim(s))]
        if not any(vals):
            continue
        ginv = inverse(A.gram[t])
        if ginv is None:
            raise DegenerateGram(t)
        for i in range(A.dim(t)):
            c = sum((vals[k] * ginv[k][i] for k in range(A.dim(s))), Fraction(0))
            if c:
                out[(t, i)] = out.get((t, i), Fraction(0)) + c
    return AlgebraElement(out)


def _as_vector(A: FrobeniusAlgebra, sector: str, x) -> list[Fraction]:
    if isinstance(x, AlgebraElement):
        extra = x.sectors() - {sector}
        if extra:
            raise SectorMismatch(f"element has components outside {sector!r}: {sorted(extra)}")
        return x.vector(A, sector)
    if isinstance(x, int):
        v = [Fraction(0)] * A.dim(sector)
        v[x] = Fraction(1)
        return v
    v = [Fraction(c) for c in x]
    if len(v) != A.dim(sector):
        raise SectorMismatch(f"vector of length {len(v)} for sector {sector!r} of dimension {A.dim(sector)}")
    return v


def evaluate_phi(A: FrobeniusAlgebra, sectors: Sequence[str], xs: Sequence) -> Fraction:
    """Chain contraction of the trilinear form along intermediate sectors.

    ``xs[i]`` is a basis index, a coordinate vector or an element of
    ``B_{sectors[i]}``.  Intermediate sectors range over the algebra's own
    sectors; those outside it contribute nothing.
    """
    n = len(sectors)
    if n < 2 or len(xs) != n:
        raise SectorMismatch("need at least two sectors and one element per sector")
    for s in sectors:
        A.sector(s)
    v = [_as_vector(A, s, x) for s, x in zip(sectors, xs)]
    if n == 2:
        s0, s1 = sectors
        if A.star(s0) != s1:
            return Fraction(0)
        g = A.gram[s0]
        return sum((v[0][i] * v[1][j] * g[i][j] for i in range(len(v[0])) for j in range(len(v[1]))
                    if v[0][i] and v[1][j]), Fraction(0))

    def contract(state: dict[str, list[Fraction]], s_mid: str, x: list[Fraction], last: bool, s_last=None, y=None):
        # state: open sector -> vector over its basis; apply copairing then one trilinear block
        new: dict[str, list[Fraction]] = {}
        total = Fraction(0)
        for s, w in state.items():
            t = A.star(s)
            k = copairing(A, s)
            u = [sum((w[i] * k[i][j] for i in range(len(w)) if w[i]), Fraction(0)) for j in range(A.dim(t))]
            if not any(u):
                continue
            if last:
                block = A.trilinear.get((t, s_mid, s_last), {})
                for (j, a, b), c in block.items():
                    total += u[j] * x[a] * y[b] * c
                continue
            for s3 in A.ids():
                block = A.trilinear.get((t, s_mid, s3))
                if not block:
                    continue
                acc = new.setdefault(s3, [Fraction(0)] * A.dim(s3))
                for (j, a, b), c in block.items():
                    if u[j] and x[a]:
                        acc[b] += u[j] * x[a] * c
        return total if last else new

    if n == 3:
        return _tri_vec(A, sectors, v)
    state: dict[str, list[Fraction]] = {}
    for s3 in A.ids():
        block = A.trilinear.get((sectors[0], sectors[1], s3))
        if not block:
            continue
        acc = [Fraction(0)] * A.dim(s3)
        for (a, b, c), val in block.items():
            acc[c] += v[0][a] * v[1][b] * val
        state[s3] = acc
    for m in range(2, n - 2):
        state = contract(state, sectors[m], v[m], False)
    return contract(state, sectors[n - 2], v[n - 2], True, sectors[n - 1], v[n - 1])


def _tri_vec(A, sectors, v) -> Fraction:
    block = A.trilinear.get(tuple(sectors), {})
    return sum((v[0][a] * v[1][b] * v[2][c] * val for (a, b, c), val in block.items()), Fraction(0))


def change_basis(A: FrobeniusAlgebra, P: Mapping[str, Sequence[Sequence]]) -> FrobeniusAlgebra:
    """New basis ``b'_i = sum_a P[s][i][a] b_a`` per sector (identity where omitted)."""
    PM = {s: mat(P[s]) if s in P else identity(A.dim(s)) for s in A.ids()}
    for s, m in PM.items():
        if inverse(m) is None:
            raise DegenerateGram(s)
    gram = {s: matmul(matmul(PM[s], A.gram[s]), transpose(PM[A.star(s)])) for s in A.ids()}
    # integer arithmetic throughout: P[s] = PI[s] / den[s], block = ints / lcm
    den = {s: lcm(*(x.denominator for r in m for x in r)) for s, m in PM.items()}
    PI = {s: [[int(x * den[s]) for x in r] for r in m] for s, m in PM.items()}
    tri: dict[tuple, dict] = {}
    for key, block in A.trilinear.items():
        scale = lcm(*(v.denominator for v in block.values())) if block else 1
        cur = {idx: int(v * scale) for idx, v in block.items()}
        # one axis at a time: each step is a sparse-by-dense matrix product
        for axis, s in enumerate(key):
            nxt: dict[tuple, int] = {}
            cols = [[(i, PI[s][i][a]) for i in range(A.dim(s)) if PI[s][i][a]] for a in range(A.dim(s))]
            for idx, val in cur.items():
                for i, p in cols[idx[axis]]:
                    k = idx[:axis] + (i,) + idx[axis + 1:]
                    nxt[k] = nxt.get(k, 0) + val * p
            cur = {k: v for k, v in nxt.items() if v}
        total = scale * den[key[0]] * den[key[1]] * den[key[2]]
        tri[key] = {k: Fraction(v, total) for k, v in cur.items()}
    basis = {s: tuple(f"{s}'{i}" for i in range(A.dim(s))) for s in A.ids()}
    return assemble_algebra(A.sectors, basis, gram, tri, A.allowed, A.witness, check=False,
                            channels=A.channels)


def associativity_failure(A: FrobeniusAlgebra):
    """First basis triple with ``(xy)z != x(yz)``, or ``None``."""
    for s1, s2, s3 in iproduct(A.ids(), repeat=3):
        for i, j, k in iproduct(range(A.dim(s1)), range(A.dim(s2)), range(A.dim(s3))):
            x, y, z = (AlgebraElement.basis(s1, i), AlgebraElement.basis(s2, j), AlgebraElement.basis(s3, k))
            left = product(A, product(A, x, y), z)
            right = product(A, x, product(A, y, z))
            if left.coeffs != right.coeffs:
                return (s1, i), (s2, j), (s3, k)
    return None


# ---------------------------------------------------------------------------
# text serialization


def format_algebra(A: FrobeniusAlgebra) -> str:
    lines = []
    for s in A.sectors:
        lines.append(f"sector {s.id} star={s.star} name={s.name or '-'} basis=" + ";".join(A.basis[s.id]))
    for s in A.sectors:
        for i, row in enumerate(A.gram[s.id]):
            lines.append(f"gram {s.id} {i} " + " ".join(format_fraction(x) for x in row))
    for key in sorted(A.trilinear):
        for idx in sorted(A.trilinear[key]):
            lines.append("tri " + " ".join(key) + " " + " ".join(map(str, idx)) + " "
                         + format_fraction(A.trilinear[key][idx]))
    if A.allowed is not None:
        for key in sorted(A.allowed):
            lines.append("allow " + " ".join(key))
    if A.channels is not None:
        lines.append("channels")
        for quad in sorted(A.channels):
            lines.append("channel " + " ".join(quad) + " " + " ".join(A.channels[quad]))
    return "\n".join(lines) + "\n"


def parse_algebra(text: str, check: bool = True) -> FrobeniusAlgebra:
    sectors, basis, gram, tri, allowed = [], {}, {}, {}, set()
    has_allow = False
    channels = None
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "sector":
            fields = dict(p.split("=", 1) for p in parts[2:])
            name = "" if fields["name"] == "-" else fields["name"]
            sectors.append(SectorLabel(parts[1], (), fields["star"], name))
            basis[parts[1]] = tuple(x for x in fields["basis"].split(";") if x)
        elif parts[0] == "gram":
            gram.setdefault(parts[1], []).append([Fraction(x) for x in parts[3:]])
        elif parts[0] == "tri":
            key = tuple(parts[1:4])
            tri.setdefault(key, {})[tuple(int(x) for x in parts[4:7])] = Fraction(parts[7])
        elif parts[0] == "channels":
            channels = channels if channels is not None else {}
        elif parts[0] == "channel":
            channels = channels if channels is not None else {}
            channels[tuple(parts[1:5])] = tuple(parts[5:7])
        elif parts[0] == "allow":
            has_allow = True
            allowed.add(tuple(parts[1:4]))
        else:
            raise ValueError(f"unknown record {parts[0]!r}")
    for s in sectors:
        gram.setdefault(s.id, [])
    return assemble_algebra(sectors, basis, gram, tri, allowed if has_allow else None, check=check,
                            channels=channels)
