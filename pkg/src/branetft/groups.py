"""Finite groups given by multiplication tables."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np


class NotAGroup(ValueError):
    pass


class NotSymmetricGroup(ValueError):
    pass


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        n, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


def cycle_notation(perm: Sequence[int]) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "()"


def partition_name(parts: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in parts) + "]"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Group on ``0..n-1`` with ``table[a, b] = a*b`` (apply ``b`` first).

    ``perms`` is set for symmetric groups: the defining permutation of each
    element, used to build associated degree-d coverings.
    """

    name: str
    labels: tuple[str, ...]
    table: np.ndarray = field(repr=False)
    identity: int = 0
    perms: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        t = self.table
        object.__setattr__(self, "inverse", np.array(
            [int(np.nonzero(t[a] == self.identity)[0][0]) for a in range(len(t))], dtype=np.int32))
        cls = np.full(len(t), -1, dtype=np.int32)
        classes = []
        for a in range(len(t)):
            if cls[a] >= 0:
                continue
            orbit = sorted({int(t[t[h, a], self.inverse[h]]) for h in range(len(t))})
            cls[orbit] = len(classes)
            classes.append(tuple(orbit))
        object.__setattr__(self, "class_of", cls)
        object.__setattr__(self, "classes", tuple(classes))

    inverse: np.ndarray = field(init=False, repr=False)
    class_of: np.ndarray = field(init=False, repr=False)
    classes: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, h: int, g: int) -> int:
        """``h g h^-1``."""
        return int(self.table[self.table[h, g], self.inverse[h]])

    def class_name(self, c: int) -> str:
        rep = self.classes[c][0]
        if self.perms is not None:
            return partition_name(cycle_type(self.perms[rep]))
        return self.labels[rep]

    def class_index(self, name: str) -> int:
        name = name.replace(" ", "")
        for c in range(len(self.classes)):
            if self.class_name(c).replace(" ", "") == name:
                return c
        raise KeyError(f"{self.name} has no conjugacy class {name!r}")

    def centralizer_order(self, g: int) -> int:
        return sum(1 for h in range(len(self)) if self.table[h, g] == self.table[g, h])

    def element(self, label: str) -> int:
        return self.labels.index(label)


def _check_group(table: np.ndarray, rng_seed: int = 0) -> int:
    n = len(table)
    if table.shape != (n, n) or n == 0:
        raise NotAGroup("table must be square and nonempty")
    for row in table:
        if sorted(row.tolist()) != list(range(n)):
            raise NotAGroup("every row must be a permutation of the elements")
    for col in table.T:
        if sorted(col.tolist()) != list(range(n)):
            raise NotAGroup("every column must be a permutation of the elements")
    ids = [e for e in range(n) if all(table[e, a] == a == table[a, e] for a in range(n))]
    if not ids:
        raise NotAGroup("no identity element")
    if n <= 24:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(rng_seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(20000))
    for a, b, c in triples:
        if table[table[a, b], c] != table[a, table[b, c]]:
            raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
    return ids[0]


def from_table(name: str, labels: Sequence[str], table) -> FiniteGroup:
    t = np.asarray(table, dtype=np.int32)
    e = _check_group(t)
    return FiniteGroup(name, tuple(labels), t, e)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError("symmetric(n) is supported for 1 <= n <= 5")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = np.array([[index[tuple(a[b[x]] for x in range(n))] for b in perms] for a in perms],
                     dtype=np.int32)
    return FiniteGroup(f"S{n}", tuple(cycle_notation(p) for p in perms), table, 0, tuple(perms))


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    table = np.array([[(a + b) % n for b in range(n)] for a in range(n)], dtype=np.int32)
    return FiniteGroup(f"C{n}", tuple(str(a) for a in range(n)), table, 0)


def klein4() -> FiniteGroup:
    table = [[a ^ b for b in range(4)] for a in range(4)]
    return from_table("V4", ("e", "a", "b", "c"), table)


def make_group(desc: str | tuple) -> FiniteGroup:
    """``"S3"``, ``"C4"``, ``"V4"``, ``("symmetric", 3)``, ``("cyclic", 2)`` or
    ``("table", name, labels, rows)``."""
    if isinstance(desc, str):
        s = desc.strip()
        if s.upper() in ("V4", "KLEIN4"):
            return klein4()
        if s[:1].upper() == "S" and s[1:].isdigit():
            return symmetric(int(s[1:]))
        if s[:1].upper() == "C" and s[1:].isdigit():
            return cyclic(int(s[1:]))
        raise ValueError(f"unknown group {desc!r}")
    kind = desc[0]
    if kind == "symmetric":
        return symmetric(desc[1])
    if kind == "cyclic":
        return cyclic(desc[1])
    if kind == "table":
        _, name, labels, rows = desc
        if len(labels) > 24:
            raise ValueError("table groups are limited to 24 elements")
        return from_table(name, labels, rows)
    raise ValueError(f"unknown group desc {desc!r}")


CATALOG_GROUPS = tuple([f"C{n}" for n in range(2, 7)] + ["S2", "S3", "S4", "V4"])


# ---------------------------------------------------------------------------
# plain-text table format: "# name" then one row per element, "label: p1 p2 ..."
# where the products are with the elements in row order.


def parse_group_table(text: str) -> FiniteGroup:
    name, rows = "G", []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            name = line[1:].strip() or name
            continue
        label, _, rest = line.partition(":")
        rows.append((label.strip(), rest.split()))
    labels = [r[0] for r in rows]
    index = {lab: i for i, lab in enumerate(labels)}
    try:
        table = [[index[x] for x in prods] for _, prods in rows]
    except KeyError as exc:
        raise NotAGroup(f"unknown element {exc.args[0]!r} in table") from None
    if any(len(r) != len(labels) for r in table):
        raise NotAGroup("every row needs one product per element")
    if len(labels) > 24:
        raise ValueError("table groups are limited to 24 elements")
    return from_table(name, labels, table)


def format_group_table(g: FiniteGroup) -> str:
    lines = [f"# {g.name}"]
    for a in range(len(g)):
        lines.append(f"{g.labels[a]}: " + " ".join(g.labels[int(x)] for x in g.table[a]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# character tables, shipped as data for the classical cross-check

CHARACTER_TABLES = {
    "S2": (("[1,1]", "[2]"), ((1, 1), (1, -1))),
    "S3": (("[1,1,1]", "[2,1]", "[3]"), ((1, 1, 1), (1, -1, 1), (2, 0, -1))),
    "S4": (("[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"),
           ((1, 1, 1, 1, 1), (1, -1, 1, 1, -1), (3, 1, -1, 0, -1),
            (3, -1, -1, 0, 1), (2, 0, 2, -1, 0))),
    "V4": (("e", "a", "b", "c"),
           ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))),
}


def character_count(g: FiniteGroup, class_names: Sequence[str]) -> Fraction | None:
    """Frobenius count of tuples in the given classes with product 1.

    Uses the shipped table for S2..S4 and V4; for cyclic groups the orthogonality
    sum over characters is evaluated in closed form.  ``None`` if no table.
    """
    idx = [g.class_index(c) for c in class_names]
    sizes = [len(g.classes[i]) for i in idx]
    if g.name.startswith("C") and g.name[1:].isdigit():
        total = sum(g.classes[i][0] for i in idx) % len(g)
        n_tuples = 1
        for s in sizes:
            n_tuples *= s
        return Fraction(n_tuples if total == 0 else 0)
    if g.name not in CHARACTER_TABLES:
        return None
    names, rows = CHARACTER_TABLES[g.name]
    cols = [names.index(g.class_name(i)) for i in idx]
    k = len(idx)
    acc = Fraction(0)
    for row in rows:
        term = Fraction(1)
        for c in cols:
            term *= row[c]
        acc += term / Fraction(row[0]) ** (k - 2)
    prod = Fraction(1)
    for s in sizes:
        prod *= s
    return prod * acc / len(g)
