"""Line-oriented complex files.

::

    # comment
    vertex q1                 (optional: vertex x <color> <+|->  for vertex complexes)
    edge e1 q1 q2 red
    face f1 blue e1+,e2-,e3+
    order 0: q1,q2,q3

A document with ``order`` lines is a brane complex; without them it is a
plain colored complex.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .complex import ColoredComplex, ComplexError, Edge, Face, Vertex, validate_complex
from .surgery import BraneComplex, MissingCut, is_brane


class ComplexSyntaxError(SyntaxError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column, self.message = line, column, message


@dataclass
class ComplexDocument:
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    faces: list = field(default_factory=list)
    orders: list = field(default_factory=list)
    positions: dict = field(default_factory=dict)


def _col(raw: str, token: str) -> int:
    return raw.find(token) + 1 if token in raw else 1


def parse_document(text: str) -> ComplexDocument:
    doc = ComplexDocument()
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, *rest = line.split()
        if kw == "vertex":
            if len(rest) not in (1, 3):
                raise ComplexSyntaxError(n, _col(raw, kw), "expected 'vertex <id>' or 'vertex <id> <color> <+|->'")
            if len(rest) == 3 and rest[2] not in ("+", "-"):
                raise ComplexSyntaxError(n, _col(raw, rest[2]), "vertex sign must be '+' or '-'")
            v = Vertex(rest[0]) if len(rest) == 1 else Vertex(rest[0], rest[1], 1 if rest[2] == "+" else -1)
            doc.vertices.append(v)
            doc.positions.setdefault(v.id, n)
        elif kw == "edge":
            if len(rest) != 4:
                raise ComplexSyntaxError(n, _col(raw, kw), "expected 'edge <id> <tail> <head> <color>'")
            doc.edges.append(Edge(*rest))
            doc.positions.setdefault(rest[0], n)
        elif kw == "face":
            if len(rest) != 3:
                raise ComplexSyntaxError(n, _col(raw, kw), "expected 'face <id> <color> <edge+|-,...>'")
            bnd = []
            for tok in rest[2].split(","):
                if len(tok) < 2 or tok[-1] not in "+-":
                    raise ComplexSyntaxError(n, _col(raw, tok), f"boundary entry {tok!r} needs a trailing + or -")
                bnd.append((tok[:-1], 1 if tok[-1] == "+" else -1))
            doc.faces.append(Face(rest[0], rest[1], tuple(bnd)))
            doc.positions.setdefault(rest[0], n)
        elif kw == "order":
            body = line[len("order"):]
            if ":" not in body:
                raise ComplexSyntaxError(n, _col(raw, "order"), "expected 'order <component>: <v1,...>'")
            seq = [x.strip() for x in body.split(":", 1)[1].split(",") if x.strip()]
            if not seq:
                raise ComplexSyntaxError(n, _col(raw, ":"), "empty cyclic order")
            doc.orders.append(tuple(seq))
            doc.positions.setdefault(("order", len(doc.orders) - 1), n)
        else:
            raise ComplexSyntaxError(n, _col(raw, kw), f"unknown section {kw!r}")
    return doc


def parse_complex_file(text: str) -> BraneComplex | ColoredComplex:
    """Parse and validate; validation errors carry the source line in ``.line``."""
    doc = parse_document(text)
    try:
        cx = validate_complex(doc.vertices, doc.edges, doc.faces)
        if not doc.orders:
            return cx
        return is_brane(cx, doc.orders)
    except ComplexError as exc:
        if isinstance(exc, MissingCut):
            line = doc.positions.get(("order", 0))
        else:
            line = doc.positions.get(exc.cell)
        exc.line = line
        if line is not None:
            exc.args = (f"line {line}: {exc.args[0]}",) + exc.args[1:]
        raise


def serialize_complex(obj: BraneComplex | ColoredComplex) -> str:
    cx = obj.complex if isinstance(obj, BraneComplex) else obj
    out = []
    for v in cx.vertices:
        if v.color is not None and v.sign:
            out.append(f"vertex {v.id} {v.color} {'+' if v.sign > 0 else '-'}")
        else:
            out.append(f"vertex {v.id}")
    for e in cx.edges:
        out.append(f"edge {e.id} {e.tail} {e.head} {e.color}")
    for f in cx.faces:
        out.append(f"face {f.id} {f.color} " + ",".join(f"{eid}{'+' if s > 0 else '-'}" for eid, s in f.boundary))
    if isinstance(obj, BraneComplex):
        for i, o in enumerate(obj.orders):
            out.append(f"order {i}: " + ",".join(o))
    return "\n".join(out) + "\n"


def read_complex(path) -> BraneComplex | ColoredComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex_file(fh.read())
