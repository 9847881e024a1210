"""Command-line front end.

Class names: degree theories use bracketed cycle types over circles
(``[2,1]``), the identity type over points (``[1,1]`` for d = 2), and
``#i`` (i-th class in canonical order) over other sectors.  Group theories
use the label of a conjugacy-class representative over circles
(``1`` in C2, ``(123)`` in S3) and ``#i`` otherwise.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .cache import TableCache
from .complex import ComplexError, isomorphic_up_to_recoloring, link
from .coverings import (
    DEFAULT_BOUNDS,
    SearchBounds,
    SearchBoundsExceeded,
    ConstraintMismatch,
    brane_setup,
    format_fraction,
    hurwitz,
    sector_classes,
    use_table_cache,
)
from .frobenius import format_algebra
from .groups import NotAGroup, make_group, parse_group_table
from .lab import (
    OutOfBounds,
    TheoryConfig,
    TruncationInsufficient,
    VerificationReport,
    build_hurwitz_algebra,
    character_oracle,
    character_oracle_tables,
    cross_check_evaluator,
    verify_burnside,
    verify_gluing_identity,
    verify_sd_coincidence,
    verify_tft_axioms,
)
from .surgery import BraneComplex, sphere_complex
from .textformat import ComplexSyntaxError, read_complex, serialize_complex


class UsageError(Exception):
    pass


def _group(args):
    if args.degree is not None:
        if not 1 <= args.degree <= args.max_degree:
            raise UsageError(f"degree must be between 1 and {args.max_degree}")
        return None
    desc = args.group
    if Path(desc).is_file():
        return parse_group_table(Path(desc).read_text(encoding="utf-8"))
    return make_group(desc)


def _config(args, complexes=(), sectors=()) -> TheoryConfig:
    bounds = SearchBounds(args.max_degree, args.max_cells, DEFAULT_BOUNDS.max_tuples)
    g = _group(args)
    if g is None:
        return TheoryConfig.degree(args.degree, complexes, sectors, bounds)
    return TheoryConfig.of_group(g, complexes, sectors, bounds)


def _brane(path) -> BraneComplex:
    obj = read_complex(path)
    if not isinstance(obj, BraneComplex):
        raise UsageError(f"{path}: needs an 'order' section")
    return obj


def cmd_validate(args, out):
    obj = read_complex(args.file)
    cx = obj.complex if isinstance(obj, BraneComplex) else obj
    brane = "yes" if isinstance(obj, BraneComplex) else "no order given"
    out.append(f"valid: V={len(cx.vertices)} E={len(cx.edges)} F={len(cx.faces)} dim={cx.dim} "
               f"components={len(cx.components)} brane={brane}")


def cmd_link(args, out):
    obj = read_complex(args.file)
    cx = obj.complex if isinstance(obj, BraneComplex) else obj
    out.append(serialize_complex(link(cx, args.vertex).complex).rstrip("\n"))


def cmd_cuts(args, out):
    bc = _brane(args.file)
    for split in sorted(bc.certificate, key=lambda s: sorted(sorted(x) for x in s)):
        a, b = sorted((sorted(x) for x in split))
        cut = bc.cut(a)
        g = cut.gamma
        out.append(f"cut {','.join(a)} | {','.join(b)} edges={','.join(sorted(cut.crossed_edges))} "
                   f"faces={','.join(sorted(cut.crossed_faces))} gamma=V{len(g.vertices)}E{len(g.edges)}")


def cmd_classes(args, out):
    sigma = read_complex(args.sigma)
    if isinstance(sigma, BraneComplex) or sigma.dim > 1:
        raise UsageError("classes needs a vertex complex (dimension <= 1, no order)")
    cfg = _config(args)
    for c in sector_classes(sigma, cfg.group):
        out.append(f"{c.name} aut={c.aut_order}")


def _parse_at(values) -> dict[str, str]:
    out = {}
    for v in values or []:
        q, sep, name = v.partition("=")
        if not sep:
            raise UsageError(f"--at expects VERTEX=CLASS, got {v!r}")
        out[q] = name
    return out


def cmd_hurwitz(args, out):
    bc = _brane(args.file)
    cfg = _config(args)
    at = _parse_at(args.at)
    setup = brane_setup(bc, cfg.group, cfg.bounds)
    for q in setup.vertices:
        # unspecified vertices default to the trivial local invariant
        if q not in at:
            at[q] = setup.theories[setup.vertices.index(q)].trivial()
    value = hurwitz(bc, cfg.group, at, cfg.bounds)
    out.append(format_fraction(value.value))
    if args.breakdown:
        for c, w in value.breakdown:
            out.append(f"  class {list(c.class_key)} aut={c.aut_order} weight={format_fraction(w)}")


def cmd_algebra(args, out):
    complexes, sectors = [], []
    for f in args.sectors:
        obj = read_complex(f)
        if isinstance(obj, BraneComplex):
            complexes.append(obj)
        elif obj.dim <= 1 and obj.is_connected():
            sectors.append(obj)
        else:
            raise UsageError(f"{f}: neither a brane complex nor a connected vertex complex")
    th = build_hurwitz_algebra(_config(args, complexes, sectors))
    text = format_algebra(th.algebra)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        A = th.algebra
        out.append(f"wrote {args.out}: {len(A.sectors)} sectors, "
                   f"{sum(A.dim(s) for s in A.ids())} basis vectors, all axioms pass")
    else:
        out.append(text.rstrip("\n"))


def _sphere_size(bc: BraneComplex) -> int | None:
    cx = bc.complex
    n = len(cx.vertices)
    if n < 2 or len(cx.edges) != n or len(cx.faces) != 2 or len(bc.orders) != 1:
        return None
    if isomorphic_up_to_recoloring(cx, sphere_complex(n).complex):
        return n
    return None


def cmd_verify(args, out):
    files = sorted(Path(args.catalog).glob("*.cw"))
    catalog = {}
    for f in files:
        obj = read_complex(f)
        if isinstance(obj, BraneComplex):
            catalog[f.stem] = obj
    if not catalog:
        raise UsageError(f"no brane complexes (*.cw with an order section) in {args.catalog}")
    cfg = _config(args, catalog.values())
    th = build_hurwitz_algebra(cfg)
    rep = VerificationReport()
    rep.extend(verify_tft_axioms(th, catalog, relabelings=args.relabelings, unions=args.unions, seed=args.seed))
    for name, bc in catalog.items():
        for cut in (bc.certificate or {}).values():
            rep.extend(verify_gluing_identity(bc, cut, cfg, instance=name))
            mutated = verify_gluing_identity(bc, cut, cfg, aut_shift=1, instance=name)
            c = mutated.checks[0]
            rep.add("gluing_mutation", c.instance, "rejected", "accepted" if c.passed else "rejected", not c.passed)
        rep.extend(cross_check_evaluator(th, bc, name))
        rep.extend(verify_burnside(bc, cfg, name))
        n = _sphere_size(bc)
        if n is not None:
            rep.extend(_oracle_checks(bc, cfg, name))
    if cfg.kind == "group" and cfg.group.perms is not None:
        d = len(cfg.group.perms[0])
        deg = build_hurwitz_algebra(TheoryConfig.degree(d, catalog.values(), bounds=cfg.bounds))
        rep.extend(verify_sd_coincidence(th, deg))
    for line in rep.lines():
        out.append(line)
    bad = len(rep.failures())
    out.append(f"SUMMARY {cfg.label} checks={len(rep.checks)} failed={bad}")
    return 0 if bad == 0 else 1


def _oracle_checks(bc: BraneComplex, cfg: TheoryConfig, name: str) -> VerificationReport:
    """Every class tuple on a sphere: enumeration against direct tuple counting."""
    from itertools import product

    from .lab import named_table

    g = cfg.group
    rep = VerificationReport()
    setup = brane_setup(bc, g, cfg.bounds)
    order = bc.orders[0]
    table = named_table(bc, g, cfg.bounds)
    circle = [setup.theories[setup.vertices.index(q)] for q in order]
    for idx in product(*(range(len(th.classes)) for th in circle)):
        classes = [th.classes[i] for th, i in zip(circle, idx)]
        # the holonomy around the link of q_i, read along the equator
        names = [c.name for c in classes]
        key = tuple(sorted((q, c.class_key) for q, c in zip(order, classes)))
        got = table.get(key, Fraction(0))
        kind = "degree" if cfg.kind == "degree" else "group"
        d = len(g.perms[0]) if cfg.kind == "degree" else None
        want = character_oracle(kind, len(order), names, d=d, group=g)
        rep.add("oracle", f"{cfg.label}:{name}:{','.join(names)}", want, got)
    return rep


def cmd_oracle(args, out):
    if args.degree is not None:
        value = character_oracle("degree", len(args.classes), args.classes, d=args.degree)
        table = character_oracle_tables("degree", args.classes, d=args.degree)
    else:
        g = _group(args)
        value = character_oracle("group", len(args.classes), args.classes, group=g)
        table = character_oracle_tables("group", args.classes, group=g)
    out.append(format_fraction(value))
    if args.tables and table is not None:
        out.append(f"character tables: {format_fraction(table)}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="branetft", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--cache", metavar="DIR", help="memoize Hurwitz tables under DIR, keyed by canonical form")
    sub = p.add_subparsers(dest="command", required=True)

    def theory(sp, required=True):
        grp = sp.add_mutually_exclusive_group(required=required)
        grp.add_argument("--degree", type=int, help="degree d of simple d-coverings")
        grp.add_argument("--group", help="S1..S5, C1..C12, V4, or a group table file")
        sp.add_argument("--max-degree", type=int, default=DEFAULT_BOUNDS.max_degree)
        sp.add_argument("--max-cells", type=int, default=DEFAULT_BOUNDS.max_cells)

    s = sub.add_parser("validate", help="parse and validate a complex file")
    s.add_argument("file")
    s = sub.add_parser("link", help="print the vertex complex of a vertex")
    s.add_argument("file")
    s.add_argument("vertex")
    s = sub.add_parser("cuts", help="list the certificate cut of every contiguous split")
    s.add_argument("file")
    s = sub.add_parser("classes", help="covering classes over a vertex complex")
    theory(s)
    s.add_argument("sigma")
    s = sub.add_parser("hurwitz", help="Hurwitz number with prescribed local invariants")
    theory(s)
    s.add_argument("file")
    s.add_argument("--at", action="append", metavar="VERTEX=CLASS",
                   help="local invariant at a vertex (default: trivial)")
    s.add_argument("--breakdown", action="store_true")
    s = sub.add_parser("algebra", help="build and check the Frobenius algebra")
    theory(s)
    s.add_argument("--sectors", nargs="+", required=True, metavar="FILE",
                   help="brane complexes (their links and cuts) or vertex complexes")
    s.add_argument("--out")
    s = sub.add_parser("verify", help="run every check on a catalog directory of *.cw files")
    theory(s)
    s.add_argument("--catalog", required=True)
    s.add_argument("--relabelings", type=int, default=100)
    s.add_argument("--unions", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s = sub.add_parser("oracle", help="classical tuple count on the sphere with n points")
    theory(s)
    s.add_argument("--classes", nargs="+", required=True)
    s.add_argument("--tables", action="store_true", help="also print the character-table value")
    return p


COMMANDS = {
    "validate": cmd_validate, "link": cmd_link, "cuts": cmd_cuts, "classes": cmd_classes,
    "hurwitz": cmd_hurwitz, "algebra": cmd_algebra, "verify": cmd_verify, "oracle": cmd_oracle,
}


def run_command(argv) -> tuple[int, str]:
    """Run one command; returns ``(exit status, stdout text)``.  Errors go to stderr."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    out: list[str] = []
    if args.cache:
        use_table_cache(TableCache(args.cache))
    try:
        status = COMMANDS[args.command](args, out) or 0
    except (ComplexSyntaxError, ComplexError, UsageError, NotAGroup, ConstraintMismatch, KeyError,
            SearchBoundsExceeded, OutOfBounds, TruncationInsufficient, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"branetft {args.command}: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2, "\n".join(out) + ("\n" if out else "")
    finally:
        use_table_cache(None)
    return status, "\n".join(out) + ("\n" if out else "")


def main(argv=None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
