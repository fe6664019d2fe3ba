"""Command-line front end.

Inputs are ``fixture:NAME``, a file path, or a literal (a word such as
``001*110*``, or grid rows separated by ``/``).  Exit status is 0 for
success or a valid object, 1 for an invalid object and 2 for usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import construct, families, fixtures, formats, generate, grids, words
from .errors import ParseError, UptoriError
from .families import Family
from .grids import MATRIX, TORUS, PartialGrid, WindowShape
from .search import SearchSpec, search
from .words import CyclicPartialWord, PartialWord

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


# -- input resolution -------------------------------------------------------------


def _source(spec: str) -> tuple[object | None, str | None]:
    """A fixture object, or the text of a file or literal."""
    if spec.startswith("fixture:"):
        return fixtures.get(spec.split(":", 1)[1]), None
    path = Path(spec)
    if path.is_file():
        return None, path.read_text(encoding="utf-8")
    return None, spec.replace("/", "\n")


def load_word(spec: str, alphabet: int | None = None, cyclic: bool = True):
    obj, text = _source(spec)
    if obj is None:
        return formats.read_word(text, alphabet, cyclic)
    symbols = getattr(obj, "symbols", None)
    if symbols is None:
        raise ParseError(f"{spec} is not a word")
    cls = CyclicPartialWord if cyclic else PartialWord
    return cls(symbols, alphabet or obj.alphabet)


def load_grid(spec: str, mode: str | None = None) -> PartialGrid:
    obj, text = _source(spec)
    if obj is None:
        return formats.read_grid(text, mode)
    if not isinstance(obj, PartialGrid):
        raise ParseError(f"{spec} is not a grid")
    return obj.with_mode(mode) if mode else obj


def load_family(spec: str, alphabet: int | None = None) -> Family:
    obj, text = _source(spec)
    if obj is None:
        if "\n" not in text.strip() and "," in text:
            return Family([words.parse_symbols(t) for t in text.split(",")], alphabet)
        return formats.read_family(text)[0]
    if not isinstance(obj, Family):
        raise ParseError(f"{spec} is not a family")
    return obj


# -- output -------------------------------------------------------------------------


def _emit(args, payload: dict, human: str | None = None) -> None:
    if args.json or human is None:
        print(json.dumps(payload, indent=None if args.json else 2, default=_jsonable))
    else:
        print(human)


def _jsonable(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write_grid(g: PartialGrid, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            formats.write_grid(g, fh)
    else:
        formats.write_grid(g, sys.stdout)


def _report_human(kind: str, rep) -> str:
    lines = [f"{kind}: {'valid' if rep.valid else 'INVALID'}"]
    lines.append(f"  windows {rep.windows}, covered mass {rep.mass}")
    lines.append(f"  diamondicity {rep.diamondicity}, {rep.triviality.value}")
    if rep.missing_total:
        lines.append(f"  missing {rep.missing_total}: {rep.missing[:8]}")
    if rep.duplicated_total:
        lines.append(f"  duplicated {rep.duplicated_total}: {rep.duplicated[:8]}")
    cross = getattr(rep, "cross_duplicated_total", 0)
    if cross:
        lines.append(f"  covered by two members {cross}: {rep.cross_duplicated[:8]}")
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------------


def cmd_verify(args) -> int:
    kind = args.kind
    if kind in ("upword", "upcycle"):
        w = load_word(args.input, args.alphabet, cyclic=kind == "upcycle")
        rep = (words.verify_upcycle if kind == "upcycle" else words.verify_upword)(w, args.n)
    elif kind in ("upmatrix", "uptorus"):
        g = load_grid(args.input, TORUS if kind == "uptorus" else MATRIX)
        rep = (grids.verify_uptorus if kind == "uptorus" else grids.verify_upmatrix)(
            g, WindowShape.parse(args.window)
        )
    else:
        rep = families.verify_family(load_family(args.input, args.alphabet), args.x)
    _emit(args, {"kind": kind, **rep.to_dict()}, _report_human(kind, rep))
    return EXIT_OK if rep.valid else EXIT_INVALID


def cmd_generate(args) -> int:
    if args.what == "debruijn":
        w = generate.debruijn_cycle(args.a, args.n)
        payload = {"word": formats.write_word(w).strip(), "length": len(w)}
    elif args.what == "necklace":
        w = generate.perfect_necklace(args.a, args.k)
        payload = {"word": formats.write_word(w).strip(), "length": len(w)}
    else:
        c = generate.alternating_debruijn(args.size_a, args.size_b, args.n)
        payload = {
            "a_items": c.a_items.tolist(),
            "b_items": c.b_items.tolist(),
            "length": len(c),
            "order": c.order,
        }
        if args.unroll:
            w = generate.unroll_alternating(c)
            payload["unrolled"] = w.items().tolist()
        seq = payload.get("unrolled") or c.items().tolist()
        payload["word"] = " ".join(str(v) for v in seq)
    _emit(args, payload, payload["word"])
    return EXIT_OK


def _exponent(n: int, base: int) -> int:
    """The ``y`` with ``base**y == n``; a mismatch is left for certification to report."""
    y, p = 0, 1
    while p < n:
        y, p = y + 1, p * base
    return y


def cmd_construct(args) -> int:
    what = args.what
    if what == "mu":
        g = construct.mu(load_word(args.input, args.alphabet, cyclic=False), args.p, args.n)
    elif what == "torus-from-upcycle":
        u = load_word(args.input, args.alphabet)
        if args.s:
            s = load_word(args.s, len(u))
        else:
            s = generate.debruijn_cycle(len(u), args.y)
        y = _exponent(len(s), len(u)) if len(u) > 1 else args.y
        if args.certify:
            rep = construct.certify_m_us(u, s, args.x, y)
            note = {"certified": rep.valid, "diamondicity": rep.diamondicity}
            print(json.dumps(note) if args.json else
                  f"certified for {y + 1}x{args.x} windows, diamondicity {rep.diamondicity}",
                  file=sys.stderr)
        g = construct.build_m_us(u, s)
    elif what == "torus-from-family":
        g = construct.torus_from_family(load_family(args.input, args.alphabet), args.x, args.y)
    elif what == "no-diamondicity":
        g = construct.build_no_diamondicity(load_family(args.input, args.alphabet), args.x, args.y)
    else:
        w = construct.lift(load_word(args.input, args.alphabet), args.n)
        text = formats.write_word(w).strip()
        _emit(args, {"word": text, "length": len(w)}, text)
        return EXIT_OK
    _write_grid(g, args.out)
    return EXIT_OK


def cmd_locate(args) -> int:
    P = load_grid(args.input)
    u = load_word(args.u, args.alphabet)
    s = load_word(args.s, len(u))
    p = construct.locate(P, u, s)
    payload = {
        "row": p.row,
        "col": p.col,
        "rotations": list(p.rotations),
        "differences": list(p.differences),
        "s_index": p.s_index,
    }
    _emit(args, payload, f"row {p.row}, col {p.col} (a = {p.rotations}, b = {p.differences})")
    return EXIT_OK


def cmd_slice(args) -> int:
    u = load_word(args.input, args.alphabet)
    cuts = [int(c) for c in args.cuts.split(",")]
    fam = families.slice_word(u, cuts)
    rep = families.verify_family(fam, args.x)
    payload = {"members": [str(m) for m in fam.members], **rep.to_dict()}
    if args.out:
        Path(args.out).write_text(formats.write_family(fam, args.x), encoding="utf-8")
    human = "\n".join(str(m) for m in fam.members) + "\n" + _report_human("family", rep)
    _emit(args, payload, human)
    return EXIT_OK if rep.valid else EXIT_INVALID


def cmd_enumerate_slicings(args) -> int:
    u = load_word(args.input, args.alphabet)
    rep = families.enumerate_slicings(u, args.block, args.x)
    if args.out:
        Path(args.out).write_text(rep.to_json(indent=2), encoding="utf-8")
    human = (
        f"scanned {rep.scanned} cut sets\n"
        f"valid including the uncut word: {rep.valid_including_single}\n"
        f"valid with two or more members: {rep.valid_with_two_or_more}\n"
        f"equal-length upfamilies: {rep.upfamily_count} of {rep.equal_length_count}"
    )
    _emit(args, rep.to_dict(), human)
    return EXIT_OK


def cmd_search(args) -> int:
    w, l = (int(v) for v in args.window.lower().split("x"))
    R, C = (int(v) for v in args.dims.lower().split("x"))
    spec = SearchSpec(args.alphabet, (w, l), (R, C), args.mode, args.dedup, args.limit)
    cat = search(spec, prune=not args.no_prune, capacity=args.capacity,
                 progress=not args.quiet, nontrivial=args.nontrivial)
    if args.out:
        Path(args.out).write_text(cat.to_json(indent=1), encoding="utf-8")
    human = (
        f"{cat.raw_count} solutions, {cat.canonical_count} up to symmetry, "
        f"{cat.nodes_explored} nodes\n" + "\n\n".join(str(g) for g in cat.solutions)
    )
    _emit(args, cat.to_dict(), human)
    return EXIT_OK


def cmd_render(args) -> int:
    g = load_grid(args.input)
    Path(args.out).write_bytes(formats.render_ppm(g, args.scale, args.transpose))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        rows = [
            {"name": f.name, "kind": f.kind, "alphabet": f.alphabet, "note": f.note}
            for f in fixtures.FIXTURES.values()
        ]
        human = "\n".join(f"{r['name']:<22} {r['kind']:<7} {r['note']}" for r in rows)
        _emit(args, {"fixtures": rows}, human)
        return EXIT_OK
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    chosen = args.names or fixtures.names()
    for name in chosen:
        fx = fixtures.FIXTURES[name]
        obj = fx.build()
        if fx.kind == fixtures.GRID:
            text = formats.write_grid(obj)
        elif fx.kind == fixtures.FAMILY:
            text = formats.write_family(obj, fx.param)
        else:
            text = formats.write_word(obj)
        (out / f"{name}.txt").write_text(text, encoding="utf-8")
    _emit(args, {"exported": chosen, "dir": str(out)}, f"wrote {len(chosen)} files to {out}")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--alphabet", "-a", type=int, default=None, help="alphabet size")

    p = argparse.ArgumentParser(prog="uptori", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check a word, grid or family")
    v.add_argument("kind", choices=["upword", "upcycle", "upmatrix", "uptorus", "family"])
    v.add_argument("input")
    v.add_argument("--n", type=int, default=4, help="word length for words")
    v.add_argument("--window", default="2x2", help="window shape for grids")
    v.add_argument("--x", type=int, default=4, help="word length for families")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", parents=[common], help="De Bruijn objects")
    gs = g.add_subparsers(dest="what", required=True)
    d = gs.add_parser("debruijn", parents=[common])
    d.add_argument("--a", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    al = gs.add_parser("altdb", parents=[common])
    al.add_argument("--size-a", type=int, required=True)
    al.add_argument("--size-b", type=int, required=True)
    al.add_argument("--n", type=int, required=True)
    al.add_argument("--unroll", action="store_true")
    ne = gs.add_parser("necklace", parents=[common])
    ne.add_argument("--a", type=int, required=True)
    ne.add_argument("--k", type=int, required=True)
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("construct", parents=[common], help="build upmatrices and uptori")
    cs = c.add_subparsers(dest="what", required=True)
    mu = cs.add_parser("mu", parents=[common])
    mu.add_argument("input")
    mu.add_argument("--p", type=int, required=True)
    mu.add_argument("--n", type=int, required=True)
    tu = cs.add_parser("torus-from-upcycle", parents=[common])
    tu.add_argument("input")
    tu.add_argument("--s", help="rotation sequence (default: generated De Bruijn cycle)")
    tu.add_argument("--x", type=int, required=True)
    tu.add_argument("--y", type=int, default=2)
    tu.add_argument("--certify", action="store_true")
    tf = cs.add_parser("torus-from-family", parents=[common])
    tf.add_argument("input")
    tf.add_argument("--x", type=int, required=True)
    tf.add_argument("--y", type=int, default=2)
    li = cs.add_parser("lift", parents=[common])
    li.add_argument("input")
    li.add_argument("--n", type=int, required=True)
    nd = cs.add_parser("no-diamondicity", parents=[common])
    nd.add_argument("input")
    nd.add_argument("--x", type=int, required=True)
    nd.add_argument("--y", type=int, default=2)
    for sp in (mu, tu, tf, li, nd):
        sp.add_argument("--out", help="grid output file (default: standard output)")
    c.set_defaults(func=cmd_construct)

    lo = sub.add_parser("locate", parents=[common], help="find a total matrix in m(u, s)")
    lo.add_argument("input")
    lo.add_argument("--u", required=True)
    lo.add_argument("--s", required=True)
    lo.set_defaults(func=cmd_locate)

    sl = sub.add_parser("slice", parents=[common], help="cut a cyclic word into a family")
    sl.add_argument("input")
    sl.add_argument("--cuts", required=True, help="comma separated cut indices")
    sl.add_argument("--x", type=int, default=4)
    sl.add_argument("--out")
    sl.set_defaults(func=cmd_slice)

    es = sub.add_parser("enumerate-slicings", parents=[common], help="try every block cut set")
    es.add_argument("input")
    es.add_argument("--block", type=int, required=True)
    es.add_argument("--x", type=int, default=4)
    es.add_argument("--out")
    es.set_defaults(func=cmd_enumerate_slicings)

    se = sub.add_parser("search", help="exhaustive search for upmatrices and uptori")
    se.add_argument("--json", action="store_true")
    se.add_argument("--alphabet", "-a", type=int, default=2)
    se.add_argument("--window", default="2x2")
    se.add_argument("--dims", required=True)
    se.add_argument("--mode", choices=[MATRIX, TORUS], default=MATRIX)
    se.add_argument("--nontrivial", action="store_true")
    se.add_argument("--dedup", action=argparse.BooleanOptionalAction, default=True)
    se.add_argument("--limit", type=int)
    se.add_argument("--capacity", action="store_true", help="enable coverage-bound pruning")
    se.add_argument("--no-prune", action="store_true", help="debug: check full assignments only")
    se.add_argument("--quiet", action="store_true", help="no progress on standard error")
    se.add_argument("--out")
    se.set_defaults(func=cmd_search)

    r = sub.add_parser("render", parents=[common], help="write a grid as a PPM image")
    r.add_argument("input")
    r.add_argument("--out", required=True)
    r.add_argument("--scale", type=int, default=1)
    r.add_argument("--transpose", action="store_true")
    r.set_defaults(func=cmd_render)

    fx = sub.add_parser("fixtures", parents=[common], help="built-in example objects")
    fx.add_argument("action", choices=["list", "export"])
    fx.add_argument("names", nargs="*")
    fx.add_argument("--dir", default="fixtures")
    fx.set_defaults(func=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except (UptoriError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
