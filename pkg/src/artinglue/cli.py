"""Command-line interface.

Exit status: 0 on success, 1 when a law or check fails, 2 on bad input.
Frame arguments are either a path to a frame file or a catalog name.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .catalog import NEGATIVES, Catalog
from .errors import (
    ArtinGlueError,
    InputError,
    NoAdjoint,
    NotALattice,
    NotDistributive,
    VerificationFailed,
)
from .extensions import (
    AdjointExtension,
    ExtensionClass,
    characteristic_map,
    classify,
    extension_from_u,
    verify_adjoint_extension,
)
from .functorial import (
    baer_meet,
    enumerate_extensions,
    pullback_extension,
    pushout_extension,
    verify_pullback_universal,
    verify_pushout_universal,
)
from .glueing import glue
from .io import dump_json, frame_to_dict, load_frame, load_map, load_poset, map_to_dict
from .lattice import FiniteFrame, hasse_dot, validate_frame
from .laws import DEFAULT_PAIRS, check_laws
from .morphisms import left_adjoint
from .reports import LawReport

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Context:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.catalog = Catalog.from_directory(args.catalog) if args.catalog else Catalog()
        self.max_size = args.max_frame_size

    def guard(self, *frames: FiniteFrame) -> None:
        for F in frames:
            if len(F) > self.max_size:
                raise InputError(F.name or "frame", f"{len(F)} elements exceeds --max-frame-size {self.max_size}")

    def frame(self, ref: str) -> FiniteFrame:
        path = Path(ref)
        if path.is_file():
            F = load_frame(path)
            self.catalog.add(F)
            return F
        if ref in self.catalog:
            return self.catalog[ref]
        raise InputError(ref, "neither a frame file nor a catalog frame")

    def map(self, ref: str):
        path = Path(ref)
        if not path.is_file():
            raise InputError(ref, "map file not found")
        # frames named by the map may live next to it
        for f in sorted(path.parent.glob("*.json")):
            if f.resolve() == path.resolve():
                continue
            try:
                F = load_frame(f)
            except ValueError:
                continue
            if F.name not in self.catalog:
                self.catalog.add(F)
        return load_map(path, self.catalog.__getitem__)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_reports(reports: list[LawReport]) -> int:
    for r in reports:
        print(r.to_json())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_validate(ctx: Context) -> int:
    ref = ctx.args.frame
    if Path(ref).is_file():
        name, p = load_poset(ref)
    elif ref in ctx.catalog:
        F = ctx.catalog[ref]
        name, p = F.name, F.poset
    elif ref in NEGATIVES:
        name, p = ref, NEGATIVES[ref]()
    else:
        raise InputError(ref, "neither a frame file nor a catalog frame")
    try:
        F = validate_frame(p, name)
    except NotDistributive as exc:
        return _emit_reports([LawReport("distributive", name, "fail", list(exc.witness))])
    except NotALattice as exc:
        return _emit_reports([LawReport(f"has-{exc.operation}", name, "fail", list(exc.witness))])
    return _emit_reports([LawReport("frame", f"{F.name} |{len(F)}|", "pass")])


def cmd_glue(ctx: Context) -> int:
    alpha = ctx.map(ctx.args.map)
    name = ctx.args.name or f"Gl({Path(ctx.args.map).stem})"
    g = glue(alpha, name)
    _emit(dump_json(frame_to_dict(g.carrier)), ctx.args.output)
    if ctx.args.dot:
        Path(ctx.args.dot).write_text(hasse_dot(g.carrier), encoding="utf-8")
    return EXIT_OK


def cmd_classify(ctx: Context) -> int:
    G = ctx.frame(ctx.args.frame)
    ctx.guard(G)
    if ctx.args.u not in G:
        raise InputError(f"{ctx.args.frame}:u", f"{ctx.args.u!r} is not an element of {G.name!r}")
    ext = extension_from_u(G, ctx.args.u)
    gl, iso = classify(ext)
    alpha = map_to_dict(gl.alpha)
    if ctx.args.output:
        dump_json(alpha, ctx.args.output)
    payload = {
        "alpha": alpha,
        "N": frame_to_dict(ext.N),
        "H": frame_to_dict(ext.H),
        "iso": {"forward": iso.forward.table, "backward": iso.backward.table},
    }
    _emit(dump_json(payload), None)
    return EXIT_OK


def cmd_check_extension(ctx: Context) -> int:
    k, e, s = (ctx.map(r) for r in (ctx.args.k, ctx.args.e, ctx.args.s))
    inst = f"{Path(ctx.args.k).stem},{Path(ctx.args.e).stem},{Path(ctx.args.s).stem}"
    try:
        k_star = left_adjoint(k).as_meet_hom()
    except (NoAdjoint, ArtinGlueError) as exc:
        return _emit_reports([LawReport("kernel-has-left-adjoint", inst, "fail", str(exc))])
    try:
        ext = AdjointExtension(k.dom, k.cod, e.cod, k, e, s, k_star)
    except ArtinGlueError as exc:
        raise InputError(inst, str(exc)) from None
    reports = [LawReport.from_verdict("adjoint-extension", inst, verify_adjoint_extension(ext, ctx.catalog, ctx.args.oracle_size))]
    if reports[0].passed:
        gl, _ = classify(ext)
        print(json.dumps({"characteristic_map": gl.alpha.table}))
    return _emit_reports(reports)


def _extension_from_alpha(ctx: Context, ref: str) -> AdjointExtension:
    alpha = ctx.map(ref)
    ctx.guard(alpha.dom, alpha.cod)
    return ExtensionClass(alpha).extension()


def cmd_pullback(ctx: Context) -> int:
    ext = _extension_from_alpha(ctx, ctx.args.alpha)
    f = ctx.map(ctx.args.f)
    result = pullback_extension(ext, f)
    _emit(dump_json(map_to_dict(characteristic_map(result))), ctx.args.output)
    if ctx.args.verify:
        v = verify_pullback_universal(ext, f, result, ctx.catalog, ctx.args.oracle_size)
        return _emit_reports([LawReport.from_verdict("pullback-universal", ctx.args.f, v)])
    return EXIT_OK


def cmd_pushout(ctx: Context) -> int:
    ext = _extension_from_alpha(ctx, ctx.args.alpha)
    g = ctx.map(ctx.args.g)
    result = pushout_extension(ext, g)
    _emit(dump_json(map_to_dict(characteristic_map(result))), ctx.args.output)
    if ctx.args.verify:
        v = verify_pushout_universal(ext, g, result, ctx.catalog, ctx.args.oracle_size)
        return _emit_reports([LawReport.from_verdict("pushout-universal", ctx.args.g, v)])
    return EXIT_OK


def cmd_baer_meet(ctx: Context) -> int:
    a, b = ctx.map(ctx.args.a), ctx.map(ctx.args.b)
    m = baer_meet(ExtensionClass(a), ExtensionClass(b))
    _emit(dump_json(map_to_dict(m.alpha)), ctx.args.output)
    return EXIT_OK


def cmd_enumerate(ctx: Context) -> int:
    H, N = ctx.frame(ctx.args.H), ctx.frame(ctx.args.N)
    ctx.guard(H, N)
    classes = enumerate_extensions(H, N)
    for i, c in enumerate(classes):
        print(json.dumps({"index": i, "alpha": c.alpha.table, "glueing_size": len(glue(c.alpha).carrier)}))
    print(f"{len(classes)} extension classes of {H.name} by {N.name}", file=sys.stderr)
    return EXIT_OK


def cmd_check_laws(ctx: Context) -> int:
    pairs = DEFAULT_PAIRS
    if ctx.args.pair:
        pairs = tuple(tuple(p.split(",", 1)) for p in ctx.args.pair)
    for p in pairs:
        if len(p) != 2:
            raise InputError("--pair", "expected H,N")
        for name in p:
            if name not in ctx.catalog:
                raise InputError("--pair", f"unknown catalog frame {name!r}")
    reports = check_laws(
        ctx.catalog, pairs, oracle_size=ctx.args.oracle_size, test_size=ctx.args.test_size,
        frame_size=min(ctx.max_size, ctx.args.frame_size), jobs=ctx.args.jobs,
    )
    if ctx.args.format == "table":
        width = max(len(r.statement) for r in reports)
        for r in reports:
            print(f"{r.statement:<{width}}  {r.verdict.upper():4}  {r.instance}")
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} passed")
        return EXIT_OK if passed == len(reports) else EXIT_FAIL
    return _emit_reports(reports)


def cmd_export_dot(ctx: Context) -> int:
    _emit(hasse_dot(ctx.frame(ctx.args.frame)), ctx.args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def add_globals(parser: argparse.ArgumentParser, defaults: bool) -> None:
        # repeated on each subcommand so the flags work in either position
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        parser.add_argument("--catalog", metavar="DIR", default=d(None), help="directory of extra frame files")
        parser.add_argument("--max-frame-size", type=int, default=d(12), help="refuse larger frames (default 12)")
        parser.add_argument("--jobs", type=int, default=d(1), help="worker processes for check-laws")
        parser.add_argument(
            "--oracle-size", type=int, default=d(6), help="largest test object in universal-property checks"
        )

    p = argparse.ArgumentParser(prog="artinglue", description=__doc__.splitlines()[0])
    add_globals(p, True)
    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, False)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    s = command("validate", help="check that a frame file is a finite frame")
    s.add_argument("frame")
    s.set_defaults(run=cmd_validate)

    s = command("glue", help="glue along a map file and print the carrier frame")
    s.add_argument("map")
    s.add_argument("-o", "--output")
    s.add_argument("--dot", metavar="PATH")
    s.add_argument("--name")
    s.set_defaults(run=cmd_glue)

    s = command("classify", help="characteristic map of the extension given by u in G")
    s.add_argument("frame")
    s.add_argument("u")
    s.add_argument("-o", "--output", help="write the characteristic map file here")
    s.set_defaults(run=cmd_classify)

    s = command("check-extension", help="verify an extension given by k, e and section map files")
    s.add_argument("k")
    s.add_argument("e")
    s.add_argument("s")
    s.set_defaults(run=cmd_check_extension)

    for name, arg, fn in (("pullback", "f", cmd_pullback), ("pushout", "g", cmd_pushout)):
        s = command(name, help=f"{name} of the glueing extension along a map")
        s.add_argument("alpha", help="characteristic map file of the extension")
        s.add_argument(arg)
        s.add_argument("-o", "--output")
        s.add_argument("--verify", action="store_true", help="also run the universal-property oracle")
        s.set_defaults(run=fn)

    s = command("baer-meet", help="meet of two extension classes")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_baer_meet)

    s = command("enumerate-extensions", help="list the extension classes of H by N")
    s.add_argument("H")
    s.add_argument("N")
    s.set_defaults(run=cmd_enumerate)

    s = command("check-laws", help="run the law suite over the catalog")
    s.add_argument("--pair", action="append", metavar="H,N", help="instance pair (repeatable)")
    s.add_argument("--test-size", type=int, default=3, help="largest frame for test morphisms")
    s.add_argument("--frame-size", type=int, default=8, help="largest middle frame G")
    s.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    s.set_defaults(run=cmd_check_laws)

    s = command("export-dot", help="Hasse diagram in Graphviz format")
    s.add_argument("frame")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_export_dot)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ctx = Context(args)
        return args.run(ctx)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ArtinGlueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
