"""``rpk``: classify, solve, validate, generate and export arc-coloured digraphs.

Exit codes: 0 found or valid, 1 proven absent or invalid, 2 input error,
3 unknown (beyond the enumeration bound), 4 precondition failed, 5 internal
guarantee violated.
"""
from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, TextIO

from . import document
from .conditions import ClassReport, classify
from .digraph import ArcColouredDigraph
from .dot import to_dot
from .errors import DocumentError, InstanceTooLarge, PreconditionFailed, TheoremViolation, UnknownFixture
from .factory import FIXTURES, KINDS, GenProfile, fixture, generate
from .rainbow import rainbow_closure, rainbow_reachability
from .result import SolveResult, brute_bound, is_rp_kernel
from .solver import CLI_METHODS, brute_force_rp_kernel, solve, solve_with

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_UNKNOWN, EXIT_PRECONDITION, EXIT_BUG = range(6)


class _InputError(Exception):
    pass


def _load(path: str) -> ArcColouredDigraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror}") from None
    try:
        return document.parse_document(text)
    except DocumentError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _names_to_vertices(d: ArcColouredDigraph, spec: str) -> list[int]:
    index = {name: i for i, name in enumerate(d.labels)}
    names = [s.strip() for s in spec.split(",") if s.strip()]
    missing = [n for n in names if n not in index]
    if missing:
        raise _InputError(f"unknown vertices: {', '.join(missing)}")
    if not names:
        raise _InputError("the kernel must name at least one vertex")
    return [index[n] for n in names]


def _emit_json(out: TextIO, doc: Any) -> None:
    out.write(document.dumps(doc))


def _figure(args: argparse.Namespace, d, kernel=(), title: str | None = None) -> None:
    if getattr(args, "figure", None):
        from .plotting import render

        render(d, args.figure, kernel, title)


# -- subcommands ----------------------------------------------------------


def _classify_text(report: ClassReport, labels: Sequence[str], out: TextIO) -> None:
    doc = report.to_json(labels)
    out.write(f"vertices: {doc['vertices']}  colours: {doc['colours']}\n")
    for name, flag in doc["classes"].items():
        out.write(f"{name}: {'true' if flag else 'false'}\n")
    if "bipartition" in doc:
        x, y = doc["bipartition"]
        out.write(f"bipartition: {{{', '.join(x)}}} | {{{', '.join(y)}}}\n")
    for name, entry in doc["conditions"].items():
        line = f"{name}: {'PASS' if entry['pass'] else 'FAIL'}"
        witness = report.conditions[name].witness
        if witness is not None:
            line += f"  {witness.describe(labels)}"
        out.write(line + "\n")
    out.write(f"applicable: {', '.join(doc['applicable']) or 'none'}\n")


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    d = _load(args.file)
    report = classify(d)
    if args.json:
        _emit_json(out, report.to_json(d.labels))
    else:
        _classify_text(report, d.labels, out)
    return EXIT_OK


def _solve_exit(result: SolveResult) -> int:
    return {"found": EXIT_OK, "absent": EXIT_NO, "unknown": EXIT_UNKNOWN}[result.status]


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    d = _load(args.file)
    method = CLI_METHODS[args.method] if args.method != "auto" else "auto"
    try:
        if method == "auto":
            result = solve(d, args.bound)
        else:
            result = solve_with(d, method, args.bound)
    except PreconditionFailed as exc:
        doc = {"status": "precondition_failed", "method": method, "condition": exc.condition}
        if exc.detail:
            doc["detail"] = exc.detail
        if args.json:
            _emit_json(out, doc)
        else:
            out.write(f"precondition failed: {exc.condition}\n")
            if exc.detail:
                out.write(f"  {exc.detail}\n")
        return EXIT_PRECONDITION
    except InstanceTooLarge as exc:
        result = SolveResult(None, method, False, "unknown", [str(exc)])

    doc = result.to_json(d.labels)
    if args.validate and result.kernel is not None:
        check = is_rp_kernel(d, result.kernel, rainbow_reachability(d))
        doc["recheck"] = bool(check)
        if d.n <= brute_bound(args.bound):
            doc["in_enumeration"] = result.kernel in brute_force_rp_kernel(d, args.bound)
    if args.json:
        _emit_json(out, doc)
    else:
        if result.kernel is not None:
            out.write(f"RP-kernel: {{{', '.join(doc['kernel'])}}}\n")
        elif result.status == "absent":
            out.write("no RP-kernel\n")
        else:
            out.write("unknown: instance too large to decide\n")
        out.write(f"method: {result.method}\n")
        if result.branch:
            out.write(f"branch: {result.branch}\n")
        for line in result.diagnostics:
            out.write(f"  {line}\n")
        if "recheck" in doc:
            out.write(f"recheck: {'ok' if doc['recheck'] else 'FAILED'}\n")
        if "in_enumeration" in doc:
            out.write(f"among enumerated RP-kernels: {'yes' if doc['in_enumeration'] else 'NO'}\n")
    _figure(args, d, result.kernel or (), f"{result.method}: {result.status}")
    if doc.get("recheck") is False or doc.get("in_enumeration") is False:
        return EXIT_BUG
    return _solve_exit(result)


def cmd_closure(args: argparse.Namespace, out: TextIO) -> int:
    d = _load(args.file)
    closure = rainbow_closure(d)
    if args.json:
        out.write(document.serialize(closure))
    else:
        added = [(u, v) for u, v in closure.arcs() if not d.has_arc(u, v)]
        out.write(f"closure arcs: {closure.arc_count}  (added {len(added)})\n")
        for u, v in closure.arcs():
            mark = "  +" if (u, v) in added else "   "
            out.write(f"{mark} {d.labels[u]} -> {d.labels[v]}\n")
    return EXIT_OK


def cmd_reach(args: argparse.Namespace, out: TextIO) -> int:
    d = _load(args.file)
    reach = rainbow_reachability(d)
    if args.json:
        _emit_json(out, {"vertices": list(d.labels), "matrix": reach.matrix()})
    else:
        width = max(len(name) for name in d.labels) if d.n else 1
        out.write(" " * width + " " + " ".join(name.rjust(width) for name in d.labels) + "\n")
        for u, row in enumerate(reach.matrix()):
            cells = " ".join(("1" if b else ".").rjust(width) for b in row)
            out.write(f"{d.labels[u].rjust(width)} {cells}\n")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    d = _load(args.file)
    kernel = _names_to_vertices(d, args.kernel)
    verdict = is_rp_kernel(d, kernel)
    doc: dict[str, Any] = {"kernel": [d.labels[v] for v in sorted(set(kernel))], "valid": verdict.ok}
    if not verdict:
        doc["witness"] = verdict.witness.describe(d.labels)
    if args.json:
        _emit_json(out, doc)
    else:
        out.write("valid RP-kernel\n" if verdict else f"not an RP-kernel: {doc['witness']}\n")
    return EXIT_OK if verdict else EXIT_NO


def _parts(text: str) -> tuple[int, int]:
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected two integers like 2,5") from None
    return a, b


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    name = args.kind
    if name.upper() in FIXTURES:
        d = fixture(name)
    elif name in KINDS:
        try:
            profile = GenProfile(
                kind=name,
                n=args.n,
                parts=args.parts,
                colouring=args.colouring,
                m=args.m,
                seed=args.seed,
                p=args.p,
            )
        except ValueError as exc:
            raise _InputError(str(exc)) from None
        d = generate(profile)
    else:
        raise UnknownFixture(f"unknown class or fixture {name!r}")
    text = document.serialize(d)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace, out: TextIO) -> int:
    d = _load(args.file)
    kernel = _names_to_vertices(d, args.kernel) if args.kernel else []
    g = rainbow_closure(d) if args.closure else d
    text = to_dot(g, kernel, Path(args.file).stem if args.file != "-" else "D")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    _figure(args, g, kernel)
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rpk", description="Kernels by rainbow paths in arc-coloured digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, takes_file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if takes_file:
            p.add_argument("file", help="instance document, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("classify", "report digraph classes and colour conditions")

    p = add("solve", "find an RP-kernel")
    p.add_argument("--method", default="auto", choices=["auto", *CLI_METHODS])
    p.add_argument("--bound", type=int, default=None, help="brute-force vertex bound")
    p.add_argument("--validate", action="store_true", help="recheck and compare with enumeration")
    p.add_argument("--figure", metavar="PATH", help="also render the digraph and kernel to an image")

    add("closure", "print the rainbow closure")
    add("reach", "print the rainbow reachability matrix")

    p = add("validate", "check whether a vertex set is an RP-kernel")
    p.add_argument("--kernel", required=True, help="comma-separated vertex names")

    p = add("generate", "write a fixture or a seeded random instance", takes_file=False)
    p.add_argument("kind", help=f"one of {', '.join(KINDS)} or a fixture ({', '.join(FIXTURES)})")
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--parts", type=_parts, help="bipartite part sizes, e.g. 2,5")
    p.add_argument("--colouring", choices=["random", "injective"], default="random")
    p.add_argument("--m", type=int, default=3, help="colours drawn before repair")
    p.add_argument("--p", type=float, default=0.3, help="density knob")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = add("export-dot", "write Graphviz DOT")
    p.add_argument("--kernel", help="comma-separated vertex names to highlight")
    p.add_argument("--closure", action="store_true", help="export the rainbow closure instead")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.add_argument("--figure", metavar="PATH", help="also render an image")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "solve": cmd_solve,
    "closure": cmd_closure,
    "reach": cmd_reach,
    "validate": cmd_validate,
    "generate": cmd_generate,
    "export-dot": cmd_export_dot,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (_InputError, UnknownFixture) as exc:
        message = exc.args[0] if isinstance(exc, UnknownFixture) else str(exc)
        err.write(f"rpk: {message}\n")
        return EXIT_INPUT
    except TheoremViolation as exc:
        err.write(f"rpk: internal guarantee violated: {exc}\n")
        return EXIT_BUG


if __name__ == "__main__":
    sys.exit(main())
