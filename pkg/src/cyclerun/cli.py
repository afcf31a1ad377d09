"""Command-line entry point: ``cyclerun <subcommand>``.

Graphs come from a file or stdin, either one graph6 string per line or a
single edge list (``n`` on the first line, then ``u v`` pairs). Results are
JSON lines. Exit status: 0 ok, 2 a counterexample was recorded (``verify``)
or a certificate failed (``check-cert``), 1 operational error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator

from . import generators
from .chromatic import chromatic_number
from .constructive import Certificate, find_certificate
from .errors import Budget, BudgetExceeded, GraphError, PreconditionError
from .graph import Graph
from .harness import SELECTORS, RunConfig, check_certificate, hunt, verify_stream
from .io import emit_edge_list, emit_graph6, parse_edge_list, read_graph6_lines
from .spectrum import ENUMERATION_CAP, SpectrumIncomplete, cycle_lengths, run_stats


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _is_edge_list(text: str) -> bool:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    return first.isdigit()


def load_graphs(text: str) -> Iterator[tuple[int, str, Graph | GraphError]]:
    """``(id, graph6, graph-or-error)`` for every graph in ``text``."""
    if _is_edge_list(text):
        try:
            g = parse_edge_list(text, allow_large=True)
            yield 1, (emit_graph6(g) if not g.large else ""), g
        except GraphError as exc:
            yield 1, "", exc
        return
    yield from read_graph6_lines(text.splitlines())


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _budget(args) -> Budget:
    return Budget(args.budget_ms / 1000) if args.budget_ms else Budget()


def cmd_chi(args, out) -> int:
    status = 0
    for gid, text, g in load_graphs(_read_text(args.input)):
        if isinstance(g, GraphError):
            _emit({"id": gid, "error": str(g)}, out)
            status = 1
            continue
        try:
            chi, col = chromatic_number(g, _budget(args))
            _emit({"id": gid, "graph6": text, "n": g.n, "chi": chi,
                   "coloring": {str(v): c for v, c in enumerate(col.colors)}}, out)
        except BudgetExceeded as exc:
            lo, hi = exc.partial or (None, None)
            _emit({"id": gid, "graph6": text, "chi": None, "bounds": [lo, hi]}, out)
    return status


def cmd_spectrum(args, out) -> int:
    status = 0
    for gid, text, g in load_graphs(_read_text(args.input)):
        if isinstance(g, GraphError):
            _emit({"id": gid, "error": str(g)}, out)
            status = 1
            continue
        try:
            report = cycle_lengths(g, _budget(args) if args.budget_ms else None,
                                   witnesses=args.witnesses, max_n=args.max_n)
        except SpectrumIncomplete as exc:
            _emit({"id": gid, "graph6": text, "complete": False,
                   "present": sorted(exc.present), "undecided": sorted(exc.undecided)}, out)
            continue
        except (GraphError, PreconditionError) as exc:
            _emit({"id": gid, "graph6": text, "error": str(exc)}, out)
            status = 1
            continue
        data = report.to_dict()
        if args.mod:
            data["runs"] = run_stats(report, args.mod).to_dict()
        if args.witnesses:
            data["witnesses"] = {str(k): list(c) for k, c in report.witnesses.items()}
        _emit({"id": gid, "graph6": text, **data}, out)
    return status


def cmd_certify(args, out) -> int:
    status = 0
    for gid, text, g in load_graphs(_read_text(args.input)):
        if isinstance(g, GraphError):
            _emit({"id": gid, "error": str(g)}, out)
            status = 1
            continue
        try:
            d = find_certificate(g, _budget(args), root=args.root, all_roots=args.all_roots,
                                 chi=args.chi)
        except PreconditionError as exc:
            _emit({"id": gid, "graph6": text, "error": str(exc)}, out)
            status = 1
            continue
        if d.certificate is not None:
            d.certificate = Certificate(d.certificate.cycles, d.certificate.start,
                                        d.certificate.length, d.certificate.strategy, text)
        _emit({"id": gid, "graph6": text, **d.to_dict()}, out)
    return status


def _config(args) -> RunConfig:
    return RunConfig(theorem=args.theorem, budget_ms=args.budget_ms, max_n=args.max_n,
                     jobs=args.jobs, root=args.root, all_roots=args.all_roots,
                     timing=args.timing, source=args.input, output=args.output)


def cmd_verify(args, out) -> int:
    text = _read_text(args.input)
    if _is_edge_list(text):
        text = emit_graph6(parse_edge_list(text)) + "\n"
    code = 0
    for rec in verify_stream(_config(args), text.splitlines()):
        _emit(rec, out)
        if rec.get("summary"):
            code = 2 if rec["verdicts"]["counterexample"] else (1 if rec["malformed"] else 0)
    return code


def cmd_hunt(args, out) -> int:
    for row in hunt(_config(args), _read_text(args.input).splitlines()):
        _emit(row, out)
    return 0


def cmd_gen(args, out) -> int:
    try:
        fn, argc = generators.FAMILIES[args.family]
    except KeyError:
        raise GraphError(f"unknown family {args.family!r}; choose from "
                         f"{', '.join(sorted(generators.FAMILIES))}") from None
    if len(args.params) != argc:
        raise GraphError(f"{args.family} takes {argc} integer parameter(s)")
    g = fn(*args.params)
    if args.format == "edges" or g.large:
        out.write(emit_edge_list(g))
    else:
        out.write(emit_graph6(g) + "\n")
    return 0


def cmd_check_cert(args, out) -> int:
    graphs = list(load_graphs(_read_text(args.graph)))
    if len(graphs) != 1 or isinstance(graphs[0][2], GraphError):
        raise GraphError("check-cert expects exactly one well-formed graph")
    g = graphs[0][2]
    data = json.loads(_read_text(args.certificate))
    if "certificate" in data:
        data = data["certificate"]
    if data is None:
        raise GraphError("no certificate in the given JSON")
    ok, why = check_certificate(g, data)
    _emit({"valid": ok, "reason": why}, out)
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclerun", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text, *, budget_ms=10_000):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="graph file (default: stdin)")
        p.add_argument("--budget-ms", type=int, default=budget_ms,
                       help="per-graph time budget in milliseconds")
        p.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
        return p

    p = graph_cmd("chi", "exact chromatic number and an optimal colouring")
    p.set_defaults(func=cmd_chi)

    p = graph_cmd("spectrum", "exact cycle-length spectrum", budget_ms=0)
    p.add_argument("--max-n", type=int, default=ENUMERATION_CAP)
    p.add_argument("--mod", type=int, default=None, help="also report residues modulo this")
    p.add_argument("--witnesses", action="store_true", help="include one cycle per length")
    p.set_defaults(func=cmd_spectrum)

    p = graph_cmd("certify", "construct a consecutive-lengths certificate")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--all-roots", action="store_true")
    p.add_argument("--chi", type=int, default=None, help="chromatic number, if known")
    p.set_defaults(func=cmd_certify)

    for name, func, help_text in (("verify", cmd_verify, "check theorems over a corpus"),
                                  ("hunt", cmd_hunt, "shortest longest-run per (k, n)")):
        p = graph_cmd(name, help_text)
        p.add_argument("--theorem", choices=SELECTORS, default="all")
        p.add_argument("--max-n", type=int, default=ENUMERATION_CAP)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--root", type=int, default=0)
        p.add_argument("--all-roots", action="store_true")
        p.add_argument("--timing", action="store_true",
                       help="add wall_ms to records (output is then not reproducible)")
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="emit a named graph")
    p.add_argument("family", help=", ".join(sorted(generators.FAMILIES)))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check-cert", help="independently re-check a certificate")
    p.add_argument("graph", help="graph file (graph6 or edge list)")
    p.add_argument("certificate", help="certificate JSON (or a certify output line)")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_check_cert)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8")
    try:
        return args.func(args, out)
    except (GraphError, PreconditionError, ValueError, OSError) as exc:
        print(f"cyclerun: error: {exc}", file=sys.stderr)
        return 1
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
