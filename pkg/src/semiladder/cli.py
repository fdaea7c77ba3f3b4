"""Command-line entry point.

Exit codes: 0 success / accept / yes, 1 clean negative (no solution,
reject, or a certificate that the input breaks a precondition), 2 input or
format error, 3 internal invariant violation, 4 budget exceeded.  Payloads
go to stdout, diagnostics to stderr.  A file argument of ``-`` reads stdin.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, TextIO

from . import branching, fpt, gyarfas, oracles, patterns, reductions, tiling
from .errors import BudgetExceeded, GraphFormatError, InvariantViolation, PreconditionError
from .formats import parse_witness, vertex_line
from .graph import FAMILIES, Witness, complement, generate, parse_graph, serialize_graph, verify_witness

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4


class _Negative(Exception):
    """Raised by a handler to end with exit code 1 after its output."""


class _Io:
    def __init__(self, stdin: TextIO, stdout: TextIO, stderr: TextIO):
        self.stdin = stdin
        self.out = stdout
        self.err = stderr

    def read(self, path: str) -> str:
        if path == "-":
            return self.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()

    def graph(self, path: str):
        return parse_graph(self.read(path))

    def emit(self, text: str) -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")

    def note(self, text: str) -> None:
        self.err.write(text.rstrip("\n") + "\n")


def _number(tok: str) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise PreconditionError(f"parameter {tok!r} is not a number") from None
    return int(x) if x.is_integer() and "." not in tok else x


# -- handlers ----------------------------------------------------------------


def cmd_gen(a, io: _Io) -> None:
    made = generate(a.family, [_number(p) for p in a.params], seed=a.seed)
    io.emit(serialize_graph(made.graph, made.comments()))


def cmd_indices(a, io: _Io) -> None:
    io.emit(patterns.index_report(io.graph(a.graph), a.cap).to_text())


def cmd_solve(a, io: _Io) -> None:
    g = io.graph(a.graph)
    if a.problem in ("is", "clique"):
        h = g if a.problem == "is" else complement(g)
        if a.max:
            found = oracles.max_independent_set(h, a.budget)
        else:
            found = oracles.has_independent_set(h, a.k, a.budget)
        if found is None:
            io.emit("no")
            raise _Negative
        io.emit(vertex_line(a.problem, found))
        return
    if a.max:
        found = oracles.min_dominating_set(g, a.budget)
    else:
        if oracles.domination_number(g, a.k, a.budget) is None:
            io.emit("no")
            raise _Negative
        found = oracles.min_dominating_set(g, a.budget)
    io.emit(vertex_line("ds", found))


def _certificate(io: _Io, exc: gyarfas.IndexBoundExceeded) -> None:
    io.note(str(exc))
    io.emit(vertex_line("path", exc.path))
    raise _Negative


def cmd_approx(a, io: _Io) -> None:
    g = io.graph(a.graph)
    if a.problem == "clique" and a.halfgraph:
        raise PreconditionError("approx clique only supports --gyarfas")
    if a.halfgraph:
        rep = branching.approx_is_halfgraph(g, a.depth_cap)
        io.note(f"depth={rep.depth_reached} nodes={rep.nodes_explored}")
        if rep.cap_hit:
            io.note("cap hit: depth cap reached, guarantee void")
        io.emit(rep.to_text())
        return
    if a.m is None:
        raise PreconditionError("--gyarfas needs -m")
    try:
        if a.problem == "is":
            io.emit(vertex_line("is", gyarfas.approx_is_comatching(g, a.m)))
        else:
            io.emit(vertex_line("clique", gyarfas.approx_clique(g, a.m)))
    except gyarfas.IndexBoundExceeded as exc:
        _certificate(io, exc)


def cmd_fpt(a, io: _Io) -> None:
    g = io.graph(a.graph)
    ans = fpt.fpt_independent_set(g, a.k, a.t, a.threshold, a.budget)
    io.emit(ans.to_text())
    if not ans.yes:
        raise _Negative


def cmd_reduce(a, io: _Io) -> None:
    if a.direction == "gt2is":
        _need(a.files, 1, "reduce gt2is <gt-file>")
        inst = tiling.parse_grid_tiling(io.read(a.files[0]))
        io.emit(reductions.grid_tiling_to_is(inst).to_text())
    else:
        _need(a.files, 2, "reduce mcis2ds <graph-file> <partition-file>")
        g = io.graph(a.files[0])
        p = oracles.parse_partition(io.read(a.files[1]))
        _check_partition(p, g.n)
        io.emit(reductions.multicolored_is_to_ds(g, p).to_text())


def _need(files: list[str], count: int, usage: str) -> None:
    if len(files) != count:
        raise PreconditionError(f"usage: {usage}")


def _check_partition(p, n: int) -> None:
    try:
        p.validate(n)
    except PreconditionError as exc:
        raise GraphFormatError(f"partition: {exc}") from None


def _vertex_witness(io: _Io, path: str, kind: str) -> list[int]:
    w = parse_witness(io.read(path))
    if w.kind != kind:
        raise GraphFormatError(f"expected a {kind} witness, got {w.kind}")
    return list(w.payload)


def cmd_lift(a, io: _Io) -> None:
    d = a.direction
    if d in ("gt2is", "is2gt"):
        what = "selection-file" if d == "gt2is" else "is-witness"
        _need(a.files, 2, f"lift {d} <gt-file> <{what}>")
        inst = tiling.parse_grid_tiling(io.read(a.files[0]))
        out = reductions.grid_tiling_to_is(inst)
        if d == "gt2is":
            sel = tiling.parse_selection(io.read(a.files[1]))
            io.emit(vertex_line("is", reductions.lift_tiling_solution(inst, sel, out)))
        else:
            indep = _vertex_witness(io, a.files[1], "independent-set")
            sel = reductions.extract_tiling_solution(inst, out, indep)
            io.emit(tiling.selection_to_text(sel, inst.k))
        return
    what = "is-witness" if d == "mcis2ds" else "ds-witness"
    _need(a.files, 3, f"lift {d} <graph-file> <partition-file> <{what}>")
    g = io.graph(a.files[0])
    p = oracles.parse_partition(io.read(a.files[1]))
    _check_partition(p, g.n)
    out = reductions.multicolored_is_to_ds(g, p)
    if d == "mcis2ds":
        sol = _vertex_witness(io, a.files[2], "independent-set")
        io.emit(vertex_line("ds", reductions.lift_mcis_to_ds(out, sol)))
    else:
        ds = _vertex_witness(io, a.files[2], "dominating-set")
        io.emit(vertex_line("is", reductions.extract_ds_to_mcis(out, ds)))


def cmd_tiling(a, io: _Io) -> None:
    inst = tiling.parse_grid_tiling(io.read(a.gt))
    sel = oracles.solve_grid_tiling(inst, a.budget)
    if sel is None:
        io.emit("no")
        raise _Negative
    io.emit(tiling.selection_to_text(sel, inst.k))


_VERIFY_KINDS = {
    "is": "independent-set",
    "clique": "clique",
    "ds": "dominating-set",
    "coloring": "coloring",
    "path": "induced-path",
    "pattern": "pattern",
}


def cmd_verify(a, io: _Io) -> None:
    if a.kind == "tiling":
        inst = tiling.parse_grid_tiling(io.read(a.graph))
        problem = tiling.agreement_violation(inst, tiling.parse_selection(io.read(a.witness)))
        verdict_ok, reason = problem is None, problem or ""
    else:
        g = io.graph(a.graph)
        w = parse_witness(io.read(a.witness))
        if w.kind != _VERIFY_KINDS[a.kind]:
            raise GraphFormatError(f"expected a {a.kind} witness, found {w.kind}")
        verdict = verify_witness(g, w, a.k)
        verdict_ok, reason = verdict.ok, verdict.reason
    if verdict_ok:
        io.emit("accept")
        return
    io.emit("reject")
    io.note(reason)
    raise _Negative


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semiladder", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a graph family")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("params", nargs="+")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("indices", help="matching / co-matching / half-graph indices")
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=8)
    s.set_defaults(func=cmd_indices)

    s = sub.add_parser("solve", help="exact independent set, clique or dominating set")
    s.add_argument("problem", choices=("is", "clique", "ds"))
    s.add_argument("graph")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--max", action="store_true", help="optimum (minimum for ds)")
    mode.add_argument("-k", type=int, help="decide size k (at least k; at most k for ds)")
    s.add_argument("--budget", type=int, default=oracles.DEFAULT_BUDGET)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("approx", help="approximate independent set or clique")
    s.add_argument("problem", choices=("is", "clique"))
    s.add_argument("graph")
    algo = s.add_mutually_exclusive_group(required=True)
    algo.add_argument("--halfgraph", action="store_true")
    algo.add_argument("--gyarfas", action="store_true")
    s.add_argument("--depth-cap", type=int, default=None)
    s.add_argument("-m", type=int, default=None, help="index bound for --gyarfas")
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("fpt", help="kernelize then solve independent set")
    s.add_argument("problem", choices=("is",))
    s.add_argument("graph")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-t", type=int, required=True)
    s.add_argument("--threshold", type=int, default=fpt.DEFAULT_THRESHOLD)
    s.add_argument("--budget", type=int, default=fpt.DEFAULT_SEARCH_BUDGET)
    s.set_defaults(func=cmd_fpt)

    s = sub.add_parser("reduce", help="build a hardness-reduction instance")
    s.add_argument("direction", choices=("gt2is", "mcis2ds"))
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("lift", help="map solutions across a reduction")
    s.add_argument("direction", choices=("gt2is", "is2gt", "mcis2ds", "ds2mcis"))
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("tiling", help="Grid Tiling utilities")
    s.add_argument("action", choices=("solve",))
    s.add_argument("gt")
    s.add_argument("--budget", type=int, default=oracles.DEFAULT_BUDGET)
    s.set_defaults(func=cmd_tiling)

    s = sub.add_parser("verify", help="check a witness")
    s.add_argument("kind", choices=tuple(_VERIFY_KINDS) + ("tiling",))
    s.add_argument("graph", help="graph file (Grid Tiling file for 'tiling')")
    s.add_argument("witness")
    s.add_argument("-k", type=int, default=None, help="size / color target")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str], stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    io = _Io(stdin, stdout, stderr)
    handler: Callable = args.func
    try:
        handler(args, io)
    except _Negative:
        return EXIT_NEGATIVE
    except reductions.ExtractionError as exc:
        io.note(f"rejected: {exc}")
        return EXIT_NEGATIVE
    except (GraphFormatError, PreconditionError, OSError, UnicodeDecodeError) as exc:
        io.note(f"error: {exc}")
        return EXIT_INPUT
    except InvariantViolation as exc:
        io.note(f"invariant violation: {exc}")
        return EXIT_INVARIANT
    except BudgetExceeded as exc:
        io.note(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv, sys.stdin, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
