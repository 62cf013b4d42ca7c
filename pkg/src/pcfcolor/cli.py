"""Command-line interface.

Exit codes: 0 success or valid, 1 invalid or infeasible, 2 bad input or
usage, 3 internal invariant failure.  Every JSON document is written with
sorted keys so identical runs produce identical bytes.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import discharging
from .errors import InputError, InstanceTooLarge, InvariantError, MissingEmbedding
from .generator import MODES, GenSpec, corpus, generate
from .graph import square, validate
from .io import (
    coloring_to_json,
    dumps,
    graph_to_dot,
    graph_to_json,
    load_coloring,
    load_graph,
    trace_to_dot,
)
from .oracle import DEFAULT_BUDGET, exists_h_pcf_k, minimize
from .pcf import is_h_pcf
from .reduction import solve

OK, FAIL, BAD_INPUT, INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one line on stderr, exit 2
        self.exit(BAD_INPUT, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_solve(a) -> int:
    g, _, _ = load_graph(a.graph)
    res = solve(g, fallback=not a.strict, oracle_bound=a.oracle_bound)
    if not is_h_pcf(g, res.coloring, 2).valid:  # solve checks too; never exit 0 without it
        raise InvariantError("solver returned a coloring that is not 2-PCF")
    _emit(dumps(coloring_to_json(res.coloring)), a.out)
    if a.trace:
        Path(a.trace).write_text(dumps(res.trace_json()))
    if a.trace_dot:
        Path(a.trace_dot).write_text(trace_to_dot(res.trace_json()))
    if a.dot:
        Path(a.dot).write_text(graph_to_dot(g, res.coloring))
    return OK


def _cmd_verify(a) -> int:
    g, _, _ = load_graph(a.graph)
    phi = load_coloring(a.coloring, g.n)
    report = is_h_pcf(g, phi, a.h)
    _emit(dumps(report.to_json()), a.out)
    return OK if report.valid else FAIL


def _cmd_oracle(a) -> int:
    g, _, _ = load_graph(a.graph)
    try:
        if a.min:
            res = minimize(g, a.h, budget=a.budget)
        else:
            res = exists_h_pcf_k(g, a.h, a.k, budget=a.budget, jobs=a.jobs)
    except InstanceTooLarge as exc:
        _emit(dumps({"feasible": None, "h": a.h, "k": a.k, "coloring": None,
                     "stats": {"budget": exc.budget, "exceeded": True}}), a.out)
        print(f"pcfcolor oracle: {exc}", file=sys.stderr)
        return FAIL
    _emit(dumps(res.to_json()), a.out)
    return OK if res.feasible else FAIL


def _cmd_discharge(a) -> int:
    g, emb, _ = load_graph(a.graph)
    if emb is None:
        raise MissingEmbedding("discharge needs a graph with 'rotations'")
    report = discharging.audit(g, emb)
    _emit(report.table() if a.table else dumps(report.to_json()), a.out)
    return OK


def _cmd_gen(a) -> int:
    if a.corpus is not None:
        g, emb = corpus(a.corpus)
        meta = {"corpus": a.corpus}
    else:
        if a.seed is None or a.n is None:
            raise InputError("gen needs either --corpus NAME or both --seed and --n")
        spec = GenSpec(a.seed, a.n, a.mode)
        g, emb = generate(spec)
        meta = spec.meta()
    _emit(dumps(graph_to_json(g, emb, meta)), a.out)
    if a.dot:
        Path(a.dot).write_text(graph_to_dot(g))
    return OK


def _cmd_square(a) -> int:
    g, _, _ = load_graph(a.graph)
    validate(g)
    _emit(dumps(graph_to_json(square(g))), a.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pcfcolor", description="Proper-conflict-free colorings of planar graphs with maximum degree 4.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="2-PCF coloring with at most 9 colors")
    s.add_argument("graph")
    s.add_argument("--out")
    s.add_argument("--trace", help="write the reduction trace as JSON")
    s.add_argument("--trace-dot", help="write the reduction trace as DOT")
    s.add_argument("--dot", help="write the colored graph as DOT")
    s.add_argument("--strict", action="store_true",
                   help="fail (exit 3) instead of searching when an extension script does not apply")
    s.add_argument("--oracle-bound", type=int, default=16,
                   help="largest configuration-free component handed to the exact search")
    s.set_defaults(func=_cmd_solve)

    s = sub.add_parser("verify", help="check an h-PCF coloring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("oracle", help="exact search for an h-PCF k-coloring")
    s.add_argument("graph")
    s.add_argument("--h", type=int, required=True)
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--k", type=int)
    grp.add_argument("--min", action="store_true", help="smallest feasible k")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for the root split")
    s.add_argument("--out")
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("discharge", help="charge audit of an embedded graph")
    s.add_argument("graph")
    s.add_argument("--table", action="store_true", help="human-readable table instead of JSON")
    s.add_argument("--out")
    s.set_defaults(func=_cmd_discharge)

    s = sub.add_parser("gen", help="generated or named graph")
    s.add_argument("--seed", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--mode", choices=MODES, default=MODES[0])
    s.add_argument("--corpus", metavar="NAME")
    s.add_argument("--out")
    s.add_argument("--dot")
    s.set_defaults(func=_cmd_gen)

    s = sub.add_parser("square", help="the square of a graph")
    s.add_argument("graph")
    s.add_argument("--out")
    s.set_defaults(func=_cmd_square)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return a.func(a)
    except InvariantError as exc:
        print(f"pcfcolor {a.cmd}: internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except (InputError, OSError) as exc:
        print(f"pcfcolor {a.cmd}: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
