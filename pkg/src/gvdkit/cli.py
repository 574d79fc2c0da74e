"""Command-line interface: ``gvdkit <command> [options]``.

Exit status is 0 for a true verdict, 1 for false, 2 for unknown, 64 for a
usage error and 65 for unparsable input.  Listing commands exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .gvd import (
    GVDConfig,
    OrderBoundExceeded,
    Strategy,
    find_lex_compatibly_gvd_orders,
    find_one_step_gvd,
    is_gvd,
    is_lex_compatibly_gvd,
    is_weakly_gvd,
    one_step_gvd,
)
from .ideals import Ideal
from .outcome import CheckOutcome, Verdict
from .poly import PolynomialError, Ring, parse_variable_list
from .simplicial import ComplexError, SimplicialComplex, is_vertex_decomposable, stanley_reisner_ideal
from .toric import Graph, GraphError, format_table, survey_table, toric_ideal_of_graph

EXIT = {Verdict.TRUE: 0, Verdict.FALSE: 1, Verdict.UNKNOWN: 2}
EX_USAGE = 64
EX_DATAERR = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _generators(ideal: Ideal, raw: bool) -> list[str]:
    gens = ideal.generators if raw else ideal.basis()
    return [str(g) for g in gens]


def _ideal_text(ideal: Ideal, raw: bool) -> str:
    return "ideal(" + ", ".join(_generators(ideal, raw)) + ")"


class Report:
    """Collects one command's result and renders it as text or JSON."""

    def __init__(self, args):
        self.args = args
        self.doc: dict = {"command": args.command}
        self.lines: list[str] = []
        self.code = 0

    def verdict(self, outcome: CheckOutcome):
        self.doc.update(outcome.to_json())
        self.code = EXIT[outcome.verdict]
        self.lines.append(f"verdict: {outcome.verdict.value}")
        for r in outcome.reasons:
            self.lines.append(f"reason: {r}")
        if self.args.verbose:
            for step in outcome.trace:
                ring = ",".join(step.ring)
                if step.branch == "base":
                    self.lines.append(f"  QQ[{ring}]: base case")
                else:
                    kind = "degenerate" if step.degenerate else "nondegenerate"
                    self.lines.append(f"  QQ[{ring}]: pivot {step.pivot}, branch {step.branch} ({kind})")

    def ideal(self, key: str, ideal: Ideal):
        self.doc[key] = _generators(ideal, self.args.raw_generators)
        self.lines.append(f"{key}: {_ideal_text(ideal, self.args.raw_generators)}")

    def value(self, key: str, value, text: str | None = None):
        self.doc[key] = value
        self.lines.append(f"{key}: {value if text is None else text}")

    def emit(self, out):
        if self.args.format == "json":
            out.write(json.dumps(self.doc, indent=2) + "\n")
        else:
            out.write("\n".join(self.lines) + "\n")


def _ideal_from(args) -> Ideal:
    ring = Ring.parse(args.ring)
    return Ideal.parse(ring, args.ideal)


def _config(args) -> GVDConfig:
    return GVDConfig(
        assume_unmixed=args.assume_unmixed,
        assume_radical=getattr(args, "assume_radical", False),
        assume_cm=getattr(args, "assume_cm", False),
        variable_strategy=Strategy(args.strategy),
    )


def cmd_one_step(args, rep: Report):
    ideal = _ideal_from(args)
    r = one_step_gvd(ideal, args.pivot)
    rep.verdict(CheckOutcome(Verdict.of(r.is_gvd)))
    rep.ideal("C", r.C)
    rep.ideal("N", r.N)
    rep.value("degeneracy", r.degeneracy.value)


def cmd_cyi(args, rep: Report):
    rep.ideal("C", one_step_gvd(_ideal_from(args), args.pivot).C)


def cmd_nyi(args, rep: Report):
    rep.ideal("N", one_step_gvd(_ideal_from(args), args.pivot).N)


def cmd_find_one_step(args, rep: Report):
    found = find_one_step_gvd(_ideal_from(args))
    rep.value("variables", found, "{" + ", ".join(found) + "}")


def cmd_is_gvd(args, rep: Report):
    rep.verdict(is_gvd(_ideal_from(args), _config(args), args.timeout_seconds))


def cmd_is_weakly_gvd(args, rep: Report):
    rep.verdict(is_weakly_gvd(_ideal_from(args), _config(args), args.timeout_seconds))


def cmd_is_lex_gvd(args, rep: Report):
    ideal = _ideal_from(args)
    order = parse_variable_list(args.order)
    try:
        out = is_lex_compatibly_gvd(ideal, order, _config(args), args.timeout_seconds)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep.verdict(out)


def cmd_find_lex_orders(args, rep: Report):
    ideal = _ideal_from(args)
    try:
        orders = find_lex_compatibly_gvd_orders(ideal, args.max_variables, _config(args))
    except OrderBoundExceeded as exc:
        raise UsageError(f"{exc} (raise it with --max-variables)") from exc
    rep.doc["orders"] = [list(o) for o in orders]
    rep.lines.append(f"orders: {len(orders)}")
    rep.lines += ["  " + ">".join(o) for o in orders]


def _complex_from(args) -> SimplicialComplex:
    vertices = parse_variable_list(args.ring) if args.ring else None
    return SimplicialComplex.parse(args.facets, vertices)


def cmd_sr_ideal(args, rep: Report):
    cx = _complex_from(args)
    rep.ideal("ideal", stanley_reisner_ideal(cx))


def cmd_is_vd(args, rep: Report):
    cx = _complex_from(args)
    rep.verdict(CheckOutcome(Verdict.of(is_vertex_decomposable(cx))))


def _graph_from(args) -> Graph:
    if bool(args.graph_file) == bool(args.edges):
        raise UsageError("toric: give exactly one of --graph-file or --edges")
    if args.graph_file:
        with open(args.graph_file, encoding="utf-8") as fh:
            return Graph.parse(fh.read())
    pairs = []
    for chunk in args.edges.split(","):
        bits = chunk.strip().split("-")
        if len(bits) != 2 or not all(b.strip().isdigit() for b in bits):
            raise GraphError(f"bad edge {chunk.strip()!r}; write edges as u-v with 1-based vertices")
        pairs.append((int(bits[0]), int(bits[1])))
    n = max(max(p) for p in pairs)
    return Graph(n, tuple(pairs))


def cmd_toric(args, rep: Report):
    g = _graph_from(args)
    ideal = toric_ideal_of_graph(g)
    rep.value("ring", list(g.labels), ",".join(g.labels))
    rep.ideal("ideal", ideal)
    if args.check:
        checks = {"gvd": is_gvd, "weak": is_weakly_gvd}
        outcome = checks[args.check](ideal, timeout=args.timeout_seconds)
        rep.verdict(outcome)


def _edge_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise UsageError(f"survey: bad edge range {text!r}; use e.g. 4..7") from exc


def cmd_survey(args, rep: Report):
    try:
        rows = survey_table(_edge_range(args.edges), args.jobs, args.timeout_seconds, args.allow_extended)
    except GraphError as exc:
        raise UsageError(f"{exc} (pass --allow-extended)") from exc
    rep.doc["table"] = [r.to_json() for r in rows]
    rep.lines.append(format_table(rows))
    if args.verbose:
        for r in rows:
            for item in r.not_gvd:
                rep.lines.append(f"  e={r.edges} not GVD: {item['ideal']}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--verbose", action="store_true", help="print the decomposition trace")
    common.add_argument("--timeout-seconds", type=float, default=None)
    common.add_argument("--raw-generators", action="store_true",
                        help="print generators as computed instead of the reduced basis")

    ideal_opts = _Parser(add_help=False)
    ideal_opts.add_argument("--ring", required=True, help='variables, e.g. "a..f" or "x,y,z"')
    ideal_opts.add_argument("--ideal", required=True, help='generators, e.g. "x*y, y^2 - z"')

    config_opts = _Parser(add_help=False)
    config_opts.add_argument("--assume-unmixed", action="store_true")
    config_opts.add_argument("--strategy", choices=[s.value for s in Strategy], default="declaration")

    side_opts = _Parser(add_help=False)
    side_opts.add_argument("--assume-radical", action="store_true")
    side_opts.add_argument("--assume-cm", action="store_true")

    parser = _Parser(prog="gvdkit", description="Geometric vertex decomposability checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, parents, help_text):
        p = sub.add_parser(name, parents=[common] + parents, help=help_text)
        p.set_defaults(func=fn)
        return p

    for name, fn, text in [("one-step", cmd_one_step, "one geometric vertex decomposition step"),
                           ("cyi", cmd_cyi, "the ideal C for a pivot"),
                           ("nyi", cmd_nyi, "the ideal N for a pivot")]:
        add(name, fn, [ideal_opts], text).add_argument("--pivot", required=True)
    add("find-one-step", cmd_find_one_step, [ideal_opts], "variables giving a one-step decomposition")
    add("is-gvd", cmd_is_gvd, [ideal_opts, config_opts], "geometric vertex decomposability")
    add("is-weakly-gvd", cmd_is_weakly_gvd, [ideal_opts, config_opts, side_opts],
        "weak geometric vertex decomposability")
    p = add("is-lex-gvd", cmd_is_lex_gvd, [ideal_opts, config_opts], "lex-compatible decomposability")
    p.add_argument("--order", required=True, help='variables from largest to smallest, e.g. "f,e,d,c,b,a"')
    p = add("find-lex-orders", cmd_find_lex_orders, [ideal_opts, config_opts],
            "all lex orders giving a compatible decomposition")
    p.add_argument("--max-variables", type=int, default=8)

    for name, fn, text in [("sr-ideal", cmd_sr_ideal, "Stanley-Reisner ideal of a complex"),
                           ("is-vd", cmd_is_vd, "vertex decomposability of a complex")]:
        p = add(name, fn, [], text)
        p.add_argument("--facets", required=True, help='e.g. "{a c, a d, b d}"')
        p.add_argument("--ring", help="vertex order (defaults to sorted facet vertices)")

    p = add("toric", cmd_toric, [], "toric ideal of a graph")
    p.add_argument("--graph-file")
    p.add_argument("--edges", help='edges as "1-2, 2-3, 3-1"; labels a, b, ... in this order')
    p.add_argument("--check", choices=["gvd", "weak"], help="also run a decomposability check")

    p = add("survey", cmd_survey, [], "counts of (weakly) GVD toric ideals of connected graphs")
    p.add_argument("--edges", required=True, help='edge counts, e.g. "4..7"')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-extended", action="store_true", help="allow edge counts above 9")
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        rep = Report(args)
        args.func(args, rep)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EX_USAGE
    except (PolynomialError, ComplexError, GraphError) as exc:
        err.write(f"parse error: {exc}\n")
        return EX_DATAERR
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EX_DATAERR
    rep.emit(out)
    return rep.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
