"""Command-line front end: ``visipoly <command> ...``.

Graph specs: ``g6:<graph6>``, ``path:<n>``, ``cycle:<n>``, ``complete:<n>``,
``file:<path>`` (first graph6 line) and ``corona(<spec>,<spec>)``.  All
vertex labels are 0-based.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .census import run_census, to_csv, to_json
from .corona_formula import brute_force_corona_polynomial, corona_visibility_polynomial
from .cq import absolute_clear_witness, admissible_vertices, maximal_absolute_cq_sets
from .graph import Graph, GraphError, ResourceLimitError, corona, diameter, standard_graph
from .graph6 import parse_graph6
from .visibility import enumerate_mv_sets


class SpecError(GraphError):
    pass


def _split_top_level(body: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def resolve_spec(spec: str) -> Graph:
    spec = spec.strip()
    if spec.startswith("corona(") and spec.endswith(")"):
        parts = _split_top_level(spec[len("corona("):-1])
        if len(parts) != 2:
            raise SpecError(f"corona takes two graph specs: {spec!r}")
        return corona(resolve_spec(parts[0]), resolve_spec(parts[1]))[0]
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise SpecError(f"graph spec needs a 'kind:' prefix: {spec!r}")
    if kind == "g6":
        return parse_graph6(arg)
    if kind == "file":
        try:
            with open(arg) as fh:
                for line in fh:
                    if line.strip():
                        return parse_graph6(line)
        except OSError as exc:
            raise SpecError(f"cannot read {arg}: {exc.strerror}") from None
        raise SpecError(f"{arg} contains no graph6 record")
    if kind in ("path", "cycle", "complete"):
        try:
            n = int(arg)
        except ValueError:
            raise SpecError(f"bad order in {spec!r}") from None
        return standard_graph(kind, n)
    raise SpecError(f"unknown graph kind {kind!r}")


def fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def fmt_family(members) -> str:
    return " ".join(fmt_set(m) for m in members) if members else "(none)"


def parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise SpecError(f"bad vertex list {text!r}") from None


def cmd_poly(args, out):
    g = resolve_spec(args.spec)
    table = enumerate_mv_sets(g)
    if args.max_diameter is None:
        out.write(f"{table.polynomial()}\n")
        return 0
    diam = diameter(g)
    if not 0 <= args.max_diameter <= diam:
        raise GraphError(f"--max-diameter must lie in 0..{diam}")
    out.write(f"{table.restricted_polynomial(args.max_diameter)}\n")
    return 0


def cmd_mu(args, out):
    out.write(f"{enumerate_mv_sets(resolve_spec(args.spec)).mu}\n")
    return 0


def cmd_corona_poly(args, out):
    g, h = resolve_spec(args.g), resolve_spec(args.h)
    formula = brute = None
    report = None
    if args.method in ("formula", "both"):
        report = corona_visibility_polynomial(g, h)
        formula = report.formula_poly
    if args.method in ("brute", "both"):
        brute = brute_force_corona_polynomial(g, h)
    if args.method == "formula":
        out.write(f"{formula}\n")
    elif args.method == "brute":
        out.write(f"{brute}\n")
    else:
        out.write(f"formula: {formula}\n")
        out.write(f"brute: {brute}\n")
        out.write("AGREE\n" if formula == brute else "DISAGREE\n")
    if args.table and report is not None:
        for q, term in report.per_q_terms.items():
            out.write(f"Q={fmt_set(q)} gamma={fmt_family(report.families[q].members)} p_Q={term}\n")
    if formula is not None and brute is not None and formula != brute:
        return 1
    return 0


def cmd_cq(args, out):
    g = resolve_spec(args.g)
    q = parse_vertex_list(args.q)
    family = maximal_absolute_cq_sets(g, q)
    out.write(f"Q: {fmt_set(q)}\n")
    out.write(f"admissible: {fmt_set(admissible_vertices(g, q))}\n")
    out.write(f"gamma: {fmt_family(family.members)}\n")
    out.write(f"disjoint-visible: {str(family.is_disjoint()).lower()}\n")
    return 0


def cmd_absolute_clear(args, out):
    g = resolve_spec(args.spec)
    witness = absolute_clear_witness(g)
    out.write(f"absolute-clear: {str(witness is None).lower()}\n")
    if witness is not None:
        family = maximal_absolute_cq_sets(g, witness)
        out.write(f"witness Q: {fmt_set(witness)}\n")
        out.write(f"gamma: {fmt_family(family.members)}\n")
    return 0


def cmd_census(args, out):
    try:
        with open(args.file) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise SpecError(f"cannot read {args.file}: {exc.strerror}") from None
    result = run_census(lines, jobs=args.jobs)
    for failure in result.failures:
        sys.stderr.write(f"line {failure.line}: {failure.reason}\n")
    if args.out:
        path = Path(args.out)
        if path.suffix == ".json":
            text = to_json(result, timings=args.timings)
        elif path.suffix == ".csv":
            text = to_csv(result, timings=args.timings)
        else:
            raise SpecError("--out must end in .csv or .json")
        path.write_text(text)
    out.write(result.summary.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="visipoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="visibility polynomial V(G) or V_d(G)")
    p.add_argument("spec")
    p.add_argument("--max-diameter", type=int, default=None)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("mu", help="mutual-visibility number")
    p.add_argument("spec")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("corona-poly", help="visibility polynomial of G⊙H")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--method", choices=("formula", "brute", "both"), default="formula")
    p.add_argument("--table", action="store_true", help="print per-Q terms")
    p.set_defaults(func=cmd_corona_poly)

    p = sub.add_parser("cq", help="maximal absolute c_Q-visible sets")
    p.add_argument("--g", required=True)
    p.add_argument("--q", required=True, help="comma-separated 0-based vertices")
    p.set_defaults(func=cmd_cq)

    p = sub.add_parser("absolute-clear", help="absolute-clear verdict with witness")
    p.add_argument("spec")
    p.set_defaults(func=cmd_absolute_clear)

    p = sub.add_parser("census", help="statistics over a .g6 file")
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="write records to .csv or .json")
    p.add_argument("--timings", action="store_true", help="fill elapsed_ms (non-deterministic)")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (GraphError, ResourceLimitError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
