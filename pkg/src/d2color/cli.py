"""Command line entry point: ``d2color <subcommand> ...``.

Exit codes: 0 success, 1 usage or I/O error, 2 verification or validation
failure, 3 search budget exhausted.  With ``--json`` every subcommand writes
exactly one JSON document to stdout; its ``schema`` field names the layout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, configs, discharging, graphio
from .distance2 import DEFAULT_BUDGET, Status, chi2, color_exact, conflicting_pairs, square
from .generate import METHODS, CounterexampleFound, GenSpec, generate, run_theorem_experiment
from .planar import EmbeddedGraph, EmbeddingError, face_label

OK, USAGE, FAILED, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif text:
        print(text)


def _load(path: str) -> EmbeddedGraph:
    return graphio.load(path)


# ----------------------------------------------------------------------
# subcommands

def cmd_faces(args) -> int:
    g = _load(args.graph)
    rows = []
    for i, f in enumerate(g.faces()):
        rows.append({"face": i, "degree": f.degree, "vertices": list(f.vertices),
                     "signature": list(f.signature), "label": face_label(f.signature)})
    text = "\n".join(f"{r['face']:>4} deg {r['degree']:>2}  {r['label']:<16} {' '.join(map(str, r['vertices']))}"
                     for r in rows)
    _emit(args, {"schema": "d2color/faces v1", "faces": rows}, text)
    return OK


def cmd_chi2(args) -> int:
    g = _load(args.graph)
    r = chi2(g, args.budget)
    doc = {"schema": "d2color/chi2 v1", "chi2": r.value, "lo": r.lo, "hi": r.hi,
           "exhausted": r.exhausted, "decisions": r.decisions,
           "probes": [list(p) for p in r.probes],
           "coloring": {str(v): c for v, c in sorted(r.coloring.assignment.items())} if r.coloring else None}
    if r.exhausted:
        _emit(args, doc, "")
        print(f"budget exhausted: {r.lo} <= chi2 <= {r.hi}", file=sys.stderr)
        return BUDGET
    _emit(args, doc, str(r.value))
    return OK


def cmd_color(args) -> int:
    g = _load(args.graph)
    r = color_exact(g, args.k, args.budget)
    assignment = r.coloring.assignment if r.coloring else None
    doc = {"schema": "d2color/color v1", "k": args.k, "status": r.status.value, "decisions": r.decisions,
           "coloring": {str(v): c for v, c in sorted(assignment.items())} if assignment else None}
    if r.status is Status.SAT and args.output:
        Path(args.output).write_text(graphio.dumps_coloring(assignment))
    text = graphio.dumps_coloring(assignment).rstrip("\n") if assignment else r.status.value
    if r.status is Status.SAT:
        _emit(args, doc, "" if args.output else text)
        return OK
    _emit(args, doc, "")
    print(f"{r.status.value} at k={args.k} after {r.decisions} decisions", file=sys.stderr)
    return BUDGET if r.status is Status.BUDGET else FAILED


def cmd_square(args) -> int:
    g = _load(args.graph)
    sq = square(g)
    edges = sorted(tuple(sorted(e)) for e in sq.edges)
    doc = {"schema": "d2color/square v1", "vertices": sq.vertices,
           "edges": [list(e) for e in edges], "max_degree": sq.max_degree()}
    _emit(args, doc, "\n".join(f"{u} {v}" for u, v in edges))
    return OK


def _lemma_table(reports) -> str:
    def yn(b):
        return "-" if b is None else ("yes" if b else "NO")

    head = f"{'lemma':<6} {'case':<5} {'claimed':>7} {'computed':>8} {'slack':>5} {'preserved':>9} {'Dok':>4} {'extension':>9}  VERDICT"
    lines = [head, "-" * len(head)]
    for r in reports:
        claimed = ("<=" if r.claim == "le" else "") + str(r.claimed_bound)
        ext = r.extension_ok and r.exhaustive_ok is not False
        lines.append(
            f"{r.lemma_id:<6} {r.case_id or '-':<5} {claimed:>7} {r.computed_bound:>8} {r.slack:>5} "
            f"{yn(r.distance_preserved):>9} {yn(r.max_degree_ok):>4} {yn(ext):>9}  "
            f"{'verified' if r.verified else 'FAILED'}")
    n_ok = sum(r.verified for r in reports)
    lines.append(f"{n_ok}/{len(reports)} verified")
    return "\n".join(lines)


def cmd_verify_lemma(args) -> int:
    if args.all == (args.lemma is not None):
        raise UsageError("give exactly one of --all or --lemma")
    if args.case is not None and args.lemma is None:
        raise UsageError("--case needs --lemma")
    exhaustive = not args.no_exhaustive
    if args.all:
        reports = configs.verify_all(exhaustive)
    else:
        try:
            hits = configs.find(args.lemma, args.case)
        except configs.UnknownConfiguration as exc:
            raise UsageError(str(exc.args[0])) from None
        reports = [configs.report(c, exhaustive) for c in hits]
    doc = {"schema": "d2color/verify-lemma v1", "reports": [r.as_dict() for r in reports],
           "verified": all(r.verified for r in reports)}
    _emit(args, doc, _lemma_table(reports))
    return OK if doc["verified"] else FAILED


def cmd_discharge(args) -> int:
    if args.action == "case-table":
        if args.graph:
            raise UsageError("case-table takes no graph file")
        rows = discharging.case_table()
        doc = {"schema": "d2color/case-table v1", "rows": [
            {"group": r.group, "label": r.label, "initial": _frac(r.initial),
             "terms": [[rid, n] for rid, n in r.terms], "relation": r.relation,
             "expected": _frac(r.expected), "computed": _frac(r.computed), "ok": r.ok} for r in rows]}
        doc["ok"] = all(r.ok for r in rows)
        lines = [f"{'group':<12} {'case':<28} {'expected':>9} {'computed':>9}  match"]
        for r in rows:
            exp = ("" if r.relation == "=" else ">=") + _frac(r.expected)
            lines.append(f"{r.group:<12} {r.label:<28} {exp:>9} {_frac(r.computed):>9}  {'yes' if r.ok else 'NO'}")
        _emit(args, doc, "\n".join(lines))
        return OK if doc["ok"] else FAILED

    if not args.graph:
        raise UsageError("audit needs a graph file")
    g = _load(args.graph)
    try:
        rep = discharging.audit(g)
    except discharging.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    st = rep.state
    doc = {
        "schema": "d2color/audit v1",
        "vertices": {str(v): {"initial": _frac(st.vertex_initial[v]), "final": _frac(c)}
                     for v, c in sorted(st.vertex_final.items())},
        "faces": {str(i): {"initial": _frac(st.face_initial[i]), "final": _frac(c)}
                  for i, c in sorted(st.face_final.items())},
        "total_initial": _frac(rep.total_initial),
        "total_final": _frac(rep.total_final),
        "failed_predicates": [{"name": p.name, "statement": p.statement,
                               "witnesses": [list(w) if not isinstance(w, int) else w for w in p.witnesses[:10]]}
                              for p in rep.failed_predicates],
        "negatives": [[k, i, _frac(c)] for k, i, c in rep.negatives],
        "unexplained": [[k, i, _frac(c)] for k, i, c in rep.unexplained],
        "disjunction_holds": rep.disjunction_holds,
    }
    lines = [f"vertex {v}: {_frac(st.vertex_initial[v])} -> {_frac(c)}" for v, c in sorted(st.vertex_final.items())]
    lines += [f"face {i}: {_frac(st.face_initial[i])} -> {_frac(c)}" for i, c in sorted(st.face_final.items())]
    lines.append(f"total: {_frac(rep.total_initial)} -> {_frac(rep.total_final)}")
    lines.append("failed predicates: " + (", ".join(p.name for p in rep.failed_predicates) or "none"))
    lines.append(f"negative elements: {len(rep.negatives)}")
    lines.append(f"disjunction: {'holds' if rep.disjunction_holds else 'VIOLATED'}")
    _emit(args, doc, "\n".join(lines))
    return OK if rep.disjunction_holds and rep.total_final == rep.total_initial else FAILED


def cmd_gen(args) -> int:
    if args.seed is None:
        raise UsageError("gen needs --seed")
    try:
        spec = GenSpec(args.seed, args.n, args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = graphio.dumps(generate(spec))
    if args.output:
        Path(args.output).write_text(text)
        _emit(args, {"schema": "d2color/gen v1", "seed": args.seed, "n": args.n,
                     "method": args.method, "output": args.output}, "")
    elif args.json:
        _emit(args, {"schema": "d2color/gen v1", "seed": args.seed, "n": args.n,
                     "method": args.method, "graph": text}, "")
    else:
        sys.stdout.write(text)
    return OK


def cmd_experiment(args) -> int:
    if args.seed is None:
        raise UsageError("experiment needs --seed")
    try:
        summary = run_theorem_experiment(args.count, (args.n_min, args.n_max), args.seed, args.budget,
                                         method=args.method, measure_chi2=not args.no_chi2,
                                         dump_dir=args.dump_dir)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except CounterexampleFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    doc = {"schema": "d2color/experiment v1", **summary.as_dict()}
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    text = (f"{summary.sat}/{summary.count} 17-colourable, {summary.unsat} unsat, "
            f"{summary.budget_exhausted} budget-exhausted; max chi2 {summary.max_chi2}")
    _emit(args, doc, text)
    return BUDGET if summary.budget_exhausted else OK


def cmd_validate(args) -> int:
    try:
        g = _load(args.graph)
        g.check_planar()
    except graphio.FormatError as exc:
        if isinstance(exc.__cause__, EmbeddingError):
            print(f"invalid embedding: {exc}", file=sys.stderr)
            return FAILED
        raise
    except EmbeddingError as exc:
        print(f"invalid embedding: {exc}", file=sys.stderr)
        return FAILED
    doc = {"schema": "d2color/validate v1", "vertices": g.num_vertices, "edges": g.num_edges,
           "faces": len(g.faces()), "max_degree": g.max_degree(), "valid": True}
    if args.coloring is None:
        _emit(args, doc, f"valid embedding: {g.num_vertices} vertices, {g.num_edges} edges, {len(g.faces())} faces")
        return OK
    assignment = graphio.loads_coloring(Path(args.coloring).read_text())
    problems = []
    missing = [v for v in g.vertices if v not in assignment]
    if missing:
        problems.append(f"vertex {missing[0]} is uncoloured")
    extra = sorted(set(assignment) - set(g.vertices))
    if extra:
        problems.append(f"vertex {extra[0]} does not exist")
    if args.k is not None:
        out = sorted(v for v, c in assignment.items() if not 1 <= c <= args.k)
        if out:
            problems.append(f"vertex {out[0]} has colour {assignment[out[0]]} outside 1..{args.k}")
    bad = conflicting_pairs(g, assignment)
    if bad:
        u, v = bad[0]
        problems.append(f"vertices {u} and {v} are within distance 2 and share colour {assignment[u]}")
    doc.update(valid=not problems, problems=problems,
               first_conflict=list(bad[0]) if bad else None)
    if problems:
        _emit(args, doc, "")
        print(problems[0] if not bad else problems[-1], file=sys.stderr)
        return FAILED
    _emit(args, doc, f"valid 2-distance colouring with {len(set(assignment.values()))} colours")
    return OK


# ----------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    # global flags work before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON document")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="solver decision budget")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")

    p = _Parser(prog="d2color", description="2-distance colouring of planar graphs with maximum degree 5")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--json", action="store_true", default=False)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=None)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.set_defaults(func=func)
        return s

    add("faces", cmd_faces, "list the faces of an embedded graph").add_argument("graph")
    add("chi2", cmd_chi2, "exact 2-distance chromatic number").add_argument("graph")
    s = add("color", cmd_color, "find a 2-distance k-colouring")
    s.add_argument("graph")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-o", "--output")
    add("square", cmd_square, "edges of the square graph").add_argument("graph")
    s = add("verify-lemma", cmd_verify_lemma, "check reducible configurations")
    s.add_argument("--all", action="store_true")
    s.add_argument("--lemma")
    s.add_argument("--case")
    s.add_argument("--no-exhaustive", action="store_true", help="skip the adversary enumeration")
    s = add("discharge", cmd_discharge, "discharging case table or audit of a graph")
    s.add_argument("action", choices=["case-table", "audit"])
    s.add_argument("graph", nargs="?")
    s = add("gen", cmd_gen, "generate a random planar graph with max degree 5")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=METHODS, default=METHODS[0])
    s.add_argument("-o", "--output")
    s = add("experiment", cmd_experiment, "17-colour experiment on generated graphs")
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--method", choices=METHODS, default=METHODS[0])
    s.add_argument("--report")
    s.add_argument("--dump-dir", default=".")
    s.add_argument("--no-chi2", action="store_true")
    s = add("validate", cmd_validate, "validate a graph file and optionally a colouring")
    s.add_argument("graph")
    s.add_argument("--coloring")
    s.add_argument("-k", type=int)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand; see --help")
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except (OSError, graphio.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
