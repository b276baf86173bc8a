"""Command line front end: ``anfsolve solve|implicants|count|verify|gen|analyze``.

Instance files are JSON::

    {"format": "anfsolve-instance/1", "num_vars": 4,
     "factors": [[[1],[2],[2,3]], [[2],[3],[3,4]]]}

with each factor in array-of-arrays notation (``1`` for the constant term).
A single function for ``implicants`` uses ``"function"`` instead of
``"factors"``.  ``--format text`` reads one factor per line written as
``x1 + x2 + x2*x3`` (``1``/``0`` for constants, ``#`` starts a comment).

Exit codes: 0 satisfiable/success, 20 unsatisfiable, 1 usage or parse error,
2 refused (size limit), 3 verification failed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import __version__
from .analysis import count_models, extremal_weight_solutions, speedup_report
from .anf import AnfParseError, AnfPoly, Term, parse_anf
from .generator import GenSpec, generate_system, random_planted_point
from .implicants import generate_implicants
from .oracle import DEFAULT_LIMIT, OracleLimitError, check_equivalence, expand_implicants
from .solver import PIVOT_POLICIES, Formula, SolveStats, boolean_solve

INSTANCE_FORMAT = "anfsolve-instance/1"
FUNCTION_FORMAT = "anfsolve-function/1"
RESULT_FORMAT = "anfsolve-result/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUSED = 2
EXIT_MISMATCH = 3
EXIT_UNSAT = 20

EMITS = ("implicants", "count", "solutions", "minwt", "maxwt")
DEFAULT_SOLUTION_LIMIT = 10**6


class UsageError(Exception):
    pass


class Refusal(Exception):
    pass


# ---- documents ----------------------------------------------------------


def formula_to_document(formula: Formula) -> dict:
    return {
        "format": INSTANCE_FORMAT,
        "num_vars": formula.num_vars,
        "factors": [_poly_to_json(f) for f in formula.factors],
    }


def _poly_to_json(f: AnfPoly) -> list:
    return [1 if not mono else list(mono) for mono in f.monomials]


def _poly_from_json(value, num_vars: int | None, where: str) -> AnfPoly:
    try:
        return parse_anf(json.dumps(value), num_vars)
    except (AnfParseError, TypeError) as exc:
        raise UsageError(f"{where}: {exc}") from None


_TEXT_MONO = re.compile(r"^x(\d+)(\s*\*\s*x(\d+))*$")


def parse_text_poly(line: str, num_vars: int | None = None) -> AnfPoly:
    """``x1 + x2*x3 + 1`` style; ``+`` is XOR."""
    monomials: list = []
    for raw in line.split("+"):
        tok = raw.strip()
        if tok == "1":
            monomials.append(1)
        elif tok == "0":
            continue
        elif _TEXT_MONO.match(tok):
            monomials.append([int(v) for v in re.findall(r"x(\d+)", tok)])
        else:
            raise UsageError(f"cannot parse monomial {tok!r} in {line!r}")
    try:
        return AnfPoly(monomials, num_vars)
    except ValueError as exc:
        raise UsageError(f"{line!r}: {exc}") from None


def read_instance(path: str, fmt: str = "json", num_vars: int | None = None) -> Formula:
    text = _read(path)
    if fmt == "text":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        factors = [parse_text_poly(ln) for ln in lines if ln]
        return _formula(factors, num_vars)
    doc = _load_json(text, path)
    if "factors" in doc:
        n = doc.get("num_vars", num_vars)
        factors = [_poly_from_json(v, n, f"factor {i + 1}") for i, v in enumerate(doc["factors"])]
    elif "function" in doc:
        n = doc.get("num_vars", num_vars)
        factors = [_poly_from_json(doc["function"], n, "function")]
    else:
        raise UsageError(f"{path}: expected a 'factors' or 'function' field")
    return _formula(factors, n)


def read_function(path: str, fmt: str = "json", num_vars: int | None = None) -> tuple[AnfPoly, int]:
    formula = read_instance(path, fmt, num_vars)
    if len(formula) != 1:
        raise UsageError(f"{path}: expected exactly one function, found {len(formula)}")
    return formula.factors[0], formula.num_vars


def _formula(factors, num_vars):
    try:
        return Formula(factors, num_vars)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _load_json(text: str, path: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: expected a JSON object")
    return doc


def result_document(
    implicants: Sequence[Term],
    num_vars: int,
    emit: Sequence[str] = ("implicants", "count"),
    stats: SolveStats | None = None,
    procs: Sequence[int] | None = None,
    solution_limit: int = DEFAULT_SOLUTION_LIMIT,
    force: bool = False,
) -> dict:
    terms = list(implicants)
    doc: dict = {"format": RESULT_FORMAT, "status": "sat" if terms else "unsat", "num_vars": num_vars}
    count = None
    for what in emit:
        if what == "implicants":
            doc["implicants"] = [list(t.literals) for t in terms]
        elif what == "count":
            count = count_models(terms, num_vars) if count is None else count
            doc["model_count"] = count
        elif what == "solutions":
            count = count_models(terms, num_vars) if count is None else count
            if count > solution_limit and not force:
                raise Refusal(f"{count} solutions exceed the expansion limit {solution_limit}; use --force")
            pts = expand_implicants(terms, num_vars).bitvectors()
            doc["solutions"] = [list(p) for p in pts]
        elif what in ("minwt", "maxwt"):
            if terms:
                w = extremal_weight_solutions(terms, num_vars, what[:3])
                doc[what] = {"weight": w.weight, "witnesses": [list(b) for b in w.witnesses],
                             "truncated": w.truncated}
            else:
                doc[what] = None
        else:
            raise UsageError(f"unknown --emit value {what!r}")
    if stats is not None:
        doc["stats"] = stats.as_dict()
        if procs:
            doc["speedup"] = speedup_report(stats.segments_total, stats.longest_chain, procs).as_dict()
    return doc


def canonical_document(doc: dict) -> str:
    """Serialization with timing removed, for comparing runs."""
    doc = json.loads(json.dumps(doc))
    if "stats" in doc:
        doc["stats"].pop("wall_time", None)
    return json.dumps(doc, sort_keys=True)


def dump(doc: dict) -> str:
    """One top-level key per line, values compact."""
    rows = [f"  {json.dumps(k)}: {json.dumps(doc[k], sort_keys=True)}" for k in sorted(doc)]
    return "{\n" + ",\n".join(rows) + "\n}\n"


# ---- commands -----------------------------------------------------------


def _emit_list(args) -> list[str]:
    return args.emit or ["implicants", "count"]


def _write(args, text: str) -> None:
    if getattr(args, "output", None) and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    formula = read_instance(args.input, args.format, args.num_vars)
    res = boolean_solve(
        formula, pivot=args.pivot, order=args.order, workers=args.threads,
        executor=args.executor, first_solution=args.first_solution,
    )
    emit = ["count"] if args.command == "count" else _emit_list(args)
    stats = res.stats if (args.stats or args.procs) else None
    doc = result_document(res.implicants, formula.num_vars, emit, stats, args.procs,
                          args.max_solutions, args.force)
    _write(args, dump(doc))
    return EXIT_OK if res.satisfiable else EXIT_UNSAT


def cmd_implicants(args) -> int:
    f, n = read_function(args.input, args.format, args.num_vars)
    found = generate_implicants(f, args.order)
    doc = result_document(found, n, _emit_list(args), None, None, args.max_solutions, args.force)
    _write(args, dump(doc))
    return EXIT_OK if len(found) else EXIT_UNSAT


def cmd_verify(args) -> int:
    formula = read_instance(args.input, args.format, args.num_vars)
    if formula.num_vars > args.limit:
        raise Refusal(f"{formula.num_vars} variables exceed the oracle limit {args.limit}")
    if args.result:
        rdoc = _load_json(_read(args.result), args.result)
        try:
            terms = [Term.from_literals(lits) for lits in rdoc.get("implicants", [])]
        except (TypeError, ValueError) as exc:
            raise UsageError(f"{args.result}: bad implicant: {exc}") from None
    else:
        terms = list(boolean_solve(formula, pivot=args.pivot, order=args.order,
                                   workers=args.threads).implicants)
    verdict = check_equivalence(formula, terms, limit=args.limit)
    out = {"equivalent": verdict.ok, "message": verdict.message}
    if not verdict.ok:
        out["failure"] = verdict.invariant
        out["witness"] = list(verdict.witness)
    _write(args, dump(out))
    return EXIT_OK if verdict.ok else EXIT_MISMATCH


def cmd_gen(args) -> int:
    planted = None
    if args.planted:
        if not re.fullmatch(r"[01]+", args.planted):
            raise UsageError("--planted takes a bit string such as 1010")
        planted = tuple(int(c) for c in args.planted)
    elif args.plant_random:
        planted = random_planted_point(args.n, args.seed)
    try:
        spec = GenSpec(args.n, args.m, args.k, args.d, args.seed, planted, args.allow_unsat)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = formula_to_document(generate_system(spec))
    doc["generator"] = {"n": args.n, "m": args.m, "k": args.k, "d": spec.max_degree,
                        "seed": args.seed, "planted": None if planted is None else list(planted)}
    _write(args, json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    if args.stats_file:
        doc = _load_json(_read(args.stats_file), args.stats_file)
        stats = doc.get("stats", doc)
        try:
            n, n_seq = int(stats["segments_total"]), int(stats["longest_chain"])
        except (KeyError, TypeError, ValueError):
            raise UsageError(f"{args.stats_file}: no segments_total/longest_chain stats") from None
    elif args.N is not None and args.N_seq is not None:
        n, n_seq = args.N, args.N_seq
    else:
        raise UsageError("give a result file with stats, or both --N and --N-seq")
    try:
        report = speedup_report(n, n_seq, args.procs or [1, 2, 4, 8, 16])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args, dump(report.as_dict()) if args.json else report.render() + "\n")
    return EXIT_OK


# ---- argument parsing ---------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _procs(text: str) -> list[int]:
    try:
        out = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("processor counts must be >= 1")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="anfsolve", description="All-solution solver for ANF equation systems.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def inputs(sp):
        sp.add_argument("input", help="instance file ('-' for stdin)")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--num-vars", type=int, default=None, help="override/declare variable count")
        sp.add_argument("-o", "--output", default=None)

    def solving(sp):
        sp.add_argument("--threads", type=int, default=1, help="worker count, 0 = all CPUs")
        sp.add_argument("--executor", choices=("thread", "process"), default="thread")
        sp.add_argument("--pivot", choices=PIVOT_POLICIES, default="min-vars")
        sp.add_argument("--order", choices=("index", "frequency"), default="index")

    def emitting(sp):
        sp.add_argument("--emit", action="append", choices=EMITS)
        sp.add_argument("--max-solutions", type=int, default=DEFAULT_SOLUTION_LIMIT)
        sp.add_argument("--force", action="store_true", help="expand solutions past the limit")

    for name in ("solve", "count"):
        sp = sub.add_parser(name, help="solve a system" if name == "solve" else "count solutions")
        inputs(sp)
        solving(sp)
        emitting(sp)
        sp.add_argument("--stats", action="store_true")
        sp.add_argument("--procs", type=_procs, default=None, help="add an Amdahl table, e.g. 1,2,4")
        sp.add_argument("--first-solution", action="store_true", help="stop at the first implicant")
        sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("implicants", help="orthogonal implicants of one function")
    inputs(sp)
    sp.add_argument("--order", choices=("index", "frequency"), default="index")
    emitting(sp)
    sp.set_defaults(func=cmd_implicants)

    sp = sub.add_parser("verify", help="check a result against brute force")
    inputs(sp)
    solving(sp)
    sp.add_argument("--result", default=None, help="result document; recomputed if omitted")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate a random sparse instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--planted", default=None, help="bit string, x1 first")
    sp.add_argument("--plant-random", action="store_true")
    sp.add_argument("--allow-unsat", action="store_true")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("analyze", help="Amdahl speedup report from solver stats")
    sp.add_argument("stats_file", nargs="?", default=None)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--N-seq", dest="N_seq", type=int, default=None)
    sp.add_argument("--procs", type=_procs, default=None)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_analyze)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"anfsolve: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Refusal, OracleLimitError) as exc:
        print(f"anfsolve: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
