"""Command-line front door: parse inputs, dispatch to solvers, emit text or JSON.

Exit codes: 0 solved (or timed out with a usable triple), 1 the problem's
error output, 2 usage or I/O problems, 3 timeout without a solution.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import solver
from .cnf import PartialAssignment
from .formula import Formula, FormulaSyntaxError, Vocabulary, parse_formula
from .problem import ProblemInstance, Solution, SolveOptions
from .trees import TreeModel, TreeSchemaError, booleanize, class_formula, classify, load_instance, load_tree

__all__ = ["main", "run", "format_text"]

_SOLVE_KINDS = ("ce", "gce", "sep", "cce", "cd")


class _UsageError(Exception):
    pass


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--shape", choices=("cnf", "terms"), default="cnf")
    sub.add_argument("--strategy", choices=("auto", "exhaustive", "cegar"), default="auto")
    sub.add_argument("--max-total", type=int, default=None)
    sub.add_argument("--timeout", type=float, default=None, metavar="SECS")
    sub.add_argument("--repair", action="store_true")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--format", choices=("text", "json"), default="text")


def _add_formula_inputs(sub: argparse.ArgumentParser, *, s: bool, s_prime: bool) -> None:
    sub.add_argument("--phi", help="fact formula, inline")
    sub.add_argument("--phi-file", type=Path, help="fact formula from a file")
    sub.add_argument("--psi", help="foil formula, inline")
    sub.add_argument("--psi-file", type=Path, help="foil formula from a file")
    if s:
        sub.add_argument("--s", action="append", default=[], help="member of S (repeatable)")
        sub.add_argument("--s-file", type=Path, help="newline-separated formulas for S")
    if s_prime:
        sub.add_argument("--s-prime", action="append", default=[], help="member of S' (repeatable)")
        sub.add_argument("--s-prime-file", type=Path, help="newline-separated formulas for S'")
    sub.add_argument("--tree", type=Path, help="decision tree JSON (alternative input mode)")
    sub.add_argument("--instance", type=Path, help="instance JSON for tree mode")
    sub.add_argument("--class-a", help="fact class for tree mode")
    sub.add_argument("--class-b", help="foil class for tree mode")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contrastix",
        description="Size-minimal contrastive explanations for propositional inputs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "ce": "contrastive explanation for two instances S and S'",
        "gce": "global contrast between two formulas",
        "sep": "minimal separator of phi from psi",
        "cce": "counterfactual contrastive explanation for one instance S",
        "cd": "counterfactual difference for one instance S",
    }
    for kind in _SOLVE_KINDS:
        sub = subs.add_parser(kind, help=descriptions[kind])
        _add_formula_inputs(sub, s=kind in ("ce", "cce", "cd"), s_prime=kind == "ce")
        _add_common_flags(sub)
    pipe = subs.add_parser("pipeline", help="decision-tree case study: GCE, CCE and CD in one run")
    pipe.add_argument("--tree", type=Path, required=True)
    pipe.add_argument("--instance", type=Path, required=True)
    pipe.add_argument("--class-a", required=True)
    pipe.add_argument("--class-b", required=True)
    _add_common_flags(pipe)
    pipe.set_defaults(shape="terms")
    ver = subs.add_parser("verify", help="re-check an emitted solution against its instance")
    _add_formula_inputs(ver, s=True, s_prime=True)
    ver.add_argument("--kind", choices=_SOLVE_KINDS, required=True)
    ver.add_argument("--solution", type=Path, required=True)
    _add_common_flags(ver)
    return parser


def _read_text(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _resolve_formula(name: str, inline: str | None, path: Path | None, vocab: Vocabulary) -> Formula:
    if inline is not None and path is not None:
        raise _UsageError(f"--{name} and --{name}-file are mutually exclusive")
    if inline is None and path is None:
        raise _UsageError(f"missing --{name} (or --{name}-file)")
    text = inline if inline is not None else _read_text(path)
    try:
        return parse_formula(text, vocab)
    except FormulaSyntaxError as exc:
        raise _UsageError(f"bad --{name} formula: {exc}") from exc


def _resolve_set(name: str, inline: list[str], path: Path | None, vocab: Vocabulary) -> list[Formula]:
    texts = list(inline)
    if path is not None:
        texts.extend(line for line in _read_text(path).splitlines() if line.strip())
    if not texts:
        raise _UsageError(f"missing --{name} formulas (repeat --{name} or use --{name}-file)")
    try:
        return [parse_formula(t, vocab) for t in texts]
    except FormulaSyntaxError as exc:
        raise _UsageError(f"bad --{name} formula: {exc}") from exc


def _tree_mode_inputs(args) -> tuple[TreeModel, PartialAssignment, Formula, Formula, str | None]:
    if args.instance is None or args.class_a is None or args.class_b is None:
        raise _UsageError("tree mode needs --tree, --instance, --class-a and --class-b")
    try:
        model = load_tree(_read_text(args.tree))
        features, label = load_instance(_read_text(args.instance))
        instance = booleanize(model, features)
    except (TreeSchemaError, KeyError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc
    try:
        phi = class_formula(model, args.class_a)
        psi = class_formula(model, args.class_b)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    return model, instance, phi, psi, label


def _build_instance(kind: str, args, vocab: Vocabulary) -> ProblemInstance:
    if args.tree is not None:
        _, instance, phi, psi, _ = _tree_mode_inputs(args)
        s = [lit.to_formula() for lit in instance.literals()]
        if kind in ("cce", "cd"):
            return ProblemInstance(kind, phi, psi, tuple(s))
        if kind in ("gce", "sep"):
            return ProblemInstance(kind, phi, psi)
        raise _UsageError("tree mode supports gce, sep, cce, cd and pipeline")
    phi = _resolve_formula("phi", args.phi, args.phi_file, vocab)
    psi = _resolve_formula("psi", args.psi, args.psi_file, vocab)
    s = s_prime = None
    if kind in ("ce", "cce", "cd"):
        s = tuple(_resolve_set("s", args.s, args.s_file, vocab))
    if kind == "ce":
        s_prime = tuple(_resolve_set("s-prime", args.s_prime, args.s_prime_file, vocab))
    return ProblemInstance(kind, phi, psi, s, s_prime)


def _options(args) -> SolveOptions:
    seed = int(os.environ.get("CONTRASTIX_SEED", "0"))
    return SolveOptions(
        shape=args.shape,
        max_total=args.max_total,
        strategy=args.strategy,
        deadline=args.timeout,
        repair=args.repair,
        jobs=args.jobs,
        seed=seed,
    )


def format_text(sol: Solution) -> str:
    """Human-readable rendering of a solution."""
    if sol.status == "error":
        lines = ["no contrastive explanation exists"]
        if sol.reason:
            lines.append(f"reason: {sol.reason}")
        return "\n".join(lines)
    if not sol.has_triple:
        return "no solution found" + (f" ({sol.reason})" if sol.reason else "")
    theta, theta_prime, chi = sol.triple
    lines = []
    if theta_prime.is_top and chi.is_top and not sol.status == "error":
        lines.append(f"separator: {theta}")
    else:
        share = "" if chi.is_top else f" (and {chi})"
        share2 = "" if chi.is_top else f" (with {chi})"
        lines.append(f"Because {theta}{share}, it holds that phi and not psi.")
        lines.append(f"Had {theta_prime}{share2} held instead, psi and not phi would hold.")
    qualifier = "optimal" if sol.optimal else "best found before timeout"
    lines.append(f"total size {sol.total_size}, shared chi size {sol.chi_size} ({qualifier})")
    return "\n".join(lines)


def _exit_code(sol: Solution) -> int:
    if sol.status == "ok":
        return 0
    if sol.status == "error":
        return 1
    return 0 if sol.has_triple else 3


def _emit(sol: Solution, fmt: str, out) -> None:
    if fmt == "json":
        print(sol.to_json(), file=out)
    else:
        print(format_text(sol), file=out)


def _run_solve(kind: str, args) -> int:
    vocab = Vocabulary()
    inst = _build_instance(kind, args, vocab)
    sol = solver.solve(inst, _options(args))
    if sol.reason and sol.status != "ok":
        print(f"contrastix: {sol.reason}", file=sys.stderr)
    _emit(sol, args.format, sys.stdout)
    return _exit_code(sol)


def _run_pipeline(args) -> int:
    model, instance, phi, psi, label = _tree_mode_inputs(args)
    predicted = classify(model, instance)
    s = tuple(lit.to_formula() for lit in instance.literals())
    opts = _options(args)
    cnf_opts = SolveOptions(
        shape="cnf", max_total=opts.max_total, strategy=opts.strategy,
        deadline=opts.deadline, repair=True, jobs=opts.jobs, seed=opts.seed,
    )
    term_opts = SolveOptions(
        shape=args.shape, max_total=opts.max_total, strategy=opts.strategy,
        deadline=opts.deadline, repair=True, jobs=opts.jobs, seed=opts.seed,
    )
    results = {
        "gce": solver.solve(ProblemInstance.gce(phi, psi), cnf_opts),
        "cce": solver.solve(ProblemInstance.cce(s, phi, psi), term_opts),
        "cd": solver.solve(ProblemInstance.cd(s, phi, psi), term_opts),
    }
    if args.format == "json":
        payload = {
            "class_a": args.class_a,
            "class_b": args.class_b,
            "label": label,
            "predicted": predicted,
            "instance": str(instance.to_term()),
            "solutions": {name: sol.to_json_dict() for name, sol in results.items()},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"case study: {args.class_a} (fact) vs {args.class_b} (foil)")
        print(f"instance: {instance.to_term()}  [label: {label}, predicted: {predicted}]")
        for name, sol in results.items():
            if sol.has_triple:
                theta, theta_prime, chi = sol.triple
                print(f"{name.upper():4} theta: {theta} | theta': {theta_prime} | chi: {chi} "
                      f"(total {sol.total_size})")
            else:
                print(f"{name.upper():4} {sol.status}: {sol.reason or 'no output'}")
    codes = [_exit_code(sol) for sol in results.values()]
    return max(codes) if codes else 0


def _run_verify(args) -> int:
    vocab = Vocabulary()
    inst = _build_instance(args.kind, args, vocab)
    try:
        sol = Solution.from_json(_read_text(args.solution), vocab)
    except (json.JSONDecodeError, KeyError, FormulaSyntaxError) as exc:
        raise _UsageError(f"bad solution file: {exc}") from exc
    report = solver.verify_solution(inst, sol)
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.all_ok else 1


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in _SOLVE_KINDS:
            return _run_solve(args.command, args)
        if args.command == "pipeline":
            return _run_pipeline(args)
        return _run_verify(args)
    except _UsageError as exc:
        print(f"contrastix: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
