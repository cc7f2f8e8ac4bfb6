"""Command-line interface.

Verbs: compute (solve graph6 input), assess (evaluate one vertex set),
formula (closed-form lookups), construct (emit witness graphs), oracle
(brute-force tables), verify (formula vs oracle vs construction reports).

Exit codes: 0 success, 1 input/parse error, 2 capacity exceeded,
3 uncovered regime or domain error, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, TextIO

from . import constructions, formulas, oracle
from .graph import Graph, Graph6Error, from_graph6, mask_to_vertices, to_graph6
from .solver import SolverCapacityError, assess_set, solve

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAPACITY = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(args, record: dict, text: str, out: TextIO) -> None:
    if args.json:
        print(json.dumps(record), file=out)
    else:
        print(text, file=out)


def _read_graphs(paths: list[str]) -> Iterator[tuple[str, Graph | Graph6Error]]:
    """Parsed graphs; malformed lines yield the error so callers can continue."""

    def lines(fh: TextIO, name: str):
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield line, from_graph6(line)
            except Graph6Error as exc:
                exc.location = f"{name}:{lineno}"
                yield line, exc

    if not paths or paths == ["-"]:
        yield from lines(sys.stdin, "<stdin>")
        return
    for path in paths:
        try:
            with open(path, "r", encoding="ascii") as fh:
                yield from lines(fh, path)
        except OSError as exc:
            raise _Exit(EXIT_INPUT, str(exc)) from exc


# ---------------------------------------------------------------------------
# verbs


def _cmd_compute(args, out: TextIO) -> int:
    failed = False
    for line, g in _read_graphs(args.files):
        if isinstance(g, Graph6Error):
            print(f"crdom: {g.location}: {g}", file=sys.stderr)
            failed = True
            continue
        try:
            profile = solve(g)
        except SolverCapacityError as exc:
            raise _Exit(EXIT_CAPACITY, str(exc)) from exc
        witness = mask_to_vertices(profile.witness)
        record = {
            "graph6": line,
            "n": g.n,
            "m": g.edge_count(),
            "cr": profile.cr,
            "gamma": profile.gamma_cr,
            "witness": witness,
            "gamma_set_count": profile.gamma_set_count,
        }
        text = (
            f"{line} n={g.n} m={g.edge_count()} cr={profile.cr} "
            f"gamma={profile.gamma_cr} witness={{{','.join(map(str, witness))}}} "
            f"gamma_set_count={profile.gamma_set_count}"
        )
        _emit(args, record, text, out)
    return EXIT_INPUT if failed else EXIT_OK


def _cmd_assess(args, out: TextIO) -> int:
    vset = 0
    for v in args.set:
        vset |= 1 << v
    failed = False
    for line, g in _read_graphs(args.files):
        if isinstance(g, Graph6Error):
            print(f"crdom: {g.location}: {g}", file=sys.stderr)
            failed = True
            continue
        try:
            verdict = assess_set(g, vset)
        except ValueError as exc:
            raise _Exit(EXIT_DOMAIN, str(exc)) from exc
        record = {
            "graph6": line,
            "n": g.n,
            "set": sorted(args.set),
            "dominating": verdict.dominating,
            "cr_of_set": verdict.cr_of_set,
            "influence": verdict.influence,
            "overdominated": mask_to_vertices(verdict.overdominated),
            "minimal": verdict.minimal,
        }
        text = (
            f"{line} set={{{','.join(map(str, sorted(args.set)))}}} "
            f"dominating={verdict.dominating} cr_of_set={verdict.cr_of_set} "
            f"influence={verdict.influence} minimal={verdict.minimal}"
        )
        _emit(args, record, text, out)
    return EXIT_INPUT if failed else EXIT_OK


_QUANTITIES = {
    "M": (formulas.max_edges, constructions.build_max_edges_witness, "r"),
    "m": (formulas.min_edges, constructions.build_min_edges_witness, "r"),
    "D": (formulas.max_gamma, constructions.build_max_gamma_witness, "m"),
    "d": (formulas.min_gamma, constructions.build_min_gamma_witness, "m"),
}


def _third_parameter(parser, args) -> int:
    _, _, pname = _QUANTITIES[args.quantity]
    if pname == "r":
        if args.r is None:
            parser.error(f"--quantity {args.quantity} requires --r")
        if args.m_edges is not None:
            parser.error(f"--quantity {args.quantity} takes --r, not --m-edges")
        return args.r
    if args.m_edges is None:
        parser.error(f"--quantity {args.quantity} requires --m-edges")
    if args.r is not None:
        parser.error(f"--quantity {args.quantity} takes --m-edges, not --r")
    return args.m_edges


def _cmd_formula(args, out: TextIO, parser) -> int:
    fn, _, pname = _QUANTITIES[args.quantity]
    x = _third_parameter(parser, args)
    try:
        value = fn(args.n, args.k, x)
    except ValueError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from exc
    record = {
        "quantity": args.quantity,
        "n": args.n,
        "cr": args.k,
        pname: x,
        "status": value.status.value,
        "value": value.value,
    }
    text = (
        f"{args.quantity}({args.n},{args.k},{x}) = "
        f"{value.value if value.value is not None else '-'} [{value.status.value}]"
    )
    _emit(args, record, text, out)
    return EXIT_OK


def _cmd_construct(args, out: TextIO, parser) -> int:
    try:
        if args.name is not None:
            claim = constructions.build_named(args.name, args.n)
        else:
            if args.quantity is None:
                parser.error("construct requires --quantity or --name")
            _, builder, _ = _QUANTITIES[args.quantity]
            x = _third_parameter(parser, args)
            if args.k is None:
                parser.error("construct requires --k")
            claim = builder(args.n, args.k, x)
    except constructions.ConstructionUnavailableError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from exc
    except ValueError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from exc
    g6 = to_graph6(claim.graph)
    record = {
        "graph6": g6,
        "n": claim.graph.n,
        "m": claim.graph.edge_count(),
        "cr": claim.claimed_cr,
        "gamma": claim.claimed_gamma,
        "theorem": claim.theorem_id,
    }
    checked = None
    if args.check:
        try:
            profile = solve(claim.graph)
        except SolverCapacityError as exc:
            raise _Exit(EXIT_CAPACITY, str(exc)) from exc
        checked = (
            claim.graph.edge_count() == claim.claimed_edges
            and profile.cr == claim.claimed_cr
            and profile.gamma_cr == claim.claimed_gamma
        )
        record["agree"] = checked
        record["solved_cr"] = profile.cr
        record["solved_gamma"] = profile.gamma_cr
    text = (
        f"{g6} n={record['n']} m={record['m']} cr={claim.claimed_cr} "
        f"gamma={claim.claimed_gamma} theorem={claim.theorem_id}"
    )
    if checked is not None:
        text += f" check={'ok' if checked else 'MISMATCH'}"
    _emit(args, record, text, out)
    return EXIT_MISMATCH if checked is False else EXIT_OK


def _cmd_oracle(args, out: TextIO, parser) -> int:
    try:
        if args.m_edges is None:
            table = oracle.brute_table(args.n, workers=args.workers, full_n8=args.full_n8)
        else:
            table = oracle.brute_table_slice(args.n, args.m_edges, workers=args.workers)
    except oracle.OracleCapacityError as exc:
        raise _Exit(EXIT_CAPACITY, str(exc)) from exc
    except ValueError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from exc
    if args.json:
        for rec in table.to_records():
            print(json.dumps(rec), file=out)
    else:
        for line in table.to_lines():
            print(line, file=out)
    return EXIT_OK


def _cmd_verify(args, out: TextIO, parser) -> int:
    if args.n_max < args.n_min:
        parser.error("--n-max must be at least --n-min")
    try:
        report = oracle.verify_theorem(
            args.theorem,
            range(args.n_min, args.n_max + 1),
            mode=args.mode,
            workers=args.workers,
            full_n8=args.full_n8,
            m_values=args.m_edges if args.m_edges else None,
        )
    except oracle.OracleCapacityError as exc:
        raise _Exit(EXIT_CAPACITY, str(exc)) from exc
    except ValueError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from exc
    if args.json:
        for c in report.cells:
            print(
                json.dumps(
                    {
                        "theorem": report.theorem_id,
                        "cell": c.cell,
                        "formula": c.formula,
                        "oracle": c.oracle,
                        "construction": c.construction,
                        "agree": c.agree,
                    }
                ),
                file=out,
            )
        for g6 in report.counterexamples:
            print(json.dumps({"theorem": report.theorem_id, "counterexample": g6}), file=out)
        print(json.dumps({"theorem": report.theorem_id, "passed": report.passed}), file=out)
    else:
        for line in report.to_lines():
            print(line, file=out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crdom", description="Exact cardinality-redundance computations."
    )
    parser.add_argument("--json", action="store_true", help="line-delimited JSON output")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="solve graph6 input (files or stdin)")
    p.add_argument("files", nargs="*", help="graph6 files; '-' or none for stdin")
    p.set_defaults(fn=_cmd_compute, with_parser=False)

    p = sub.add_parser("assess", help="evaluate one vertex set on graph6 input")
    p.add_argument("--set", type=int, nargs="+", required=True, help="vertex labels")
    p.add_argument("files", nargs="*", help="graph6 files; '-' or none for stdin")
    p.set_defaults(fn=_cmd_assess, with_parser=False)

    def quantity_flags(p):
        p.add_argument("--quantity", choices=sorted(_QUANTITIES))
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, help="CR value")
        p.add_argument("--r", type=int, help="gamma_CR (quantities M, m)")
        p.add_argument("--m-edges", type=int, help="edge count (quantities D, d)")

    p = sub.add_parser("formula", help="closed-form extremal values")
    quantity_flags(p)
    p.set_defaults(fn=_cmd_formula, with_parser=True)

    p = sub.add_parser("construct", help="emit a witness graph as graph6")
    quantity_flags(p)
    p.add_argument("--name", choices=["G1", "G2", "FourCycle", "CocktailParty"],
                   help="named graph instead of an extremal witness")
    p.add_argument("--check", action="store_true", help="re-solve and verify the claim")
    p.set_defaults(fn=_cmd_construct, with_parser=True)

    p = sub.add_parser("oracle", help="brute-force extremal table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-edges", type=int, default=None, help="restrict to graphs of this size")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--full-n8", action="store_true", help="allow the full n=8 sweep")
    p.set_defaults(fn=_cmd_oracle, with_parser=True)

    p = sub.add_parser("verify", help="check a theorem against oracle and constructions")
    p.add_argument("--theorem", choices=oracle.KNOWN_THEOREMS, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--mode",
        choices=["formula-vs-oracle", "construction-vs-solver", "both"],
        default="both",
    )
    p.add_argument("--m-edges", type=int, nargs="*", default=None, help="edge-count slices")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--full-n8", action="store_true")
    p.set_defaults(fn=_cmd_verify, with_parser=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.verb == "formula":
        if args.quantity is None:
            parser.error("formula requires --quantity")
        if args.k is None:
            parser.error("formula requires --k")
    try:
        if args.with_parser:
            return args.fn(args, sys.stdout, parser)
        return args.fn(args, sys.stdout)
    except _Exit as exc:
        print(f"crdom: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
