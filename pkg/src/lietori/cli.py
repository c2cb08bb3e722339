"""Command-line front end: every subcommand prints a JSON report.

Exit codes: 0 when the report passes, 1 when it fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import LieToriError, NotElementary
from .involutions import (
    ChevalleyInvolutionDescriptor,
    decide_chevalley_existence,
    extraction_round_trip,
    oracle_search_pre_chevalley,
    synthesize_chevalley,
    table_from_generators,
    verify_chevalley,
)
from .jsonio import InputError, dumps, load_json, quantum_matrix_from_json, quantum_matrix_to_json
from .octonion_torus import OctonionTorus
from .quantum_torus import QuantumTorus
from .report import CheckReport, exit_code
from .scalars import is_elementary, to_rational
from .verify import (
    verify_coordinate_recovery,
    verify_division,
    verify_root_grading,
    verify_torus_axioms,
)


def _load_q(path):
    return quantum_matrix_from_json(load_json(path))


def _emit(payload: dict) -> None:
    print(dumps(payload))


def cmd_check_matrix(args) -> int:
    data = load_json(args.matrix)
    report = CheckReport("check_matrix")
    try:
        q = quantum_matrix_from_json(data)
    except LieToriError as exc:
        report.add("constraints", False, {"q": data.get("q") if isinstance(data, dict) else None}, str(exc))
        _emit(report.to_json())
        return 1
    report.add("constraints", True)
    report.extra.update(n=q.n, elementary=is_elementary(q))
    _emit(report.to_json())
    return exit_code(report)


def cmd_decide(args) -> int:
    if args.octonion is not None:
        coords = OctonionTorus(args.octonion)
    elif args.matrix:
        coords = _load_q(args.matrix)
    else:
        raise InputError("decide needs a matrix file or --octonion N")
    d = decide_chevalley_existence(coords, args.ell)
    _emit({"suite": "decide", "pass": d.exists, **d.to_json()})
    return 0 if d.exists else 1


def cmd_synthesize(args) -> int:
    q = _load_q(args.matrix)
    report = CheckReport("synthesize")
    try:
        desc = synthesize_chevalley(args.ell, q)
    except NotElementary as exc:
        report.add("pre_chevalley_exists", False, quantum_matrix_to_json(q), str(exc))
        _emit(report.to_json())
        return 1
    report.add("pre_chevalley_exists", True)
    payload = desc.to_json(args.window)
    if args.output:
        Path(args.output).write_text(dumps(payload) + "\n")
        report.extra["output"] = args.output
    else:
        report.extra["involution"] = payload
    _emit(report.to_json())
    return exit_code(report)


def descriptor_from_json(data) -> ChevalleyInvolutionDescriptor:
    """Rebuild a Chevalley involution from its JSON; stored signs define ``bar``.

    Degrees missing from the stored table are filled by extending the stored
    generator values anti-multiplicatively.
    """
    try:
        ell = int(data["ell"])
        q = quantum_matrix_from_json(data["q"])
        table = data["anti_involution"]
        signs = {tuple(int(c) for c in t["deg"]): to_rational(t["sign"]) for t in table["signs"]}
        action = data.get("action", "neg_bar_transpose")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad involution JSON: {exc}") from None
    if action != "neg_bar_transpose":
        raise InputError(f"unknown action {action!r}")
    units = [tuple(int(i == k) for i in range(q.n)) for k in range(q.n)]
    if any(u not in signs for u in units):
        raise InputError("the stored table must contain every generator degree")
    tab = table_from_generators(q, [signs[u] for u in units], signs)
    return ChevalleyInvolutionDescriptor(ell, q, tab)


def cmd_verify_involution(args) -> int:
    desc = descriptor_from_json(load_json(args.involution))
    report = verify_chevalley(desc, desc.ell, desc.q, args.window)
    _emit(report.to_json())
    return exit_code(report)


def cmd_verify_axioms(args) -> int:
    reports = []
    suites = ["rg", "div", "torus"] if args.suite == "all" else [args.suite]
    q = None
    if args.matrix:
        q = _load_q(args.matrix)
    elif args.octonion is None or suites != ["torus"]:
        raise InputError("verify-axioms needs a matrix file (or --octonion N with --suite torus)")
    for s in suites:
        if s == "rg":
            reports.append(verify_root_grading(args.ell, q, args.window or 1, seed=args.seed))
        elif s == "div":
            reports.append(verify_division(args.ell, q, args.window or 2, workers=args.workers))
        else:
            torus = OctonionTorus(args.octonion) if args.octonion is not None else QuantumTorus(q)
            reports.append(verify_torus_axioms(torus, args.window or 2, seed=args.seed))
    _emit({"pass": all(r.passed for r in reports), "reports": [r.to_json() for r in reports]})
    return exit_code(reports)


def cmd_extract_coordinates(args) -> int:
    q = _load_q(args.matrix)
    reports = [verify_coordinate_recovery(args.ell, q, pairs=args.pairs, window=args.window, seed=args.seed)]
    if is_elementary(q):
        reports.append(extraction_round_trip(args.ell, q, args.window))
    _emit({"pass": all(r.passed for r in reports), "reports": [r.to_json() for r in reports]})
    return exit_code(reports)


def cmd_oracle(args) -> int:
    q = _load_q(args.matrix)
    result = oracle_search_pre_chevalley(q, args.window)
    decision = decide_chevalley_existence(q)
    report = CheckReport("oracle", window=args.window)
    report.add("solution_found", result.found,
               None if result.found else {"lam": list(result.violation[0]), "mu": list(result.violation[1])})
    report.extra.update(oracle=result.to_json(), agrees_with_decide=result.found == decision.exists)
    _emit(report.to_json())
    return exit_code(report)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lietori", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-matrix", help="validate a quantum matrix and report elementarity")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_check_matrix)

    s = sub.add_parser("decide", help="does the Lie torus admit a Chevalley involution?")
    s.add_argument("matrix", nargs="?")
    s.add_argument("--octonion", type=int, metavar="N", help="octonion N-torus coordinates")
    s.add_argument("--ell", type=int, default=None)
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("synthesize", help="build the Chevalley involution -(bar X)^T")
    s.add_argument("matrix")
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("-o", "--output")
    s.add_argument("--window", type=int, default=2, help="degrees stored in the sign table")
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("verify-involution", help="check the Chevalley involution axioms")
    s.add_argument("involution")
    s.add_argument("--window", type=int, default=2)
    s.set_defaults(func=cmd_verify_involution)

    s = sub.add_parser("verify-axioms", help="root-grading, division and torus suites")
    s.add_argument("matrix", nargs="?")
    s.add_argument("--octonion", type=int, metavar="N")
    s.add_argument("--ell", type=int, default=2)
    s.add_argument("--window", type=int, default=None,
                   help="degree window (default 1 for rg, 2 for div and torus)")
    s.add_argument("--suite", choices=["rg", "div", "torus", "all"], default="all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_verify_axioms)

    s = sub.add_parser("extract-coordinates", help="recover the coordinate algebra from brackets")
    s.add_argument("matrix")
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--window", type=int, default=2)
    s.add_argument("--pairs", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_extract_coordinates)

    s = sub.add_parser("oracle", help="brute-force search for a pre-Chevalley anti-involution")
    s.add_argument("matrix")
    s.add_argument("--window", type=int, default=2)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, LieToriError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
