"""Command-line surface: catalog, decompose, closure, classify, rank, verify.

All input and output is JSON.  Exit codes: 0 success, 1 check or
precondition failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .catalog import (ambient, catalog, g_algebra, is_g_stable, is_highest_weight)
from .classify import ClassLabel, classify
from .closure import assoc_closure, lie_closure
from .corollaries import rank_floor_check
from .errors import ClassificationError
from .operators import op_rank, op_to_vec_row
from .scalars import format_scalar, parse_scalar
from .serialize import (generators_from_json, operator_from_json,
                        subspace_basis_to_json)
from .subspaces import Subspace
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(obj, out=None):
    text = json.dumps(obj, indent=2)
    (out or sys.stdout).write(text + "\n")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as ex:
        raise SystemExit_with(EXIT_INPUT, f"cannot read {path}: {ex}")


class SystemExit_with(SystemExit):
    def __init__(self, code, message):
        print(json.dumps({"error": message}), file=sys.stderr)
        super().__init__(code)


def cmd_catalog(args) -> int:
    name, n = args.name, args.n
    try:
        mod = g_algebra(n) if name == "g" else catalog(name, n)
    except KeyError as ex:
        raise SystemExit_with(EXIT_INPUT, str(ex))
    hw_ok = mod.hwv is not None and is_highest_weight(mod.hwv, n)
    stable = is_g_stable(mod.space, n)
    out = {
        "name": name,
        "n": n,
        "dim": mod.dim,
        "expected_dim": mod.expected_dim,
        "hwv_check": hw_ok,
        "g_stable": stable,
        "certified": mod.table_certified,
    }
    if args.emit_basis:
        out["basis"] = subspace_basis_to_json(mod.space)
    _emit(out)
    ok = mod.dim == mod.expected_dim and hw_ok and stable
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    report = verify_mod.run_facts(args.n)
    chain = [c for c in report["checks"]
             if c["name"].endswith("chain") or c["name"] in ("sl_direct_sum", "v4_v4p")]
    out = {"n": args.n, "checks": chain,
           "passed": all(c["status"] == "pass" for c in chain)}
    _emit(out)
    return EXIT_OK if out["passed"] else EXIT_FAIL


def cmd_closure(args) -> int:
    gens_json = _load_json(args.gens)
    try:
        gens = generators_from_json(gens_json, args.n)
    except (ValueError, KeyError) as ex:
        raise SystemExit_with(EXIT_INPUT, str(ex))
    run = lie_closure if args.kind == "lie" else assoc_closure
    rep = run(gens, args.n)
    out = {"kind": args.kind, "n": args.n, "dim": rep.closure.dim,
           "rounds": rep.rounds, "products_computed": rep.products_computed}
    if args.emit_basis:
        out["basis"] = subspace_basis_to_json(rep.closure)
    _emit(out)
    return EXIT_OK


def _label_to_json(label: ClassLabel, dim: int) -> dict:
    out = {"kind": label.kind}
    if label.lam is not None:
        out["lambda"] = format_scalar(label.lam)
    if label.t_ratio is not None:
        out["t_ratio"] = format_scalar(label.t_ratio)
    if label.ft is not None:
        out["ft"] = [format_scalar(label.ft[0]), format_scalar(label.ft[1])]
    out["dim"] = dim
    out["certified"] = True
    out["describes"] = label.describe()
    return out


def cmd_classify(args) -> int:
    gens_json = _load_json(args.gens)
    try:
        gens = generators_from_json(gens_json, args.n)
    except (ValueError, KeyError) as ex:
        raise SystemExit_with(EXIT_INPUT, str(ex))
    span = Subspace.from_rows([op_to_vec_row(g) for g in gens], args.n ** 4)
    try:
        label = classify(span, args.n)
    except ClassificationError as ex:
        print(json.dumps({"error": type(ex).__name__, "message": str(ex)}),
              file=sys.stderr)
        return EXIT_FAIL
    _emit(_label_to_json(label, span.dim))
    return EXIT_OK


def cmd_rank(args) -> int:
    if args.ops:
        ops_json = _load_json(args.ops)
        try:
            ops = generators_from_json(ops_json, args.n)
        except (ValueError, KeyError) as ex:
            raise SystemExit_with(EXIT_INPUT, str(ex))
        _emit({"n": args.n, "ranks": [op_rank(t) for t in ops]})
        return EXIT_OK
    if args.wlambda is None:
        raise SystemExit_with(EXIT_INPUT, "rank needs either --ops or --wlambda")
    try:
        lam = parse_scalar(args.wlambda)
    except ValueError as ex:
        raise SystemExit_with(EXIT_INPUT, str(ex))
    rep = rank_floor_check(lam, args.n, samples=args.samples, seed=args.seed)
    _emit({"n": args.n, "lambda": format_scalar(rep.lam), "samples": rep.samples,
           "seed": rep.seed, "rank_floor": rep.floor,
           "min_rank_seen": rep.min_rank_seen,
           "two_term_max_rank": rep.two_term_max_rank, "passed": rep.passed})
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, n=args.n, slow=args.slow, seed=args.seed)
    except ValueError as ex:
        raise SystemExit_with(EXIT_INPUT, str(ex))
    _emit(report)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="innerlie",
        description="Exact computations with operator algebras on M_n that "
                    "contain every inner derivation.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="build a named module and report its data")
    p.add_argument("name")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--emit-basis", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("decompose", help="check the decomposition identities")
    p.add_argument("--n", type=int, default=5)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("closure", help="smallest closed subspace containing generators")
    p.add_argument("--kind", choices=("lie", "assoc"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True, help="JSON generator file")
    p.add_argument("--emit-basis", action="store_true")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("classify", help="identify a Lie subalgebra containing g")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True, help="JSON generator file (a basis)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("rank", help="operator ranks / rank-floor sampling")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--ops", help="JSON operator list")
    p.add_argument("--wlambda", help="sample g + W(lambda) elements")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=verify_mod.SUITES + ("all",), default="all")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit_with as ex:
        return ex.code


if __name__ == "__main__":
    sys.exit(main())
