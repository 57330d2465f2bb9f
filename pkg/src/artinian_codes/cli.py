"""Command-line front end: read a code document, print a JSON report.

Exit codes: 0 success, 1 usage or parse error, 2 budget exceeded,
3 a verification run found a failing verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codes, enumerators as en, suite
from .docformat import format_entry, parse_document
from .errors import ArtinianCodesError, BudgetExceeded, ParseError, ZeroCode
from .modules import free_rank, is_free, length, type_of
from .polynomials import ueval
from .rings import (
    ChainRing,
    MonomialAlgebraDesc,
    ring_invariants,
)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3
SAFE_INT = 2**53


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def jsonable(obj):
    """Recursively convert to JSON-ready values; huge ints become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return jsonable(obj.item())
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def _gens_json(C) -> list[list[str]]:
    R = C.ring
    fmt = format_entry if isinstance(R, ChainRing) or isinstance(R.descriptor, MonomialAlgebraDesc) else None
    return [[fmt(R, a) if fmt else R.format_element(a) for a in v] for v in C.generators()]


# ------------------------------------------------------------------ commands


def cmd_invariants(doc, args):
    rep = codes.code_report(doc.code(), args.max_codewords)
    return dict(rep.__dict__)


def cmd_dual(doc, args):
    D = codes.dual(doc.code())
    return {"n": D.n, "lambda": length(D), "generators": _gens_json(D)}


def cmd_distance(doc, args):
    C = doc.code()
    return {"min_distance": codes.min_distance(C, args.max_codewords), "socle_words": C.ring.q ** type_of(C)}


def cmd_enumerator(doc, args):
    C = doc.code()
    W = en.weight_polynomials(C, args.max_n_subsets)
    out = {
        "n": C.n,
        "lambda_C": W.lambda_C,
        "lambda_R": W.lambda_R,
        "g": W.g_json(),
        "length_enumerator": en.length_enumerator(C, args.max_n_subsets).to_json(),
    }
    if args.eval_z is not None:
        if args.eval_z == C.ring.q:
            out["evaluation"] = en.evaluate_weight_distribution(W, args.eval_z)
        else:
            out["evaluation"] = [ueval(g, args.eval_z) for g in W.g]
    return out


def cmd_macwilliams(doc, args):
    r = en.check_macwilliams(doc.code(), args.max_n_subsets)
    return {"holds": r.holds, "predicted_g": r.predicted_g, "actual_g": r.actual.g_json()}


def cmd_bounds(doc, args):
    C = doc.code()
    b = codes.classify_bounds(C, args.max_codewords)
    inv = ring_invariants(C.ring)
    return {
        "distance": b.distance,
        "is_mds": b.is_mds,
        "is_mdt": b.is_mdt,
        "mds_defect": str(b.mds_defect),
        "mdt_defect": str(b.mdt_defect),
        "length_ratio": f"{length(C)}/{inv.lambda_R}",
        "type_ratio": f"{type_of(C)}/{inv.type_R}",
    }


def cmd_idealize(doc, args):
    if not isinstance(doc.ring, MonomialAlgebraDesc):
        raise UsageError("idealize needs an algebra document")
    C = doc.code()
    CS = codes.lift_to_idealization(C)
    S = CS.ring
    inv = ring_invariants(S)
    DS = codes.dual(CS)
    return {
        "lambda_S": inv.lambda_R,
        "type_S": inv.type_R,
        "frobenius_S": inv.frobenius,
        "lambda_C_S": length(CS),
        "free_rank_S": free_rank(CS),
        "is_free_S": is_free(CS),
        "lambda_dual_S": length(DS),
        "dual_free_rank_S": free_rank(DS),
        "is_free_dual_S": is_free(DS),
    }


def _family_from(spec: str, ring, trials: int, seed: int) -> suite.InstanceFamily:
    mode, _, rng = spec.partition(":")
    if mode not in ("exhaustive", "random") or not rng:
        raise UsageError(f"bad --family {spec!r}; expected MODE:NMIN-NMAX")
    lo, _, hi = rng.partition("-")
    try:
        lo_i, hi_i = int(lo), int(hi or lo)
    except ValueError:
        raise UsageError(f"bad block-length range in {spec!r}") from None
    return suite.InstanceFamily(ring, mode, lo_i, hi_i, trials=trials, seed=seed)


def cmd_verify(doc, args):
    theorems = set(args.theorem) if args.theorem else None
    if theorems and not theorems <= set(suite.CHECKS_BY_ID):
        raise UsageError(f"unknown theorem ids: {sorted(theorems - set(suite.CHECKS_BY_ID))}")
    if doc is None:
        if args.family:
            raise UsageError("--family needs a document naming the ring")
        verdicts = suite.run_theorem_suite(suite.standard_families(), theorems)
    elif args.family:
        fam = _family_from(args.family, doc.ring, args.trials, args.seed)
        verdicts = suite.run_family(fam, theorems)
    else:
        C = doc.code()
        inst = suite.Instance(doc.ring, C.n, C.generators(), code=C)
        frob = ring_invariants(C.ring).frobenius
        verdicts = suite.run_checks([inst], frob, "document", theorems)
    report = [v.to_json() for v in verdicts]
    return report, (EXIT_OK if all(v.passed for v in verdicts) else EXIT_VERIFY)


COMMANDS = {
    "invariants": cmd_invariants,
    "dual": cmd_dual,
    "distance": cmd_distance,
    "enumerator": cmd_enumerator,
    "macwilliams": cmd_macwilliams,
    "bounds": cmd_bounds,
    "idealize": cmd_idealize,
    "verify": cmd_verify,
}


def _global_flags(parser, suppress: bool):
    # subcommands repeat the flags with suppressed defaults so that a value
    # given before the subcommand is not overwritten
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--max-codewords", type=int, default=d(codes.DEFAULT_MAX_CODEWORDS))
    parser.add_argument("--max-n-subsets", type=int, default=d(en.DEFAULT_MAX_N))
    parser.add_argument("--output", type=Path, default=d(None))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    p = _Parser(prog="artinian-codes", description=__doc__.splitlines()[0])
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "verify":
            sp.add_argument("document", nargs="?", type=Path)
            sp.add_argument("--family", default=None, help="MODE:NMIN-NMAX, MODE in exhaustive|random")
            sp.add_argument("--trials", type=int, default=200)
            sp.add_argument("--seed", type=int, default=1)
            sp.add_argument("--theorem", action="append", default=None)
        else:
            sp.add_argument("document", type=Path, help="code document ('-' reads stdin)")
        if name == "enumerator":
            sp.add_argument("--eval-z", type=int, default=None)
    return p


def _read(path: Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def main(argv=None) -> int:
    code = EXIT_OK
    try:
        args = build_parser().parse_args(argv)
        doc = parse_document(_read(args.document)) if args.document is not None else None
        result = COMMANDS[args.command](doc, args)
        if args.command == "verify":
            result, code = result
        text = dumps(result)
        if args.output is not None:
            args.output.write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return code
    except (UsageError, ParseError, ZeroCode) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ArtinianCodesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
