"""Command line front end: ``mws construct | verify | bounds | spectrum``.

Every command prints a few human-readable lines followed by one JSON object
on the final line.  Exit codes: 0 ok, 2 parse/usage error, 3 infeasible
(too large to enumerate or materialize, unsupported parameters), 4 a
verification failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import bounds as bd
from . import code as cd
from . import construct as cs
from . import io as mio
from . import pg
from .errors import (
    MWSError,
    NotMWS,
    NotPrimePower,
    ParseError,
    TooLargeToEnumerate,
    TooLongToMaterialize,
    UnsupportedQ,
    VerificationFailed,
)
from .gf import prime_power

EXIT_OK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_FAILED = 0, 2, 3, 4
METHODS = ("geometric", "k2", "fano", "pg23", "triangle", "lift", "algebraic")


class UsageError(Exception):
    pass


def _emit(lines: list[str], report: dict, out=None) -> None:
    out = out or sys.stdout
    for ln in lines:
        print(ln, file=out)
    print(json.dumps(report, default=str, sort_keys=True), file=out)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for this method")


def _build(args):
    m = args.method
    if m == "geometric":
        _need(args, "q", "k")
        return cs.geometric(args.q, args.k)
    if m == "k2":
        _need(args, "q")
        if args.k not in (None, 2):
            raise UsageError("--method k2 only builds k=2 codes")
        return cs.optimal_k2(args.q)
    if m == "fano":
        return cs.fano_732()
    if m == "pg23":
        return cs.plane_3233()
    if m == "triangle":
        _need(args, "q")
        return cs.triangle_3d(args.q)
    if m == "lift":
        if args.inp:
            base = mio.read_any(args.inp)
            if isinstance(base, cd.LinearCode):
                base = cd.system_from_code(base)
            return cs.lift(base, args.t)
        _need(args, "q", "k")
        return cs.projective_chain(args.q, args.k)[-1]
    if m == "algebraic":
        _need(args, "q", "k")
        return cs.algebraic(args.q, args.k)[-1].code
    raise UsageError(f"unknown method {m}")


def cmd_construct(args) -> int:
    obj = _build(args)
    fmt = args.format or ("matrix" if isinstance(obj, cd.LinearCode) else "system")
    if isinstance(obj, cd.LinearCode):
        C, system = obj, None
        mws = cd.is_mws(C)
        q, k, n = C.q, C.k, C.n
        if fmt == "system":
            system = cd.system_from_code(C)
    else:
        system, C = obj, None
        mws = cd.mws_via_characters(system).mws
        q, k, n = system.q, system.k, system.n
        if fmt == "matrix":
            C = cd.code_from_system(system)
    text = mio.format_matrix(C) if fmt == "matrix" else mio.format_system(system)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    lines = [] if args.out else [text.rstrip("\n")]
    lines.append(f"method: {args.method}  q={q} k={k} n={n}")
    lines.append(f"MWS: {str(mws).lower()}, n={n}")
    _emit(lines, {"command": "construct", "method": args.method, "q": q, "k": k,
                  "n": str(n), "format": fmt, "mws": mws, "out": args.out})
    return EXIT_OK if mws else EXIT_FAILED


def _codeword_engine_ok(n: int, q: int, k: int) -> bool:
    return n <= cd.MAX_LENGTH and pg.theta(q, k - 1) * n <= 10**9


def cmd_verify(args) -> int:
    if not args.inp:
        raise UsageError("verify needs --in")
    obj = mio.read_any(args.inp)
    if isinstance(obj, cd.LinearCode):
        C = obj
        try:
            system = cd.system_from_code(C)
        except MWSError:
            system = None
    else:
        system, C = obj, None
    q, k = (C or system).q, (C or system).k
    n = C.n if C is not None else system.n
    th = pg.theta(q, k - 1)

    mode = args.mode
    can_chars = system is not None
    can_words = C is not None or _codeword_engine_ok(n, q, k)
    if mode is None:
        mode = "both" if can_chars and can_words else ("characters" if can_chars else "codewords")
    if mode in ("characters", "both") and not can_chars:
        raise TooLargeToEnumerate("character engine needs a non-degenerate code")
    if mode in ("codewords", "both") and not can_words:
        raise TooLongToMaterialize(f"n={n} is too long for codeword enumeration")

    report: dict = {"command": "verify", "q": q, "k": k, "n": str(n), "theta": th, "mode": mode}
    lines = [f"[{n},{k}]_{q}  theta_q(k-1)={th}  mode={mode}"]
    verdicts = []
    if mode in ("characters", "both"):
        chars = cd.mws_via_characters(system)
        report["characters_distinct"] = len(set(chars.characters))
        report["mws_characters"] = chars.mws
        verdicts.append(chars.mws)
        lines.append(f"characters: {len(set(chars.characters))}/{th} distinct")
    if mode in ("codewords", "both"):
        if C is None:
            C = cd.code_from_system(system)
        ws = cd.weight_set(C)
        report["weights_distinct"] = len(ws)
        report["mws_codewords"] = len(ws) == th
        verdicts.append(len(ws) == th)
        lines.append(f"weights: {len(ws)}/{th} distinct")
        if mode == "both":
            agree = sorted(set(chars.weights)) == ws
            report["engines_agree"] = agree
            verdicts.append(agree)
            lines.append(f"engines agree: {str(agree).lower()}")
        if q**k <= cd.MAX_CODEWORDS:
            pa, pb = cd.property_A(C), cd.property_B(C)
            report["property_A"], report["property_B"] = pa, pb
            lines.append(f"property (A): {str(pa).lower()}  property (B): {str(pb).lower()}")
    mws = all(verdicts)
    report["mws"] = mws
    if k >= 2:
        lb = bd.lower_bound(q, k)
        report["lower_bound"] = lb
        report["meets_lower_bound"] = n >= lb
        lines.append(f"length bound: n={n} >= {lb}: {str(n >= lb).lower()}")
        if report.get("property_A"):
            lbA = bd.lower_bound(q, k + 1)
            report["propA_check"] = 2 * n + 1 >= lbA
            lines.append(f"(A) bound: 2n+1={2 * n + 1} >= {lbA}: {str(2 * n + 1 >= lbA).lower()}")
    lines.append(f"MWS: {str(mws).lower()}")
    _emit(lines, report)
    return EXIT_OK if mws else EXIT_FAILED


def cmd_bounds(args) -> int:
    _need(args, "q", "k")
    rep = bd.bounds_report(args.q, args.k)
    data = rep.as_dict()
    lines = [f"{key}: {val}" for key, val in data.items()]
    # JSON consumers lose precision past 2^53
    _emit(lines, {"command": "bounds", **{key: (str(v) if isinstance(v, int) and v >= 2**53 else v)
                                          for key, v in data.items()}})
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if not args.inp:
        raise UsageError("spectrum needs --in")
    obj = mio.read_any(args.inp)
    C = obj if isinstance(obj, cd.LinearCode) else cd.code_from_system(obj)
    A = cd.weight_distribution(C)
    nonzero = {i: a for i, a in enumerate(A) if a and i}
    divisible = all(a % (C.q - 1) == 0 for a in nonzero.values())
    total_ok = sum(nonzero.values()) == C.q**C.k - 1
    lines = [f"A_{i} = {a}" for i, a in nonzero.items()]
    lines.append(f"support size: {len(nonzero)}/{pg.theta(C.q, C.k - 1)}")
    lines.append(f"all A_i divisible by q-1: {str(divisible).lower()}")
    lines.append(f"sum A_i = q^k - 1: {str(total_ok).lower()}")
    _emit(lines, {"command": "spectrum", "q": C.q, "k": C.k, "n": C.n,
                  "spectrum": {str(i): a for i, a in nonzero.items()},
                  "divisible_by_q_minus_1": divisible, "sum_ok": total_ok})
    return EXIT_OK if divisible and total_ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mws", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--in", dest="inp")
    common.add_argument("--out")
    common.add_argument("--seed", type=int, help="reserved; every algorithm is deterministic")
    common.add_argument("--verbose", "-v", action="store_true")

    p = sub.add_parser("construct", parents=[common])
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--format", choices=("matrix", "system"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--mode", choices=("codewords", "characters", "both"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common])
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("spectrum", parents=[common])
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.q is not None:
            prime_power(args.q)
        return args.func(args)
    except (ParseError, UsageError, NotPrimePower, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (VerificationFailed, NotMWS) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (TooLargeToEnumerate, TooLongToMaterialize, UnsupportedQ, MWSError, ValueError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
