"""Command-line front end.

Verbs: q (polynomial family), r and k (matrix elements and blocks),
verify (identity suites, including the golden regression set), export
(block tables), cache (persistence).  Exit codes: 0 success or
verification pass, 1 verification failure, 2 usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import cache as cachemod
from . import qfamily, tensorops, threedk, threedr
from ._golden import (
    GOLDEN_K_BLOCK,
    GOLDEN_K_OUT,
    GOLDEN_K_TEXT,
    GOLDEN_Q_TEXT,
    GOLDEN_QUOTIENTS,
)
from .exactq import DomainError, LaurentQ
from .report import VerificationReport

DEFAULT_SEED = 20260809


def _emit_report(rep: VerificationReport, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(rep.to_json()))
    else:
        print(rep.summary())
        for note in rep.notes:
            print(f"  note: {note}")
    return 0 if rep.passed else 1


def _emit_suite(reps: list[VerificationReport], fmt: str, label: str) -> int:
    passed = sum(1 for r in reps if r.passed)
    total = len(reps)
    if fmt == "json":
        print(
            json.dumps(
                {
                    "name": label,
                    "passed": passed == total,
                    "pass_count": passed,
                    "total": total,
                    "reports": [r.to_json() for r in reps if not r.passed],
                }
            )
        )
    else:
        print(f"{label}: {passed}/{total} pass")
        for r in reps:
            if not r.passed:
                print(f"  {r.summary()}")
    return 0 if passed == total else 1


def _emit_value(value, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(value.to_json()))
    else:
        print(value)
    return 0


def _emit_block(states, matrix, fmt: str) -> int:
    if fmt == "csv":
        width = len(states[0])
        out_cols = ",".join(f"out{i}" for i in range(width))
        in_cols = ",".join(f"in{i}" for i in range(width))
        print(f"{out_cols},{in_cols},value")
        for row, out_state in enumerate(states):
            for col, in_state in enumerate(states):
                value = matrix[row][col]
                cells = list(out_state) + list(in_state) + [str(value)]
                print(",".join(str(c) for c in cells))
        return 0
    if fmt == "json":
        entries = [
            {
                "out": list(out_state),
                "in": list(in_state),
                "value": matrix[row][col].to_json(),
            }
            for row, out_state in enumerate(states)
            for col, in_state in enumerate(states)
        ]
        print(json.dumps({"states": [list(s) for s in states], "entries": entries}))
        return 0
    for row, out_state in enumerate(states):
        for col, in_state in enumerate(states):
            if not matrix[row][col].is_zero:
                print(f"{out_state} <- {in_state}: {matrix[row][col]}")
    return 0


def golden_report() -> VerificationReport:
    """Recompute every reference polynomial and element; diff against goldens."""
    rep = VerificationReport("golden reference set")
    for (b, c), text in GOLDEN_Q_TEXT.items():
        got = str(qfamily.q_polynomial(b, c))
        rep.record(got == text, f"Q_({b},{c}) rendering", got, text)
    m, n = GOLDEN_K_BLOCK
    block_states = threedk.k_block_states(m, n)
    rep.record(
        sorted(GOLDEN_K_TEXT) == block_states,
        f"golden inputs exhaust block ({m},{n})",
    )
    for inp in block_states:
        got = str(threedk.k_element(*GOLDEN_K_OUT, *inp))
        want = GOLDEN_K_TEXT.get(inp, "0")
        rep.record(got == want, f"K^{GOLDEN_K_OUT}_{inp}", got, want)
    off_block = (1, 0, 0, 0, 0, 0, 0, 0)
    rep.record(
        threedk.k_element(*off_block).is_zero, f"off-block key {off_block} is zero"
    )
    for inp, shift, (b, c), point, den_exps in GOLDEN_QUOTIENTS:
        lhs = threedk.k_element(*GOLDEN_K_OUT, *inp)
        for e in den_exps:
            lhs = lhs * (1 - LaurentQ.monomial(e))
        rhs = qfamily.q_polynomial(b, c).evaluate_at_q_powers(point).shifted(shift)
        rep.record(
            lhs == rhs,
            f"quotient identity for K^{GOLDEN_K_OUT}_{inp} via Q_({b},{c})",
            str(lhs),
            str(rhs),
        )
    return rep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qreflect",
        description="Exact construction and verification of 3D R and K operators.",
    )
    parser.add_argument(
        "--cache",
        metavar="PATH",
        help="polynomial cache file to load before and save after the command"
        f" (default: ${cachemod.ENV_CACHE} when set)",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    q = verbs.add_parser("q", help="the polynomial family Q_{b,c}")
    qsub = q.add_subparsers(dest="action", required=True)
    qc = qsub.add_parser("compute", help="print Q_{b,c}")
    qc.add_argument("b", type=int)
    qc.add_argument("c", type=int)
    add_format(qc)
    qv = qsub.add_parser("verify", help="verify family properties")
    qv.add_argument("what", choices=("props",))
    qv.add_argument("--max-bc", type=int, default=3)
    add_format(qv)
    qcache = qsub.add_parser("cache", help="persist or load the polynomial cache")
    qcache.add_argument("direction", choices=("export", "import"))
    qcache.add_argument("path")

    cache_verb = verbs.add_parser("cache", help="persist or load the polynomial cache")
    cache_verb.add_argument("direction", choices=("export", "import"))
    cache_verb.add_argument("path")

    r = verbs.add_parser("r", help="3D R elements and blocks")
    rsub = r.add_subparsers(dest="action", required=True)
    re_ = rsub.add_parser("element", help="one matrix element R^{a,b,c}_{i,j,k}")
    for name in ("a", "b", "c", "i", "j", "k"):
        re_.add_argument(name, type=int)
    re_.add_argument(
        "--route", choices=("poly", "doublesum", "series", "all"), default="poly"
    )
    add_format(re_)
    rv = rsub.add_parser("verify", help="difference equations and route checks")
    rv.add_argument("--max-b", type=int, default=3)
    add_format(rv)
    rb = rsub.add_parser("block", help="full matrix on a weight block")
    rb.add_argument("m", type=int)
    rb.add_argument("n", type=int)
    add_format(rb, choices=("text", "json", "csv"))

    k = verbs.add_parser("k", help="3D K elements and blocks")
    ksub = k.add_subparsers(dest="action", required=True)
    ke = ksub.add_parser("element", help="one matrix element K^{a,b,c,d}_{i,j,k,l}")
    for name in ("a", "b", "c", "d", "i", "j", "k", "l"):
        ke.add_argument(name, type=int)
    ke.add_argument("--route", choices=("primary", "dual", "both"), default="primary")
    add_format(ke)
    kb = ksub.add_parser("block", help="full matrix on a weight block")
    kb.add_argument("m", type=int)
    kb.add_argument("n", type=int)
    add_format(kb, choices=("text", "json", "csv"))
    kv = ksub.add_parser("verify-e", help="difference equations E22..E55")
    kv.add_argument("--max-bc", type=int, default=3)
    add_format(kv)

    verify = verbs.add_parser("verify", help="equation suites")
    vsub = verify.add_subparsers(dest="what", required=True)
    vt = vsub.add_parser("tetrahedron")
    vt.add_argument("--max-occ", type=int, default=1)
    add_format(vt)
    vr = vsub.add_parser("reflection")
    vr.add_argument("--max-occ", type=int, default=1)
    vr.add_argument("--sample", type=int, default=64)
    vr.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_format(vr)
    vi = vsub.add_parser("intertwiner")
    vi.add_argument("--relation", default="all")
    vi.add_argument("--max-occ", type=int, default=2)
    add_format(vi)
    vg = vsub.add_parser("golden")
    add_format(vg)

    export = verbs.add_parser("export", help="export block tables")
    esub = export.add_subparsers(dest="what", required=True)
    eb = esub.add_parser("block")
    eb.add_argument("operator", choices=("r", "k"))
    eb.add_argument("m", type=int)
    eb.add_argument("n", type=int)
    eb.add_argument("--format", choices=("json", "csv"), default="csv")

    return parser


def _run_cache(direction: str, path: str) -> int:
    if direction == "export":
        count = cachemod.export_cache(path)
        print(f"exported {count} entries to {path}")
    else:
        count = cachemod.import_cache(path)
        print(f"imported {count} entries from {path}")
    return 0


def _dispatch(args: argparse.Namespace) -> int:
    if args.verb == "q":
        if args.action == "compute":
            return _emit_value(qfamily.q_polynomial(args.b, args.c), args.format)
        if args.action == "verify":
            rep = qfamily.verify_properties(args.max_bc)
            return _emit_report(rep, args.format)
        if args.action == "cache":
            return _run_cache(args.direction, args.path)
    if args.verb == "cache":
        return _run_cache(args.direction, args.path)
    if args.verb == "r":
        if args.action == "element":
            value = threedr.r_element(
                args.a, args.b, args.c, args.i, args.j, args.k, route=args.route
            )
            return _emit_value(value, args.format)
        if args.action == "verify":
            rep = VerificationReport(f"R suite, b <= {args.max_b}")
            for b in range(args.max_b + 1):
                rep.absorb(threedr.verify_p_relations(b))
                threedr.hypergeometric_p(b)
                rep.count()
            rep.absorb(threedr.p_ring_report(args.max_b + 1))
            rep.absorb(threedr.verify_mirror_pairs())
            rep.absorb(threedr.verify_route_agreement(3, 3))
            rep.absorb(threedr.verify_involution(2, 2))
            rep.absorb(threedr.verify_generating_series(1, 1, 1, min(args.max_b, 6)))
            return _emit_report(rep, args.format)
        if args.action == "block":
            states, matrix = threedr.r_block(args.m, args.n)
            return _emit_block(states, matrix, args.format)
    if args.verb == "k":
        if args.action == "element":
            value = threedk.k_element(
                args.a, args.b, args.c, args.d,
                args.i, args.j, args.k, args.l,
                route=args.route,
            )
            return _emit_value(value, args.format)
        if args.action == "block":
            states, matrix = threedk.k_block(args.m, args.n)
            return _emit_block(states, matrix, args.format)
        if args.action == "verify-e":
            rep = threedk.verify_e_all(args.max_bc, args.max_bc)
            return _emit_report(rep, args.format)
    if args.verb == "verify":
        if args.what == "tetrahedron":
            reps = [
                tensorops.verify_tetrahedron(occ)
                for occ in tensorops.states_up_to(6, args.max_occ)
            ]
            return _emit_suite(reps, args.format, "tetrahedron")
        if args.what == "reflection":
            states = tensorops.unit_states(9, 2)
            if args.sample:
                states = states + tensorops.sample_unit_states(
                    9, args.sample, args.seed
                )
            if args.max_occ > 1:
                states = sorted(set(states) | set(tensorops.states_up_to(9, args.max_occ)))
            reps = [tensorops.verify_reflection(occ) for occ in states]
            return _emit_suite(reps, args.format, "reflection")
        if args.what == "intertwiner":
            if args.relation == "all":
                relations = sorted(tensorops.INTERTWINER_RELATIONS)
            else:
                relations = [args.relation]
            reps = [
                tensorops.verify_intertwiner(rel, occ)
                for rel in relations
                for occ in tensorops.states_up_to(4, args.max_occ)
            ]
            return _emit_suite(reps, args.format, "intertwiner")
        if args.what == "golden":
            return _emit_report(golden_report(), args.format)
    if args.verb == "export":
        if args.operator == "r":
            states, matrix = threedr.r_block(args.m, args.n)
        else:
            states, matrix = threedk.k_block(args.m, args.n)
        return _emit_block(states, matrix, args.format)
    raise DomainError(f"unhandled command {args.verb!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cache_path = args.cache or os.environ.get(cachemod.ENV_CACHE)
    if cache_path:
        cachemod.import_cache(cache_path)
    try:
        code = _dispatch(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cache_path:
        cachemod.export_cache(cache_path)
    return code


if __name__ == "__main__":
    sys.exit(main())
