"""Batch command-line front end with machine-readable output.

Standard output carries exactly one JSON document (or plain text with
--format text); progress goes to standard error.  Exit status: 0 success,
1 failed mathematical check, 2 usage error, 3 infeasible size.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import inf

from . import cells as cells_mod
from . import quotients, specht
from .combinat import (
    format_partition,
    parse_partition,
    partitions,
    power_diagram,
)
from .errors import InfeasibleError
from .hecke import kl_table
from .laurent import FieldSpec
from .rsk import rsk
from .symgroup import all_perms, format_perm, parse_perm

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _field_from_args(args) -> FieldSpec:
    return FieldSpec(args.char, args.a)


def cmd_rsk(args) -> int:
    w = parse_perm(args.perm)
    pair = rsk(w)
    _emit(
        {
            "perm": format_perm(w),
            "P": pair.P.text(),
            "Q": pair.Q.text(),
            "shape": format_partition(pair.shape),
        },
        args.format,
    )
    return EXIT_OK


def cmd_klpoly(args) -> int:
    table = kl_table(args.n, progress=_progress)
    y = parse_perm(args.y, args.n)
    w = parse_perm(args.w, args.n)
    poly = table.p(y, w)
    _emit(
        {
            "n": args.n,
            "y": format_perm(y),
            "w": format_perm(w),
            "poly": poly.text(),
            "mu": poly.coeff(-1),
        },
        args.format,
    )
    return EXIT_OK


def cmd_cells(args) -> int:
    n = args.n
    decomp = cells_mod.cell_decomposition(n)
    groups = []
    for cell in decomp.two_sided_cells:
        shape = decomp.shape_of[cell]
        left = [
            sorted(format_perm(w) for w in lc)
            for lc in decomp.left_cells
            if lc <= cell
        ]
        right = [
            sorted(format_perm(w) for w in rc)
            for rc in decomp.right_cells
            if rc <= cell
        ]
        groups.append(
            {
                "shape": format_partition(shape),
                "members": sorted(format_perm(w) for w in cell),
                "left_cells": sorted(left),
                "right_cells": sorted(right),
            }
        )
    groups.sort(key=lambda g: g["shape"])
    payload = {"n": n, "cells": groups}
    status = EXIT_OK
    if args.operational:
        ops = {
            side: cells_mod.operational_cells(n, side)
            for side in ("left", "right", "two")
        }
        match = (
            sorted(map(sorted, ops["left"])) == sorted(map(sorted, decomp.left_cells))
            and sorted(map(sorted, ops["right"]))
            == sorted(map(sorted, decomp.right_cells))
            and sorted(map(sorted, ops["two"]))
            == sorted(map(sorted, decomp.two_sided_cells))
        )
        payload["operational_match"] = match
        if not match:
            status = EXIT_CHECK_FAILED
    _emit(payload, args.format)
    return status


def cmd_gmatrix(args) -> int:
    lam = parse_partition(args.shape)
    kl_table(sum(lam), progress=_progress)
    g = specht.g_matrix(lam)
    payload = {
        "shape": format_partition(lam),
        "dim": len(g),
        "matrix": [[entry.text() for entry in row] for row in g],
    }
    status = EXIT_OK
    if args.det or args.check:
        det = specht.g_det(lam)
        payload["det"] = det.text()
    if args.hook or args.check:
        hook = specht.hook_formula_det(lam)
        payload["hook_det"] = hook.text()
    if args.check:
        ok = payload["det"] == payload["hook_det"]
        payload["check"] = ok
        if not ok:
            status = EXIT_CHECK_FAILED
    _emit(payload, args.format)
    return status


def cmd_gram(args) -> int:
    lam = parse_partition(args.shape)
    mat = specht.gram_matrix(lam)
    payload = {
        "shape": format_partition(lam),
        "dim": len(mat),
        "matrix": [[entry.text() for entry in row] for row in mat],
    }
    if args.det:
        payload["det"] = specht.gram_det(lam).text()
    _emit(payload, args.format)
    return EXIT_OK


def cmd_carter(args) -> int:
    lam = parse_partition(args.shape)
    field = _field_from_args(args)
    kl_table(sum(lam), progress=_progress)
    cert = specht.carter_certificate(lam, field)
    e = field.e
    p = field.characteristic if field.characteristic else inf
    diagram = power_diagram(lam, e, p)
    payload = {
        "shape": format_partition(lam),
        "char": args.char,
        "a": str(args.a),
        "e": "inf" if e == inf else e,
        "power_diagram": [list(row) for row in diagram.values],
        "carter": cert["carter"],
        "det_nonzero": cert["det_nonzero"],
        "transposed": cert["transposed"],
        "factors": cert["factors"],
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_basis(args) -> int:
    field = _field_from_args(args)
    members = quotients.quotient_basis_perms(args.n, args.d)
    payload = {
        "n": args.n,
        "d": args.d,
        "count": len(members),
        "expected": quotients.expected_quotient_dim(args.n, min(args.d, args.n)),
        "members": [format_perm(w) for w in members],
    }
    status = EXIT_OK
    if args.verify:
        ok = quotients.verify_quotient_basis(args.n, args.d, field)
        payload["verified"] = ok
        if not ok:
            status = EXIT_CHECK_FAILED
    _emit(payload, args.format)
    return status


def cmd_tabloid_kernel(args) -> int:
    lam = parse_partition(args.shape)
    status = EXIT_OK
    if args.char == 0:
        ok = quotients.tabloid_kernel_basis_check(lam, FieldSpec(0, 1))
        payload = {
            "shape": format_partition(lam),
            "char": 0,
            "kernel_dim": quotients.tabloid_kernel_expected_dim(lam),
            "ok": ok,
        }
        if not ok:
            status = EXIT_CHECK_FAILED
    else:
        if lam != (2, 2) or args.char != 2:
            raise InfeasibleError(
                "positive characteristic is only exercised at the documented"
                " counterexample: --shape 2,2 --char 2"
            )
        report = quotients.char_p_counterexample()
        payload = {"shape": "2,2", "char": 2, **report}
        if not report["ok"]:
            status = EXIT_CHECK_FAILED
    _emit(payload, args.format)
    return status


def cmd_endo_basis(args) -> int:
    lam = parse_partition(args.shape)
    field = _field_from_args(args)
    kl_table(sum(lam), progress=_progress)
    ok = quotients.endomorphism_basis_check(lam, field)
    _emit(
        {
            "shape": format_partition(lam),
            "char": args.char,
            "a": str(args.a),
            "ok": ok,
        },
        args.format,
    )
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_invariants(args) -> int:
    import random

    from .symgroup import longest_decreasing_subsequence

    rng = random.Random(7)
    closure_ok = True
    for _ in range(50):
        m = rng.randint(1, 5)
        k = rng.randint(1, 5)
        sig = tuple(rng.sample(range(1, m + 1), m))
        tau = tuple(rng.sample(range(1, k + 1), k))
        prod = quotients.monomial_invariant_product(sig, tau)
        if longest_decreasing_subsequence(prod) != max(
            longest_decreasing_subsequence(sig), longest_decreasing_subsequence(tau)
        ):
            closure_ok = False
            break
    span_ok = quotients.trace_monomial_span_check(
        args.n, args.m, args.d, trials=args.trials
    )
    _emit(
        {
            "n": args.n,
            "m": args.m,
            "d": args.d,
            "closure_ok": closure_ok,
            "span_ok": span_ok,
        },
        args.format,
    )
    return EXIT_OK if closure_ok and span_ok else EXIT_CHECK_FAILED


def _selftest_shape(lam) -> tuple[str, bool]:
    ok = specht.g_det(lam) == specht.hook_formula_det(lam)
    ok = ok and specht.gram_relation_check(lam)
    return format_partition(lam), ok


def cmd_selftest(args) -> int:
    n_max = args.n_max
    results: list[tuple[str, bool]] = []

    _progress("selftest: rsk bijectivity")
    from .rsk import rsk_inverse

    ok = all(rsk_inverse(rsk(w)) == w for w in all_perms(min(n_max, 6)))
    results.append(("rsk-roundtrip", ok))

    _progress("selftest: counting identity")
    from .combinat import count_standard
    from math import factorial

    ok = all(
        sum(count_standard(lam) ** 2 for lam in partitions(n)) == factorial(n)
        for n in range(1, n_max + 1)
    )
    results.append(("rsk-counting", ok))

    shapes = [lam for n in range(2, min(n_max, 5) + 1) for lam in partitions(n)]
    _progress(f"selftest: determinants over {len(shapes)} shapes")
    if args.threads > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=args.threads) as pool:
            shape_results = list(pool.map(_selftest_shape, shapes))
    else:
        shape_results = [_selftest_shape(lam) for lam in shapes]
    for name, ok in sorted(shape_results):
        results.append((f"det-hook {name}", ok))

    all_ok = all(ok for _, ok in results)
    _emit(
        {
            "checks": [{"name": name, "ok": ok} for name, ok in results],
            "ok": all_ok,
        },
        args.format,
    )
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rskcells",
        description="Exact Kazhdan-Lusztig cells, RSK bases, and Specht Gram determinants.",
    )
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="KL table cache directory (default: $RSKCELLS_CACHE or ./.cache)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    p = add("rsk", cmd_rsk, help="RSK pair and shape of a permutation")
    p.add_argument("--perm", required=True, help="one-line word or cycle notation")

    p = add("klpoly", cmd_klpoly, help="Kazhdan-Lusztig polynomial p_{y,w}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--w", required=True)

    p = add("cells", cmd_cells, help="KL cells grouped by shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--operational",
        action="store_true",
        help="cross-check against C-basis multiplication (n <= 4)",
    )

    p = add("gmatrix", cmd_gmatrix, help="structure-constant matrix G(lambda)")
    p.add_argument("--shape", required=True)
    p.add_argument("--det", action="store_true")
    p.add_argument("--hook", action="store_true")
    p.add_argument("--check", action="store_true")

    p = add("gram", cmd_gram, help="Gram matrix of the Dipper-James form")
    p.add_argument("--shape", required=True)
    p.add_argument("--det", action="store_true")

    p = add("carter", cmd_carter, help="Carter-type irreducibility certificate")
    p.add_argument("--shape", required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--a", type=int, default=1)

    p = add("basis", cmd_basis, help="permutation basis of the J(n,d) quotient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--a", type=int, default=1)

    p = add("tabloid-kernel", cmd_tabloid_kernel, help="tabloid kernel basis check")
    p.add_argument("--shape", required=True)
    p.add_argument("--char", type=int, default=0)

    p = add("endo-basis", cmd_endo_basis, help="endomorphism basis certificate")
    p.add_argument("--shape", required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--a", type=int, default=1)

    p = add("invariants", cmd_invariants, help="invariant-theory span checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)

    p = add("selftest", cmd_selftest, help="run a quick built-in verification sweep")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--threads", type=int, default=1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        os.environ["RSKCELLS_CACHE"] = args.cache_dir
    try:
        return args.fn(args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
