"""``thin-irred``: run a census or a check and write a JSON or CSV report.

Exit status: 0 when every asserted check passes (or the subcommand is
exploratory), 1 when an asserted identity or inequality fails, 2 on usage
or parse errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import sys
import time
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from itertools import combinations

from . import __version__
from .census import (CensusParams, bad_class_bound_check, conjecture_table,
                     corollary_check, count_disc_zero, count_irreducibles,
                     split_classes, specialization_check_disc,
                     specialization_check_res, stickelberger_scan,
                     theorem_bound_check, theorem_grid,
                     variety_intersection_count, weil_scan)
from .errors import ThinIrredError
from .finite_field import FieldCtx, make_field
from .polynomial import MonicPoly
from .subgroup_char import coset_spec, square_cosets, trivial_cosets

log = logging.getLogger("thin_irred")

SUBCOMMANDS = ("census", "theorem", "corollary", "carlitz", "stickelberger", "classes",
               "weil", "varieties", "specializations", "conjecture")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thin-irred", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="field characteristic")
    common.add_argument("--k", type=int, default=1, help="extension degree (default 1)")
    common.add_argument("--n", type=int, required=True, help="polynomial degree")
    common.add_argument("--d", help="prescribed discriminant (element literal)")
    common.add_argument("--subgroup-orders", type=_int_list, help="#G_i per coefficient, e.g. 3,3")
    common.add_argument("--coset-reps", help="h_i per coefficient, comma separated literals")
    common.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    common.add_argument("--output", dest="output_path", help="write the report here instead of stdout")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--ceiling", type=int, help="search-space ceiling (default $THIN_IRRED_CEILING or 1e8)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled grids")
    common.add_argument("--timing", action="store_true", help="record wall_time_s (breaks byte-identity)")
    common.add_argument("--allow-zero", action="store_true",
                        help="census only: let coefficients be 0 when no cosets are given")
    common.add_argument("--samples", type=int, default=None,
                        help="sample count for varieties (d values) and specializations")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


# -- argument decoding -------------------------------------------------------

def _field(args) -> FieldCtx:
    if args.p < 2:
        raise UsageError("--p: p must be prime")
    try:
        return make_field(args.p, args.k)
    except ThinIrredError as exc:
        raise UsageError(f"--p/--k: {exc}") from None


def _element(ctx: FieldCtx, text: str, flag: str) -> int:
    try:
        return ctx.parse(text)
    except ThinIrredError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _cosets(ctx: FieldCtx, args, default: str = "trivial"):
    orders, reps = args.subgroup_orders, args.coset_reps
    if orders is None and reps is None:
        if default == "none":
            return None
        return square_cosets(ctx, args.n) if default == "squares" else trivial_cosets(ctx, args.n)
    if orders is None:
        orders = [ctx.q - 1] * args.n
    rep_vals = [1] * args.n if reps is None else [
        _element(ctx, r, "--coset-reps") for r in reps.split(",")]
    if len(orders) != args.n:
        raise UsageError(f"--subgroup-orders: expected {args.n} values, got {len(orders)}")
    if len(rep_vals) != args.n:
        raise UsageError(f"--coset-reps: expected {args.n} values, got {len(rep_vals)}")
    if any(h == 0 for h in rep_vals):
        raise UsageError("--coset-reps: representatives must be nonzero")
    try:
        return coset_spec(ctx, orders, rep_vals)
    except ThinIrredError as exc:
        raise UsageError(f"--subgroup-orders: {exc}") from None


def _nonzero_d(ctx: FieldCtx, args) -> list[int]:
    """--d if given, otherwise every d in F_q^* in dlog order."""
    if args.d is not None:
        d = _element(ctx, args.d, "--d")
        if d == 0:
            raise UsageError("--d: the discriminant must be nonzero")
        return [d]
    return sorted(range(1, ctx.q), key=ctx.dlog)


def _need_p_gt_n(ctx: FieldCtx, args) -> None:
    if args.n < 2:
        raise UsageError("--n: degree must be >= 2")
    if ctx.p <= args.n:
        raise UsageError(f"--n: need characteristic p > n (p = {ctx.p}, n = {args.n})")


# -- subcommands -------------------------------------------------------------
# Each returns (params, rows, passed).

def _run_census(ctx, args):
    cs = _cosets(ctx, args, default="none")
    d = None
    if args.d is not None:
        d = _nonzero_d(ctx, args)[0]
    params = CensusParams(ctx, args.n, d, cs, require_nonzero_coeffs=not args.allow_zero)
    rep = count_irreducibles(params, args.workers, args.ceiling)
    row = {"n": args.n, "d": d, "universe": params.universe,
           "orders": list(cs.sizes) if cs else None, "reps": list(cs.reps) if cs else None,
           "exact_count": rep.exact_count, "main_term": rep.main_term,
           "error_bound": rep.error_bound, "slack": rep.slack, "enumerated": rep.enumerated}
    return {"n": args.n}, [row], True


def _run_theorem(ctx, args):
    if args.d is not None and (args.subgroup_orders or args.coset_reps):
        configs = [(_nonzero_d(ctx, args)[0], tuple(_cosets(ctx, args).sizes),
                    tuple(_cosets(ctx, args).reps))]
    elif args.d is not None:
        configs = [(_nonzero_d(ctx, args)[0], tuple([ctx.q - 1] * args.n), tuple([1] * args.n))]
    else:
        configs = theorem_grid(ctx, args.n, args.seed)
    log.info("theorem: %d configurations", len(configs))
    rows, ok = [], True
    for d, orders, reps in configs:
        out = theorem_bound_check(CensusParams(ctx, args.n, d, coset_spec(ctx, orders, reps)),
                                  args.workers, args.ceiling)
        ok &= out.holds
        rows.append({"d": d, "orders": list(orders), "reps": list(reps),
                     "count": out.details["count"], "main_term": out.details["main_term"],
                     "family_count": out.details["family_count"], "lhs": out.observed,
                     "weil_term_coefficient": out.details["weil_term_coefficient"],
                     "bad_class_term": out.details["bad_class_term"], "rhs": out.ceiling,
                     "pass": out.holds})
    return {"n": args.n, "seed": args.seed, "configurations": len(configs)}, rows, ok


def _run_corollary(ctx, args):
    cs = _cosets(ctx, args)
    rep = corollary_check(ctx, args.n, cs, args.workers, args.ceiling)
    row = {"n": args.n, "orders": list(cs.sizes), "reps": list(cs.reps), "count": rep.count,
           "disc_partition_sum": rep.disc_partition_sum, "partition_holds": rep.partition_holds,
           "main_term": rep.main_term, "observed_error": rep.observed_error,
           "error_scale": rep.error_scale, "ratio": rep.ratio}
    return {"n": args.n}, [row], rep.partition_holds


def _run_carlitz(ctx, args):
    observed = count_disc_zero(ctx, args.n, args.workers, args.ceiling)
    expected = ctx.q ** (args.n - 1)
    row = {"q": ctx.q, "n": args.n, "expected": expected, "observed": observed,
           "pass": observed == expected}
    return {"n": args.n}, [row], observed == expected


def _run_stickelberger(ctx, args):
    if ctx.q % 2 == 0:
        raise UsageError("--p: the parity law needs odd q")
    rep = stickelberger_scan(ctx, args.n, args.workers, args.ceiling)
    row = {"q": ctx.q, "n": args.n, "expected_parity": rep.expected, "total": rep.total,
           "violations": len(rep.violations), "pass": not rep.violations}
    return {"n": args.n}, [row], not rep.violations


def _run_classes(ctx, args):
    rows, ok = [], True
    for d in _nonzero_d(ctx, args):
        out = bad_class_bound_check(ctx, args.n, d, args.workers)
        classes = split_classes(ctx, args.n, d, args.workers)
        sizes_ok = all(c.size == ctx.q for c in classes)
        passed = out.holds and sizes_ok
        ok &= passed
        rows.append({"d": d, "classes": len(classes), "bad": out.observed, "ceiling": out.ceiling,
                     "sizes_ok": sizes_ok,
                     "bad_representatives": [list(c.representative.coeffs)
                                             for c in classes if not c.good],
                     "pass": passed})
    return {"n": args.n}, rows, ok


def _run_weil(ctx, args):
    cs = _cosets(ctx, args, default="squares")
    rows, ok = [], True
    for d in _nonzero_d(ctx, args):
        rep = weil_scan(ctx, args.n, d, cs, args.workers)
        passed = not rep.violations
        ok &= passed
        rows.append({"d": d, "good_classes": rep.good_classes,
                     "bad_skipped": rep.bad_classes_skipped, "sums_checked": rep.sums_checked,
                     "max_abs": round(rep.max_abs, 9), "ceiling": round(rep.ceiling, 9),
                     "violations": len(rep.violations),
                     "degree_bound_violations": len(rep.degree_violations), "pass": passed})
    return {"n": args.n, "orders": list(cs.sizes), "reps": list(cs.reps)}, rows, ok


def _run_varieties(ctx, args):
    _need_p_gt_n(ctx, args)
    if args.d is not None:
        ds = [_element(ctx, args.d, "--d")]
    else:
        rng = random.Random(f"{args.seed}:varieties:{ctx.q}:{args.n}")
        pool = list(range(ctx.q))
        ds = sorted(rng.sample(pool, min(args.samples or 10, len(pool))))
    rows, ok = [], True
    for d in ds:
        for i, j in combinations(range(args.n), 2):
            out = variety_intersection_count(ctx, args.n, d, i, j, args.ceiling)
            ok &= out.holds
            rows.append({"d": d, "i": i, "j": j, "count": out.observed, "ceiling": out.ceiling,
                         "pass": out.holds})
    return {"n": args.n, "seed": args.seed}, rows, ok


def _run_specializations(ctx, args):
    _need_p_gt_n(ctx, args)
    rng = random.Random(f"{args.seed}:specializations:{ctx.q}:{args.n}")
    samples = args.samples or 20
    nonzero = list(range(1, ctx.q))
    rows, ok = [], True
    for i, j in combinations(range(args.n), 2):
        for _ in range(samples):
            a = rng.choice(nonzero)
            r = specialization_check_res(ctx, args.n, i, j, a)
            ok &= r.sign is not None
            rows.append({"kind": "resultant", "i": i, "j": j, "a": a, "direct": r.direct,
                         "closed_form": r.closed_form, "sign": r.sign, "pass": r.sign is not None})
    if args.n >= 3 and ctx.p > 2:
        for _ in range(samples):
            b = rng.choice(nonzero)
            bs = [rng.randrange(ctx.q) for _ in range(args.n - 2)]
            r = specialization_check_disc(ctx, args.n, b, bs)
            ok &= r.agree
            rows.append({"kind": "discriminant", "b": b, "bs": bs, "direct": r.disc_direct,
                         "oracle": r.disc_roots, "matches_exponent_1": r.matches_exponent_1,
                         "matches_exponent_2": r.matches_exponent_2, "degenerate": r.degenerate,
                         "pass": r.agree})
    return {"n": args.n, "seed": args.seed, "samples": samples}, rows, ok


def _run_conjecture(ctx, args):
    if ctx.q % 2 == 0:
        raise UsageError("--p: needs odd q")
    _need_p_gt_n(ctx, args)
    rows = [asdict(r) for r in conjecture_table(ctx, args.n, args.workers, args.ceiling)]
    return {"n": args.n}, rows, True


_RUNNERS = {
    "census": _run_census, "theorem": _run_theorem, "corollary": _run_corollary,
    "carlitz": _run_carlitz, "stickelberger": _run_stickelberger, "classes": _run_classes,
    "weil": _run_weil, "varieties": _run_varieties, "specializations": _run_specializations,
    "conjecture": _run_conjecture,
}


# -- serialization -----------------------------------------------------------

def jsonable(obj, ctx: FieldCtx | None = None):
    """Fractions become "num/den" strings; dataclasses become dicts."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, MonicPoly):
        return list(obj.coeffs)
    if is_dataclass(obj):
        return jsonable(asdict(obj), ctx)
    if isinstance(obj, dict):
        return {str(k): jsonable(v, ctx) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, ctx) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def emit_report(report: dict, output_format: str) -> bytes:
    """Render a report dict as JSON (whole report) or CSV (one row per result)."""
    if output_format == "json":
        return (json.dumps(jsonable(report), indent=2) + "\n").encode()
    rows = jsonable(report["results"])
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(c)) for c in columns])
    return buf.getvalue().encode()


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return v


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    if args.workers < 1:
        print("thin-irred: error: --workers must be >= 1", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    try:
        ctx = _field(args)
        if args.subcommand not in ("varieties", "specializations", "conjecture"):
            _need_p_gt_n(ctx, args)
        params, rows, passed = _RUNNERS[args.subcommand](ctx, args)
    except (UsageError, ThinIrredError) as exc:
        print(f"thin-irred: error: {exc}", file=sys.stderr)
        return 2
    report = {
        "subcommand": args.subcommand,
        "field": {"p": ctx.p, "k": ctx.k, "q": ctx.q,
                  "modulus": list(ctx.modulus) if ctx.modulus else None},
        "params": params,
        "results": rows,
        "pass": bool(passed),
        "wall_time_s": round(time.perf_counter() - t0, 6) if args.timing else None,
        "version": __version__,
    }
    data = emit_report(report, args.output_format)
    if args.output_path:
        try:
            with open(args.output_path, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            print(f"thin-irred: error: cannot write {args.output_path}: {exc.strerror}",
                  file=sys.stderr)
            return 2
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    log.info("%s: %s", args.subcommand, "pass" if passed else "FAIL")
    return 0 if passed else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
