"""Command-line interface: compute counts, run cross-checks, verify
identities, emit tables, render regions.

Exit codes: 0 success / identities pass, 1 cross-check disagreement or
identity failure, 2 usage or parameter error, 3 oracle node budget
exceeded.  All numbers are printed as decimal strings; JSON and CSV output
never contains floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import cfhankel, formulas, lingebra, oracle
from .exactnum import power_sum
from .formulas import NonIntegralCountError
from .regions import (
    DefectSpec,
    DentedAztecRectangle,
    DentedSemiHexagon,
    HexagonSpec,
    UndentedAztecRectangle,
    build_aztec_region,
    build_hexagon_region,
    build_semihexagon_region,
)

__all__ = ["main", "entry", "build_parser"]


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def _json_print(payload, out) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True), file=out)


def _stringify(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return value


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

_COUNT_INSTANCES = ("hexagon", "semihex", "aztec", "problem1", "notri",
                    "problem10")


def _instance_params(args) -> dict:
    if args.instance == "hexagon":
        return {"k": args.k, "q": args.q}
    if args.instance == "semihex":
        return {"k": args.k, "q": args.q, "dents": _int_list(args.dents)}
    if args.instance == "aztec":
        return {"a": args.a, "b": args.b, "dents": _int_list(args.dents)}
    if args.instance == "problem1":
        return {"n": args.n}
    if args.instance == "notri":
        return {"k": args.k, "n": args.n}
    if args.instance == "problem10":
        return {"k": args.k}
    raise ValueError(f"unknown instance {args.instance!r}")


def _require(args, names) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ValueError(
            f"{args.instance} requires --" + ", --".join(missing))


_COUNT_REQUIRED = {
    "hexagon": ("k", "q"),
    "semihex": ("k", "q", "dents"),
    "aztec": ("a", "b", "dents"),
    "problem1": ("n",),
    "notri": ("k", "n"),
    "problem10": ("k",),
}


def _cmd_count(args) -> int:
    _require(args, _COUNT_REQUIRED[args.instance])
    params = _instance_params(args)
    method = {"closed": "closed-form", "determinant": "determinant",
              "oracle": "oracle"}[args.method]
    result = formulas.cross_check(args.instance, legs=(method,),
                                  node_budget=args.oracle_budget, **params)
    if not result.results:
        if result.oracle_skipped:
            raise oracle.OracleBudgetExceeded("oracle leg exceeded node budget")
        raise ValueError(
            f"method {args.method!r} is not available for {args.instance}")
    res = result.results[0]
    if args.format == "json":
        payload = {"instance": args.instance,
                   "params": _stringify(dict(res.params)),
                   "method": res.method,
                   "value": str(res.value)}
        _json_print(payload, sys.stdout)
    else:
        print(f"{res.value} ({res.method})")
    return 0


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _cmd_check(args) -> int:
    _require(args, _COUNT_REQUIRED[args.instance])
    params = _instance_params(args)
    legs = tuple(args.legs.split(","))
    for leg in legs:
        if leg not in ("closed-form", "determinant", "oracle"):
            raise ValueError(f"unknown leg {leg!r}")
    result = formulas.cross_check(args.instance, legs=legs,
                                  node_budget=args.oracle_budget, **params)
    if args.format == "json":
        payload = {
            "instance": result.instance,
            "params": _stringify(dict(result.params)),
            "legs": [{"method": r.method, "value": str(r.value)}
                     for r in result.results],
            "agree": result.agree,
            "oracle_skipped": result.oracle_skipped,
        }
        if result.ratio is not None:
            payload["ratio"] = str(result.ratio)
        _json_print(payload, sys.stdout)
    else:
        pretty = ", ".join(f"{k}={v}" for k, v in result.params)
        print(f"{result.instance} [{pretty}]")
        for r in result.results:
            print(f"  {r.method:<12} = {r.value}")
        if result.oracle_skipped:
            print("  oracle skipped (node budget exceeded)")
        if result.ratio is not None:
            print(f"  ratio        = {result.ratio}")
        print(f"  verdict: {'agree' if result.agree else 'DISAGREE'}")
    return 0 if result.agree else 1


# ---------------------------------------------------------------------------
# identity
# ---------------------------------------------------------------------------

def _identity_wz(args) -> list[str]:
    failures = []
    for n in range(1, args.n_max + 1):
        got = formulas.wz_sum(n)
        want = Fraction(4 * n - 1, 3)
        if got != want:
            failures.append(f"wz_sum({n}) = {got}, expected {want}")
            break
    for n in range(1, min(args.n_max, 30) + 1):
        if formulas.wz_u(n, 0) != 0:
            failures.append(f"U({n}, 0) != 0")
            break
        if formulas.wz_q(n + 1, n) + formulas.wz_u(n, n) != 0:
            failures.append(f"Q({n + 1}, {n}) + U({n}, {n}) != 0")
            break
        for i in range(n):
            res = formulas.wz_certificate_residual(n, i)
            if res != 0:
                failures.append(f"certificate residual({n}, {i}) = {res}")
                break
    return failures


def _identity_jacobi(args) -> list[str]:
    rng = random.Random(args.seed)
    failures = []
    for trial in range(args.trials):
        m = rng.randint(1, args.m_max)
        seq = [rng.randint(1, 9) for _ in range(2 * m + 1)]
        res = lingebra.jacobi_identity_residual(seq, m)
        if res != 0:
            failures.append(f"trial {trial}: residual {res} for seq={seq}, m={m}")
            break
    return failures


def _identity_cf_roundtrip(args) -> list[str]:
    rng = random.Random(args.seed)
    failures = []
    nonzero = [v for v in range(-5, 6) if v != 0]
    for trial in range(args.trials):
        lam = tuple(Fraction(rng.choice(nonzero)) for _ in range(args.depth + 1))
        series = cfhankel.cf_to_series(cfhankel.JFraction(lam), args.depth)
        back = cfhankel.series_to_cf(series, max_depth=args.depth)
        if back.lambdas[:args.depth] != lam[:args.depth]:
            failures.append(f"trial {trial}: {lam} -> {back.lambdas}")
            break
    return failures


def _identity_zavrotsky(args) -> list[str]:
    failures = []
    for p in range(args.p_max + 1):
        for k in range(1, args.k_max + 1):
            closed = lingebra.zavrotsky_closed_form(p, k)
            direct = lingebra.det_exact(
                [[power_sum(p, i + j) for j in range(k)] for i in range(k)])
            if closed != direct:
                failures.append(
                    f"p={p}, k={k}: closed {closed} != determinant {direct}")
                return failures
    return failures


def _identity_sylvester(args) -> list[str]:
    rng = random.Random(args.seed)
    failures = []
    for trial in range(args.trials):
        k = rng.randint(1, args.k_max)
        rows = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(2 * k)]
        got = lingebra.sylvester_pairing_sum(rows)
        want = (2 ** k
                * lingebra.det_exact(rows[0::2])
                * lingebra.det_exact(rows[1::2]))
        if got != want:
            failures.append(f"trial {trial}: {got} != {want} for rows={rows}")
            break
    return failures


def _identity_g_recurrence(args) -> list[str]:
    failures = []
    for n in (1, 2, 3, Fraction(7, 2)):
        for k in range(1, args.k_max + 1):
            residual = cfhankel.verify_g_recurrence(k, n, args.order)
            if not residual.is_zero:
                failures.append(f"k={k}, n={n}: residual {residual.coeffs}")
                return failures
    return failures


_IDENTITIES = {
    "wz": _identity_wz,
    "jacobi": _identity_jacobi,
    "cf-roundtrip": _identity_cf_roundtrip,
    "zavrotsky": _identity_zavrotsky,
    "sylvester": _identity_sylvester,
    "g-recurrence": _identity_g_recurrence,
}


def _cmd_identity(args) -> int:
    failures = _IDENTITIES[args.name](args)
    if failures:
        print(f"identity {args.name}: FAIL")
        for line in failures:
            print(f"  {line}")
        return 1
    print(f"identity {args.name}: pass")
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _table_rows(args) -> tuple[list[str], list[dict], str]:
    if args.family == "hexagon":
        rows = [{"k": str(k), "q": str(q),
                 "count": str(formulas.hexagon_count_kqk(k, q))}
                for k in range(1, args.k_max + 1)
                for q in range(1, args.q_max + 1)]
        return ["k", "q", "count"], rows, "k"
    if args.family == "problem10":
        rows = [{"k": str(k), "count": str(formulas.problem10_closed(k))}
                for k in range(1, args.k_max + 1)]
        return ["k", "count"], rows, "k"
    if args.family == "lozenge-ratio":
        rows = []
        for n in range(1, args.n_max + 1):
            central = formulas.central_lozenge_closed(n, n, "odd")
            total = formulas.hexagon_count_kqk(2 * n - 1, 2 * n)
            rows.append({"n": str(n), "central": str(central),
                         "total": str(total),
                         "ratio": str(Fraction(central, total))})
        return ["n", "central", "total", "ratio"], rows, "n"
    raise ValueError(f"unknown table family {args.family!r}")


def _cmd_table(args) -> int:
    header, rows, x_key = _table_rows(args)
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if args.figure:
        from . import figures
        y_key = "central" if args.family == "lozenge-ratio" else "count"
        figures.save_table_figure(rows, x_key, y_key, args.figure,
                                  title=args.family)
    return 0


# ---------------------------------------------------------------------------
# render
# ---------------------------------------------------------------------------

def _render_region(args):
    if args.shape == "hexagon":
        _require(args, ("k", "q"))
        defect = {None: DefectSpec.none(), "none": DefectSpec.none(),
                  "central-lozenge": DefectSpec.central_lozenge_forced()}[args.defect]
        return build_hexagon_region(HexagonSpec.kqk(args.k, args.q), defect)
    if args.shape == "notri":
        _require(args, ("k", "n"))
        k, n = args.k, args.n
        spec = HexagonSpec(k, 2 * n + 1 - k, k, k + 1, 2 * n - k, k + 1)
        return build_hexagon_region(spec, DefectSpec.central_triangle_removed())
    if args.shape == "semihex":
        _require(args, ("k", "q", "dents"))
        return build_semihexagon_region(
            DentedSemiHexagon(args.k, args.q, _int_list(args.dents)))
    if args.shape == "aztec":
        _require(args, ("a", "b", "dents"))
        return build_aztec_region(
            DentedAztecRectangle(args.a, args.b, _int_list(args.dents)))
    if args.shape == "aztec-undented":
        _require(args, ("a", "b"))
        spec = UndentedAztecRectangle(args.a, args.b, args.variant)
        defect = DefectSpec.none() if args.removed is None else \
            DefectSpec.diagonal_squares_removed(_int_list(args.removed))
        return build_aztec_region(spec, defect)
    raise ValueError(f"unknown shape {args.shape!r}")


def _cmd_render(args) -> int:
    region = _render_region(args)
    if args.format == "json":
        print(region.to_json())
    else:
        print(region.ascii_art())
    if args.out:
        from . import figures
        figures.save_region_figure(region, args.out, title=args.shape)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_shape_flags(parser) -> None:
    parser.add_argument("--k", type=int)
    parser.add_argument("--q", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--b", type=int)
    parser.add_argument("--dents", type=str,
                        help="comma-separated positions, e.g. 1,4,6")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecount",
        description="Exact tiling counts for hexagons and Aztec rectangles "
                    "with defects, cross-checked three ways.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="compute one count")
    p_count.add_argument("instance", choices=_COUNT_INSTANCES)
    _add_shape_flags(p_count)
    p_count.add_argument("--method", choices=("closed", "determinant", "oracle"),
                         default="closed")
    p_count.add_argument("--format", choices=("text", "json"), default="text")
    p_count.add_argument("--oracle-budget", type=int, default=None,
                         help=f"search node budget (default from "
                              f"${oracle.BUDGET_ENV_VAR} or "
                              f"{oracle.DEFAULT_NODE_BUDGET})")
    p_count.set_defaults(func=_cmd_count)

    p_check = sub.add_parser("check",
                             help="run all legs of an instance and compare")
    p_check.add_argument("instance", choices=_COUNT_INSTANCES)
    _add_shape_flags(p_check)
    p_check.add_argument("--legs", type=str,
                         default="closed-form,determinant,oracle")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--oracle-budget", type=int, default=None)
    p_check.set_defaults(func=_cmd_check)

    p_ident = sub.add_parser("identity", help="verify an identity over a range")
    p_ident.add_argument("name", choices=sorted(_IDENTITIES))
    p_ident.add_argument("--n-max", type=int, default=50)
    p_ident.add_argument("--m-max", type=int, default=4)
    p_ident.add_argument("--p-max", type=int, default=8)
    p_ident.add_argument("--k-max", type=int, default=3)
    p_ident.add_argument("--depth", type=int, default=8)
    p_ident.add_argument("--order", type=int, default=12)
    p_ident.add_argument("--trials", type=int, default=100)
    p_ident.add_argument("--seed", type=int, default=20260810)
    p_ident.set_defaults(func=_cmd_identity)

    p_table = sub.add_parser("table", help="emit a table of counts")
    p_table.add_argument("family", choices=("hexagon", "problem10",
                                            "lozenge-ratio"))
    p_table.add_argument("--k-max", type=int, default=4)
    p_table.add_argument("--q-max", type=int, default=4)
    p_table.add_argument("--n-max", type=int, default=10)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", type=str, default=None,
                         help="write the table to a file instead of stdout")
    p_table.add_argument("--figure", type=str, default=None,
                         help="also render a log-scale chart to this file")
    p_table.set_defaults(func=_cmd_table)

    p_render = sub.add_parser("render", help="render a region")
    p_render.add_argument("shape", choices=("hexagon", "notri", "semihex",
                                            "aztec", "aztec-undented"))
    _add_shape_flags(p_render)
    p_render.add_argument("--defect", choices=("none", "central-lozenge"),
                          default=None)
    p_render.add_argument("--removed", type=str, default=None,
                          help="removed diagonal indices (aztec-undented)")
    p_render.add_argument("--variant", choices=("p10", "sec3"), default="p10")
    p_render.add_argument("--format", choices=("text", "json"), default="text")
    p_render.add_argument("--out", type=str, default=None,
                          help="write a figure (png/svg/pdf) of the region")
    p_render.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except oracle.OracleBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, NonIntegralCountError,
            cfhankel.VanishingHankelMinorError,
            cfhankel.TerminatingFractionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
