"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import FalseThetaError
from .kloosterman import KloostermanKey, bound_ratio_scan, kloosterman_sum
from .rademacher import QuadConfig, convergence_table
from .series import CoefficientParams, coefficient_exact, coefficient_table
from .verify import GRIDS, run_suites

PRESET_ROWS = [(j, N, n) for j, N in ((1, 3), (5, 8), (3, 10)) for n in (3, 10, 18)]
PRESET_J = [1, 3, 20, 25, 50]
TABLE_HEADER = "j,N,n,J,value_real,value_imag,oracle,abs_error"


def fmt(x: float) -> str:
    return format(x, ".10g")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _quad(args) -> QuadConfig:
    return QuadConfig(order=args.quad_order, panels=args.panels)


def cmd_coeff(args, out) -> int:
    if args.n_max is not None:
        table = coefficient_table(args.j, args.N, args.n_max)
        out.write("n,a\n")
        for n, a in enumerate(table):
            out.write(f"{n},{a}\n")
    else:
        out.write(f"{coefficient_exact(CoefficientParams(args.j, args.N, args.n))}\n")
    return 0


def cmd_rademacher(args, out) -> int:
    params = CoefficientParams(args.j, args.N, args.n)
    quad = _quad(args)
    row = convergence_table(params, [args.J], quad, workers=args.threads)[0]
    record = row.to_dict()
    record.update(quad_order=quad.order, panels=quad.panels)
    keys = ["j", "N", "n", "J", "value_real", "value_imag", "oracle", "abs_error", "quad_order", "panels"]
    out.write(json.dumps({key: record[key] for key in keys}) + "\n")
    return 0


def cmd_table(args, out) -> int:
    if args.preset == "paper":
        rows, J_list = PRESET_ROWS, args.J or PRESET_J
    else:
        if None in (args.j, args.N, args.n):
            raise FalseThetaError("table needs --preset paper or all of --j, --N, --n")
        rows, J_list = [(args.j, args.N, args.n)], args.J or PRESET_J
    quad = _quad(args)
    out.write(TABLE_HEADER + "\n")
    for j, N, n in rows:
        for row in convergence_table(CoefficientParams(j, N, n), J_list, quad, workers=args.threads):
            out.write(
                f"{j},{N},{n},{row.J},{fmt(row.value_real)},{fmt(row.value_imag)},{row.oracle},{fmt(row.abs_error)}\n"
            )
    return 0


def cmd_kloosterman(args, out) -> int:
    value = kloosterman_sum(KloostermanKey(args.k, args.j, args.N, args.n, args.r, args.kappa))
    out.write(f"{fmt(value.real)},{fmt(value.imag)}\n")
    return 0


def cmd_scan_bound(args, out) -> int:
    report = bound_ratio_scan(args.j, args.N, range(1, args.n_max + 1), args.k_max, args.eps, workers=args.threads)
    out.write(json.dumps(report.to_dict()) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    results = run_suites(args.grid)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        out.write(f"{status}  {res.name}: max residual {res.max_residual:.3e} (tol {res.tolerance:.0e}, {res.cases} cases)\n")
    ok = all(res.passed for res in results)
    out.write("all suites passed\n" if ok else "verification FAILED\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="falsetheta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_quad(p):
        p.add_argument("--quad-order", type=int, default=32)
        p.add_argument("--panels", type=int, default=8)
        p.add_argument("--threads", type=int, default=1, help="worker processes for the k-sum")

    p = sub.add_parser("coeff", help="exact coefficients from the q-series")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--n-max", type=int)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("rademacher", help="truncated exact formula as JSON")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J", type=int, default=50)
    add_quad(p)
    p.set_defaults(func=cmd_rademacher)

    p = sub.add_parser("table", help="convergence table as CSV")
    p.add_argument("--preset", choices=["paper"])
    p.add_argument("--j", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--J", type=_int_list, help="comma-separated truncation depths")
    add_quad(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("kloosterman", help="one Kloosterman sum as re,im")
    for name in ("k", "j", "N", "n", "r"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--kappa", type=int, default=0)
    p.set_defaults(func=cmd_kloosterman)

    p = sub.add_parser("scan-bound", help="empirical Kloosterman growth scan as JSON")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_scan_bound)

    p = sub.add_parser("verify", help="run the cross-identity suites")
    p.add_argument("--grid", choices=sorted(GRIDS), default="default")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (FalseThetaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
