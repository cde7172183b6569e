"""Command-line front end: solve | batch | sweep | compare.

Angles are accepted and printed in degrees only. Exit codes: 0 on success,
2 on any usage or validation error.
"""

import argparse
import json
import sys

from .errors import DomainError
from .family import family_sweep
from .harness import REGIMES, ComparisonReport, CorpusSpec, compare_methods, compare_regimes, generate_corpus
from .solver import SasProblem, TriangleSolution, solve_sas_cosines, solve_sas_sines
from .trig import angle_from_half_tangent

_SOLVERS = {"sines": solve_sas_sines, "cosines": solve_sas_cosines}


def _solution_dict(sol: TriangleSolution) -> dict:
    return {
        "a": sol.a,
        "b": sol.b,
        "c": sol.c,
        "theta_deg": sol.theta_deg,
        "phi_deg": sol.phi_deg,
        "omega_deg": sol.omega_deg,
        "method": sol.method,
        "residual": sol.residual,
    }


def _print_solution_text(sol: TriangleSolution) -> None:
    print(f"method = {sol.method}")
    for key in ("a", "b", "c", "theta_deg", "phi_deg", "omega_deg"):
        print(f"{key} = {getattr(sol, key):.6f}")
    print(f"residual = {sol.residual:.6e}")


def cmd_solve(args) -> int:
    if (args.omega_deg is None) == (args.tan_half_omega is None):
        print("error: provide exactly one of --omega-deg or --tan-half-omega", file=sys.stderr)
        return 2
    omega = args.omega_deg
    if omega is None:
        omega = angle_from_half_tangent(args.tan_half_omega)
    problem = SasProblem(a=args.a, b=args.b, omega_deg=omega)
    methods = ("sines", "cosines") if args.method == "both" else (args.method,)
    solutions = [_SOLVERS[m](problem) for m in methods]
    if args.format == "json":
        payload = [_solution_dict(s) for s in solutions]
        print(json.dumps(payload[0] if len(payload) == 1 else payload))
    else:
        for i, sol in enumerate(solutions):
            if i:
                print()
            _print_solution_text(sol)
    return 0


def _parse_batch_rows(lines):
    """Yield (line_number, parsed_or_error) for 'a,b,omega_deg' rows."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        try:
            values = [float(p) for p in parts]
        except ValueError:
            if lineno == 1:  # header row is permitted
                continue
            yield lineno, line, None, "row is not numeric"
            continue
        if len(values) != 3:
            yield lineno, line, None, "expected exactly 3 fields: a,b,omega_deg"
            continue
        yield lineno, line, values, None


def cmd_batch(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    solver = _SOLVERS[args.method]
    results = []
    for lineno, raw, values, parse_error in _parse_batch_rows(lines):
        if parse_error is not None:
            results.append({"error": parse_error, "input": {"row": raw, "line": lineno}})
            continue
        a, b, omega = values
        try:
            sol = solver(SasProblem(a=a, b=b, omega_deg=omega))
        except DomainError as exc:
            results.append({"error": str(exc), "input": {"a": a, "b": b, "omega_deg": omega}})
            continue
        results.append(_solution_dict(sol))
    if args.format == "json":
        print(json.dumps(results))
    else:
        print("a,b,omega_deg,theta_deg,phi_deg,c,method,residual,error")
        for rec in results:
            if "error" in rec:
                inp = rec["input"]
                a = inp.get("a", "")
                b = inp.get("b", "")
                w = inp.get("omega_deg", "")
                msg = rec["error"].replace(",", ";")
                print(f"{a},{b},{w},,,,,,{msg}")
            else:
                print(
                    f"{rec['a']:.17g},{rec['b']:.17g},{rec['omega_deg']:.17g},"
                    f"{rec['theta_deg']:.17g},{rec['phi_deg']:.17g},{rec['c']:.17g},"
                    f"{rec['method']},{rec['residual']:.17g},"
                )
    return 0


def cmd_sweep(args) -> int:
    samples = family_sweep(args.r_min, args.r_max, args.n, args.b)
    print("r,sin_theta,sin_phi,theta_deg,phi_deg,c_over_b")
    for s in samples:
        print(
            f"{s.r:.17g},{s.sin_theta:.17g},{s.sin_phi:.17g},"
            f"{s.theta_deg:.17g},{s.phi_deg:.17g},{s.c_over_b:.17g}"
        )
    return 0


def _print_report_text(report: ComparisonReport) -> None:
    for regime, agg in report.aggregates.items():
        print(f"regime {regime} ({agg['count']} problems)")
        for method in ("sines", "cosines"):
            stats = agg[method]
            print(
                f"  {method}: solved={stats['solved']} failures={stats['failures']}"
            )
            for field in ("c_rel", "theta_rel", "phi_rel"):
                mx, med = stats[f"max_{field}"], stats[f"median_{field}"]
                if mx is None:
                    print(f"    {field}: n/a")
                else:
                    print(f"    {field}: max={mx:.3e} median={med:.3e}")


def cmd_compare(args) -> int:
    if args.regime == "all":
        report = compare_regimes(args.count, args.seed)
    else:
        spec = CorpusSpec(regime=args.regime, count=args.count, seed=args.seed)
        report = compare_methods(generate_corpus(spec), regime=args.regime)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        _print_report_text(report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisolve",
        description="Solve SAS triangles (tangent half-angle pipeline) and "
        "measure the accuracy of the competing methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one SAS triangle")
    p.add_argument("--a", type=float, required=True, help="side opposite theta")
    p.add_argument("--b", type=float, required=True, help="side opposite phi")
    p.add_argument("--omega-deg", type=float, help="included angle in degrees")
    p.add_argument("--tan-half-omega", type=float, help="tan(omega/2) instead of omega")
    p.add_argument("--method", choices=("sines", "cosines", "both"), default="sines")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("batch", help="solve a CSV of 'a,b,omega_deg' rows")
    p.add_argument("--input", required=True, help="input CSV path")
    p.add_argument("--method", choices=("sines", "cosines"), default="sines")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("sweep", help="sample the r-family (a/b = r, omega = 60)")
    p.add_argument("--r-min", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=float, default=1.0)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", help="compare both methods against the reference")
    p.add_argument("--regime", choices=REGIMES + ("all",), required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
