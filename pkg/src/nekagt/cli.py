"""Command line entry point: ``nekagt nek | block | check <name>``."""
import argparse
import json
import sys
from fractions import Fraction

from .checks import CHECKS, CheckSpec, fmt, run_check
from .errors import NekAGTError
from .exactmath import random_point
from .nekrasov import GaugeConfig, Z_direct
from .virasoro import agt_substitution, block


def parse_charges(text):
    if text is None:
        return None
    try:
        return tuple(int(k) for k in text.split(",") if k.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"charges must be comma-separated integers, got {text!r}")


def _common(p):
    p.add_argument("--rank", type=int, help="rank r of the gauge group")
    p.add_argument("--points", type=int, help="number of punctures N")
    p.add_argument("--order", type=int, help="truncation order in q")
    p.add_argument("--degree", type=int, help="size or degree bound")
    p.add_argument("--seed", type=int, default=0, help="seed for random rational parameters")
    p.add_argument("--mode", choices=("special", "generic"), default="special")
    p.add_argument("--charges", type=parse_charges, help="integer charges k1,k2,...")
    p.add_argument("--format", choices=("json", "text"), default="text", dest="fmt")
    p.add_argument("--out", help="write the output to this path instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="nekagt", description="Exact checks of AGT at c = 1.")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("nek", help="instanton partition function Z to a given order"))
    _common(sub.add_parser("block", help="torus conformal block to a given order"))
    check = sub.add_parser("check", help="run a verification pipeline")
    check.add_argument("name", choices=CHECKS)
    _common(check)
    return parser


def _parameters(args):
    """Gauge parameters: special points a_i = k_i + 1/4 at t = (1, -1), or random generic ones."""
    N = args.points or (len(args.charges) if args.charges else 1)
    r = args.rank or 2
    if args.mode == "special":
        ks = args.charges or tuple(range(N))
        if len(ks) != N:
            raise ValueError("need one charge per puncture")
        point = random_point(args.seed, [f"m{i}" for i in range(N)])
        a = [Fraction(k) + Fraction(1, 4) for k in ks]
        return N, r, Fraction(1), Fraction(-1), a, [point[f"m{i}"] for i in range(N)]
    names = ["t1", "t2"] + [f"a{i}" for i in range(N)] + [f"m{i}" for i in range(N)]
    p = random_point(args.seed, names)
    return N, r, p["t1"], p["t2"], [p[f"a{i}"] for i in range(N)], [p[f"m{i}"] for i in range(N)]


def _framing(a, r):
    # (a, -a) at rank two, as in the AGT dictionary; evenly spaced otherwise
    if r == 2:
        return [a, -a]
    return [a * (r - 1 - 2 * j) for j in range(r)]


def _series_payload(series, params):
    coeffs = {"*".join(map(str, e)): fmt(c) for e, c in sorted(series.coeffs.items())}
    return {"parameters": params, "order": series.order, "coefficients": coeffs}


def run_nek(args):
    N, r, t1, t2, a, m = _parameters(args)
    order = 2 if args.order is None else args.order
    if N > 1 and t1 + t2 != 0:
        raise ValueError("N > 1 needs t1 + t2 = 0 (use --mode special)")
    cfg = GaugeConfig(r=r, a=[_framing(x, r) for x in a], m=m, t1=t1, t2=t2, order=order)
    series = Z_direct(cfg)
    params = {"r": r, "N": N, "t1": fmt(t1), "t2": fmt(t2), "a": [fmt(x) for x in a], "m": [fmt(x) for x in m]}
    return series, params


def run_block(args):
    N, _, t1, t2, a, m = _parameters(args)
    order = 2 if args.order is None else args.order
    c, ks, hs = agt_substitution(t1, t2, a, m)
    series = block(c, ks, hs, order)
    params = {"c": fmt(c), "k": [fmt(x) for x in ks], "h": [fmt(x) for x in hs]}
    return series, params


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _text_report(report):
    lines = [f"{report.check}: {report.status.upper()} ({report.comparisons} comparisons, "
             f"{report.elapsed_ms} ms, seeds {report.seeds_used})"]
    lines += [f"  note: {n}" for n in report.notes]
    for mm in report.mismatches[:20]:
        lines.append(f"  mismatch at {mm['location']}: expected {mm['expected']}, got {mm['actual']}")
    if len(report.mismatches) > 20:
        lines.append(f"  ... {len(report.mismatches) - 20} more")
    return "\n".join(lines)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            spec = CheckSpec(args.name, rank=args.rank, points=args.points, order=args.order,
                             degree=args.degree, seed=args.seed, mode=args.mode, charges=args.charges)
            report = run_check(spec)
            text = json.dumps(report.to_dict(), indent=2) if args.fmt == "json" else _text_report(report)
            _emit(text, args.out)
            return report.exit_code()
        series, params = (run_nek if args.command == "nek" else run_block)(args)
        if args.fmt == "json":
            text = json.dumps(_series_payload(series, params), indent=2)
        else:
            text = f"{params}\n{series!r}"
        _emit(text, args.out)
        return 0
    except (ValueError, NekAGTError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, NekAGTError) else 1


if __name__ == "__main__":
    sys.exit(main())
