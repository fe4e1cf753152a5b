"""Command-line front end: plan, tradeoff, amplify, verify, throughput.

Every subcommand is deterministic given its flags (including --seed), so
repeated runs produce byte-identical files.  Exit codes: 0 success and all
verification inequalities holding, 1 a verification inequality violated,
2 invalid input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures
from .amplification import amplify
from .distributions import load_eve_csv
from .errors import PaKitError
from .hashing import HashSpec, read_key_file, sample_hash, write_key_file
from .planner import plan_from_targets, tradeoff_table
from .throughput import LinkModel, throughput_curve
from .verification import (
    DEFAULT_BETA_GRID,
    Exhaustive,
    MonteCarlo,
    empirical_failure_rate,
    verify_tail_bound,
)

FILE_HEADER = "# pa-kit v1"


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def _float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part]


def cmd_plan(args: argparse.Namespace) -> int:
    plan = plan_from_targets(args.i_max, args.pf_max)
    doc = {"format": "pa-kit v1", **plan.to_dict()}
    print(json.dumps(doc, sort_keys=True, indent=2))
    return 0


def cmd_tradeoff(args: argparse.Namespace) -> int:
    lines = [FILE_HEADER, "g_prime,g_dprime,i_bound,p_fail"]
    for row in tradeoff_table(args.g):
        lines.append(f"{row.g_prime},{row.g_dprime},{row.i_bound!r},{row.p_fail!r}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_amplify(args: argparse.Namespace) -> int:
    key = read_key_file(args.key, fmt=args.key_format, length=args.key_bits)
    if args.spec is not None:
        with open(args.spec, "r", encoding="ascii") as fh:
            spec = HashSpec.from_json(fh.read())
    else:
        if args.k is None:
            raise PaKitError("either --spec or --k (with --family/--seed) is required")
        spec = sample_hash(args.family, key.length, args.k, args.seed)
        print(spec.to_json())
        if args.spec_out is not None:
            _write_text(args.spec_out, spec.to_json() + "\n")
    out = amplify(key, spec)
    write_key_file(out, args.out, fmt=args.key_format)
    return 0


def _verify_mode(args: argparse.Namespace):
    if args.mode == "exhaustive":
        return Exhaustive()
    return MonteCarlo(samples=args.samples, rng_seed=args.seed)


def cmd_verify(args: argparse.Namespace) -> int:
    if (args.fixture is None) == (args.dist is None):
        raise PaKitError("exactly one of --fixture or --dist is required")
    if args.fixture is not None:
        eve = fixtures.by_name(args.fixture, args.n, seed=args.fixture_seed)
    else:
        eve = load_eve_csv(args.dist, args.n)
    mode = _verify_mode(args)
    report = verify_tail_bound(eve, args.family, args.k, args.beta, mode)
    doc = report.to_dict()
    failure_ok = True
    if args.g_prime:
        rates = [
            empirical_failure_rate(eve, args.family, args.k, gp, mode)
            for gp in args.g_prime
        ]
        doc["failure_rates"] = [r.to_dict() for r in rates]
        failure_ok = all(r.holds for r in rates)
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    _write_text(args.out, text)
    return 0 if report.passed and failure_ok else 1


def _models_from_config(path: str) -> tuple[list[tuple[float, LinkModel]], list[int]]:
    with open(path, "r", encoding="ascii") as fh:
        doc = json.load(fh)
    points = []
    for entry in doc["points"]:
        period = float(entry["period_s"])
        model = LinkModel(
            prf_hz=float(entry.get("prf_hz", 1.0 / period)),
            p_click=float(entry["p_click"]),
            leak_fraction=float(entry["leak_fraction"]),
            block_size_m=int(entry["block_size_m"]),
            sift_fraction=float(entry.get("sift_fraction", 0.5)),
        )
        points.append((period, model))
    return points, [int(g) for g in doc["g_values"]]


def cmd_throughput(args: argparse.Namespace) -> int:
    if args.config is not None:
        points, g_values = _models_from_config(args.config)
    else:
        if not args.periods:
            raise PaKitError("either --config or --periods is required")
        points = [
            (
                period,
                LinkModel(
                    prf_hz=1.0 / period,
                    p_click=args.p_click,
                    leak_fraction=args.leak_fraction,
                    block_size_m=args.block_size,
                    sift_fraction=args.sift_fraction,
                ),
            )
            for period in args.periods
        ]
        g_values = args.g
    rows = throughput_curve(points, g_values)
    lines = [FILE_HEADER, "period_s,g,rate_bps"]
    for period, g, rate in rows:
        lines.append(f"{period!r},{g},{rate!r}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pa-kit",
        description="Privacy-amplification planning, hashing, and bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="turn secrecy/failure targets into a compression plan")
    p.add_argument("--i-max", type=float, required=True,
                   help="upper bound to enforce on the eavesdropper information (bits)")
    p.add_argument("--pf-max", type=float, required=True,
                   help="acceptable failure probability for that bound")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("tradeoff", help="tabulate all splits of g as CSV")
    p.add_argument("--g", type=int, required=True, help="total extra compression bits")
    p.add_argument("--out", default=None, help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_tradeoff)

    p = sub.add_parser("amplify", help="compress a key file with a universal hash")
    p.add_argument("--key", required=True, help="input key file")
    p.add_argument("--key-format", choices=("hex", "raw"), default="hex")
    p.add_argument("--key-bits", type=int, default=None,
                   help="exact input bit count when not a byte multiple")
    p.add_argument("--spec", default=None, help="hash spec JSON file to apply")
    p.add_argument("--family", choices=("toeplitz", "toeplitz-affine"),
                   default="toeplitz", help="family when sampling a fresh spec")
    p.add_argument("--k", type=int, default=None, help="output bits when sampling")
    p.add_argument("--seed", type=int, default=0, help="PRNG seed when sampling")
    p.add_argument("--spec-out", default=None, help="also save the sampled spec JSON here")
    p.add_argument("--out", required=True, help="output key file")
    p.set_defaults(func=cmd_amplify)

    p = sub.add_parser("verify", help="run the desk-scale bound checks, JSON report out")
    p.add_argument("--fixture", choices=fixtures.FIXTURE_NAMES, default=None)
    p.add_argument("--fixture-seed", type=int, default=1,
                   help="seed for the random-sparse fixture")
    p.add_argument("--dist", default=None, help="index,probability CSV to verify against")
    p.add_argument("--n", type=int, required=True, help="key bit-length")
    p.add_argument("--k", type=int, required=True, help="output bit-length")
    p.add_argument("--family", choices=("toeplitz", "toeplitz-affine"),
                   default="toeplitz")
    p.add_argument("--mode", choices=("exhaustive", "monte-carlo"), default="exhaustive")
    p.add_argument("--samples", type=int, default=100_000, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0, help="Monte Carlo PRNG seed")
    p.add_argument("--beta", type=_float_list, default=list(DEFAULT_BETA_GRID),
                   help="comma-separated tail thresholds")
    p.add_argument("--g-prime", type=_int_list, default=[],
                   help="comma-separated g' values for failure-rate rows")
    p.add_argument("--out", default=None, help="report path (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("throughput", help="tabulate secret rate vs bit-cell period as CSV")
    p.add_argument("--config", default=None, help="JSON config with points and g_values")
    p.add_argument("--periods", type=_float_list, default=None,
                   help="comma-separated bit-cell periods in seconds (pulse rate = 1/period)")
    p.add_argument("--p-click", type=float, default=None, help="detection probability per pulse")
    p.add_argument("--sift-fraction", type=float, default=0.5)
    p.add_argument("--leak-fraction", type=float, default=None,
                   help="fraction of sifted bits disclosed by error correction")
    p.add_argument("--block-size", type=int, default=None,
                   help="sifted bits per privacy-amplification block")
    p.add_argument("--g", type=_int_list, default=[30, 60],
                   help="comma-separated extra-compression amounts")
    p.add_argument("--out", default=None, help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_throughput)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PaKitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
