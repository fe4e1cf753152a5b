#!/usr/bin/env python3
"""Secret-key throughput versus bit-cell period for two compression amounts.

The pulse rate is the inverse of the bit-cell period; detection probability
scales down with the period to mimic a link that gets slower as it gets
longer.  The absolute numbers are illustrative parameter choices -- the
content is the constant vertical offset between the g=30 and g=60 curves
(30 bits per block, at the block rate of each operating point).
"""

import argparse
import pathlib

from pa_kit import LinkModel, throughput_curve


def build_points(n_points, p_click_at_1mhz, leak_fraction, block_size):
    points = []
    for i in range(n_points):
        period = 1e-6 * 2.0**i  # 1 MHz down to ~2 kHz
        p_click = p_click_at_1mhz * (1e-6 / period) ** 0.25
        points.append(
            (
                period,
                LinkModel(
                    prf_hz=1.0 / period,
                    p_click=p_click,
                    leak_fraction=leak_fraction,
                    block_size_m=block_size,
                ),
            )
        )
    return points


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=10)
    parser.add_argument("--p-click", type=float, default=1.2e-2)
    parser.add_argument("--leak-fraction", type=float, default=0.06)
    parser.add_argument("--block-size", type=int, default=3300)
    parser.add_argument("--g", type=int, nargs="+", default=[30, 60])
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("out/throughput.csv"))
    args = parser.parse_args()

    points = build_points(args.points, args.p_click, args.leak_fraction, args.block_size)
    rows = throughput_curve(points, args.g)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", encoding="ascii", newline="") as fh:
        fh.write("# pa-kit v1\n")
        fh.write("period_s,g,rate_bps\n")
        for period, g, rate in rows:
            fh.write(f"{period!r},{g},{rate!r}\n")

    print(f"wrote {len(rows)} rows -> {args.out}")
    print(f"{'period_s':>12} " + " ".join(f"g={g:>4}" for g in args.g))
    by_period: dict[float, dict[int, float]] = {}
    for period, g, rate in rows:
        by_period.setdefault(period, {})[g] = rate
    for period in sorted(by_period):
        rates = by_period[period]
        print(f"{period:12.2e} " + " ".join(f"{rates[g]:6.0f}" for g in args.g))


if __name__ == "__main__":
    main()
