"""Command-line surface.

Subcommands: center, radius, hausdorff, nnet-dist, verify, plot-data.
Exit codes: 0 success / no violations, 1 violations found, 2 input or
usage error.  Campaign seeds default to a fixed constant, never the clock;
identical flags and seed produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .chebyshev import cheb_l2, cheb_linf
from .cloudio import read_cloud
from .metrics import hausdorff, nnet_dist
from .policy import DEFAULT_SEED
from .serialize import dumps, format_float
from .verify import CHECKS, ROW_COLUMNS, CampaignConfig, run_check

ALL_CHECKS = tuple(CHECKS)


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) == 1:
        lo = hi = int(parts[0])
    elif len(parts) == 2:
        lo, hi = int(parts[0]), int(parts[1])
    else:
        raise ValueError(f"expected min:max, got {text!r}")
    return lo, hi


def _campaign_config(args) -> CampaignConfig:
    return CampaignConfig(
        seed=args.seed,
        trials=args.trials,
        dim_range=_parse_range(args.dim),
        n_points_range=_parse_range(args.points),
        eps_range=(0.0, args.eps),
    )


def _add_cloud_flags(sub):
    sub.add_argument("--norm", choices=("linf", "l2"), default="linf")
    sub.add_argument("--format", choices=("auto", "doc", "rows"), default="auto",
                     help="cloud file format (auto-detected by default)")


def _add_campaign_flags(sub):
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--trials", type=int, default=1000)
    sub.add_argument("--dim", default="2:8", help="dimension range min:max")
    sub.add_argument("--points", default="1:32", help="cloud size range min:max")
    sub.add_argument("--eps", type=float, default=1.0, help="largest perturbation size")
    sub.add_argument("--out", default=None, help="output file path")


def cmd_center(args) -> int:
    cloud = read_cloud(args.cloud, args.format)
    if args.norm == "linf":
        res = cheb_linf(cloud)
        doc = {
            "norm": "linf",
            "radius": res.radius,
            "box": {"lo": res.center_set.lo, "hi": res.center_set.hi},
        }
    else:
        res = cheb_l2(cloud, seed=args.seed)
        doc = {"norm": "l2", "radius": res.radius, "center": res.center, "seed": args.seed}
    sys.stdout.write(dumps(doc))
    return 0


def cmd_radius(args) -> int:
    cloud = read_cloud(args.cloud, args.format)
    if args.norm == "linf":
        value = cheb_linf(cloud).radius
    else:
        value = cheb_l2(cloud, seed=args.seed).radius
    print(format_float(value))
    return 0


def cmd_hausdorff(args) -> int:
    a = read_cloud(args.cloud_a, args.format)
    b = read_cloud(args.cloud_b, args.format)
    print(format_float(hausdorff(a, b, args.norm)))
    return 0


def cmd_nnet_dist(args) -> int:
    a = read_cloud(args.cloud_a, args.format)
    b = read_cloud(args.cloud_b, args.format)
    print(format_float(nnet_dist(a, b, args.norm)))
    return 0


def cmd_verify(args) -> int:
    names = ALL_CHECKS if args.check == "all" else (args.check,)
    cfg = _campaign_config(args)
    reports = [run_check(name, cfg) for name in names]
    for report in reports:
        print(report.summary_line())
    if args.out is not None:
        if len(reports) == 1:
            text = reports[0].to_text()
        else:
            text = dumps({"reports": [r.to_doc() for r in reports]})
        Path(args.out).write_text(text)
    return 0 if all(r.passed for r in reports) else 1


def _format_cell(value) -> str:
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def cmd_plot_data(args) -> int:
    header = "\t".join(ROW_COLUMNS[args.check])
    if args.trials == 0:
        body: list[str] = []
        passed = True
    else:
        rows: list = []
        report = run_check(args.check, _campaign_config(args), rows=rows)
        body = ["\t".join(_format_cell(v) for v in row) for row in rows]
        passed = report.passed
    text = "\n".join([header, *body]) + "\n"
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebstab",
        description="Chebyshev centers, cloud metrics, and stability certification campaigns.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("center", help="Chebyshev radius and center set of a cloud")
    sub.add_argument("cloud", help="cloud file")
    _add_cloud_flags(sub)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.set_defaults(func=cmd_center)

    sub = subs.add_parser("radius", help="Chebyshev radius of a cloud")
    sub.add_argument("cloud", help="cloud file")
    _add_cloud_flags(sub)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.set_defaults(func=cmd_radius)

    sub = subs.add_parser("hausdorff", help="Hausdorff distance between two clouds")
    sub.add_argument("cloud_a")
    sub.add_argument("cloud_b")
    _add_cloud_flags(sub)
    sub.set_defaults(func=cmd_hausdorff)

    sub = subs.add_parser("nnet-dist", help="bottleneck distance between equal-size clouds")
    sub.add_argument("cloud_a")
    sub.add_argument("cloud_b")
    _add_cloud_flags(sub)
    sub.set_defaults(func=cmd_nnet_dist)

    sub = subs.add_parser("verify", help="run a certification campaign")
    sub.add_argument("check", choices=ALL_CHECKS + ("all",))
    _add_campaign_flags(sub)
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("plot-data", help="emit per-trial campaign rows for plotting")
    sub.add_argument("check", choices=ALL_CHECKS)
    _add_campaign_flags(sub)
    sub.set_defaults(func=cmd_plot_data)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
