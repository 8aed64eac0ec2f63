"""Command-line front end: reach, classify, solve, sweep, oracle, serve."""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Sequence

from .core import ArmSpec, EndEffectorTarget
from .design import solve, sweep
from .presets import PRESETS
from .reach import reach_closed
from .service import create_app, parse_lengths, solve_payload
from .topology import block_label, classify_connectivity, path_class, state_block
from .verify import brute_force_components


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _add_lengths(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lengths",
        required=True,
        help="comma-separated segment lengths, base first (e.g. 3,2,1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="armkin",
        description="Planar-arm reach, configuration-space topology and paired IK",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reach", help="attainable base-length interval")
    _add_lengths(p)

    p = sub.add_parser("classify", help="component count and state block at a base length")
    _add_lengths(p)
    p.add_argument("--z", type=float, required=True)

    p = sub.add_parser("solve", help="one configuration per component for a target")
    _add_lengths(p)
    p.add_argument("--target", required=True, help="target as X,Y")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("sweep", help="evaluate the IK pair over a base-length grid")
    _add_lengths(p)
    p.add_argument("--from", dest="z_from", type=float, required=True)
    p.add_argument("--to", dest="z_to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV output path")

    p = sub.add_parser("oracle", help="brute-force component census")
    _add_lengths(p)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--resolution", type=int, default=64)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")

    sub.add_parser("presets", help="list preset arms")
    return parser


def write_sweep_csv(path: str, spec: ArmSpec, z_from: float, z_to: float, steps: int) -> None:
    rows = sweep(spec, z_from, z_to, steps)
    n = spec.n
    header = (
        ["z", "block", "components"]
        + [f"ik1_theta{i}" for i in range(n)]
        + [f"ik2_theta{i}" for i in range(n)]
    )
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [_fmt(row.z), row.block, row.components]
                + [_fmt(a) for a in row.first.angles]
                + [_fmt(a) for a in row.second.angles]
            )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "reach":
            interval = reach_closed(parse_lengths(args.lengths).lengths)
            print(f"lo={interval.lo:g} hi={interval.hi:g}")
            return 0

        if args.command == "classify":
            spec = parse_lengths(args.lengths)
            conn = classify_connectivity(spec, args.z)
            variant = path_class(spec).variant
            if conn.components == 0:
                print(f"components=0 block=unreachable class={variant}")
                return 0
            block = block_label(state_block(spec, args.z))
            print(f"components={conn.components} block={block} class={variant}")
            return 0

        if args.command == "solve":
            spec = parse_lengths(args.lengths)
            try:
                x_str, y_str = args.target.split(",")
                target = EndEffectorTarget(float(x_str), float(y_str))
            except ValueError as exc:
                print(f"bad target {args.target!r}: {exc}", file=sys.stderr)
                return 2
            if args.format == "json":
                status, body = solve_payload(spec, target.qx, target.qy)
                print(json.dumps(body, sort_keys=True))
                return 0
            result = solve(spec, target)
            if not result.reachable:
                if args.format == "csv":
                    print("unreachable")
                else:
                    print(
                        f"unreachable z={_fmt(result.z)} "
                        f"reach_lo={_fmt(result.reach.lo)} reach_hi={_fmt(result.reach.hi)}"
                    )
                return 0
            if args.format == "csv":
                for cfg in result.configurations:
                    print(",".join(_fmt(a) for a in cfg.angles))
            else:
                print(f"z={_fmt(result.z)} components={result.components}")
                for i, cfg in enumerate(result.configurations, 1):
                    print(f"config{i}: " + " ".join(_fmt(a) for a in cfg.angles))
            return 0

        if args.command == "sweep":
            spec = parse_lengths(args.lengths)
            write_sweep_csv(args.out, spec, args.z_from, args.z_to, args.steps)
            print(f"wrote {args.steps} rows to {args.out}")
            return 0

        if args.command == "oracle":
            spec = parse_lengths(args.lengths)
            count = brute_force_components(spec, args.z, args.resolution)
            print(f"components={count}")
            return 0

        if args.command == "presets":
            for p in PRESETS:
                print(f"{p['name']}: " + ",".join(str(v) for v in p["lengths"]))
            return 0

        if args.command == "serve":
            import uvicorn

            port = int(os.environ.get("ARMKIN_PORT", args.port))
            uvicorn.run(create_app(), host=args.host, port=port)
            return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
