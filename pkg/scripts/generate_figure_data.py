#!/usr/bin/env python3
"""Emit the CSV series and bound constants the figure renderer consumes.

Writes one wave-packet sweep per stored experiment, the wave-packet /
plane-wave pair for the 20-degree scenario, and bounds.json.  Everything
goes through the nunaqc CLI so the files carry the exact public schema.
"""

import argparse
import json
import math
import sys
from importlib import resources
from pathlib import Path

from nunaqc import cli


def scenario_flags(name: str) -> list[str]:
    with resources.files("nunaqc").joinpath("data/sweep_defaults.json").open() as fh:
        scenario = json.load(fh)["scenarios"][name]
    return [
        "--theta-rad",
        repr(math.radians(scenario["theta_deg"])),
        "--dm2-ev2",
        repr(scenario["dm2_ev2"]),
        "--energy-mev",
        repr(scenario["energy_mev"]),
        "--sigma-x-m",
        repr(scenario["sigma_x_m"]),
        "--xi",
        repr(scenario["xi"]),
        "--lmin-m",
        repr(scenario["lmin_m"]),
        "--lmax-m",
        repr(scenario["lmax_m"]),
        "--points",
        str(scenario["points"]),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="figure_data", help="output directory")
    parser.add_argument("--points", type=int, help="override the per-sweep point count")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    override = ["--points", str(args.points)] if args.points else []

    jobs = []
    for experiment in ("dayabay", "kamland", "minos"):
        jobs.append(
            (f"{experiment}.csv", ["sweep", "--experiment", experiment] + override)
        )
    for model in ("wavepacket", "planewave"):
        jobs.append(
            (
                f"angle20_{model}.csv",
                ["sweep", "--model", model] + scenario_flags("angle20") + override,
            )
        )
    jobs.append(("bounds.json", ["constants"]))

    for filename, argv in jobs:
        target = outdir / filename
        code = cli.main(argv + ["--out", str(target)])
        if code != cli.EXIT_OK:
            print(f"generation failed for {filename} (exit {code})", file=sys.stderr)
            return code
        print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
