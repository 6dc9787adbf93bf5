#!/usr/bin/env python3
"""Print the mixing-angle thresholds and where the stored experiments land.

For each coherence measure: the smallest angle whose fully decohered
limit still beats the measure's bound, then per experiment the
asymptotic score and whether it certifies steering at long baselines.
"""

import math

from nunaqc.analysis import asymptotic_probabilities, threshold_angle
from nunaqc.naqc import MEASURES, naqc_bound, naqc_closed
from nunaqc.oscillation import PRESET_NAMES, preset


def main() -> int:
    print("measure  bound        threshold_rad   threshold_deg")
    for measure in MEASURES:
        theta = threshold_angle(measure)
        print(
            f"{measure:<8} {naqc_bound(measure):<12.10g} "
            f"{theta:<15.10g} {math.degrees(theta):<.6g}"
        )

    print()
    print(f"{'experiment':<12} {'theta_deg':<10} " + " ".join(f"{m:>10}" for m in MEASURES))
    for name in PRESET_NAMES:
        p = preset(name)
        probs = asymptotic_probabilities(p.theta_rad)
        cells = []
        for measure in MEASURES:
            score = naqc_closed(probs, measure)
            mark = "*" if score > naqc_bound(measure) else " "
            cells.append(f"{score:>9.5f}{mark}")
        print(f"{p.name:<12} {math.degrees(p.theta_rad):<10.4g} " + " ".join(cells))
    print()
    print("* asymptotic score exceeds the measure's bound")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
