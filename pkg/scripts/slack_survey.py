#!/usr/bin/env python3
"""Survey the gap between the 1-skeleton quotient dimension and the
signless Laplacian determinant over random multigraphs.

The dimension always dominates the determinant; this script measures by
how much, bucketed by vertex count, and prints which fraction of
instances is tight (gap zero, as for the root-deletion family).

Usage:
    python scripts/slack_survey.py [--trials 400] [--n-max 5]
                                   [--mult-max 3] [--seed 0]
"""

from __future__ import annotations

import argparse
from collections import defaultdict

from parkdet.exact_linalg import det
from parkdet.monomial_ideals import skeleton_ideal
from parkdet.multigraph import laplacians, random_multigraph
from parkdet.rng import SplitMix64
from parkdet.standard_count import count_standard


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=400)
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--mult-max", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = SplitMix64(args.seed)
    stats = defaultdict(lambda: {"count": 0, "tight": 0, "max_gap": 0, "sum_rel": 0.0})
    for _ in range(args.trials):
        n = rng.randint(2, args.n_max)
        g = random_multigraph(n, args.mult_max, rng.next_u64())
        dim = count_standard(skeleton_ideal(g, 1))
        dt = det(laplacians(g).qtilde)
        assert dim >= dt, f"inequality violated: {g}"
        gap = dim - dt
        bucket = stats[n]
        bucket["count"] += 1
        bucket["tight"] += gap == 0
        bucket["max_gap"] = max(bucket["max_gap"], gap)
        if dim:
            bucket["sum_rel"] += gap / dim

    print(f"{'n':>3} {'trials':>7} {'tight':>7} {'max gap':>10} {'mean gap/dim':>13}")
    for n in sorted(stats):
        b = stats[n]
        print(f"{n:>3} {b['count']:>7} {b['tight']:>7} {b['max_gap']:>10} "
              f"{b['sum_rel'] / b['count']:>13.3f}")


if __name__ == "__main__":
    main()
