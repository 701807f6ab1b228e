#!/usr/bin/env python3
"""Round-trip experiment for theta-sum decomposition.

Generates random iterated connected sums of thick theta graphs, decomposes
them, and checks that the recovered summand multiset matches the construction
and that replaying the recorded splits reproduces the graph cell-for-cell.
"""

import argparse
import random
import sys
import time

sys.path.insert(0, "tests")
from generators import random_theta_sum  # noqa: E402

from tog.twin_theta import theta_sum_decomposition  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.monotonic()
    size_hist = {}
    for i in range(args.trials):
        g, sizes = random_theta_sum(rng)
        tree = theta_sum_decomposition(g)
        assert sorted(tree.summands) == sizes, (sorted(tree.summands), sizes)
        assert tree.replay() == g, "replay did not reproduce the input graph"
        size_hist[len(sizes)] = size_hist.get(len(sizes), 0) + 1
    elapsed = time.monotonic() - t0
    print(f"{args.trials} round trips OK in {elapsed:.2f}s")
    print("summand-count histogram:", dict(sorted(size_hist.items())))


if __name__ == "__main__":
    main()
