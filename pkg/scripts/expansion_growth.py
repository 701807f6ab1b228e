#!/usr/bin/env python3
"""Growth survey of reduced partial unions.

Expands the reflection system of a theta graph and the built-in rank-2
one-relator-style fixture to increasing depths and tabulates copy, vertex,
and edge counts, plus the degree trace of a tracked essential vertex.
"""

import argparse
import warnings

from tog.jsj_frontend import golden_g2, synthesize
from tog.multigraph import is_two_connected, theta_graph
from tog.rcs import analyze_point, expand_to_depth, init, reflection_system


def survey(name, sys_, root_vertex, max_depth, resolution, cap):
    print(f"== {name} (r={resolution}) ==")
    print(f"{'depth':>5} {'copies':>7} {'vertices':>9} {'edges':>7} {'2conn':>6}")
    pus = []
    for d in range(max_depth + 1):
        pu = expand_to_depth(init(sys_, 0, resolution, cap=cap), d)
        pus.append(pu)
        print(
            f"{d:>5} {len(pu.nodes):>7} {len(pu.vertices):>9} "
            f"{len(pu.edges):>7} {str(is_two_connected(pu.graph)):>6}"
        )
    if root_vertex is not None:
        trace = analyze_point(pus, ("n", root_vertex))
        degrees = [e["degree"] for e in trace.entries]
        print(f"tracked vertex {root_vertex}: degrees by depth = {degrees}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-depth", type=int, default=3)
    ap.add_argument("--resolution", type=int, default=2)
    ap.add_argument("--cap", type=int, default=100000)
    args = ap.parse_args()

    refl = reflection_system(theta_graph(3))
    survey("reflection theta_3", refl, "c0:u", args.max_depth, args.resolution, args.cap)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g2, _ = synthesize(golden_g2())
        # K4 has no unique same-degree lift, so no vertex trace here
        survey("rank-2 rigid cluster fixture", g2, None,
               min(args.max_depth, 2), args.resolution, args.cap)


if __name__ == "__main__":
    main()
