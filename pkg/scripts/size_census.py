#!/usr/bin/env python3
"""Census of the size notions over every subset of a small group.

For each kappa, counts how many subsets are left large / left thick (both
variants) / left small, and how often the two thickness variants disagree.
A compact way to see the implication lattice and the variant gap at finite
scale.
"""

from __future__ import annotations

import argparse

from kappasets import classify as cl
from kappasets.classify import NodeCounter, effective_node_budget
from kappasets.groups import build_group


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="cyclic:6")
    args = ap.parse_args()

    G = build_group(args.group)
    n = G.order
    counter = NodeCounter(effective_node_budget())
    print(f"group {args.group} (order {n}), left side")
    print(f"{'kappa':>5s} {'large':>6s} {'thickG':>6s} {'thickA':>6s} {'gap':>4s} {'small':>6s}")
    for kappa in range(2, n + 1):
        limit = kappa - 1
        large = thick_g = thick_a = gap = small = 0
        for amask in range(1 << n):
            cs = cl.min_cover_size(G, amask, "left", counter)
            if cs is not None and cs <= limit:
                large += 1
            lg, _ = cl._thick_profile(G, amask, "left", "witness-in-G", counter)
            la, _ = cl._thick_profile(G, amask, "left", "witness-in-A", counter)
            g_ok = limit <= lg
            a_ok = limit <= la
            thick_g += g_ok
            thick_a += a_ok
            gap += g_ok != a_ok
        for amask in range(1 << n):
            ok = True
            for lmask in range(1 << n):
                cs = cl.min_cover_size(G, lmask, "left", counter)
                if cs is None or cs > limit:
                    continue
                rest = cl.min_cover_size(G, lmask & ~amask, "left", counter)
                if rest is None or rest > limit:
                    ok = False
                    break
            small += ok
        print(f"{kappa:5d} {large:6d} {thick_g:6d} {thick_a:6d} {gap:4d} {small:6d}")
    print(f"nodes spent: {counter.spent}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
