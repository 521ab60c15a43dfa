"""
Kernel peeling and where cliques live
=====================================

Iteratively deleting every vertex of degree at most s strips a graph
down to its level-s kernel (the (s+1)-core). The kernel is where all
(s+2)-cliques live, the result never depends on the deletion order,
and for extremal graphs the kernel collapses onto a tiny canonical
family.
"""

import random

from cliquex import (
    Graph,
    construct_bridge,
    construct_extremal_star,
    count_s_cliques,
    is_isomorphic,
    kernel,
    kernel_vertices,
    peel_random_order,
    to_graph6,
)

# ── peeling a lollipop ────────────────────────────────────────────
# K_5 with a tail of three path vertices: the tail burns away at
# s = 1, and the clique survives every level up to its degree.

lolly = Graph.from_edges(
    8,
    [(u, v) for u in range(5) for v in range(u + 1, 5)] + [(4, 5), (5, 6), (6, 7)],
)
print(f"lollipop {to_graph6(lolly)}: order {lolly.n}, size {lolly.m}")
for s in range(0, 5):
    core = kernel(lolly, s)
    shape = to_graph6(core) if core.n else "(empty)"
    print(f"  level {s}: kernel order {core.n:>2}  {shape}")

# ── order independence ────────────────────────────────────────────
# Delete low-degree vertices one at a time in random order; the
# surviving set is always the same.

rng = random.Random(9)
g = Graph.from_edges(
    9,
    [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (7, 8)],
)
reference = kernel_vertices(g, 1)
trials = [peel_random_order(g, 1, rng) for _ in range(200)]
print(f"\n200 random peel orders on a 9-vertex graph: "
      f"{'all agree' if all(t == reference for t in trials) else 'DISAGREE'}")
print(f"  surviving vertices: {sorted(reference)}")

# ── kernels of extremal graphs ────────────────────────────────────
# The pendant-star extremal graph peels to exactly its augmented
# clique; the bridge family peels to itself.

gstar = construct_extremal_star(13, 9)
print(f"\nextremal graph for (13, 9): {to_graph6(gstar)}")
print(f"  1-kernel: {to_graph6(kernel(gstar, 1))} "
      f"(k_3 = {count_s_cliques(kernel(gstar, 1), 3)}, matches the full graph: "
      f"{count_s_cliques(gstar, 3) == count_s_cliques(kernel(gstar, 1), 3)})")

bridge = construct_bridge(5, 3, 2)
print(f"\nbridge B(5,3) with a 2-edge path: {to_graph6(bridge)}")
print(f"  its own 1-kernel: {is_isomorphic(kernel(bridge, 1), bridge)}")
print(f"  2-kernel (3-core): {to_graph6(kernel(bridge, 2))}, just the K_5 block")
