"""
Sharp clique maxima in connected graphs
=======================================

How many triangles can a connected graph with 7 vertices and 10 edges
contain? The answer comes from writing the excess m - n in a canonical
binomial form and reading the bound off the pieces. This demo walks
through the decomposition, the bound, and the graph that attains it.
"""

from cliquex import (
    count_s_cliques,
    construct_extremal_star,
    construct_krt,
    decompose_connected,
    erdos_bound,
    max_cliques_bound,
    to_graph6,
)

# ── the decomposition behind everything ───────────────────────────
# The excess m - n is written as C(r-1, 2) + t - 2 with 2 <= t <= r
# (trees get the sentinel r = t = 1). It is unique, and (r, t) are the
# only ingredients of the sharp bound.

for m, n in [(6, 7), (10, 7), (12, 8), (21, 7)]:
    r, t = decompose_connected(m, n)
    print(f"m={m:>2} n={n}:  excess {m - n:>2}  ->  r={r}, t={t}")

# ── bound versus the classical size-only bound ────────────────────
# With the order fixed and connectivity required, the maximum of k_s
# is C(r, s) + C(t, s-1). The classical bound ignores the order and is
# generally larger: connectivity spreads edges thin.

print("\nmax triangles over connected graphs, m = 10:")
for n in range(5, 11):
    print(f"  n={n:>2}: connected bound {max_cliques_bound(10, n, 3)}"
          f"   size-only bound {erdos_bound(10, 3)}")

# ── the graph attaining it ────────────────────────────────────────
# Take the complete graph K_r, join one new vertex to t of its
# vertices, then hang the leftover n - r - 1 vertices as pendants on
# one clique vertex adjacent to the new vertex.

g = construct_extremal_star(10, 7)
print(f"\nextremal graph for (m, n) = (10, 7): {to_graph6(g)}")
print(f"  order {g.n}, size {g.m}, degree sequence {g.degree_sequence()}")
print(f"  triangles: {count_s_cliques(g, 3)}  (bound {max_cliques_bound(10, 7, 3)})")
print(f"  4-cliques: {count_s_cliques(g, 4)}  (bound {max_cliques_bound(10, 7, 4)})")

# The core piece alone, without pendants:
core = construct_krt(4, 2)
print(f"\naugmented clique K_4^2: {to_graph6(core)} with k_3 = {count_s_cliques(core, 3)}")

# ── the bound is tight across a whole band ────────────────────────
print("\nbound attained for every feasible size at n = 8, s = 3:")
for m in range(8, 29):
    g = construct_extremal_star(m, 8)
    bound = max_cliques_bound(m, 8, 3)
    attained = count_s_cliques(g, 3)
    marker = "ok" if attained == bound else "MISMATCH"
    print(f"  m={m:>2}: bound {bound:>2}, construction {attained:>2}  {marker}")
