"""Isomorph-free generation of connected graphs with given order and
size: the brute-force oracle behind every theorem-level check.

The engine grows graphs one vertex at a time. A child produced by
attaching a new vertex is kept only when the parent it came from is
the child's *canonical* parent: the non-cutvertex deletion minimizing
(degree sequence, canonical form). Each isomorphism class therefore
has exactly one production path, so disjoint subtrees emit disjoint
classes and workers can split the tree with no shared state.

An independent labeled-enumeration fallback (all edge subsets, orbit
dedup) covers n <= 7 as the correctness oracle for the engine itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterator

import numpy as np

from .graphs import CanonicalForm, Graph, canonical_form, canonical_graph

MAX_EXHAUSTIVE_ORDER = 9
MAX_LABELED_ORDER = 7

_FRONTIER_CAP = 6  # serial prefix depth; deeper levels are split across workers


@dataclass(frozen=True)
class EnumerationTask:
    """One enumeration job; (worker_index, worker_count) picks a
    deterministic slice of the generation tree."""

    n: int
    m: int | None = None
    connected_only: bool = True
    worker_index: int = 0
    worker_count: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_EXHAUSTIVE_ORDER:
            raise ValueError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}")
        if self.m is not None and not (self.n - 1 <= self.m <= self.n * (self.n - 1) // 2):
            raise ValueError(f"no connected graph has n={self.n}, m={self.m}")
        if not 0 <= self.worker_index < self.worker_count:
            raise ValueError("worker index outside 0..worker_count-1")


def _deleted_degree_sequence(g: Graph, u: int) -> tuple[int, ...]:
    deg = g.degrees()
    return tuple(
        sorted(
            (deg[w] - ((g.adj[u] >> w) & 1) for w in range(g.n) if w != u),
            reverse=True,
        )
    )


def _is_canonical_child(child: Graph, parent_code: CanonicalForm) -> bool:
    """Parent test: did the child come from its canonical parent?

    The canonical parent is the deletion of the non-cutvertex u
    minimizing (degree sequence of child - u, canonical form of
    child - u); the new vertex (last index) is always deletable.
    """
    cuts = child.articulation_points()
    new_vertex = child.n - 1
    candidates = [u for u in range(child.n) if u not in cuts]
    degseqs = {u: _deleted_degree_sequence(child, u) for u in candidates}
    best_degseq = min(degseqs.values())
    if degseqs[new_vertex] != best_degseq:
        return False
    best_code = min(
        canonical_form(child.remove_vertex(u))
        for u in candidates
        if degseqs[u] == best_degseq
    )
    return parent_code == best_code


def _edge_budget_ok(order: int, size: int, n: int, m: int | None) -> bool:
    if m is None:
        return True
    lo = size + (n - order)
    hi = size + n * (n - 1) // 2 - order * (order - 1) // 2
    return lo <= m <= hi


def _children(parent: Graph, n: int, m: int | None) -> Iterator[Graph]:
    """Accepted children of one parent, deduplicated within the parent."""
    parent_code = canonical_form(parent)
    k = parent.n
    e = parent.m
    seen: set[CanonicalForm] = set()
    for mask in range(1, 1 << k):
        if not _edge_budget_ok(k + 1, e + mask.bit_count(), n, m):
            continue
        child = parent.add_vertex(u for u in range(k) if (mask >> u) & 1)
        if not _is_canonical_child(child, parent_code):
            continue
        code = canonical_form(child)
        if code in seen:
            continue
        seen.add(code)
        yield child


def _levels_until(n: int, m: int | None, depth: int) -> list[Graph]:
    level = [Graph(1, (0,))]
    for k in range(1, depth):
        level = [child for parent in level for child in _children(parent, n, m)]
    return level


def connected_graphs(task: EnumerationTask) -> Iterator[Graph]:
    """Exactly one canonical representative per isomorphism class of
    connected graphs with the requested order (and size, if given)."""
    if not task.connected_only:
        raise NotImplementedError("only connected classes are generated; "
                                  "see labeled_classes for the fallback")
    n, m = task.n, task.m
    if n == 1:
        if task.worker_index == 0 and m in (None, 0):
            yield Graph(1, (0,))
        return
    frontier_depth = min(_FRONTIER_CAP, n - 1)
    frontier = sorted(_levels_until(n, m, frontier_depth), key=canonical_form)
    for idx, root in enumerate(frontier):
        if idx % task.worker_count != task.worker_index:
            continue
        stack = [root]
        while stack:
            g = stack.pop()
            if g.n == n:
                if m is None or g.m == m:
                    yield canonical_graph(g)
                continue
            stack.extend(_children(g, n, m))


def class_fold(
    task: EnumerationTask,
    measure: Callable[[Graph], int],
    reduce: str = "argmax-set",
) -> tuple[int, list[Graph]]:
    """Maximum of ``measure`` over the class, with the graphs attaining
    it (canonical representatives, sorted by canonical form).

    ``reduce="max"`` keeps a single witness; ``"argmax-set"`` keeps all.
    The result does not depend on the task's worker partition.
    """
    if reduce not in ("max", "argmax-set"):
        raise ValueError(f"unknown reduction {reduce!r}")
    best: int | None = None
    witnesses: list[Graph] = []
    for g in connected_graphs(task):
        value = measure(g)
        if best is None or value > best:
            best = value
            witnesses = [g]
        elif value == best and reduce == "argmax-set":
            witnesses.append(g)
    if best is None:
        raise ValueError(f"empty class for n={task.n}, m={task.m}")
    witnesses.sort(key=canonical_form)
    return best, witnesses


# ── labeled-enumeration fallback (correctness oracle) ─────────────


def _slot_powers(n: int) -> tuple[list[tuple[int, int]], np.ndarray]:
    """Edge slots in column-major order plus, per vertex permutation,
    the power-of-two each slot's bit contributes after relabeling."""
    slots = [(u, v) for v in range(1, n) for u in range(v)]
    index = {e: i for i, e in enumerate(slots)}
    perms = list(permutations(range(n)))
    table = np.zeros((len(perms), len(slots)), dtype=np.int64)
    for k, p in enumerate(perms):
        for s, (u, v) in enumerate(slots):
            a, b = p[u], p[v]
            table[k, s] = index[(min(a, b), max(a, b))]
    return slots, np.int64(1) << table


def labeled_classes(n: int, m: int, connected_only: bool = True) -> frozenset[CanonicalForm]:
    """Canonical forms of all (n, m) classes found by enumerating every
    labeled graph and deduplicating whole relabeling orbits.

    Entirely independent of the augmentation engine: its only shared
    ingredient is the canonical form used to name classes.
    """
    if not 1 <= n <= MAX_LABELED_ORDER:
        raise ValueError(f"labeled fallback supports 1 <= n <= {MAX_LABELED_ORDER}")
    nslots = n * (n - 1) // 2
    if not 0 <= m <= nslots:
        raise ValueError(f"no graph has n={n}, m={m}")
    slots, powers = _slot_powers(n)
    seen: set[int] = set()
    found: set[CanonicalForm] = set()
    for combo in combinations(range(nslots), m):
        code = 0
        for s in combo:
            code |= 1 << s
        if code in seen:
            continue
        g = Graph.from_edges(n, [slots[s] for s in combo])
        if not connected_only or g.is_connected():
            found.add(canonical_form(g))
        orbit = powers[:, list(combo)].sum(axis=1) if combo else np.zeros(1, dtype=np.int64)
        seen.update(orbit.tolist())
    return frozenset(found)
