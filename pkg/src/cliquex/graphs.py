"""Immutable small-graph values on at most 64 vertices.

A graph is stored as one integer bitmask per vertex, so every set
operation (neighborhood intersection, frontier expansion, candidate
pruning) is a single word-parallel integer op. Graphs are frozen
values: all "mutation" constructs a new graph, which makes them safe
to share across concurrent workers.

The empty graph (n = 0) is a legal value; kernel peeling can empty a
graph out completely and the algebra downstream is simpler if that
result is still a graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_VERTICES = 64

# Canonicalization is exact permutation search (pruned); keep it honest.
MAX_CANONICAL_VERTICES = 12

#: Relabeling-invariant encoding; equal codes <=> isomorphic graphs.
CanonicalForm = bytes


class Graph6Error(ValueError):
    """Base class for malformed graph6 input."""


class Graph6HeaderError(Graph6Error):
    """Order header missing, out of range, or not decodable."""


class Graph6TruncatedError(Graph6Error):
    """Record ends before the full upper-triangle bit field."""


class Graph6TrailingError(Graph6Error):
    """Extra bytes after the bit field."""


class Graph6PaddingError(Graph6Error):
    """Nonzero bits in the zero-padding tail of the last data byte."""


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1; ``adj[u]`` is a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n, adj = self.n, self.adj
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"order {n} outside [0, {MAX_VERTICES}]")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for order {n}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has neighbors outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u, row in enumerate(adj):
            for v in _bits(row):
                if not (adj[v] >> u) & 1:
                    raise ValueError(f"asymmetric edge {u}-{v}")

    # ── construction ──────────────────────────────────────────────

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << u) for u in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(0, i) for i in range(1, n)])

    # ── elementary queries ────────────────────────────────────────

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted nonincreasing."""
        return tuple(sorted(self.degrees(), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, u: int) -> Iterator[int]:
        return _bits(self.adj[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    # ── structure ─────────────────────────────────────────────────

    def is_connected(self) -> bool:
        """One traversal from vertex 0 reaches everything (False if n = 0)."""
        if self.n == 0:
            return False
        reached = 1
        while True:
            grown = reached
            for u in _bits(reached):
                grown |= self.adj[u]
            if grown == reached:
                break
            reached = grown
        return reached == (1 << self.n) - 1

    def articulation_points(self) -> frozenset[int]:
        """Cut vertices of a connected graph, by one low-link DFS."""
        if not self.is_connected():
            raise ValueError("articulation points are defined on connected graphs")
        n = self.n
        disc = [-1] * n
        low = [0] * n
        cuts: set[int] = set()
        # Iterative DFS; each frame tracks the remaining neighbor mask.
        disc[0] = low[0] = 0
        clock = 1
        root_children = 0
        stack: list[tuple[int, int, int]] = [(0, -1, self.adj[0])]
        while stack:
            u, parent, todo = stack.pop()
            if todo == 0:
                if parent >= 0:
                    low[parent] = min(low[parent], low[u])
                    if parent != 0 and low[u] >= disc[parent]:
                        cuts.add(parent)
                continue
            v_bit = todo & -todo
            v = v_bit.bit_length() - 1
            stack.append((u, parent, todo ^ v_bit))
            if disc[v] == -1:
                disc[v] = low[v] = clock
                clock += 1
                if u == 0:
                    root_children += 1
                stack.append((v, u, self.adj[v] & ~(1 << u)))
            elif v != parent:
                low[u] = min(low[u], disc[v])
        if root_children > 1:
            cuts.add(0)
        return frozenset(cuts)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on the given vertices, relabeled in increasing order."""
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs a nonempty vertex set")
        if keep[0] < 0 or keep[-1] >= self.n:
            raise ValueError(f"vertex set not within 0..{self.n - 1}")
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for w in _bits(self.adj[v]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        return Graph(len(keep), tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} not in graph")
        if self.n == 1:
            return Graph(0, ())
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """New graph with vertex n attached to ``neighbors``."""
        mask = 0
        for u in neighbors:
            if not 0 <= u < self.n:
                raise ValueError(f"vertex {u} not in graph")
            mask |= 1 << u
        rows = [self.adj[u] | (((mask >> u) & 1) << self.n) for u in range(self.n)]
        rows.append(mask)
        return Graph(self.n + 1, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Apply ``u -> perm[u]`` to every vertex."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        rows = [0] * self.n
        for u in range(self.n):
            row = 0
            for v in _bits(self.adj[u]):
                row |= 1 << p[v]
            rows[p[u]] = row
        return Graph(self.n, tuple(rows))


# ── canonical form ────────────────────────────────────────────────


def _twin_skip(g: Graph, candidates: list[int]) -> list[int]:
    """Drop candidates interchangeable with an earlier one by a transposition."""
    kept: list[int] = []
    for c in candidates:
        cb = 1 << c
        for k in kept:
            if g.adj[c] & ~(1 << k) == g.adj[k] & ~cb:
                break
        else:
            kept.append(c)
    return kept


def _canonical_search(g: Graph) -> tuple[list[int], list[int]]:
    """Minimal column chunks and one ordering achieving them.

    Positions are pre-assigned degrees (nonincreasing), so only
    permutations listing vertices in sorted-degree order compete; at
    each depth only candidates realizing the minimal adjacency column
    branch. Twins collapse to a single branch.
    """
    n = g.n
    seq = g.degree_sequence()
    deg = g.degrees()
    best_chunks: list[int] | None = None
    best_order: list[int] | None = None
    placed: list[int] = []
    chunks: list[int] = []

    def dfs() -> None:
        nonlocal best_chunks, best_order
        d = len(placed)
        if d == n:
            if best_chunks is None or chunks < best_chunks:
                best_chunks = chunks.copy()
                best_order = placed.copy()
            return
        used = set(placed)
        cands = [u for u in range(n) if u not in used and deg[u] == seq[d]]
        cols = {}
        for u in cands:
            col = 0
            for p in placed:
                col = (col << 1) | ((g.adj[u] >> p) & 1)
            cols[u] = col
        low = min(cols.values())
        if best_chunks is not None:
            prefix = chunks + [low]
            if prefix > best_chunks[: d + 1]:
                return
        branch = _twin_skip(g, [u for u in cands if cols[u] == low])
        chunks.append(low)
        for u in branch:
            placed.append(u)
            dfs()
            placed.pop()
        chunks.pop()

    dfs()
    assert best_chunks is not None and best_order is not None
    return best_chunks, best_order


def _pack_code(n: int, chunks: list[int]) -> bytes:
    nbits = n * (n - 1) // 2
    acc = 0
    for d, c in enumerate(chunks):
        acc = (acc << d) | c
    return bytes([n]) + acc.to_bytes((nbits + 7) // 8, "big")


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> CanonicalForm:
    """Relabeling-invariant code: order byte, then the lexicographically
    minimal upper-triangle bit field over degree-respecting orderings.

    Exact for n <= 12; highly symmetric graphs near that cap can be slow.
    """
    if g.n > MAX_CANONICAL_VERTICES:
        raise ValueError(f"canonical form limited to n <= {MAX_CANONICAL_VERTICES}")
    if g.n <= 1:
        return bytes([g.n])
    chunks, _ = _canonical_search(g)
    return _pack_code(g.n, chunks)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of ``g`` (same code as ``g``)."""
    if g.n > MAX_CANONICAL_VERTICES:
        raise ValueError(f"canonical form limited to n <= {MAX_CANONICAL_VERTICES}")
    if g.n <= 1:
        return g
    _, order = _canonical_search(g)
    perm = [0] * g.n
    for pos, u in enumerate(order):
        perm[u] = pos
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


# ── graph6 interchange format ─────────────────────────────────────

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Byte-exact graph6 record for the labeling at hand (not canonicalized)."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    group = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            group = (group << 1) | ((g.adj[u] >> v) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + group))
                group = nbits = 0
    if nbits:
        out.append(chr(63 + (group << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Parse one graph6 record; the optional ``>>graph6<<`` prefix is allowed."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6HeaderError("empty record")
    data = s.encode("ascii", errors="replace")
    if data[0] == 126:  # '~': multi-byte order
        if len(data) >= 2 and data[1] == 126:
            raise Graph6HeaderError("8-byte order field exceeds the 64-vertex cap")
        if len(data) < 4:
            raise Graph6HeaderError("truncated multi-byte order field")
        hi, mid, lo = data[1] - 63, data[2] - 63, data[3] - 63
        if not all(0 <= x < 64 for x in (hi, mid, lo)):
            raise Graph6HeaderError("order bytes outside graph6 alphabet")
        n = (hi << 12) | (mid << 6) | lo
        body = data[4:]
    else:
        n = data[0] - 63
        if n < 0 or data[0] > 126:
            raise Graph6HeaderError(f"order byte {data[0]} outside graph6 alphabet")
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6HeaderError(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6TruncatedError(f"need {need} data bytes, found {len(body)}")
    if len(body) > need:
        raise Graph6TrailingError(f"{len(body) - need} trailing bytes after bit field")
    rows = [0] * n
    bit = 0
    for byte in body:
        group = byte - 63
        if not 0 <= group < 64:
            raise Graph6Error(f"data byte {byte} outside graph6 alphabet")
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (group >> k) & 1:
                    raise Graph6PaddingError("nonzero padding bits")
                continue
            if (group >> k) & 1:
                u, v = _bit_to_edge(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def _bit_to_edge(index: int) -> tuple[int, int]:
    """Inverse of the column-major upper-triangle bit order."""
    v = 1
    while v * (v + 1) // 2 <= index:
        v += 1
    u = index - v * (v - 1) // 2
    return u, v


def from_edge_list(text: str) -> Graph:
    """Read a plain 0-indexed "u v" edge list; '#' starts a comment."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer endpoint in {raw!r}") from exc
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex in {raw!r}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
        top = max(top, u, v)
    if not edges:
        raise ValueError("edge list is empty; order cannot be inferred")
    return Graph.from_edges(top + 1, edges)
