"""Immutable simple graphs stored as one neighbor bitmask per vertex.

Vertices are 0..n-1 and vertex sets are plain ints used as bitmasks, so
set algebra is `&`, `|`, `~` and membership is `mask >> v & 1`.  Everything
here is a pure function of its inputs; Graph values are safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 512

VertexSet = int  # bitmask over 0..n-1 of a host graph


class GraphError(ValueError):
    """Invalid construction or out-of-range vertex."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus per-vertex neighbor bitmasks.

    Construction validates symmetry (u in adj[v] iff v in adj[u]) and
    irreflexivity (no loops); adjacency beyond 0..n-1 is rejected, as is
    n > MAX_VERTICES.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if self.n > MAX_VERTICES:
            raise GraphError(f"{self.n} vertices exceeds the {MAX_VERTICES}-vertex cap")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge ({v}, {u})")

    @cached_property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from an edge iterable (loops rejected)."""
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"bad vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete(k: int) -> Graph:
    """The complete graph on k vertices, k >= 1."""
    if k < 1:
        raise GraphError("complete graph needs at least one vertex")
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def cycle(k: int) -> Graph:
    """The cycle 0-1-...-(k-1)-0, k >= 3."""
    if k < 3:
        raise GraphError("a simple cycle needs at least three vertices")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def k4_minus_edge() -> Graph:
    """K4 with one edge removed; the non-adjacent pair is vertices 0 and 1."""
    return from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def zykov_sum(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every edge between them.

    g2's vertices are shifted by g1.n, so the left operand keeps its labels.
    """
    n = g1.n + g2.n
    low = (1 << g1.n) - 1
    high = ((1 << n) - 1) ^ low
    adj = [g1.adj[v] | high for v in range(g1.n)]
    adj += [(g2.adj[v] << g1.n) | low for v in range(g2.n)]
    return Graph(n, tuple(adj))


def _as_mask(g: Graph, s: int | Iterable[int]) -> int:
    mask = s if isinstance(s, int) else mask_from(s)
    if mask < 0 or mask & ~g.full_mask():
        raise GraphError("vertex set contains indices outside the host graph")
    return mask


def induced(g: Graph, s: int | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the vertex set s, relabeled to 0..|s|-1.

    Returns (subgraph, keep) where keep[i] is the original label of the
    new vertex i; original order (ascending) is preserved.
    """
    mask = _as_mask(g, s)
    keep = vertices_of(mask)
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for i, v in enumerate(keep):
        for u in iter_bits(g.adj[v] & mask):
            adj[i] |= 1 << index[u]
    return Graph(len(keep), tuple(adj)), keep


def neighborhood(g: Graph, v: int) -> int:
    """Bitmask of the vertices adjacent to v."""
    g._check_vertex(v)
    return g.adj[v]


def edges_between(g: Graph, u1: int | Iterable[int], u2: int | Iterable[int]) -> list[tuple[int, int]]:
    """Edges with one endpoint in u1 and the other in u2, each listed once."""
    m1 = _as_mask(g, u1)
    m2 = _as_mask(g, u2)
    out = []
    for u, v in g.edges():
        if (m1 >> u & 1 and m2 >> v & 1) or (m2 >> u & 1 and m1 >> v & 1):
            out.append((u, v))
    return out


def _degeneracy_order(g: Graph) -> list[int]:
    """Peel a minimum-degree vertex repeatedly; ties broken by lowest index."""
    remaining = g.full_mask()
    order = []
    for _ in range(g.n):
        best_v, best_d = -1, g.n + 1
        for v in iter_bits(remaining):
            d = (g.adj[v] & remaining).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        order.append(best_v)
        remaining ^= 1 << best_v
    return order


def _relabel(g: Graph, order: list[int]) -> Graph:
    """Permute vertex labels so that new vertex i is old vertex order[i]."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for i, v in enumerate(order):
        for u in iter_bits(g.adj[v]):
            adj[i] |= 1 << pos[u]
    return Graph(g.n, tuple(adj))


def clique_number(g: Graph) -> int:
    """Size of the largest clique, by branch and bound.

    Candidates are greedily colored and processed in reverse color order;
    a branch is cut when size + color <= best.  Vertices follow degeneracy
    order (the graph is relabeled once so bit order is the search order).
    """
    if g.n == 0:
        return 0
    h = _relabel(g, _degeneracy_order(g))
    adj = h.adj
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        seq: list[int] = []
        bound: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail = (avail ^ low) & ~adj[v]
                uncolored ^= low
                seq.append(v)
                bound.append(color)
        for i in range(len(seq) - 1, -1, -1):
            if size + bound[i] <= best:
                return
            v = seq[i]
            rest = cand & adj[v]
            if rest:
                expand(rest, size + 1)
            elif size + 1 > best:
                best = size + 1
            cand ^= 1 << v

    expand(h.full_mask(), 0)
    return best


def enumerate_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """Every k-clique of g exactly once, as ascending vertex tuples in
    lexicographic order."""
    if k < 1:
        raise GraphError("clique size must be at least 1")
    adj = g.adj
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(cand: int, need: int) -> None:
        if need == 0:
            out.append(tuple(prefix))
            return
        if cand.bit_count() < need:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            prefix.append(v)
            extend(cand & adj[v], need - 1)
            prefix.pop()

    extend(g.full_mask(), k)
    return out


def count_cliques_bruteforce(g: Graph, k: int) -> int:
    """Independent k-clique count by scanning all k-subsets (small n only)."""
    full = g.adj
    count = 0
    for subset in combinations(range(g.n), k):
        if all(full[u] >> v & 1 for u, v in combinations(subset, 2)):
            count += 1
    return count


def write_edge_list(g: Graph) -> str:
    """Text form: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; blank lines and '#' comments are ignored."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphError(f"bad header line {rows[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"bad header line {rows[0]!r}, expected two integers") from None
    if len(rows) - 1 != m:
        raise GraphError(f"header declares {m} edges but {len(rows) - 1} lines follow")
    seen: set[tuple[int, int]] = set()
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"bad edge line {line!r}") from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    return from_edges(n, edges)
