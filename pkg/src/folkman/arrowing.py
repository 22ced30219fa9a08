"""Edge arrowing: certificate checking, exhaustive coloring search, and the
witness check for Folkman-style upper bounds.

G arrows (a1,...,ar) when every r-coloring of its edges contains, for some
i, a clique of size ai whose edges all carry color i.  A "good" coloring is
one with no such monochromatic clique; exhibiting one refutes arrowing.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable

from .graphs import Graph, GraphError, enumerate_cliques, iter_bits
from .graphs import clique_number as _clique_number


class ColoringError(ValueError):
    """Coloring/graph mismatch or color index out of range."""


@dataclass(frozen=True)
class ArrowingProblem:
    """A host graph plus the vector of target clique sizes, one per color."""

    graph: Graph
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        if len(self.targets) < 1:
            raise ColoringError("at least one color is required")
        if any(a < 2 for a in self.targets):
            raise ColoringError("every target clique size must be at least 2")

    @property
    def r(self) -> int:
        return len(self.targets)


@dataclass(frozen=True)
class EdgeColoring:
    """A total assignment of one color index (from 1) to every host edge."""

    graph: Graph
    colors: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        edges = set(self.graph.edges())
        if set(self.colors) != edges:
            missing = edges - set(self.colors)
            extra = set(self.colors) - edges
            raise ColoringError(
                f"coloring does not match the host edge set "
                f"({len(missing)} missing, {len(extra)} extra)"
            )
        for e, c in self.colors.items():
            if not isinstance(c, int) or c < 1:
                raise ColoringError(f"edge {e} has invalid color {c!r}")

    def color_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.colors[key]
        except KeyError:
            raise ColoringError(f"({u}, {v}) is not an edge of the host") from None

    def max_color(self) -> int:
        return max(self.colors.values())


@dataclass(frozen=True)
class MonochromaticWitness:
    """A target-size clique whose edges all share one color."""

    color: int
    vertices: tuple[int, ...]


def check_coloring(problem: ArrowingProblem, coloring: EdgeColoring) -> MonochromaticWitness | None:
    """Return the lexicographically first monochromatic target clique, or
    None when the coloring is good.

    "First" means smallest color index, then smallest vertex tuple.
    """
    if coloring.graph != problem.graph:
        raise ColoringError("coloring host differs from the problem graph")
    if coloring.colors and coloring.max_color() > problem.r:
        raise ColoringError(
            f"color {coloring.max_color()} out of range 1..{problem.r}"
        )
    cliques_by_size: dict[int, list[tuple[int, ...]]] = {}
    for i, a in enumerate(problem.targets, start=1):
        if a not in cliques_by_size:
            cliques_by_size[a] = enumerate_cliques(problem.graph, a)
        for clique in cliques_by_size[a]:
            if all(coloring.colors[e] == i for e in combinations(clique, 2)):
                return MonochromaticWitness(i, clique)
    return None


def color_neighborhood(coloring: EdgeColoring, v: int, i: int) -> int:
    """Bitmask of the neighbors of v joined to it by an edge of color i."""
    g = coloring.graph
    g._check_vertex(v)
    if i < 1:
        raise ColoringError(f"color index {i} out of range")
    mask = 0
    for u in iter_bits(g.adj[v]):
        if coloring.color_of(u, v) == i:
            mask |= 1 << u
    return mask


# --- exhaustive search -----------------------------------------------------


class SearchStatus(Enum):
    GOOD = "good"
    NONE = "none"
    BUDGET = "budget"


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    coloring: EdgeColoring | None
    nodes: int


class _BudgetExceeded(Exception):
    pass


def _color_groups(targets: tuple[int, ...]) -> list[int | None]:
    """Predecessor color for each color within its equal-target group.

    Colors sharing a target size are interchangeable, so color c is allowed
    in a partial coloring only once its predecessor (the previous color of
    the same size, in index order) has appeared.  Entry c-1 holds that
    predecessor, or None for the first color of each group.
    """
    last_of_size: dict[int, int] = {}
    pred: list[int | None] = []
    for c, a in enumerate(targets, start=1):
        pred.append(last_of_size.get(a))
        last_of_size[a] = c
    return pred


def _edge_clique_tables(
    g: Graph, targets: tuple[int, ...]
) -> tuple[list[tuple[int, int]], dict[int, list[list[tuple[int, ...]]]]]:
    """Per target size, per edge: the other edge ids of each clique through it."""
    edges = g.edge_list()
    index = {e: i for i, e in enumerate(edges)}
    tables: dict[int, list[list[tuple[int, ...]]]] = {}
    for a in sorted(set(targets)):
        per_edge: list[list[tuple[int, ...]]] = [[] for _ in edges]
        for clique in enumerate_cliques(g, a):
            ids = [index[e] for e in combinations(clique, 2)]
            for e in ids:
                per_edge[e].append(tuple(x for x in ids if x != e))
        tables[a] = per_edge
    return edges, tables


def _search_order(
    edges: list[tuple[int, int]],
    tables: dict[int, list[list[tuple[int, ...]]]],
    edge_order: str,
) -> list[int]:
    if edge_order == "lex":
        return list(range(len(edges)))
    if edge_order != "constrained":
        raise ValueError(f"unknown edge order {edge_order!r}")
    # most constrained first: edges lying on the most target-size cliques
    weight = [sum(len(t[e]) for t in tables.values()) for e in range(len(edges))]
    return sorted(range(len(edges)), key=lambda e: (-weight[e], edges[e]))


def find_good_coloring(
    problem: ArrowingProblem,
    node_limit: int | None = None,
    time_limit: float | None = None,
    edge_order: str = "constrained",
) -> SearchResult:
    """Depth-first search for a good coloring.

    Edges are colored one at a time; a branch dies as soon as the new edge
    completes a monochromatic target clique in its color (only cliques
    through that edge are checked).  Colors within an equal-target group
    may first appear only in group order, which cuts the space by up to r!
    without losing any good coloring up to color permutation.

    Returns GOOD with a coloring, NONE when the space is exhausted, or
    BUDGET when the node or time limit was hit (nodes = assignments tried).
    """
    g = problem.graph
    targets = problem.targets
    r = problem.r
    edges, tables = _edge_clique_tables(g, targets)
    m = len(edges)
    if m == 0:
        return SearchResult(SearchStatus.GOOD, EdgeColoring(g, {}), 0)
    order = _search_order(edges, tables, edge_order)
    pred = _color_groups(targets)
    color_table = [tables[a] for a in targets]  # per color, indexed c-1

    colors = [0] * m
    used = [0] * (r + 1)
    nodes = 0
    deadline = None if time_limit is None else time.monotonic() + time_limit

    sys.setrecursionlimit(max(sys.getrecursionlimit(), m + 100))

    def dfs(depth: int) -> bool:
        nonlocal nodes
        if depth == m:
            return True
        e = order[depth]
        for c in range(1, r + 1):
            p = pred[c - 1]
            if p is not None and not used[p]:
                continue
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise _BudgetExceeded
            if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                raise _BudgetExceeded
            completes = False
            for others in color_table[c - 1][e]:
                ok = True
                for o in others:
                    if colors[o] != c:
                        ok = False
                        break
                if ok:
                    completes = True
                    break
            if completes:
                continue
            colors[e] = c
            used[c] += 1
            if dfs(depth + 1):
                return True
            colors[e] = 0
            used[c] -= 1
        return False

    try:
        found = dfs(0)
    except _BudgetExceeded:
        return SearchResult(SearchStatus.BUDGET, None, nodes)
    if not found:
        return SearchResult(SearchStatus.NONE, None, nodes)
    coloring = EdgeColoring(g, {edges[e]: colors[e] for e in range(m)})
    return SearchResult(SearchStatus.GOOD, coloring, nodes)


# --- the arrowing verdict ---------------------------------------------------


class ArrowVerdict(Enum):
    ARROWS = "ARROWS"
    NOT_ARROWS = "NOT-ARROWS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ArrowResult:
    verdict: ArrowVerdict
    certificate: EdgeColoring | None = None
    method: str = ""
    nodes: int = 0
    conflicts: int = 0
    elapsed: float = 0.0
    reason: str = ""


AUTO_SEARCH_MAX_EDGES = 24


def arrows(
    problem: ArrowingProblem,
    method: str = "auto",
    node_limit: int | None = None,
    time_limit: float | None = None,
    sat_symmetry_break: bool = False,
) -> ArrowResult:
    """Decide whether the graph arrows its targets.

    method is "search" (exhaustive backtracking), "sat" (CNF + embedded
    solver), or "auto" (search up to AUTO_SEARCH_MAX_EDGES edges, SAT
    beyond).  NOT-ARROWS certificates are re-validated with check_coloring
    before being returned; budget exhaustion yields UNKNOWN, never a guess.
    """
    if method not in ("auto", "search", "sat"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "search" if problem.graph.m <= AUTO_SEARCH_MAX_EDGES else "sat"
    start = time.monotonic()
    if method == "search":
        res = find_good_coloring(problem, node_limit=node_limit, time_limit=time_limit)
        elapsed = time.monotonic() - start
        if res.status is SearchStatus.NONE:
            return ArrowResult(ArrowVerdict.ARROWS, method="search", nodes=res.nodes, elapsed=elapsed)
        if res.status is SearchStatus.GOOD:
            assert res.coloring is not None
            witness = check_coloring(problem, res.coloring)
            if witness is not None:
                raise RuntimeError(f"search produced an invalid coloring: {witness}")
            return ArrowResult(
                ArrowVerdict.NOT_ARROWS, certificate=res.coloring,
                method="search", nodes=res.nodes, elapsed=elapsed,
            )
        return ArrowResult(
            ArrowVerdict.UNKNOWN, method="search", nodes=res.nodes, elapsed=elapsed,
            reason=f"search budget exhausted after {res.nodes} nodes",
        )

    from . import cnf as cnf_mod
    from .sat import SolveStatus, solve

    c = cnf_mod.encode_arrowing(problem, symmetry_break=sat_symmetry_break)
    out = solve(c, time_limit=time_limit)
    elapsed = time.monotonic() - start
    if out.status is SolveStatus.UNSAT:
        return ArrowResult(ArrowVerdict.ARROWS, method="sat", conflicts=out.conflicts, elapsed=elapsed)
    if out.status is SolveStatus.SAT:
        cert = cnf_mod.decode_model(c, out.model)
        return ArrowResult(
            ArrowVerdict.NOT_ARROWS, certificate=cert.coloring,
            method="sat", conflicts=out.conflicts, elapsed=elapsed,
        )
    return ArrowResult(
        ArrowVerdict.UNKNOWN, method="sat", conflicts=out.conflicts, elapsed=elapsed,
        reason=f"solver timed out after {out.elapsed:.1f}s / {out.conflicts} conflicts",
    )


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of the combined "arrows and clique number below q" check.

    holds is True/False when conclusive and None when the arrowing side
    came back UNKNOWN while the clique side passed.
    """

    holds: bool | None
    q: int
    targets: tuple[int, ...]
    clique_number: int
    clique_ok: bool
    arrowing: ArrowResult


def folkman_witness_check(
    g: Graph,
    targets: Iterable[int],
    q: int,
    method: str = "auto",
    node_limit: int | None = None,
    time_limit: float | None = None,
) -> WitnessReport:
    """Check that g is a witness for an upper Folkman bound with clique cap q."""
    if q < 2:
        raise GraphError("clique cap q must be at least 2")
    targets = tuple(targets)
    cl = _clique_number(g)
    clique_ok = cl < q
    result = arrows(
        ArrowingProblem(g, targets), method=method,
        node_limit=node_limit, time_limit=time_limit,
    )
    if not clique_ok:
        holds: bool | None = False
    elif result.verdict is ArrowVerdict.ARROWS:
        holds = True
    elif result.verdict is ArrowVerdict.NOT_ARROWS:
        holds = False
    else:
        holds = None
    return WitnessReport(holds, q, targets, cl, clique_ok, result)


# --- certificate files -------------------------------------------------------


def coloring_to_text(coloring: EdgeColoring) -> str:
    """One "u v c" line per edge (0-based vertices, 1-based color)."""
    lines = [f"{u} {v} {coloring.colors[(u, v)]}" for u, v in coloring.graph.edges()]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, graph: Graph) -> EdgeColoring:
    """Parse a certificate file against its host graph.

    Raises ColoringError when the lines do not cover exactly the host's
    edge set or a color is malformed.
    """
    colors: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ColoringError(f"line {lineno}: expected 'u v c', got {line!r}")
        try:
            u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ColoringError(f"line {lineno}: expected integers, got {line!r}") from None
        if not graph.has_edge(u, v):
            raise ColoringError(f"line {lineno}: ({u}, {v}) is not an edge of the host")
        key = (u, v) if u < v else (v, u)
        if key in colors:
            raise ColoringError(f"line {lineno}: duplicate edge ({u}, {v})")
        if c < 1:
            raise ColoringError(f"line {lineno}: color {c} out of range")
        colors[key] = c
    return EdgeColoring(graph, colors)
