"""Named Zykov-sum graphs and the expression grammar that builds them.

A StructuredGraph keeps the block decomposition (which vertices form which
cycle/clique operand) visible, because the CNF encoders and the test suite
reason about blocks, not just the flat graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphs import Graph, GraphError, complete, cycle, induced, k4_minus_edge, zykov_sum

# Block labels: "K<n>" complete, "C<n>" cycle, "K4minus" = K4 less one edge.
# In a K4minus block the non-adjacent pair is always its first two vertices.
_LABEL_RE = re.compile(r"^(K4minus|K[1-9]\d*|C[1-9]\d*)$")


class ExpressionError(ValueError):
    """Syntax or range error in a graph expression; carries a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def block_graph(label: str) -> Graph:
    """The shape a block label denotes."""
    if not _LABEL_RE.match(label):
        raise GraphError(f"unknown block label {label!r}")
    if label == "K4minus":
        return k4_minus_edge()
    size = int(label[1:])
    return complete(size) if label[0] == "K" else cycle(size)


@dataclass(frozen=True)
class Block:
    label: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class StructuredGraph:
    """A graph together with its Zykov-sum block decomposition.

    Invariants checked at construction: blocks partition the vertex set,
    each block induces its label's shape, and every cross-block pair is
    adjacent.
    """

    graph: Graph
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        covered = 0
        for block in self.blocks:
            bmask = 0
            for v in block.vertices:
                if not 0 <= v < self.graph.n:
                    raise GraphError(f"block vertex {v} out of range")
                bmask |= 1 << v
            if bmask & covered:
                raise GraphError("blocks overlap")
            covered |= bmask
            sub, _ = induced(self.graph, bmask)
            if sub != block_graph(block.label):
                raise GraphError(f"block {block.label} does not induce its shape")
        if covered != self.graph.full_mask():
            raise GraphError("blocks do not cover the vertex set")
        for i, a in enumerate(self.blocks):
            for b in self.blocks[i + 1 :]:
                for u in a.vertices:
                    for v in b.vertices:
                        if not self.graph.has_edge(u, v):
                            raise GraphError(f"missing cross-block edge ({u}, {v})")

    def block_mask(self, index: int) -> int:
        mask = 0
        for v in self.blocks[index].vertices:
            mask |= 1 << v
        return mask

    def labels(self) -> tuple[str, ...]:
        return tuple(block.label for block in self.blocks)


def assemble(labels: list[str] | tuple[str, ...]) -> StructuredGraph:
    """Zykov sum of the labeled blocks, left operand first."""
    if not labels:
        raise GraphError("at least one block is required")
    graph = block_graph(labels[0])
    blocks = [Block(labels[0], tuple(range(graph.n)))]
    for label in labels[1:]:
        part = block_graph(label)
        offset = graph.n
        graph = zykov_sum(graph, part)
        blocks.append(Block(label, tuple(range(offset, offset + part.n))))
    return StructuredGraph(graph, tuple(blocks))


# The built-in catalog.  H is six joined 5-cycles; S drops one cycle;
# T swaps a K4 in for it; L uses K4-less-an-edge; Q joins one extra vertex
# to L; GRAHAM is the 8-vertex K3 + C5.
_NAMED: dict[str, tuple[str, ...]] = {
    "H": ("C5",) * 6,
    "S": ("C5",) * 5,
    "T": ("K4",) + ("C5",) * 4,
    "L": ("K4minus",) + ("C5",) * 4,
    "Q": ("K1", "K4minus") + ("C5",) * 4,
    "GRAHAM": ("K3", "C5"),
}

NAMED_GRAPHS = tuple(_NAMED)


def build_named(name: str) -> StructuredGraph:
    """Build one of the catalog graphs H, S, T, L, Q, GRAHAM."""
    key = name.strip().upper()
    if key not in _NAMED:
        raise GraphError(f"unknown graph name {name!r}; known: {', '.join(_NAMED)}")
    return assemble(_NAMED[key])


def _parse_int(expr: str, i: int) -> tuple[int, int]:
    j = i
    while j < len(expr) and expr[j].isdigit():
        j += 1
    if j == i:
        raise ExpressionError("expected an integer", i)
    return int(expr[i:j]), j


def _skip_ws(expr: str, i: int) -> int:
    while i < len(expr) and expr[i].isspace():
        i += 1
    return i


def _parse_term(expr: str, i: int) -> tuple[str, int]:
    if expr.startswith("K4-e", i):
        return "K4minus", i + 4
    if i < len(expr) and expr[i] in "KC":
        kind = expr[i]
        size, j = _parse_int(expr, i + 1)
        label = f"{kind}{size}"
        try:
            block_graph(label)  # range check (C needs >= 3, K >= 1)
        except GraphError as exc:
            raise ExpressionError(str(exc), i) from None
        return label, j
    raise ExpressionError("expected a term (Kn, Cn, or K4-e)", i)


def parse_expression(expr: str) -> StructuredGraph:
    """Parse an expression like "K3+C5" or "6*C5" into a Zykov sum.

    Grammar: expr := item ("+" item)*; item := (int "*")? term;
    term := "K"int | "C"int | "K4-e".  Sums associate left; "6*C5" is
    six C5 blocks.  Each term becomes one block.
    """
    labels: list[str] = []
    i = _skip_ws(expr, 0)
    if i == len(expr):
        raise ExpressionError("empty expression", 0)
    while True:
        repeat = 1
        if i < len(expr) and expr[i].isdigit():
            repeat, i = _parse_int(expr, i)
            if repeat < 1:
                raise ExpressionError("repetition count must be at least 1", i)
            i = _skip_ws(expr, i)
            if i >= len(expr) or expr[i] != "*":
                raise ExpressionError("expected '*' after repetition count", i)
            i = _skip_ws(expr, i + 1)
        label, i = _parse_term(expr, i)
        labels.extend([label] * repeat)
        i = _skip_ws(expr, i)
        if i == len(expr):
            break
        if expr[i] != "+":
            raise ExpressionError(f"unexpected character {expr[i]!r}", i)
        i = _skip_ws(expr, i + 1)
    try:
        return assemble(labels)
    except GraphError as exc:
        raise ExpressionError(str(exc), 0) from None


def resolve_graph(spec: str) -> StructuredGraph:
    """Catalog name or expression, whichever matches."""
    if spec.strip().upper() in _NAMED:
        return build_named(spec)
    return parse_expression(spec)
