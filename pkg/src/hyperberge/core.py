"""Uniform (multi-)hypergraph model, derived graphs, canonical forms and HGR I/O.

Vertices are the integers ``1..n``; edges are sorted tuples of ``r`` labels.
Edge order matters only for certificates, which refer to edges by their
1-based position in ``Hypergraph.edges``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

import networkx as nx
import numpy as np

from .errors import CanonLimitExceeded, InvalidHypergraph, ParseError

CANON_LIMIT = 10

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    r: int
    n: int
    edges: tuple[Edge, ...] = ()
    simple: bool = True

    @classmethod
    def build(cls, r: int, n: int, edges: Iterable[Iterable[int]], simple: bool = True) -> Hypergraph:
        """Sort each edge, then raise InvalidHypergraph if any invariant fails."""
        h = cls(r, n, tuple(tuple(sorted(e)) for e in edges), simple)
        problems = validate(h)
        if problems:
            raise InvalidHypergraph(problems)
        return h

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge(self, index: int) -> Edge:
        """Edge at 1-based position ``index``."""
        return self.edges[index - 1]

    def incident(self) -> dict[int, list[int]]:
        """Map each vertex to the ascending 1-based indices of the edges containing it."""
        inc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges, start=1):
            for v in e:
                inc[v].append(i)
        return inc

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def with_edges(self, edges: Iterable[Edge], simple: bool | None = None) -> Hypergraph:
        return Hypergraph(self.r, self.n, tuple(edges), self.simple if simple is None else simple)

    def add_edge(self, edge: Iterable[int]) -> Hypergraph:
        return self.with_edges(self.edges + (tuple(sorted(edge)),))

    def remove_edge(self, index: int) -> Hypergraph:
        return self.with_edges(self.edges[: index - 1] + self.edges[index:])


@dataclass(frozen=True)
class ShadowGraph:
    n: int
    pairs: frozenset[tuple[int, int]]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.pairs)
        return g


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite vertex/edge incidence graph; right-hand nodes are 1-based edge indices."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    adjacency: frozenset[tuple[int, int]]

    def degree_left(self, v: int) -> int:
        return sum(1 for a, _ in self.adjacency if a == v)

    def degree_right(self, i: int) -> int:
        return sum(1 for _, b in self.adjacency if b == i)

    def to_networkx(self) -> nx.Graph:
        """Nodes are ``("v", label)`` and ``("e", index)``."""
        g = nx.Graph()
        g.add_nodes_from((("v", v) for v in self.left), bipartite=0)
        g.add_nodes_from((("e", i) for i in self.right), bipartite=1)
        g.add_edges_from((("v", v), ("e", i)) for v, i in self.adjacency)
        return g


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    # cut vertex -> indices (0-based) of the blocks containing it
    block_tree_adjacency: dict[int, tuple[int, ...]]


def validate(h: Hypergraph) -> list[str]:
    """Return every invariant violation of ``h``; an empty list means valid."""
    out = []
    if h.r < 2:
        out.append(f"uniformity r={h.r} must be at least 2")
    if h.n < 0:
        out.append(f"vertex count n={h.n} must be non-negative")
    for i, e in enumerate(h.edges, start=1):
        if len(e) != h.r:
            out.append(f"edge {i} has {len(e)} labels, expected {h.r}")
        if len(set(e)) != len(e):
            out.append(f"non-distinct labels in edge {i}")
        elif list(e) != sorted(e):
            out.append(f"edge {i} is not in ascending order")
        bad = [v for v in e if not (isinstance(v, int) and 1 <= v <= h.n)]
        if bad:
            out.append(f"edge {i} has labels outside 1..{h.n}: {bad}")
    if h.simple:
        seen: dict[Edge, int] = {}
        for i, e in enumerate(h.edges, start=1):
            if e in seen:
                out.append(f"duplicate edge {i} (repeats edge {seen[e]}) under simple flag")
            else:
                seen[e] = i
    return out


def two_shadow(h: Hypergraph) -> ShadowGraph:
    pairs = set()
    for e in h.edges:
        pairs.update(combinations(e, 2))
    return ShadowGraph(h.n, frozenset(pairs))


def incidence_graph(h: Hypergraph) -> IncidenceGraph:
    adj = frozenset((v, i) for i, e in enumerate(h.edges, start=1) for v in e)
    return IncidenceGraph(tuple(h.vertices), tuple(range(1, h.e + 1)), adj)


def shadow_blocks(h: Hypergraph) -> BlockDecomposition:
    """Biconnected components of the (simple) 2-shadow.

    A bridge of the shadow is its own two-vertex block; shadow-isolated
    vertices belong to no block. Blocks are listed in order of their sorted
    vertex tuples.
    """
    g = two_shadow(h).to_networkx()
    blocks = sorted((frozenset(c) for c in nx.biconnected_components(g)), key=sorted)
    cuts = frozenset(nx.articulation_points(g))
    adjacency = {
        c: tuple(j for j, b in enumerate(blocks) if c in b) for c in sorted(cuts)
    }
    return BlockDecomposition(tuple(blocks), cuts, adjacency)


def is_connected(h: Hypergraph) -> bool:
    """True when the 2-shadow on all ``n`` vertices is connected."""
    if h.n == 0:
        return False
    return nx.is_connected(two_shadow(h).to_networkx())


def hyperedge_neighborhood(h: Hypergraph, s: Iterable[int]) -> frozenset[int]:
    """1-based indices of edges meeting ``s``; repeated edges count separately."""
    s = set(s)
    return frozenset(i for i, e in enumerate(h.edges, start=1) if s.intersection(e))


@lru_cache(maxsize=4)
def _permuted_weights(n: int) -> np.ndarray:
    """Row p, column v: weight 2**(n - p(v)) of label v under permutation p (column 0 unused).

    For sets of equal size, lexicographic order of sorted tuples is the
    reverse of numeric order of these weight sums.
    """
    perms = np.fromiter(
        (x for p in permutations(range(1, n + 1)) for x in p), dtype=np.int64
    ).reshape(-1, n)
    table = np.left_shift(np.int64(1), n - perms)
    return np.hstack([np.zeros((table.shape[0], 1), dtype=np.int64), table])


def canonical_form(h: Hypergraph, limit: int = CANON_LIMIT) -> Hypergraph:
    """Lexicographically least sorted edge list over all relabelings of ``1..n``.

    Equal outputs iff the inputs are isomorphic. Exhaustive over ``n!``
    permutations, so ``n`` is capped at ``limit``.
    """
    if h.n > limit:
        raise CanonLimitExceeded(f"n={h.n} exceeds canonicalization limit {limit}")
    if h.e == 0 or h.n <= 1:
        return h.with_edges(sorted(h.edges))
    table = _permuted_weights(h.n)
    edges = np.array(h.edges, dtype=np.int64)
    best = None
    chunk = 200_000
    for start in range(0, table.shape[0], chunk):
        # negated so that ascending order is lexicographic order of edges
        codes = -table[start : start + chunk][:, edges].sum(axis=2)
        codes.sort(axis=1)
        rows = np.arange(codes.shape[0])
        for col in range(codes.shape[1]):
            column = codes[rows, col]
            rows = rows[column == column.min()]
            if len(rows) == 1:
                break
        cand = tuple(codes[rows[0]].tolist())
        if best is None or cand < best:
            best = cand
    out = [
        tuple(v for v in range(1, h.n + 1) if -code >> (h.n - v) & 1) for code in best
    ]
    return h.with_edges(out)


def read_hgr(text: str) -> Hypergraph:
    """Parse HGR text; raise ParseError on malformed lines, InvalidHypergraph on bad content."""
    header = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 4 or fields[0] != "hgr" or fields[3] not in ("simple", "multi"):
                raise ParseError(lineno, "expected header 'hgr <r> <n> <simple|multi>'")
            try:
                r, n = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(lineno, "header r and n must be integers") from None
            if r < 2 or n < 0:
                raise ParseError(lineno, "header needs r >= 2 and n >= 0")
            header = (r, n, fields[3] == "simple")
            continue
        r = header[0]
        try:
            labels = tuple(int(x) for x in fields)
        except ValueError:
            raise ParseError(lineno, "edge labels must be integers") from None
        if len(labels) != r:
            raise ParseError(lineno, f"edge has {len(labels)} labels, expected {r} (arity)")
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise ParseError(lineno, "edge labels must be strictly ascending")
        edges.append(labels)
    if header is None:
        raise ParseError(1, "missing header line")
    h = Hypergraph(header[0], header[1], tuple(edges), header[2])
    problems = validate(h)
    if problems:
        raise InvalidHypergraph(problems)
    return h


def write_hgr(h: Hypergraph) -> str:
    lines = [f"hgr {h.r} {h.n} {'simple' if h.simple else 'multi'}"]
    lines += [" ".join(map(str, e)) for e in sorted(h.edges)]
    return "\n".join(lines) + "\n"
