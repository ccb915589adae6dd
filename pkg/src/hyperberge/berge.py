"""Exact Berge path, Berge cycle and semi-path search with checkable certificates.

All searches are exhaustive backtracking, so a ``None`` result is a proof of
absence. Branching extends from the current vertex, trying candidate edges
in index order and then candidate vertices in label order, which makes the
returned certificates deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph, shadow_blocks
from .errors import EmptyHypergraph, IndexOutOfRange, InvalidParams


@dataclass(frozen=True)
class BergePath:
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    def reversed(self) -> BergePath:
        return BergePath(self.vertices[::-1], self.edge_indices[::-1])

    def to_line(self) -> str:
        parts = [str(self.vertices[0])]
        for i, v in zip(self.edge_indices, self.vertices[1:]):
            parts += [f"({i})", str(v)]
        return f"path {self.length}: " + " ".join(parts)


@dataclass(frozen=True)
class BergeCycle:
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    def to_line(self) -> str:
        parts = []
        for v, i in zip(self.vertices, self.edge_indices):
            parts += [str(v), f"({i})"]
        return f"cycle {self.length}: " + " ".join(parts)


@dataclass(frozen=True)
class SemiPath:
    """Edge e1, vertex v1, edge e2, vertex v2, ..., edge et, vertex vt."""

    edge_indices: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    def to_line(self) -> str:
        parts = []
        for i, v in zip(self.edge_indices, self.vertices):
            parts += [f"({i})", str(v)]
        return f"semipath {self.length}: " + " ".join(parts)


Certificate = BergePath | BergeCycle | SemiPath


def verify_certificate(h: Hypergraph, cert: Certificate) -> bool:
    """Re-check distinctness and incidence of ``cert`` against ``h``."""
    for i in cert.edge_indices:
        if not 1 <= i <= h.e:
            raise IndexOutOfRange(f"edge index {i} outside 1..{h.e}")
    vs, es = cert.vertices, cert.edge_indices
    if len(set(vs)) != len(vs) or len(set(es)) != len(es):
        return False
    if any(not 1 <= v <= h.n for v in vs):
        return False
    edge = h.edge
    if isinstance(cert, BergePath):
        if len(vs) != len(es) + 1:
            return False
        return all(vs[j] in edge(i) and vs[j + 1] in edge(i) for j, i in enumerate(es))
    if isinstance(cert, BergeCycle):
        t = len(es)
        if t < 2 or len(vs) != t:
            return False
        return all(vs[j] in edge(i) and vs[(j + 1) % t] in edge(i) for j, i in enumerate(es))
    if isinstance(cert, SemiPath):
        if len(vs) != len(es) or not es:
            return False
        if vs[0] not in edge(es[0]):
            return False
        return all(vs[j - 1] in edge(es[j]) and vs[j] in edge(es[j]) for j in range(1, len(es)))
    raise TypeError(f"not a certificate: {cert!r}")


def find_berge_path(
    h: Hypergraph, k: int, endpoints: tuple[int, int] | None = None
) -> BergePath | None:
    """A Berge path of length exactly ``k``, optionally from ``endpoints[0]`` to ``endpoints[1]``."""
    if k < 1:
        raise InvalidParams("path length k must be at least 1")
    if h.e < k or h.n < k + 1:
        return None
    inc = h.incident()
    edges = h.edges
    target = None
    starts = list(h.vertices)
    if endpoints is not None:
        a, target = endpoints
        if a == target or not (1 <= a <= h.n and 1 <= target <= h.n):
            return None
        starts = [a]

    verts: list[int] = []
    idxs: list[int] = []
    used_v: set[int] = set()
    used_e: set[int] = set()

    def extend(v: int, depth: int) -> bool:
        if depth == k:
            return target is None or v == target
        for i in inc[v]:
            if i in used_e:
                continue
            used_e.add(i)
            idxs.append(i)
            for w in edges[i - 1]:
                if w in used_v or (w == target and depth + 1 != k):
                    continue
                used_v.add(w)
                verts.append(w)
                if extend(w, depth + 1):
                    return True
                used_v.discard(w)
                verts.pop()
            used_e.discard(i)
            idxs.pop()
        return False

    for v0 in starts:
        used_v.add(v0)
        verts.append(v0)
        if extend(v0, 0):
            return BergePath(tuple(verts), tuple(idxs))
        used_v.discard(v0)
        verts.pop()
    return None


def _previous_copies(h: Hypergraph) -> list[int]:
    """Entry i: index of the nearest earlier copy of edge i, or 0.

    Copies of one edge are interchangeable, so a search may take them in
    index order without changing which certificate it finds first.
    """
    last: dict[tuple[int, ...], int] = {}
    prev_copy = [0] * (h.e + 1)
    for i, e in enumerate(h.edges, start=1):
        prev_copy[i] = last.get(e, 0)
        last[e] = i
    return prev_copy


def _edge_blocks(h: Hypergraph) -> tuple[list[int], dict[int, int]]:
    """Shadow block id of each edge, and the number of edges in each block.

    All edges of a Berge cycle lie in one block, so the first edge of a
    cycle search fixes the block and blocks with too few edges are skipped.
    """
    blocks = shadow_blocks(h).blocks
    block_of = [next(j for j, b in enumerate(blocks) if b.issuperset(e)) for e in h.edges]
    size: dict[int, int] = {}
    for j in block_of:
        size[j] = size.get(j, 0) + 1
    return block_of, size


def find_berge_cycle_at_least(h: Hypergraph, k: int) -> BergeCycle | None:
    """A Berge cycle of length >= ``k``, started at its least vertex."""
    if k < 2:
        raise InvalidParams("cycle threshold k must be at least 2")
    if h.e < k or h.n < k:
        return None
    inc = h.incident()
    edges = h.edges
    block_of, size = _edge_blocks(h)
    prev_copy = _previous_copies(h)
    verts: list[int] = []
    idxs: list[int] = []
    used_v: set[int] = set()
    used_e: set[int] = set()

    def allowed(i: int) -> bool:
        if i in used_e or (prev_copy[i] and prev_copy[i] not in used_e):
            return False
        if idxs:
            return block_of[i - 1] == block_of[idxs[0] - 1]
        return size[block_of[i - 1]] >= k

    def extend(v0: int, v: int) -> int | None:
        # returns the closing edge index once a long enough cycle exists
        if len(idxs) >= k - 1:
            for i in inc[v]:
                if allowed(i) and v0 in edges[i - 1]:
                    return i
        for i in inc[v]:
            if not allowed(i):
                continue
            used_e.add(i)
            idxs.append(i)
            for w in edges[i - 1]:
                if w <= v0 or w in used_v:
                    continue
                used_v.add(w)
                verts.append(w)
                closing = extend(v0, w)
                if closing is not None:
                    return closing
                used_v.discard(w)
                verts.pop()
            used_e.discard(i)
            idxs.pop()
        return None

    for v0 in h.vertices:
        if len(inc[v0]) < 2:
            continue
        used_v.add(v0)
        verts.append(v0)
        closing = extend(v0, v0)
        if closing is not None:
            return BergeCycle(tuple(verts), tuple(idxs) + (closing,))
        used_v.discard(v0)
        verts.pop()
    return None


def find_cycle_through_edge(h: Hypergraph, index: int, k: int) -> BergeCycle | None:
    """A Berge cycle of length >= ``k`` that uses edge ``index``.

    Such a cycle is a Berge path of length >= k-1 in ``h`` minus the edge,
    joining two distinct vertices of that edge. This is the incremental test
    used when one edge is added to a graph already known to be free.
    """
    if not 1 <= index <= h.e:
        raise IndexOutOfRange(f"edge index {index} outside 1..{h.e}")
    inc = h.incident()
    edges = h.edges
    closing = edges[index - 1]
    prev_copy = _previous_copies(h)
    verts: list[int] = []
    idxs: list[int] = []
    used_v: set[int] = set()
    used_e = {index}

    def extend(u: int, v: int) -> bool:
        if len(idxs) >= k - 1 and v > u and v in closing:
            return True
        for i in inc[v]:
            if i in used_e:
                continue
            if prev_copy[i] and prev_copy[i] not in used_e:
                continue
            used_e.add(i)
            idxs.append(i)
            for w in edges[i - 1]:
                if w in used_v:
                    continue
                used_v.add(w)
                verts.append(w)
                if extend(u, w):
                    return True
                used_v.discard(w)
                verts.pop()
            used_e.discard(i)
            idxs.pop()
        return False

    for u in closing:
        used_v.add(u)
        verts.append(u)
        if extend(u, u):
            return BergeCycle(tuple(verts), tuple(idxs) + (index,))
        used_v.discard(u)
        verts.pop()
    return None


def longest_berge_cycle(h: Hypergraph) -> tuple[int, BergeCycle | None]:
    """Length of a longest Berge cycle (0 when there is none) and a certificate."""
    best: BergeCycle | None = None
    k = 2
    while True:
        c = find_berge_cycle_at_least(h, k)
        if c is None:
            return (best.length if best else 0), best
        best = c
        k = c.length + 1


def all_semi_paths(h: Hypergraph):
    """Yield every semi-path that cannot be extended at its vertex end."""
    inc = h.incident()
    edges = h.edges
    idxs: list[int] = []
    verts: list[int] = []
    used_e: set[int] = set()
    used_v: set[int] = set()

    def extend(v: int):
        grown = False
        for i in inc[v]:
            if i in used_e:
                continue
            used_e.add(i)
            idxs.append(i)
            for w in edges[i - 1]:
                if w in used_v:
                    continue
                grown = True
                used_v.add(w)
                verts.append(w)
                yield from extend(w)
                used_v.discard(w)
                verts.pop()
            used_e.discard(i)
            idxs.pop()
        if not grown:
            yield SemiPath(tuple(idxs), tuple(verts))

    for i in range(1, h.e + 1):
        used_e.add(i)
        idxs.append(i)
        for v in edges[i - 1]:
            used_v.add(v)
            verts.append(v)
            yield from extend(v)
            used_v.discard(v)
            verts.pop()
        used_e.discard(i)
        idxs.pop()


def semi_path_key(h: Hypergraph, p: SemiPath, k: int) -> tuple:
    """Sort key: longest first, then fewest first-edge vertices outside U, then lexicographic."""
    ell = min(k - 1, p.length)
    outside = len(set(h.edge(p.edge_indices[0])) - set(p.vertices[:ell]))
    return (-p.length, outside, p.edge_indices, p.vertices)


def maximum_semi_path(h: Hypergraph, k: int) -> SemiPath:
    """Maximum-length semi-path; ties minimize |e1 \\ U| with U the first min(k-1, t) vertices.

    Remaining ties go to the lexicographically least (edge indices, vertex labels).
    """
    if h.e == 0:
        raise EmptyHypergraph("a semi-path needs at least one edge")
    return min(all_semi_paths(h), key=lambda p: semi_path_key(h, p, k))
