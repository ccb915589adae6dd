"""Exhaustive desk-scale Turán-number censuses and extremal-graph enumeration.

The search walks edge sets of the complete r-graph on ``n`` labelled
vertices in lexicographic order (each set visited once, as a non-decreasing
sequence of candidate edges; repeats up to ``multiplicity_cap`` in multi
mode). A branch is cut as soon as the newest edge completes a forbidden
configuration; since the parent graph is already known to be free, only
configurations through that edge are searched.

For parallel runs the tree is cut at depth 2 into independent work items.
Item results merge by maximum value and by union of the maximum graphs, so
the merged result is the same for every worker count and schedule.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Literal

import networkx as nx

from .berge import find_berge_path, find_cycle_through_edge
from .constructions import ExtremalQuery, Recognition, extremal_value, recognize
from .core import CANON_LIMIT, Hypergraph, IncidenceGraph, canonical_form, write_hgr
from .errors import CanonLimitExceeded, InvalidParams, NotBipartite, UnsupportedRegime

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    max_nodes: int | None = None  # node budget per work item
    workers: int = 1
    multiplicity_cap: int = 1
    max_edges: int | None = None  # do not grow graphs past this size


@dataclass
class CensusResult:
    query: ExtremalQuery
    value: int
    witness_graph: Hypergraph | None
    explored: int
    exhaustive: bool
    formula: int | None = None
    extremal_count: int = 0  # labelled graphs attaining ``value``

    @property
    def match(self) -> bool | None:
        return None if self.formula is None else self.formula == self.value


@dataclass
class ExtremalClass:
    graph: Hypergraph
    recognition: Recognition
    labelled_count: int = 0


def _check_query(q: ExtremalQuery, cfg: SearchConfig) -> None:
    if q.r < 2 or q.n < 0:
        raise InvalidParams("need r >= 2 and n >= 0")
    if q.variant == "cycles" and q.k < 2:
        raise InvalidParams("cycle threshold k must be at least 2")
    if q.variant == "paths" and q.k < 1:
        raise InvalidParams("path length k must be at least 1")
    if q.variant not in ("cycles", "paths"):
        raise InvalidParams(f"unknown variant {q.variant!r}")
    if q.multi:
        if cfg.multiplicity_cap < 1:
            raise InvalidParams("multiplicity cap must be at least 1")
        if q.variant == "cycles" and cfg.multiplicity_cap > max(q.k - 1, 1):
            raise InvalidParams(
                f"multiplicity cap {cfg.multiplicity_cap} exceeds k-1 = {q.k - 1}; "
                "k copies of one edge already form a Berge cycle of length k"
            )


def _cap(q: ExtremalQuery, cfg: SearchConfig) -> int:
    return cfg.multiplicity_cap if q.multi else 1


def _forbidden_after_add(h: Hypergraph, q: ExtremalQuery) -> bool:
    """Does the last edge of ``h`` complete a forbidden configuration?"""
    if q.variant == "cycles":
        return find_cycle_through_edge(h, h.e, q.k) is not None
    return find_berge_path(h, q.k) is not None


class _Walker:
    def __init__(self, q: ExtremalQuery, cfg: SearchConfig):
        self.q = q
        self.cap = _cap(q, cfg)
        self.max_edges = cfg.max_edges
        self.budget = cfg.max_nodes
        self.cand = list(combinations(range(1, q.n + 1), q.r))
        self.explored = 0
        self.budget_hit = False

    def graph(self, chosen: tuple[int, ...]) -> Hypergraph:
        return Hypergraph(self.q.r, self.q.n, tuple(self.cand[c] for c in chosen), not self.q.multi)

    def children(self, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if self.max_edges is not None and len(chosen) >= self.max_edges:
            return
        start = chosen[-1] if chosen else 0
        for c in range(start, len(self.cand)):
            if chosen and c == chosen[-1]:
                if self.cap == 1 or chosen.count(c) >= self.cap:
                    continue
            nxt = chosen + (c,)
            if not _forbidden_after_add(self.graph(nxt), self.q):
                yield nxt

    def walk(self, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        """Pre-order traversal of free edge sets extending ``chosen`` (inclusive)."""
        stack = [chosen]
        while stack:
            if self.budget is not None and self.explored >= self.budget:
                self.budget_hit = True
                return
            node = stack.pop()
            self.explored += 1
            yield node
            stack.extend(reversed(list(self.children(node))))


def _split(q: ExtremalQuery, cfg: SearchConfig) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Nodes above depth 2 and the depth-2 work-item roots, in search order."""
    w = _Walker(q, SearchConfig(multiplicity_cap=cfg.multiplicity_cap, max_edges=cfg.max_edges))
    shallow: list[tuple[int, ...]] = [()]
    items: list[tuple[int, ...]] = []
    for a in w.children(()):
        shallow.append(a)
        items.extend(w.children(a))
    return shallow, items


@dataclass
class _ItemResult:
    value: int = -1
    best: list[tuple[int, ...]] = field(default_factory=list)
    explored: int = 0
    budget_hit: bool = False
    hits: list[tuple[int, ...]] = field(default_factory=list)

    def offer(self, node: tuple[int, ...]) -> None:
        if len(node) > self.value:
            self.value, self.best = len(node), [node]
        elif len(node) == self.value:
            self.best.append(node)

    def merge(self, other: _ItemResult) -> None:
        if other.value > self.value:
            self.value, self.best = other.value, list(other.best)
        elif other.value == self.value:
            self.best += other.best
        self.explored += other.explored
        self.budget_hit |= other.budget_hit
        self.hits += other.hits


def _run_item(args) -> _ItemResult:
    q, cfg, root, target = args
    w = _Walker(q, cfg)
    out = _ItemResult()
    for node in w.walk(root):
        out.offer(node)
        if target is not None and len(node) == target:
            out.hits.append(node)
    out.explored, out.budget_hit = w.explored, w.budget_hit
    return out


def _search(q: ExtremalQuery, cfg: SearchConfig, target: int | None = None) -> tuple[_ItemResult, _Walker]:
    _check_query(q, cfg)
    shallow, items = _split(q, cfg)
    total = _ItemResult()
    for node in shallow:
        total.offer(node)
        total.explored += 1
        if target is not None and len(node) == target:
            total.hits.append(node)
    jobs = [(q, cfg, root, target) for root in items]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_run_item, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
    else:
        results = [_run_item(j) for j in jobs]
    for res in results:
        total.merge(res)
    log.debug("census %s: %d items, %d nodes", q.describe(), len(items), total.explored)
    return total, _Walker(q, cfg)


def _least_canonical(graphs: list[Hypergraph]) -> Hypergraph:
    if not graphs:
        raise ValueError("no graphs")
    if graphs[0].n > CANON_LIMIT:
        return min(graphs, key=lambda g: sorted(g.edges))
    return min({canonical_form(g) for g in graphs}, key=lambda g: g.edges)


def turan_census(q: ExtremalQuery, cfg: SearchConfig = SearchConfig()) -> CensusResult:
    """Maximum edge count of a forbidden-configuration-free graph, by exhaustive search."""
    total, w = _search(q, cfg)
    try:
        formula = extremal_value(q)
    except UnsupportedRegime:
        formula = None
    capped = cfg.max_edges is not None and total.value >= cfg.max_edges
    witness = _least_canonical([w.graph(c) for c in total.best])
    return CensusResult(
        query=q,
        value=total.value,
        witness_graph=witness,
        explored=total.explored,
        exhaustive=not total.budget_hit and not capped,
        formula=formula,
        extremal_count=len(total.best),
    )


def free_graphs(q: ExtremalQuery, cfg: SearchConfig = SearchConfig()) -> Iterator[Hypergraph]:
    """Every labelled free graph the census visits, in search order."""
    _check_query(q, cfg)
    w = _Walker(q, cfg)
    for node in w.walk(()):
        yield w.graph(node)


def enumerate_extremal(q: ExtremalQuery, cfg: SearchConfig = SearchConfig()) -> list[ExtremalClass]:
    """All free graphs with exactly ``extremal_value(q)`` edges, up to isomorphism."""
    if q.n > CANON_LIMIT:
        raise CanonLimitExceeded(f"n={q.n} exceeds canonicalization limit {CANON_LIMIT}")
    target = extremal_value(q)
    cfg = SearchConfig(cfg.max_nodes, cfg.workers, cfg.multiplicity_cap, target)
    total, w = _search(q, cfg, target)
    counts: dict[Hypergraph, int] = {}
    for node in total.hits:
        c = canonical_form(w.graph(node))
        counts[c] = counts.get(c, 0) + 1
    return [
        ExtremalClass(g, recognize(g), counts[g])
        for g in sorted(counts, key=lambda g: g.edges)
    ]


def format_report(res: CensusResult, pretty: bool = False) -> str:
    sep = ": " if pretty else "="
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    rows = [("query", res.query.describe()), ("value", res.value)]
    if res.formula is not None:
        rows += [("formula", res.formula), ("match", yn(res.match))]
    rows += [("exhaustive", yn(res.exhaustive)), ("nodes", res.explored)]
    text = "\n".join(f"{k}{sep}{v}" for k, v in rows) + "\nwitness:\n"
    if res.witness_graph is not None:
        text += write_hgr(res.witness_graph)
    return text


# --- bipartite long-cycle checks -------------------------------------------


@dataclass(frozen=True)
class JacksonVerdict:
    kind: Literal["premise_fails", "cycle_found", "counterexample"]
    length: int = 0
    reason: str = ""


def longest_cycle_length(adj: dict) -> int:
    """Length of a longest cycle in a simple undirected graph (0 if acyclic)."""
    order = {v: i for i, v in enumerate(sorted(adj, key=repr))}
    best = 0
    for s in adj:
        rank = order[s]
        on_path = {s}

        def dfs(v, depth):
            nonlocal best
            for w in adj[v]:
                if w == s and depth >= 3:
                    best = max(best, depth)
                elif order[w] > rank and w not in on_path:
                    on_path.add(w)
                    dfs(w, depth + 1)
                    on_path.discard(w)

        dfs(s, 1)
    return best


def _parts(g) -> tuple[list, list, dict]:
    if isinstance(g, IncidenceGraph):
        left, right = set(g.left), set(g.right)
        adj = {("a", a): set() for a in left} | {("b", b): set() for b in right}
        for a, b in g.adjacency:
            if a not in left or b not in right:
                raise NotBipartite(f"pair ({a}, {b}) does not join the two parts")
            adj[("a", a)].add(("b", b))
            adj[("b", b)].add(("a", a))
        return [("a", a) for a in sorted(left)], [("b", b) for b in sorted(right)], adj
    if isinstance(g, nx.Graph):
        if not nx.is_bipartite(g):
            raise NotBipartite("graph is not bipartite")
        try:
            A = [v for v, p in g.nodes(data="bipartite") if p == 0]
            B = [v for v, p in g.nodes(data="bipartite") if p == 1]
        except TypeError:
            raise NotBipartite("nodes need a 'bipartite' attribute of 0 or 1") from None
        if len(A) + len(B) != g.number_of_nodes():
            raise NotBipartite("nodes need a 'bipartite' attribute of 0 or 1")
        if any(g.nodes[u]["bipartite"] == g.nodes[v]["bipartite"] for u, v in g.edges):
            raise NotBipartite("an edge joins two nodes of the same part")
        return A, B, {v: set(g[v]) for v in g}
    raise TypeError(f"unsupported graph type {type(g).__name__}")


def jackson_check(g, r: int) -> JacksonVerdict:
    """Long-cycle check for a bipartite graph with parts A, B.

    When every B-vertex has degree >= r and |B| > floor((|A|-1)/(r-1))(r-1),
    an exact search must find a cycle of length >= 2r; anything else is
    reported as a counterexample.
    """
    if r < 2:
        raise InvalidParams("r must be at least 2")
    A, B, adj = _parts(g)
    low = min((len(adj[b]) for b in B), default=0)
    if not B or low < r:
        return JacksonVerdict("premise_fails", reason=f"minimum B-degree {low} < r = {r}")
    bound = (len(A) - 1) // (r - 1) * (r - 1) if A else 0
    if len(B) <= bound:
        return JacksonVerdict("premise_fails", reason=f"|B| = {len(B)} <= {bound}")
    length = longest_cycle_length(adj)
    if length >= 2 * r:
        return JacksonVerdict("cycle_found", length)
    log.error("bipartite long-cycle bound violated: longest cycle %d < %d", length, 2 * r)
    return JacksonVerdict("counterexample", length, reason=f"longest cycle {length} < {2 * r}")
