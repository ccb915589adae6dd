"""Extremal families, closed-form Turán numbers, the apex extension and a recognizer."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .core import Hypergraph, is_connected, shadow_blocks
from .errors import InvalidParams, UnsupportedRegime

Variant = Literal["cycles", "paths"]


@dataclass(frozen=True)
class BlockTreeTemplate:
    """Tree of ``block_count`` blocks.

    ``attachments[j - 2] = (parent, slot)`` glues block ``j`` to block
    ``parent < j`` at the parent's ``slot``-th vertex (1-based, ascending
    label order).
    """

    block_count: int
    attachments: tuple[tuple[int, int], ...] = ()

    @classmethod
    def chain(cls, a: int, s: int) -> BlockTreeTemplate:
        """Path-shaped tree: each block hangs off the largest vertex of the previous one."""
        return cls(a, tuple((j - 1, s) for j in range(2, a + 1)))

    def check(self, s: int) -> None:
        if self.block_count < 1:
            raise InvalidParams("a block tree needs at least one block")
        if len(self.attachments) != self.block_count - 1:
            raise InvalidParams(
                f"{self.block_count} blocks need {self.block_count - 1} attachments, "
                f"got {len(self.attachments)}"
            )
        for j, (parent, slot) in enumerate(self.attachments, start=2):
            if not 1 <= parent < j:
                raise InvalidParams(f"block {j}: parent {parent} must be in 1..{j - 1}")
            if not 1 <= slot <= s:
                raise InvalidParams(f"block {j}: slot {slot} must be in 1..{s}")


@dataclass(frozen=True)
class ExtremalQuery:
    n: int
    r: int
    k: int
    variant: Variant = "cycles"
    multi: bool = False

    def describe(self) -> str:
        return (
            f"n={self.n} r={self.r} k={self.k} variant={self.variant} "
            f"mode={'multi' if self.multi else 'simple'}"
        )


def r_star(n: int, r: int) -> Hypergraph:
    """All edges {1..r-1, i} for i = r..n."""
    if r < 2 or n < r:
        raise InvalidParams(f"r-star needs n >= r >= 2, got n={n}, r={r}")
    center = tuple(range(1, r))
    return Hypergraph(r, n, tuple(center + (i,) for i in range(r, n + 1)), True)


def block_tree(template: BlockTreeTemplate, s: int, r: int, k: int) -> Hypergraph:
    """Materialize a tree of ``s``-vertex blocks, each inducing ``k - 1`` edges.

    For ``s = r + 1`` a block carries its k-1 lexicographically first
    r-subsets; for ``s = r`` it carries k-1 copies of its vertex set (a
    multi-hypergraph).
    """
    if r < 2 or k < 2:
        raise InvalidParams("need r >= 2 and k >= 2")
    if s == r + 1:
        if k - 1 > r + 1:
            raise InvalidParams(f"an {s}-vertex block has only {r + 1} distinct {r}-subsets")
    elif s != r:
        raise InvalidParams(f"block size s must be r or r+1, got s={s} for r={r}")
    template.check(s)

    blocks: list[list[int]] = [list(range(1, s + 1))]
    nxt = s + 1
    for parent, slot in template.attachments:
        shared = blocks[parent - 1][slot - 1]
        blocks.append(sorted([shared] + list(range(nxt, nxt + s - 1))))
        nxt += s - 1

    edges: list[tuple[int, ...]] = []
    for b in blocks:
        if s == r:
            edges += [tuple(b)] * (k - 1)
        else:
            edges += list(combinations(b, r))[: k - 1]
    return Hypergraph(r, nxt - 1, tuple(edges), simple=(s == r + 1))


def indicator(n: int, m: int) -> int:
    """1 when ``n`` is a positive multiple of ``m``, else 0."""
    return int(n > 0 and n % m == 0)


def regime(q: ExtremalQuery) -> str:
    """Name of the closed form covering ``q``; UnsupportedRegime if none does."""
    n, r, k = q.n, q.r, q.k
    if n < 1:
        raise UnsupportedRegime("n must be at least 1")
    if q.variant == "cycles":
        if q.multi:
            if 2 <= k <= r:
                return "multi-cycles"
        elif 4 <= k < r:
            return "cycles-k<r"
        elif k == r >= 3:
            return "cycles-k=r"
    elif q.variant == "paths":
        if q.multi:
            if 2 <= k <= r:
                return "multi-paths"
        elif 4 <= k <= r:
            return "paths"
    else:
        raise InvalidParams(f"unknown variant {q.variant!r}")
    raise UnsupportedRegime(f"no closed form covers {q.describe()}")


def extremal_value(q: ExtremalQuery) -> int:
    n, r, k = q.n, q.r, q.k
    name = regime(q)
    if name == "cycles-k<r":
        return (n - 1) // r * (k - 1) + indicator(n, r)
    if name == "cycles-k=r":
        return max((n - 1) // r * (r - 1), n - r + 1)
    if name == "multi-cycles":
        return (n - 1) // (r - 1) * (k - 1)
    if name == "paths":
        return n // (r + 1) * (k - 1) + indicator(n + 1, r + 1)
    return n // r * (k - 1)


def mixed_block_bound(n: int, r: int, k: int, m: int) -> int:
    """max{a(k-1) + b*m : a, b >= 0, a*r + b*(r-1) < n}."""
    best = 0
    for a in range(0, (n - 1) // r + 1 if n > 0 else 0):
        rest = n - 1 - a * r
        b = rest // (r - 1)
        best = max(best, a * (k - 1) + b * m)
    return best


def apex_extend(h: Hypergraph) -> Hypergraph:
    """Add vertex n+1 to every edge, raising the uniformity by one."""
    apex = h.n + 1
    return Hypergraph(h.r + 1, apex, tuple(e + (apex,) for e in h.edges), h.simple)


@dataclass(frozen=True)
class Recognition:
    kind: Literal["r_star", "block_tree", "other"]
    center: tuple[int, ...] | None = None
    s: int | None = None
    edges_per_block: int | None = None
    template: BlockTreeTemplate | None = None
    # False when some vertex lies in no edge
    spanning: bool = True

    def describe(self) -> str:
        if self.kind == "r_star":
            return "r-star, center {" + ",".join(map(str, self.center)) + "}"
        if self.kind == "block_tree":
            return (
                f"block tree, s={self.s}, edges per block={self.edges_per_block}, "
                f"blocks={self.template.block_count}"
            )
        return "other"


def star_center(h: Hypergraph) -> tuple[int, ...] | None:
    """Common (r-1)-set of a star, or None when ``h`` is not a star."""
    if h.e == 0:
        return None
    if h.e == 1:
        return h.edges[0][: h.r - 1]
    common = set(h.edges[0]).intersection(*h.edges[1:])
    if len(common) != h.r - 1:
        return None
    leaves = [next(iter(set(e) - common)) for e in h.edges]
    if len(set(leaves)) != len(leaves):
        return None
    return tuple(sorted(common))


def block_tree_shape(h: Hypergraph) -> tuple[int, int, BlockTreeTemplate] | None:
    """``(s, edges_per_block, template)`` if ``h`` is a block tree, else None.

    The shadow must be connected on all ``n`` vertices, every block must
    have ``s`` in {r, r+1} vertices and induce the same number of edges.
    The template records the tree shape found by breadth-first search from
    the block containing vertex 1.
    """
    if h.e == 0 or not is_connected(h):
        return None
    blocks = list(shadow_blocks(h).blocks)
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        return None
    s = sizes.pop()
    if s not in (h.r, h.r + 1):
        return None
    counts = {sum(1 for e in h.edges if b.issuperset(e)) for b in blocks}
    if len(counts) != 1:
        return None
    per_block = counts.pop()

    order = [next(j for j, b in enumerate(blocks) if 1 in b)]
    seen = {order[0]}
    attachments = []
    queue = deque(order)
    while queue:
        j = queue.popleft()
        local = sorted(blocks[j])
        for cut in local:
            for c, b in enumerate(blocks):
                if c not in seen and cut in b:
                    seen.add(c)
                    order.append(c)
                    queue.append(c)
                    attachments.append((order.index(j) + 1, local.index(cut) + 1))
    return s, per_block, BlockTreeTemplate(len(blocks), tuple(attachments))


def recognize(h: Hypergraph) -> Recognition:
    """Classify ``h`` as an r-star, a block tree, or other (stars take precedence)."""
    spanning = all(h.degree(v) > 0 for v in h.vertices)
    center = star_center(h)
    if center is not None:
        return Recognition("r_star", center=center, spanning=spanning)
    shape = block_tree_shape(h)
    if shape is not None:
        s, per_block, template = shape
        return Recognition("block_tree", s=s, edges_per_block=per_block, template=template)
    return Recognition("other", spanning=spanning)
