"""Structural witnesses for hypergraphs without long Berge cycles.

For an n-vertex r-graph (n > r) with no Berge cycle of length >= k
(3 <= k <= r) and edge multiplicities at most m, one of the following holds:

I.   a set S of r-1 vertices meeting at most m edges (and, when m < k-1,
     those edges are d <= m copies of one edge h with S inside h);
II.  a set S of r vertices meeting at most k-1 edges;
III. k = r, m < k-1, and removing one edge e leaves an r-star (at least
     r-1 edges) and a remainder K glued at one centre vertex of the star,
     with e meeting the star only inside its centre and |V(K)| >= 2.

``find_witness`` derives the witness constructively from a maximum
semi-path P = e1 v1 e2 v2 ... et vt, its defining prefix F = {e1..el},
U = {v1..vl} (l = min(k-1, t)), and rotations of P that keep F and U but
expose a different first edge. Every rotated semi-path is rebuilt and
re-checked with ``verify_certificate`` before it is relied on, and every
candidate witness goes through ``verify_witness``. If the guided
construction fails, an exhaustive search takes over and the result is
flagged ``guided=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .berge import SemiPath, find_berge_cycle_at_least, maximum_semi_path, verify_certificate
from .core import Hypergraph, hyperedge_neighborhood
from .errors import (
    IndexOutOfRange,
    MultiplicityExceeded,
    PreconditionViolated,
    TooFewVertices,
    UnsupportedRegime,
)


def _fmt(xs) -> str:
    return "{" + ",".join(map(str, sorted(xs))) + "}"


@dataclass(frozen=True)
class Witness:
    case: Literal["I", "II", "III"]
    S: frozenset[int] = frozenset()
    edges: frozenset[int] = frozenset()
    removed: int | None = None
    center: frozenset[int] = frozenset()
    star_edges: frozenset[int] = frozenset()
    shared: int | None = None
    K: frozenset[int] = frozenset()
    guided: bool = True
    trace: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for name in ("S", "edges", "center", "star_edges", "K"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    def to_line(self) -> str:
        if self.case == "III":
            return (
                f"witness III e={self.removed} center={_fmt(self.center)} "
                f"star_edges={_fmt(self.star_edges)} shared={self.shared} K={_fmt(self.K)}"
            )
        return f"witness {self.case} S={_fmt(self.S)} edges={_fmt(self.edges)}"


def verify_witness(h: Hypergraph, k: int, m: int, w: Witness) -> tuple[bool, list[str]]:
    """Re-check the claimed case against ``h``; returns (ok, violations)."""
    bad: list[str] = []
    r = h.r
    for i in set(w.edges) | set(w.star_edges) | ({w.removed} if w.removed is not None else set()):
        if not 1 <= i <= h.e:
            raise IndexOutOfRange(f"edge index {i} outside 1..{h.e}")
    if w.case in ("I", "II"):
        want = r - 1 if w.case == "I" else r
        if len(w.S) != want:
            bad.append(f"|S| = {len(w.S)}, expected {want}")
        if not all(1 <= v <= h.n for v in w.S):
            bad.append("S has labels outside the vertex range")
        nh = hyperedge_neighborhood(h, w.S)
        if nh != w.edges:
            bad.append(f"claimed edges {_fmt(w.edges)} differ from N_h(S) = {_fmt(nh)}")
        if w.case == "I":
            if len(nh) > m:
                bad.append(f"|N_h(S)| = {len(nh)} exceeds m = {m}")
            if m < k - 1 and nh:
                shapes = {h.edge(i) for i in nh}
                if len(shapes) != 1:
                    bad.append("N_h(S) is not copies of a single edge")
                elif not w.S <= set(next(iter(shapes))):
                    bad.append("S is not contained in the repeated edge")
        elif len(nh) > k - 1:
            bad.append(f"|N_h(S)| = {len(nh)} exceeds k-1 = {k - 1}")
        return not bad, bad

    if w.case != "III":
        return False, [f"unknown case {w.case!r}"]
    if k != r:
        bad.append(f"case III needs k = r, got k={k}, r={r}")
    if not m < k - 1:
        bad.append(f"case III needs m < k-1, got m={m}")
    if w.removed is None or w.shared is None:
        return False, bad + ["case III needs a removed edge and a shared vertex"]
    center = set(w.center)
    if len(center) != r - 1:
        bad.append(f"|center| = {len(center)}, expected {r - 1}")
    if w.removed in w.star_edges:
        bad.append("removed edge is listed as a star edge")
    if len(w.star_edges) < r - 1:
        bad.append(f"star has {len(w.star_edges)} edges, needs at least {r - 1}")
    leaves = []
    for i in sorted(w.star_edges):
        rest = set(h.edge(i)) - center
        if len(rest) != 1:
            bad.append(f"star edge {i} does not contain the center plus one leaf")
        else:
            leaves.append(rest.pop())
    if len(set(leaves)) != len(leaves):
        bad.append("star leaves are not distinct")
    star_vertices = center | set(leaves)
    K = set(w.K)
    if w.shared not in center:
        bad.append(f"shared vertex {w.shared} is not in the center")
    if star_vertices & K != {w.shared}:
        bad.append(f"V(star) and V(K) meet in {_fmt(star_vertices & K)}, expected {{{w.shared}}}")
    if star_vertices | K != set(h.vertices):
        bad.append("V(star) and V(K) do not cover the vertex set")
    if not set(h.edge(w.removed)) & star_vertices <= center:
        bad.append("removed edge meets the star outside its center")
    if len(K) < 2:
        bad.append(f"|V(K)| = {len(K)}, needs at least 2")
    for i in range(1, h.e + 1):
        if i == w.removed or i in w.star_edges:
            continue
        if not set(h.edge(i)) <= K:
            bad.append(f"edge {i} is neither in the star nor inside K")
    return not bad, bad


@dataclass
class ProofState:
    path: SemiPath
    ell: int
    F: frozenset[int]
    U: frozenset[int]
    d: int
    A: frozenset[int] = frozenset()
    B: frozenset[int] = frozenset()


class _Guide:
    """One run of the proof-guided construction."""

    def __init__(self, h: Hypergraph, k: int, m: int):
        self.h, self.k, self.m = h, k, m
        self.trace: list[str] = []

    def log(self, msg: str) -> None:
        self.trace.append("lemma: " + msg)

    # 1-based positional accessors into the semi-path
    def E(self, i: int) -> frozenset[int]:
        return frozenset(self.h.edge(self.P.edge_indices[i - 1]))

    def v(self, i: int) -> int:
        return self.P.vertices[i - 1]

    def rotation(self, name: str, edge_pos: list[int], verts: list[int]) -> bool:
        """Check that a rearranged semi-path is valid, maximum, and keeps the defining edges."""
        idx = tuple(self.P.edge_indices[p - 1] for p in edge_pos)
        cand = SemiPath(idx, tuple(verts))
        ok = (
            cand.length == self.P.length
            and verify_certificate(self.h, cand)
            and frozenset(idx[: self.ell]) == self.F
        )
        self.log(f"{name} rotation {cand.to_line()} {'ok' if ok else 'REJECTED'}")
        return ok

    def closed(self, xs) -> bool:
        return hyperedge_neighborhood(self.h, xs) <= self.F

    def candidate(self, case: str, S, note: str) -> Witness | None:
        S = frozenset(S)
        if self.m >= self.k - 1 and case == "II":
            # with m = k-1 any r-1 subset of an r-set already meets at most m edges
            S = frozenset(sorted(S)[: self.h.r - 1])
            case = "I"
        w = Witness(case, S, hyperedge_neighborhood(self.h, S))
        ok, why = verify_witness(self.h, self.k, self.m, w)
        self.log(f"{note}: candidate {w.to_line()} {'accepted' if ok else 'rejected: ' + '; '.join(why)}")
        return w if ok else None

    def run(self) -> Witness | None:
        h, k, m, r = self.h, self.k, self.m, self.h.r
        if h.e == 0:
            self.log("no edges, any r-1 vertices meet nothing")
            return self.candidate("I", range(1, r), "empty")

        self.P = P = maximum_semi_path(h, k)
        t = P.length
        ell = self.ell = min(k - 1, t)
        self.F = frozenset(P.edge_indices[:ell])
        U = self.U = frozenset(P.vertices[:ell])
        self.log(f"maximum semi-path {P.to_line()}, l={ell}, F={_fmt(self.F)}, U={_fmt(U)}")
        d = 1
        while d < ell and self.E(d + 1) == self.E(1):
            d += 1
        self.d = d
        self.state = ProofState(P, ell, self.F, U, d)
        e1 = self.E(1)
        tail1 = e1 - U
        self.log(f"first-edge tail e1\\U={_fmt(tail1)}, d={d}, closed={self.closed(tail1)}")

        hits = [i for i in range(1, ell + 1) if self.v(i) in e1]
        if hits == list(range(1, d + 1)):
            return self.repeated_first_edge()

        # hits = i_0 = 1 < i_1 < ... < i_s
        A = set(tail1)
        flagged: dict[int, int] = {}  # position j of an intersecting step -> partner q
        for j in range(1, len(hits)):
            i = hits[j]
            self.rotation(
                f"missing-tail(i={i})",
                [i] + list(range(i - 1, 0, -1)) + list(range(i + 1, t + 1)),
                [self.v(x) for x in range(i - 1, 0, -1)] + [self.v(i)] + [self.v(x) for x in range(i + 1, t + 1)],
            )
            tail = self.E(i) - U
            if tail & A:
                partner = next(q for q in range(j) if tail & (self.E(hits[q]) - U))
                flagged[j] = partner
                self.rotation_pair(hits[partner], i, min(tail & (self.E(hits[partner]) - U)))
                A |= tail | {self.v(i - 1)}
            else:
                A |= tail
        self.state.A = frozenset(A)
        self.log(f"accumulated A={_fmt(A)}, |A|={len(A)}, closed={self.closed(A)}")
        if len(A) >= r:
            return self.candidate("II", sorted(A)[:r], "|A| >= r")
        if m >= k - 1:
            return self.candidate("I", A, "m = k-1 and |A| = r-1")

        first = next((j for j in sorted(flagged) if j >= d), None)
        if first is not None:
            return self.case_intersecting(hits, first, A)
        return self.case_disjoint(A)

    def rotation_pair(self, jpos: int, ipos: int, u: int) -> None:
        """The two rotations showing v_{i-1} and v_j are closed, for a tail vertex u shared by e_i and e_j."""
        t = self.P.length
        i, j = ipos, jpos
        if i - 1 > j:
            edges1 = list(range(i - 1, j, -1)) + list(range(1, j + 1)) + list(range(i, t + 1))
            verts1 = (
                [self.v(x) for x in range(i - 2, j - 1, -1)]
                + [self.v(x) for x in range(1, j)]
                + [u]
                + [self.v(x) for x in range(i, t + 1)]
            )
            self.rotation(f"pair(i={i},j={j}) first", edges1, verts1)
        edges2 = list(range(j + 1, i + 1)) + list(range(j, 0, -1)) + list(range(i + 1, t + 1))
        verts2 = (
            [self.v(x) for x in range(j + 1, i)]
            + [u]
            + [self.v(x) for x in range(j - 1, 0, -1)]
            + [self.v(i)]
            + [self.v(x) for x in range(i + 1, t + 1)]
        )
        self.rotation(f"pair(i={i},j={j}) second", edges2, verts2)

    def repeated_first_edge(self) -> Witness | None:
        """e1 meets U exactly in v1..vd: either e1 minus v_d is nearly private, or an r-set is closed."""
        d, ell, t = self.d, self.ell, self.P.length
        e1 = self.E(1)
        base = e1 - {self.v(d)}
        self.log(f"e1 meets U in v1..v{d} only; base set {_fmt(base)}")
        for j in range(d + 1, ell + 1):
            hit = base & self.E(j)
            if not hit:
                continue
            w = min(hit)
            verts = list(self.P.vertices)
            spare = sorted(e1 - self.U)
            if w in self.U:
                # swap w (some v_i with i < d) for a free vertex of e1
                verts[verts.index(w)] = spare[0]
            order = list(range(j - 1, 0, -1)) + list(range(j, t + 1))
            new_verts = [verts[x - 1] for x in range(j - 2, 0, -1)] + [w] + [verts[x - 1] for x in range(j, t + 1)]
            self.rotation(f"repeated-edge(j={j},w={w})", order, new_verts)
            return self.candidate("II", base | {self.v(j - 1)}, f"e1\\v{d} meets e{j}")
        return self.candidate("I", base, f"e1\\v{d} meets only the {d} copies of e1")

    def case_intersecting(self, hits: list[int], jp: int, A: set[int]) -> Witness | None:
        d, U, t = self.d, self.U, self.P.length
        target = self.E(hits[jp]) - U
        q = next(q for q in range(max(d - 1, 0), jp) if target & (self.E(hits[q]) - U))
        iq, ijp = hits[q], hits[jp]
        u = min(target & (self.E(iq) - U))
        self.log(f"intersecting tails: j'={jp} (i={ijp}), q={q} (i={iq}), u={u}")
        if iq < ijp - 1:
            return self.candidate("II", A | {self.v(iq)}, f"v{iq} closed by the pair rotation")
        if d < iq == ijp - 1:
            order = list(range(iq - 1, 0, -1)) + [iq] + list(range(iq + 1, t + 1))
            verts = [self.v(x) for x in range(iq - 2, 0, -1)] + [self.v(iq), u] + [self.v(x) for x in range(iq + 1, t + 1)]
            self.rotation(f"adjacent(i_q={iq})", order, verts)
            return self.candidate("II", A | {self.v(iq - 1)}, f"v{iq - 1} closed by the adjacent rotation")

        # d = i_q = i_j' - 1: e_{d+1} has the same tail as e1 but differs inside U
        e1 = self.E(1)
        extra = sorted(x for x in range(1, self.ell + 1) if self.v(x) in self.E(d + 1) - e1)
        self.log(f"tail of e{d + 1} equals tail of e1; candidates v_x with x in {extra}")
        for x in extra:
            idx = sorted(set(hits) | {x})
            B = set(e1 - U)
            for c in idx[1:]:
                tail = self.E(c) - U
                B |= tail if not (tail & B) else tail | {self.v(c - 1)}
            self.state.B = frozenset(B)
            self.log(f"accumulated B={_fmt(B)} using x={x}, closed={self.closed(B)}")
            if len(B) >= self.h.r and self.closed(B):
                return self.candidate("II", sorted(B)[: self.h.r], f"B set with x={x}")
        return None

    def case_disjoint(self, A: set[int]) -> Witness | None:
        h, k, r, d, t = self.h, self.k, self.h.r, self.d, self.P.length
        U = self.U
        self.log(f"disjoint singleton tails; expect k=r={r} and l=r-1 (k={k}, l={self.ell})")
        if k != r or self.ell != r - 1:
            return None
        if d > 1:
            u_d = min(self.E(d) - U)
            verts = list(self.P.vertices)
            verts[r - 3], verts[0] = verts[0], u_d
            self.rotation("exchange", list(range(1, t + 1)), verts)
            return self.candidate("II", A | {self.v(r - 2)}, f"v{r - 2} exchanged out")
        if t < r:
            return self.candidate("II", A | {self.v(r - 1)}, "semi-path ends at v_{r-1}")

        er = self.P.edge_indices[r - 1]
        core = U - {self.v(r - 1)}
        hs = sorted(i for i in hyperedge_neighborhood(h, core) if i != er)
        tails = set().union(*(self.E(p) - U for p in range(1, r - 1)))
        for i in hs:
            extra = set(h.edge(i)) - U
            if len(extra) >= 2:
                return self.candidate("II", sorted(tails) + sorted(extra)[: r - len(tails)], f"edge {i} has a wide tail")
        leaves = {next(iter(set(h.edge(i)) - U)) for i in hs}
        star_vertices = U | leaves
        K = frozenset({self.v(r - 1)} | (set(h.vertices) - star_vertices))
        w = Witness(
            "III",
            removed=er,
            center=frozenset(U),
            star_edges=frozenset(hs),
            shared=self.v(r - 1),
            K=K,
        )
        ok, why = verify_witness(h, k, self.m, w)
        self.log(f"star split: candidate {w.to_line()} {'accepted' if ok else 'rejected: ' + '; '.join(why)}")
        return w if ok else None


def exhaustive_witness(h: Hypergraph, k: int, m: int) -> Witness | None:
    """Brute-force search over case I, II and III shapes."""
    r = h.r
    for case, size in (("I", r - 1), ("II", r)):
        for S in combinations(h.vertices, size):
            w = Witness(case, frozenset(S), hyperedge_neighborhood(h, S), guided=False)
            if verify_witness(h, k, m, w)[0]:
                return w
    if not (k == r and m < k - 1):
        return None
    for removed in range(1, h.e + 1):
        for center in {frozenset(c) for e in h.edges for c in combinations(e, r - 1)}:
            star = frozenset(
                i for i in range(1, h.e + 1)
                if i != removed and center <= set(h.edge(i))
            )
            if len(star) < r - 1:
                continue
            vs = set(center).union(*(h.edge(i) for i in star))
            for shared in sorted(center):
                K = frozenset({shared} | (set(h.vertices) - vs))
                w = Witness("III", removed=removed, center=center, star_edges=star,
                            shared=shared, K=K, guided=False)
                if verify_witness(h, k, m, w)[0]:
                    return w
    return None


def find_witness(h: Hypergraph, k: int, m: int) -> Witness:
    """Return a verified case I/II/III witness for a hypergraph with no Berge cycle of length >= k."""
    r = h.r
    if not 3 <= k <= r:
        raise UnsupportedRegime(f"need 3 <= k <= r, got k={k}, r={r}")
    if h.n <= r:
        raise TooFewVertices(f"need n > r, got n={h.n}, r={r}")
    worst = max(h.multiplicities().values(), default=0)
    if worst > m:
        raise MultiplicityExceeded(f"an edge has multiplicity {worst} > m = {m}")
    cycle = find_berge_cycle_at_least(h, k)
    if cycle is not None:
        raise PreconditionViolated(f"Berge cycle of length {cycle.length} >= {k}", cycle)

    guide = _Guide(h, k, m)
    w = guide.run()
    if w is not None:
        return Witness(**{**w.__dict__, "guided": True, "trace": tuple(guide.trace)})
    guide.trace.append("lemma: guided construction failed; falling back to exhaustive search")
    w = exhaustive_witness(h, k, m)
    if w is None:
        raise RuntimeError("no witness exists; the input contradicts the structural lemma")
    return Witness(**{**w.__dict__, "guided": False, "trace": tuple(guide.trace)})
