import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraphs, relabel
from hyperberge.constructions import r_star
from hyperberge.core import (
    Hypergraph,
    canonical_form,
    hyperedge_neighborhood,
    incidence_graph,
    read_hgr,
    shadow_blocks,
    two_shadow,
    validate,
    write_hgr,
)
from hyperberge.errors import CanonLimitExceeded, InvalidHypergraph, ParseError


def test_validate_accepts_minimal_graph():
    assert validate(Hypergraph(3, 4, ((1, 2, 3),))) == []


@pytest.mark.parametrize(
    "h, fragment",
    [
        (Hypergraph(3, 4, ((1, 2, 2),)), "non-distinct labels in edge 1"),
        (Hypergraph(3, 4, ((1, 2, 3), (1, 2, 3)), True), "duplicate edge"),
        (Hypergraph(3, 4, ((1, 2),)), "expected 3"),
        (Hypergraph(3, 4, ((1, 2, 5),)), "outside 1..4"),
        (Hypergraph(3, 4, ((3, 2, 1),)), "not in ascending order"),
    ],
)
def test_validate_reports_violation(h, fragment):
    problems = validate(h)
    assert any(fragment in p for p in problems), problems


def test_repeated_edges_are_fine_in_multi_mode():
    assert validate(Hypergraph(3, 4, ((1, 2, 3), (1, 2, 3)), False)) == []


def test_build_raises_on_violation():
    with pytest.raises(InvalidHypergraph):
        Hypergraph.build(3, 3, [(1, 2, 4)])


def test_shadow_of_one_edge():
    assert two_shadow(Hypergraph(3, 3, ((1, 2, 3),))).pairs == {(1, 2), (1, 3), (2, 3)}


def test_shadow_of_small_star():
    pairs = two_shadow(r_star(5, 3)).pairs
    assert pairs == {(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5)}


def test_shadow_ignores_multiplicity():
    one = Hypergraph(3, 3, ((1, 2, 3),))
    two = Hypergraph(3, 3, ((1, 2, 3),) * 2, False)
    assert two_shadow(one) == two_shadow(two)


def test_incidence_of_one_edge_is_a_star():
    g = incidence_graph(Hypergraph(3, 3, ((1, 2, 3),)))
    assert g.adjacency == {(1, 1), (2, 1), (3, 1)}
    assert g.degree_right(1) == 3


def test_incidence_degrees_of_star():
    g = incidence_graph(r_star(5, 3))
    assert [g.degree_left(v) for v in range(1, 6)] == [3, 3, 1, 1, 1]


def test_incidence_of_empty_graph():
    assert incidence_graph(Hypergraph(3, 4)).adjacency == frozenset()


def _two_connected_by_deletion(g: nx.Graph) -> bool:
    if g.number_of_nodes() < 3:
        return nx.is_connected(g)
    return all(nx.is_connected(g.subgraph(set(g) - {v})) for v in g)


def test_one_block_for_two_overlapping_edges():
    h = Hypergraph(3, 4, ((1, 2, 3), (1, 2, 4)))
    d = shadow_blocks(h)
    assert d.blocks == (frozenset({1, 2, 3, 4}),)
    assert d.cut_vertices == frozenset()
    assert _two_connected_by_deletion(two_shadow(h).to_networkx())


def test_two_blocks_share_a_cut_vertex():
    h = Hypergraph(3, 5, ((1, 2, 3), (3, 4, 5)))
    d = shadow_blocks(h)
    assert d.blocks == (frozenset({1, 2, 3}), frozenset({3, 4, 5}))
    assert d.cut_vertices == {3}
    assert d.block_tree_adjacency == {3: (0, 1)}
    g = two_shadow(h).to_networkx()
    g.remove_node(3)
    assert not nx.is_connected(g)


def test_single_edge_is_one_block():
    assert shadow_blocks(Hypergraph(3, 3, ((1, 2, 3),))).blocks == (frozenset({1, 2, 3}),)


def test_shadow_isolated_vertices_sit_in_no_block():
    d = shadow_blocks(Hypergraph(3, 5, ((1, 2, 3),)))
    assert all(4 not in b and 5 not in b for b in d.blocks)


@given(hypergraphs())
def test_shadow_size_bound(h):
    assert len(two_shadow(h).pairs) <= h.e * h.r * (h.r - 1) // 2


@given(hypergraphs())
def test_blocks_partition_shadow_pairs(h):
    d = shadow_blocks(h)
    for u, v in two_shadow(h).pairs:
        assert sum(1 for b in d.blocks if u in b and v in b) == 1
    for i, a in enumerate(d.blocks):
        for b in d.blocks[i + 1 :]:
            assert len(a & b) <= 1


def test_canonical_form_of_single_edge():
    assert canonical_form(Hypergraph(3, 4, ((2, 3, 4),))).edges == ((1, 2, 3),)


def test_canonical_form_identifies_isomorphic_pairs():
    a = Hypergraph(3, 4, ((1, 2, 3), (1, 2, 4)))
    b = Hypergraph(3, 4, ((1, 3, 4), (2, 3, 4)))
    assert canonical_form(a) == canonical_form(b)


def test_canonical_form_separates_non_isomorphic():
    a = Hypergraph(3, 5, ((1, 2, 3), (1, 2, 4)))
    b = Hypergraph(3, 5, ((1, 2, 3), (1, 4, 5)))
    assert canonical_form(a) != canonical_form(b)


def test_canonical_form_limit():
    with pytest.raises(CanonLimitExceeded):
        canonical_form(r_star(11, 3))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(h, rnd):
    perm = list(range(1, h.n + 1))
    rnd.shuffle(perm)
    c = canonical_form(h)
    assert canonical_form(relabel(h, perm)) == c
    assert canonical_form(c) == c
    assert sorted(map(len, c.edges)) == sorted(map(len, h.edges))


@settings(max_examples=30, deadline=None)
@given(hypergraphs(r=2, max_n=5, max_e=6, multi=False))
def test_canonical_form_agrees_with_networkx_isomorphism(h):
    other = canonical_form(h)
    g1, g2 = nx.Graph(list(h.edges)), nx.Graph(list(other.edges))
    g1.add_nodes_from(h.vertices)
    g2.add_nodes_from(other.vertices)
    assert nx.is_isomorphic(g1, g2)


@pytest.mark.parametrize("s, expected", [({1, 2}, {1, 2, 3}), ({3}, {1}), ({3, 4}, {1, 2})])
def test_neighborhood_in_star(s, expected):
    assert hyperedge_neighborhood(r_star(5, 3), s) == expected


def test_neighborhood_counts_copies():
    h = Hypergraph(3, 4, ((1, 2, 3), (1, 2, 3), (2, 3, 4)), False)
    assert hyperedge_neighborhood(h, {1}) == {1, 2}


@given(hypergraphs(), st.sets(st.integers(1, 4)), st.sets(st.integers(1, 4)))
def test_neighborhood_is_additive(h, s1, s2):
    s1 = {v for v in s1 if v <= h.n}
    s2 = {v for v in s2 if v <= h.n}
    union = hyperedge_neighborhood(h, s1 | s2)
    assert union == hyperedge_neighborhood(h, s1) | hyperedge_neighborhood(h, s2)


def test_read_minimal_file():
    assert read_hgr("hgr 3 4 simple\n1 2 3\n") == Hypergraph(3, 4, ((1, 2, 3),), True)


def test_read_skips_comments_and_blank_lines():
    h = read_hgr("# made by hand\nhgr 3 4 multi\n\n1 2 3\n1 2 3\n")
    assert h.edges == ((1, 2, 3), (1, 2, 3)) and not h.simple


def test_arity_error_names_the_line():
    with pytest.raises(ParseError) as info:
        read_hgr("hgr 3 4 simple\n1 2\n")
    assert info.value.line == 2
    assert "arity" in str(info.value)


@pytest.mark.parametrize(
    "text",
    ["", "graph 3 4 simple\n", "hgr 3 4 maybe\n", "hgr 3 x simple\n", "hgr 3 4 simple\n2 1 3\n",
     "hgr 3 4 simple\n1 2 a\n"],
)
def test_malformed_text_is_rejected(text):
    with pytest.raises(ParseError):
        read_hgr(text)


def test_duplicate_in_simple_file_is_invalid():
    with pytest.raises(InvalidHypergraph):
        read_hgr("hgr 3 4 simple\n1 2 3\n1 2 3\n")


def test_write_sorts_edges():
    h = Hypergraph(3, 5, ((3, 4, 5), (1, 2, 3)))
    assert write_hgr(h) == "hgr 3 5 simple\n1 2 3\n3 4 5\n"


@given(hypergraphs())
def test_round_trip(h):
    text = write_hgr(h)
    back = read_hgr(text)
    assert back.edges == tuple(sorted(h.edges))
    assert (back.r, back.n, back.simple) == (h.r, h.n, h.simple)
    assert write_hgr(back) == text
    assert text.isascii() and "\r" not in text and " \n" not in text
