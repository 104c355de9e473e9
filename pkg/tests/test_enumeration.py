import random

import pytest

from graphentropy.enumeration import (
    CanonicalForm,
    canonical_form,
    enumerate_graphs,
    enumerate_trees,
    stream_graph6,
)
from graphentropy.graphs import (
    Graph6Error,
    complete,
    complete_bipartite,
    from_edges,
    is_connected,
    parse_graph6,
    path,
    star,
    write_graph6,
)

from _oracles import edge_mask, labeled_classes, min_mask

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def random_graph(rng, n, p=0.5):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(n, edges)


# --- canonical forms ----------------------------------------------------------


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        perm = list(range(n))
        rng.shuffle(perm)
        h = from_edges(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_form(g) == canonical_form(h)


def test_canonical_form_representative_is_isomorphic():
    rng = random.Random(22)
    for _ in range(30):
        n = rng.randint(2, 6)
        g = random_graph(rng, n)
        rep = canonical_form(g).graph()
        assert min_mask(n, edge_mask(rep)) == min_mask(n, edge_mask(g))


def test_canonical_form_separates_classes():
    # all classes at one order get pairwise distinct canonical bytes
    forms = [canonical_form(g) for g in enumerate_graphs(5)]
    assert len(set(forms)) == ALL_COUNTS[5]


def test_canonical_form_highly_symmetric():
    # symmetric graphs exercise the automorphism pruning
    for g in (complete(9), complete_bipartite(4, 4), star(10), path(10)):
        rng = random.Random(g.n)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_form(g) == canonical_form(h)


def test_canonical_form_order_guard():
    with pytest.raises(ValueError):
        canonical_form(complete(17))


def test_canonical_form_is_ordered_bytes():
    a = canonical_form(path(4))
    b = canonical_form(star(4))
    assert isinstance(a, CanonicalForm) and isinstance(a.bytes, bytes)
    assert (a < b) != (b < a)


# --- exhaustive generation ------------------------------------------------------


def test_enumeration_counts():
    for n, want in ALL_COUNTS.items():
        assert sum(1 for _ in enumerate_graphs(n)) == want
    for n, want in CONNECTED_COUNTS.items():
        assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == want


def test_enumeration_matches_labeled_brute_force():
    # class-by-class set equality against permutation dedup, not just counts
    for n in range(1, 6):
        ours = {min_mask(n, edge_mask(g)) for g in enumerate_graphs(n)}
        assert ours == labeled_classes(n)
        ours_c = {min_mask(n, edge_mask(g)) for g in enumerate_graphs(n, connected_only=True)}
        assert ours_c == labeled_classes(n, connected_only=True)


def test_enumeration_emits_canonical_representatives():
    for g in enumerate_graphs(5):
        assert canonical_form(g).graph().adj == g.adj


def test_enumeration_is_deterministic():
    a = [write_graph6(g) for g in enumerate_graphs(6)]
    b = [write_graph6(g) for g in enumerate_graphs(6)]
    assert a == b


def test_enumeration_parallel_order_matches_sequential():
    seq = [write_graph6(g) for g in enumerate_graphs(6)]
    par = [write_graph6(g) for g in enumerate_graphs(6, workers=2)]
    assert seq == par
    seq_c = [write_graph6(g) for g in enumerate_graphs(7, connected_only=True)]
    par_c = [write_graph6(g) for g in enumerate_graphs(7, connected_only=True, workers=3)]
    assert seq_c == par_c


def test_enumeration_connected_subset():
    conn = {write_graph6(g) for g in enumerate_graphs(5, connected_only=True)}
    alln = {write_graph6(g) for g in enumerate_graphs(5)}
    assert conn < alln
    assert all(is_connected(parse_graph6(w)) for w in conn)


# --- trees -----------------------------------------------------------------------


def test_tree_counts():
    for n, want in TREE_COUNTS.items():
        assert sum(1 for _ in enumerate_trees(n)) == want


def test_trees_match_graph_enumerator():
    # the two generators come from unrelated algorithms; their class sets
    # must agree once the graph stream is filtered down to trees
    for n in range(2, 8):
        from_trees = {canonical_form(t) for t in enumerate_trees(n)}
        from_graphs = {
            canonical_form(g)
            for g in enumerate_graphs(n, connected_only=True)
            if g.m == n - 1
        }
        assert from_trees == from_graphs


def test_trees_are_trees():
    for t in enumerate_trees(9):
        assert t.m == t.n - 1
        assert is_connected(t)


# --- graph6 streams ----------------------------------------------------------------


def test_stream_graph6_roundtrip():
    words = [write_graph6(g) for g in enumerate_graphs(5)]
    text = "\n".join(words) + "\n"
    back = [write_graph6(g) for g in stream_graph6(text.splitlines())]
    assert back == words


def test_stream_graph6_skips_blank_lines():
    lines = ["", "A_", "   ", "C~", ""]
    assert len(list(stream_graph6(lines))) == 2


def test_stream_graph6_strict_raises_with_line_number():
    lines = ["A_", "!!bad!!", "C~"]
    with pytest.raises(Graph6Error, match="line 2"):
        list(stream_graph6(lines))


def test_stream_graph6_skip_mode_reports():
    lines = ["A_", "!!bad!!", "C~"]
    seen = []
    out = list(stream_graph6(lines, strict=False, on_error=lambda no, exc: seen.append(no)))
    assert len(out) == 2
    assert seen == [2]
