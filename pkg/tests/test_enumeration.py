import itertools
import time

import networkx as nx
import pytest

import oracles
from edgeszeged import (
    Graph,
    Kind,
    RootedTree,
    canonical_form,
    classify,
    cycle_composition,
    diameter,
    find_cycle,
    free_trees,
    rooted_trees,
    unicyclic_graphs,
)
from edgeszeged.constructions import cycle, path, star
from edgeszeged.enumeration import (
    level_sequences,
    rooted_tree_catalogue,
    tree_from_levels,
    tree_sequences,
)


def rooted_form(t):
    # root marked by a pendant path of length n + 1, which no other vertex can match
    g = t.graph
    extra = g.n + 1
    edges = list(g.edges) + [(t.root, g.n)] + [(g.n + i, g.n + i + 1) for i in range(extra - 1)]
    return canonical_form(Graph(g.n + extra, edges))


def brute_rooted_counts(k):
    # labeled trees on k vertices rooted at 0, deduplicated as rooted trees
    seen = set()
    for edges in oracles.labeled_graphs_with_edges(k, k - 1) if k > 1 else [()]:
        seen.add(rooted_form(RootedTree(Graph(k, edges), 0)))
    return len(seen)


class TestRootedTrees:
    def test_level_sequence_bounds(self):
        for k in range(1, 9):
            for seq in level_sequences(k):
                assert seq[0] == 0
                assert all(1 <= seq[i] <= seq[i - 1] + 1 for i in range(1, k))

    def test_small_counts(self):
        assert [len(list(rooted_trees(k))) for k in (1, 2, 3, 4)] == [1, 1, 2, 4]

    def test_counts_against_brute_force(self):
        for k in range(1, 7):
            assert len(list(rooted_trees(k))) == brute_rooted_counts(k)

    def test_all_trees_and_distinct(self):
        for k in range(1, 9):
            trees = list(rooted_trees(k))
            assert all(classify(t.graph) is Kind.TREE for t in trees)
            forms = [rooted_form(t) for t in trees]
            assert len(set(forms)) == len(forms)

    def test_order_is_path_first_star_last(self):
        seqs = list(level_sequences(5))
        assert seqs[0] == (0, 1, 2, 3, 4) and seqs[-1] == (0, 1, 1, 1, 1)
        assert seqs == sorted(seqs, reverse=True)

    def test_tree_from_levels(self):
        assert tree_from_levels((0, 1, 2, 1)) == Graph(4, [(0, 1), (1, 2), (0, 3)])
        with pytest.raises(ValueError):
            tree_from_levels((0, 2))


class TestFreeTrees:
    def test_counts(self):
        assert [len(list(free_trees(n))) for n in range(1, 8)] == [1, 1, 1, 2, 3, 6, 11]

    def test_counts_match_networkx(self):
        for n in range(2, 13):
            assert len(list(free_trees(n))) == sum(1 for _ in nx.nonisomorphic_trees(n))

    def test_diameter_filters(self):
        (p5,) = free_trees(5, 4)
        assert p5 == path(5) or canonical_form(p5) == canonical_form(path(5))
        (s6,) = free_trees(6, 2)
        assert canonical_form(s6) == canonical_form(star(6))
        for n in range(2, 10):
            total = 0
            for d in range(1, n):
                ts = list(free_trees(n, d))
                assert all(diameter(t) == d for t in ts)
                total += len(ts)
            assert total == len(list(free_trees(n)))

    def test_no_duplicates(self):
        for n in range(1, 11):
            forms = [canonical_form(t) for t in free_trees(n)]
            assert len(set(forms)) == len(forms)


def brute_forms(n, m):
    return {canonical_form(Graph(n, e)) for e in oracles.labeled_graphs_with_edges(n, m)}


class TestUnicyclic:
    def test_counts(self):
        assert [len(list(unicyclic_graphs(n))) for n in range(3, 8)] == [1, 2, 5, 13, 33]

    def test_n4(self):
        forms = {canonical_form(g) for g in unicyclic_graphs(4)}
        tadpole = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
        assert forms == {canonical_form(cycle(4)), canonical_form(tadpole)}

    def test_completeness_against_labeled_brute_force(self):
        for n in range(3, 7):
            assert {canonical_form(g) for g in unicyclic_graphs(n)} == brute_forms(n, n)

    def test_counts_match_graph_atlas(self):
        atlas = [
            Graph(h.number_of_nodes(), h.edges())
            for h in nx.graph_atlas_g()
            if h.number_of_nodes() >= 3 and h.number_of_edges() == h.number_of_nodes() and nx.is_connected(h)
        ]
        for n in range(3, 8):
            want = {canonical_form(g) for g in atlas if g.n == n}
            assert {canonical_form(g) for g in unicyclic_graphs(n)} == want

    def test_postconditions_and_no_duplicates(self):
        for n in range(3, 9):
            forms = []
            for d in range(1, n - 1):
                for g in unicyclic_graphs(n, d):
                    assert classify(g) is Kind.UNICYCLIC and diameter(g) == d
                    forms.append(canonical_form(g))
            assert len(set(forms)) == len(forms) == len(list(unicyclic_graphs(n)))

    def test_girth_filter(self):
        for n in range(3, 9):
            total = 0
            for g in range(3, n + 1):
                gs = list(unicyclic_graphs(n, girth=g))
                assert all(len(find_cycle(h)) == g for h in gs)
                total += len(gs)
            assert total == len(list(unicyclic_graphs(n)))

    def test_larger_orders(self):
        start = time.perf_counter()
        counts = [len(list(unicyclic_graphs(n))) for n in (8, 9, 10, 11, 12)]
        assert counts == [89, 240, 657, 1806, 5026]
        assert time.perf_counter() - start < 30

    def test_dihedral_dedup_is_exact(self):
        # sequences are isomorphic as graphs iff related by rotation or reflection
        for n in range(3, 9):
            for g in range(3, n + 1):
                trees = rooted_tree_catalogue(n - g + 1)
                seqs = set(tree_sequences(n, g))
                forms = {}
                for seq in _all_sequences(n, g, len(trees), trees):
                    key = canonical_form(cycle_composition(g, [trees[r] for r in seq]))
                    orbit = _orbit(seq)
                    forms.setdefault(key, set()).update(orbit)
                    # exactly one least representative per orbit is generated
                    assert len(orbit & seqs) == 1
                for orbit in forms.values():
                    assert len(orbit & seqs) == 1


def _orbit(seq):
    g = len(seq)
    out = set()
    for s in (seq, seq[::-1]):
        for i in range(g):
            out.add(s[i:] + s[:i])
    return out


def _all_sequences(n, g, count, trees):
    for seq in itertools.product(range(count), repeat=g):
        if sum(trees[r].order for r in seq) == n:
            yield seq
