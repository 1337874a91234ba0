import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from edgeszeged import (
    Graph,
    GraphError,
    canonical_form,
    composition_m_count,
    consolidate_to_v1,
    cycle_composition,
    cycle_distance_profile,
    decompose,
    edge_partition,
    edge_szeged,
    edge_szeged_formula,
    is_isomorphic,
)
from edgeszeged.constructions import cycle, path, star
from edgeszeged.enumeration import free_trees, unicyclic_graphs
from edgeszeged.harness import connected_graphs
from edgeszeged.unicyclic import attach_at_vertex

TADPOLE = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


class TestDecompose:
    def test_c5(self):
        dec = decompose(cycle(5))
        assert dec.r == 5
        assert dec.tree_orders == (1, 1, 1, 1, 1)

    def test_tadpole(self):
        dec = decompose(TADPOLE)
        assert dec.r == 3 and dec.cycle == (0, 1, 2)
        assert dec.tree_orders == (2, 1, 1)
        assert dec.trees[0].graph == path(2) and dec.vertex_maps[0] == (0, 3)
        assert dec.to_dict() == {"cycle_length": 3, "cycle": [0, 1, 2], "tree_orders": [2, 1, 1]}

    def test_round_trip(self):
        for n in range(3, 10):
            for g in unicyclic_graphs(n):
                dec = decompose(g)
                assert sum(dec.tree_orders) == g.n
                assert is_isomorphic(cycle_composition(dec.r, dec.trees), g)

    def test_rejects_trees(self):
        with pytest.raises(GraphError):
            decompose(path(5))


class TestFormula:
    @pytest.mark.parametrize(
        "g, value",
        [(cycle(3), 3), (TADPOLE, 5), (cycle(4), 4)],
    )
    def test_examples(self, g, value):
        assert oracles.edge_szeged(g.n, g.edges) == value
        assert edge_szeged_formula(g) == value

    def test_matches_definition(self):
        for n in range(3, 9):
            for g in unicyclic_graphs(n):
                assert edge_szeged_formula(g) == edge_szeged(g)


class TestConsolidate:
    def test_end_block_unchanged_up_to_isomorphism(self):
        # every tree already hangs at one cycle vertex
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5)])
        h = consolidate_to_v1(g)
        assert is_isomorphic(g, h)
        assert edge_szeged(h) == edge_szeged(g)

    def test_c4_opposite_pendants(self):
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
        h = consolidate_to_v1(g)
        assert h == Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)])
        assert edge_szeged(h) < edge_szeged(g)

    def test_preserves_order_and_cycle(self):
        for g in unicyclic_graphs(7):
            h = consolidate_to_v1(g)
            assert h.n == g.n and h.m == g.m
            assert len(decompose(h).cycle) == len(decompose(g).cycle)

    def test_monotone_with_equality_only_for_end_blocks(self):
        for n in range(3, 9):
            for g in unicyclic_graphs(n):
                h = consolidate_to_v1(g)
                a, b = edge_szeged(g), edge_szeged(h)
                assert b <= a
                assert (a == b) == (canonical_form(g) == canonical_form(h))


class TestCompositionCount:
    def test_equidistant_vertex_changes_nothing(self):
        g0 = cycle(3)
        e = (0, 1)
        ep = edge_partition(g0, e)
        assert composition_m_count(g0, 5, 2, e) == (ep.m_u, ep.m_v)

    def test_zero_edges_is_plain_partition(self):
        for g0 in connected_graphs(5):
            for e in g0.edges:
                ep = edge_partition(g0, e)
                for u in range(g0.n):
                    assert composition_m_count(g0, 0, u, e) == (ep.m_u, ep.m_v)

    def test_prediction_matches_built_graph(self):
        rng = random.Random(8)
        trees = [t for k in range(1, 6) for t in free_trees(k)]
        for n in range(2, 7):
            for g0 in connected_graphs(n):
                for u in range(g0.n):
                    t = rng.choice(trees)
                    root = rng.randrange(t.n)
                    g = attach_at_vertex(g0, u, t, root)
                    for e in g0.edges:
                        mu, mv, _ = oracles.edge_split(g.n, g.edges, e)
                        assert composition_m_count(g0, t.m, u, e) == (mu, mv)

    def test_invalid(self):
        with pytest.raises(GraphError):
            composition_m_count(path(3), 1, 0, (0, 2))
        with pytest.raises(GraphError):
            composition_m_count(path(3), 1, 7, (0, 1))

    def test_attach_labels(self):
        g = attach_at_vertex(path(3), 2, star(3), 0)
        assert g == Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


GLUE_POOL = [(h, r) for k in range(1, 5) for h in connected_graphs(k) for r in range(h.n)]


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([g for n in range(2, 6) for g in connected_graphs(n)]),
    st.data(),
)
def test_sum_over_base_edges_depends_only_on_glued_edge_count(g0, data):
    u = data.draw(st.integers(0, g0.n - 1))
    h1, r1 = data.draw(st.sampled_from(GLUE_POOL))
    same = [(h, r) for h, r in GLUE_POOL if h.m == h1.m]
    h2, r2 = data.draw(st.sampled_from(same))

    def base_sum(g):
        total = 0
        for e in g0.edges:
            ep = edge_partition(g, e)
            total += ep.m_u * ep.m_v
        return total

    assert base_sum(attach_at_vertex(g0, u, h1, r1)) == base_sum(attach_at_vertex(g0, u, h2, r2))


class TestCycleProfile:
    @pytest.mark.parametrize(
        "g, j, pair",
        [(6, 2, (0, 2)), (6, 3, (0, 2)), (6, 4, (0, 0)), (6, 5, (2, 0)),
         (5, 2, (0, 2)), (5, 3, (0, 1)), (5, 4, (1, 0))],
    )
    def test_case_table(self, g, j, pair):
        assert cycle_distance_profile(g, j) == pair

    def test_matches_shortest_paths(self):
        for g in range(3, 13):
            for j in range(2, g):
                assert cycle_distance_profile(g, j) == oracles.cycle_profile(g, j)

    @pytest.mark.parametrize("g, j", [(5, 1), (5, 5), (2, 2)])
    def test_out_of_range(self, g, j):
        with pytest.raises(GraphError):
            cycle_distance_profile(g, j)
