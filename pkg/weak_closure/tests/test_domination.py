from hypothesis import given, settings
from hypothesis import strategies as st

from weak_closure import domination, graph, models, oracle
from weak_closure.errors import ParameterError
from weak_closure.tests.base import GraphTestBase, atlas_graphs, complete, cycle, graphs, path


class TestIndependentDominatingSet(GraphTestBase):
    def test_cycle(self):
        answer = domination.solve_ids(cycle(4), 2)
        self.assertEqual(answer.witness, models.VertexSet.of([0, 2]))
        self.assertEqual(answer.stats["gamma"], 3)
        self.assertFalse(domination.solve_ids(cycle(4), 1).decision)

    def test_empty_graph(self):
        answer = domination.solve_ids(models.Graph(), 0)
        self.assertTrue(answer.decision)
        self.assertEqual(len(answer.witness), 0)

    def test_parameters(self):
        with self.assertRaises(ParameterError):
            domination.solve_ids(cycle(4), -1)

    def test_small_graphs(self):
        for g in atlas_graphs(7):
            for k in range(5):
                answer = domination.solve_ids(g, k)
                expected = oracle.oracle_decide("ids", g, {"k": k})
                self.assertAgrees(g, answer, expected, k=k)
                if answer.decision:
                    self.assertLessEqual(len(answer.witness), k)
                    self.assertTrue(graph.is_independent(g, answer.witness))
                    self.assertTrue(graph.is_dominating(g, answer.witness))

    @settings(max_examples=300, deadline=None, derandomize=True)
    @given(graphs(max_n=12), st.integers(min_value=0, max_value=4))
    def test_random_graphs(self, g, k):
        answer = domination.solve_ids(g, k)
        self.assertAgrees(g, answer, oracle.oracle_decide("ids", g, {"k": k}), k=k)


class TestDominatingClique(GraphTestBase):
    def test_cycle(self):
        self.assertFalse(domination.solve_dominating_clique(cycle(5), 2).decision)
        self.assertTrue(domination.solve_dominating_clique(cycle(4), 2).decision)

    def test_star(self):
        star = graph.graph_from_edges([(0, i) for i in range(1, 6)])
        answer = domination.solve_dominating_clique(star, 1)
        self.assertEqual(answer.witness, models.VertexSet.of([0]))

    def test_trivial(self):
        self.assertTrue(domination.solve_dominating_clique(models.Graph(), 0).decision)
        self.assertFalse(domination.solve_dominating_clique(path(2), 0).decision)
        self.assertTrue(domination.solve_dominating_clique(complete(4), 1).decision)

    def test_small_graphs(self):
        for g in atlas_graphs(7):
            for k in range(5):
                answer = domination.solve_dominating_clique(g, k)
                expected = oracle.oracle_decide("dominating-clique", g, {"k": k})
                self.assertAgrees(g, answer, expected, k=k)
                if answer.decision:
                    self.assertLessEqual(len(answer.witness), k)
                    self.assertTrue(graph.is_clique(g, answer.witness))
                    self.assertTrue(graph.is_dominating(g, answer.witness))

    @settings(max_examples=300, deadline=None, derandomize=True)
    @given(graphs(max_n=12), st.integers(min_value=0, max_value=4))
    def test_random_graphs(self, g, k):
        answer = domination.solve_dominating_clique(g, k)
        self.assertAgrees(
            g, answer, oracle.oracle_decide("dominating-clique", g, {"k": k}), k=k
        )
