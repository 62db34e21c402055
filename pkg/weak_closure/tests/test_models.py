from unittest import TestCase

import pydantic

from weak_closure import models


class TestVertexSet(TestCase):
    def test_of_sorts_and_deduplicates(self):
        self.assertEqual(models.VertexSet.of([3, 1, 1]).members, (1, 3))

    def test_rejects_unsorted(self):
        with self.assertRaises(pydantic.ValidationError):
            models.VertexSet((2, 1))

    def test_ordering_and_membership(self):
        a, b = models.VertexSet.of([0, 2]), models.VertexSet.of([1])
        self.assertLess(a, b)
        self.assertIn(2, a)
        self.assertEqual(len(a), 2)
        self.assertEqual(len({a, models.VertexSet.of([2, 0])}), 1)


class TestGraph(TestCase):
    def test_valid_graph(self):
        g = models.Graph(
            labels=("a", "b", "c"),
            adjacency=(frozenset({1}), frozenset({0, 2}), frozenset({1})),
        )
        self.assertEqual(g.n, 3)
        self.assertEqual(g.m, 2)
        self.assertEqual(list(g.edges()), [(0, 1), (1, 2)])
        self.assertEqual(g.label_set([2, 0]), ["c", "a"])

    def test_asymmetric_adjacency(self):
        with self.assertRaises(pydantic.ValidationError):
            models.Graph(labels=("a", "b"), adjacency=(frozenset({1}), frozenset()))

    def test_label_count_mismatch(self):
        with self.assertRaises(pydantic.ValidationError):
            models.Graph(labels=("a",), adjacency=(frozenset(), frozenset()))

    def test_self_loop(self):
        with self.assertRaises(pydantic.ValidationError):
            models.Graph(labels=("a",), adjacency=(frozenset({0}),))


class TestAnswers(TestCase):
    def test_biclique_sides_disjoint(self):
        with self.assertRaises(pydantic.ValidationError):
            models.BicliqueWitness(
                side_s=models.VertexSet.of([0, 1]), side_t=models.VertexSet.of([1, 2])
            )

    def test_edge_count(self):
        witness = models.BicliqueWitness(
            side_s=models.VertexSet.of([0, 1]), side_t=models.VertexSet.of([2, 3, 4])
        )
        self.assertEqual(witness.edge_count, 6)

    def test_yes_needs_witness(self):
        with self.assertRaises(pydantic.ValidationError):
            models.ProblemAnswer(problem="ids", decision=True)
        answer = models.ProblemAnswer(problem="ids", decision=False)
        self.assertIsNone(answer.witness)

    def test_negative_stats(self):
        with self.assertRaises(pydantic.ValidationError):
            models.ProblemAnswer(problem="ids", decision=False, stats={"nodes": -1})


class TestSubsetSumInstance(TestCase):
    def test_empty_range(self):
        with self.assertRaises(pydantic.ValidationError):
            models.SubsetSumInstance(values=[1, 2], lo=3, hi=2)

    def test_values_positive(self):
        with self.assertRaises(pydantic.ValidationError):
            models.SubsetSumInstance(values=[0, 2], lo=0, hi=2)


class TestOrderings(TestCase):
    def test_gamma_must_match(self):
        with self.assertRaises(pydantic.ValidationError):
            models.ClosureOrdering(order=(1, 0), step_closure=(1, 0), gamma=1)

    def test_not_a_permutation(self):
        with self.assertRaises(pydantic.ValidationError):
            models.ClosureOrdering(order=(0, 0), step_closure=(0, 0), gamma=1)

    def test_positions(self):
        ordering = models.ClosureOrdering(order=(2, 0, 1), step_closure=(0, 0, 0), gamma=1)
        self.assertEqual(ordering.positions(), [1, 2, 0])


class TestKernelInstance(TestCase):
    def _edgeless(self, n):
        return models.Graph(
            labels=tuple(str(i) for i in range(n)),
            adjacency=tuple(frozenset() for _ in range(n)),
        )

    def test_large_kernel_needs_shortcut(self):
        with self.assertRaises(pydantic.ValidationError):
            models.KernelInstance(
                graph=self._edgeless(4), k=2, gamma_used=1, kept=(0, 1, 2, 3)
            )
        kernel = models.KernelInstance(
            graph=self._edgeless(4), k=2, gamma_used=1, kept=(0, 1, 2, 3), shortcut=True
        )
        self.assertTrue(kernel.shortcut)

    def test_kept_mapping_length(self):
        with self.assertRaises(pydantic.ValidationError):
            models.KernelInstance(graph=self._edgeless(2), k=2, gamma_used=1, kept=(0,))


class TestEnumFamily(TestCase):
    def test_duplicates_rejected(self):
        with self.assertLogs("weak_closure.models", level="ERROR"):
            with self.assertRaises(pydantic.ValidationError):
                models.EnumFamily(
                    sets=(models.VertexSet.of([0]), models.VertexSet.of([0])),
                    fingerprint="x",
                    s=1,
                    kind="splex",
                )
