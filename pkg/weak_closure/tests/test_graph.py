import io

from hypothesis import given, settings
import networkx as nx

from weak_closure import graph, models, oracle
from weak_closure.errors import ContractViolation, DomainError, ParameterError, ParseError
from weak_closure.tests.base import GraphTestBase, atlas_graphs, complete, cycle, graphs, path


def vertex_subsets(g: models.Graph):
    for mask in range(1 << g.n):
        yield [v for v in g.vertices() if mask >> v & 1]


class TestParseEdgeList(GraphTestBase):
    def test_comments_and_blank_lines(self):
        g = graph.parse_edge_list("# header\na b\n\n% konect\nb c\nc a\n")
        self.assertEqual(g.labels, ("a", "b", "c"))
        self.assertEqual(g.m, 3)

    def test_file_object(self):
        g = graph.parse_edge_list(io.StringIO("1 2\n2 3\n"))
        self.assertEqual(g.labels, ("1", "2", "3"))
        self.assertTrue(g.has_edge(0, 1))
        self.assertFalse(g.has_edge(0, 2))

    def test_self_loop_keeps_vertex(self):
        with self.assertLogs("weak_closure.graph", level="WARNING") as logs:
            g = graph.parse_edge_list("a a\nb c\n")
        self.assertEqual(g.n, 3)
        self.assertEqual(g.m, 1)
        self.assertIn("Dropped 1 self-loop(s).", logs.output[0])

    def test_duplicates(self):
        with self.assertLogs("weak_closure.graph", level="WARNING") as logs:
            g = graph.parse_edge_list("a b\nb a\na b\n")
        self.assertEqual(g.m, 1)
        self.assertIn("Deduplicated 2 repeated edge(s).", logs.output[0])

    def test_malformed_line(self):
        with self.assertRaises(ParseError) as e:
            graph.parse_edge_list("a b\nlonely\n")
        self.assertEqual(e.exception.line_number, 2)
        with self.assertRaises(ParseError):
            graph.parse_edge_list("a b c\n")

    def test_empty_input(self):
        g = graph.parse_edge_list("")
        self.assertEqual(g.n, 0)


class TestSerialization(GraphTestBase):
    def test_serialize(self):
        self.assertEqual(graph.serialize_edge_list(path(3)), "0 1\n1 2\n")
        self.assertEqual(graph.serialize_edge_list(cycle(4)), "0 1\n1 2\n0 3\n2 3\n")

    def test_ids_survive(self):
        original = graph.parse_edge_list("a b\nc d\na d\n")
        again = graph.parse_edge_list(graph.serialize_edge_list(original))
        self.assertEqual(again.labels, ("a", "b", "c", "d"))
        self.assertEqual(again, original)

    def test_isolated_vertices_survive(self):
        with self.assertLogs("weak_closure.graph", level="WARNING"):
            original = graph.parse_edge_list("a a\nb c\nd d\n")
        self.assertEqual(graph.serialize_edge_list(original), "a a\nb c\nd d\n")
        with self.assertLogs("weak_closure.graph", level="WARNING"):
            again = graph.parse_edge_list(graph.serialize_edge_list(original))
        self.assertEqual(again, original)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(graphs(max_n=12))
    def test_parse_restores_graph(self, g):
        self.assertEqual(graph.parse_edge_list(graph.serialize_edge_list(g)), g)

    def test_fingerprint(self):
        self.assertEqual(graph.graph_fingerprint(cycle(5)), graph.graph_fingerprint(cycle(5)))
        self.assertNotEqual(graph.graph_fingerprint(cycle(5)), graph.graph_fingerprint(path(5)))


class TestConstructors(GraphTestBase):
    def test_networkx_round(self):
        g = graph.from_networkx(nx.petersen_graph())
        self.assertEqual((g.n, g.m), (10, 15))
        self.assertEqual(graph.to_networkx(g).number_of_edges(), 15)

    def test_disjoint_cliques(self):
        g = graph.disjoint_cliques([3, 3])
        self.assertEqual((g.n, g.m), (6, 6))

    def test_universal_vertex_with_triangles(self):
        g = graph.universal_vertex_with_triangles(2)
        self.assertEqual((g.n, g.m), (7, 12))
        self.assertEqual(g.degree(0), 6)


class TestSubgraphs(GraphTestBase):
    def test_check_vertex_set(self):
        with self.assertRaises(DomainError):
            graph.check_vertex_set(path(3), [5])
        self.assertEqual(graph.check_vertex_set(path(3), [2, 0]).members, (0, 2))

    def test_induced_subgraph(self):
        sub, mapping = graph.induced_subgraph(path(4), [1, 2, 3])
        self.assertEqual(mapping, (1, 2, 3))
        self.assertEqual(sub.labels, ("1", "2", "3"))
        self.assertEqual(sub.m, 2)

    def test_complement_components(self):
        components = graph.complement_components(cycle(4), range(4))
        self.assertEqual(components, [models.VertexSet.of([0, 2]), models.VertexSet.of([1, 3])])

    def test_complement_components_small_graphs(self):
        for g in atlas_graphs(7):
            for members in vertex_subsets(g):
                components = graph.complement_components(g, members)
                self.assertEqual(sum(len(c) for c in components), len(members))
                self.assertEqual(set().union(*components), set(members))
                self.assertEqual(
                    len(members) >= 2 and len(components) >= 2,
                    oracle.oracle_is_non_induced_biclique(g, members),
                    f"{members} on edges {list(g.edges())}",
                )


class TestPredicates(GraphTestBase):
    def test_splex(self):
        self.assertTrue(graph.check_splex(cycle(4), range(4), 2))
        self.assertFalse(graph.check_splex(cycle(4), range(4), 1))
        with self.assertRaises(ParameterError):
            graph.check_splex(cycle(4), range(4), 0)

    def test_defective(self):
        self.assertTrue(graph.check_defective_clique(cycle(4), range(4), 2))
        self.assertFalse(graph.check_defective_clique(cycle(4), range(4), 1))
        self.assertTrue(graph.check_defective_clique(complete(4), range(4), 0))
        with self.assertRaises(ParameterError):
            graph.check_defective_clique(cycle(4), range(4), -1)

    def test_one_plex_and_zero_defective_are_cliques(self):
        for g in atlas_graphs(6):
            for members in vertex_subsets(g):
                is_clique = graph.is_clique(g, members)
                self.assertEqual(graph.check_splex(g, members, 1), is_clique)
                self.assertEqual(graph.check_defective_clique(g, members, 0), is_clique)

    def test_class_predicates(self):
        self.assertTrue(graph.is_forest(path(4), range(4)))
        self.assertFalse(graph.is_forest(cycle(4), range(4)))
        self.assertTrue(graph.is_forest(cycle(4), []))
        self.assertTrue(graph.is_bipartite(cycle(4), range(4)))
        self.assertFalse(graph.is_bipartite(cycle(5), range(5)))
        self.assertTrue(graph.max_degree_within(cycle(4), range(4), 2))
        self.assertFalse(graph.max_degree_within(cycle(4), range(4), 1))
        self.assertTrue(graph.edge_count_within(cycle(4), [0, 1, 2], 2))

    def test_domination(self):
        self.assertTrue(graph.is_dominating(cycle(4), [0, 2]))
        self.assertFalse(graph.is_dominating(cycle(5), [0, 1]))
        self.assertTrue(graph.is_clique(complete(3), range(3)))
        self.assertTrue(graph.is_independent(cycle(4), [1, 3]))

    def test_diamond(self):
        diamond = graph.graph_from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        self.assertEqual(graph.find_diamond(diamond), (0, 1, 2, 3))
        self.assertTrue(graph.is_diamond_free(complete(4)))

    def test_c4_or_p4(self):
        self.assertTrue(graph.has_induced_c4_or_p4(cycle(4)))
        self.assertTrue(graph.has_induced_c4_or_p4(path(4)))
        self.assertFalse(graph.has_induced_c4_or_p4(complete(5)))
        self.assertFalse(graph.has_induced_c4_or_p4(path(3)))


class TestCheckMaximal(GraphTestBase):
    def test_maximal_clique(self):
        g = graph.disjoint_cliques([3, 3])
        self.assertTrue(graph.check_maximal(g, [0, 1, 2], graph.clique_property()))
        self.assertFalse(graph.check_maximal(g, [0, 1], graph.clique_property()))

    def test_splex_factory(self):
        # the cross pair cannot grow into a 3-vertex 2-plex
        g = graph.disjoint_cliques([3, 3])
        self.assertTrue(graph.check_maximal(g, [0, 3], graph.splex_property(2)))
        self.assertFalse(graph.check_maximal(g, [0, 1], graph.defective_property(1)))

    def test_property_must_hold(self):
        with self.assertRaises(ContractViolation):
            graph.check_maximal(path(3), [0, 2, 1], graph.clique_property())
