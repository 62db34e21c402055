import os
import tempfile
from unittest import TestCase, mock, skipUnless

from weak_closure import closure, config, datasets, graph, models
from weak_closure.errors import ConfigurationError


SMALL_REFERENCE_NETWORKS = [
    "adjnoun-adjacency",
    "ca-netscience",
    "bio-celegans",
    "bio-yeast",
    "ca-CSphd",
]


class TestNetworkMirror(TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)

    def _mirror(self, text):
        mock_bucket = mock.MagicMock()

        def download_file(key, local_name):
            with open(local_name, "w") as f:
                f.write(text)

        mock_bucket.download_file.side_effect = download_file
        return mock_bucket

    def _fetch(self, mock_bucket, name):
        mock_get_mirror = mock.MagicMock(return_value=mock_bucket)
        with mock.patch("weak_closure.datasets.get_mirror", mock_get_mirror):
            with mock.patch.object(config, "WEAKCLOSE_S3_BUCKET", "graphs"):
                with mock.patch.object(config, "WEAKCLOSE_S3_PREFIX", "networks/"):
                    local_name = datasets.fetch_network(name, self.tmpdir.name)
        return local_name, mock_get_mirror

    def test_fetch_network(self):
        mock_bucket = self._mirror("a b\nb c\n")
        local_name, mock_get_mirror = self._fetch(mock_bucket, "my-graph")

        self.assertEqual(local_name, os.path.join(self.tmpdir.name, "my-graph.txt"))
        mock_get_mirror.assert_called_once_with("graphs")
        mock_bucket.download_file.assert_called_once_with(
            "networks/my-graph.txt", f"{local_name}.part"
        )
        self.assertFalse(os.path.exists(f"{local_name}.part"))
        with open(local_name) as f:
            self.assertEqual(f.read(), "a b\nb c\n")

    def test_existing_file_is_kept(self):
        with open(os.path.join(self.tmpdir.name, "ca-CSphd.txt"), "w") as f:
            f.write("x y\n")
        mock_bucket = self._mirror("a b\n")

        local_name, _ = self._fetch(mock_bucket, "ca-CSphd")

        mock_bucket.download_file.assert_not_called()
        with open(local_name) as f:
            self.assertEqual(f.read(), "x y\n")

    def test_size_mismatch_warns(self):
        with self.assertLogs("weak_closure.datasets", level="WARNING") as logs:
            self._fetch(self._mirror("a b\n"), "ca-netscience")
        self.assertIn("not comparable", logs.output[0])

    def test_missing_credentials(self):
        datasets.get_mirror.cache_clear()
        self.addCleanup(datasets.get_mirror.cache_clear)
        with mock.patch.object(config, "WEAKCLOSE_S3_KEY_ID", None):
            with self.assertRaises(ConfigurationError) as e:
                datasets.get_mirror("graphs")
        self.assertIn("WEAKCLOSE_S3_KEY_ID", str(e.exception))

    def test_without_bucket(self):
        with mock.patch.object(config, "WEAKCLOSE_S3_BUCKET", None):
            with self.assertRaises(ConfigurationError):
                datasets.fetch_network("ca-netscience", self.tmpdir.name)


class TestReferenceTable(TestCase):
    def test_table(self):
        self.assertEqual(len(datasets.REFERENCE_TABLE), 16)
        netscience = datasets.REFERENCE_TABLE["ca-netscience"]
        self.assertEqual(
            (netscience.n, netscience.m, netscience.max_degree),
            (379, 914, 34),
        )
        for stats in datasets.REFERENCE_TABLE.values():
            self.assertLessEqual(stats.gamma, stats.c)
            self.assertLessEqual(stats.gamma, stats.d + 1)

    def test_dataset_name(self):
        self.assertEqual(datasets.dataset_name("/data/ca-netscience.txt"), "ca-netscience")
        self.assertEqual(datasets.dataset_name("bio-yeast.edges.gz"), "bio-yeast")

    def test_mismatch_warning(self):
        stats = models.GraphStats(n=10, m=9, max_degree=2, c=1, d=1, gamma=1)
        with self.assertLogs("weak_closure.datasets", level="WARNING") as logs:
            self.assertFalse(datasets.matches_reference("ca-netscience", stats))
        self.assertIn("not comparable", logs.output[0])
        self.assertTrue(datasets.matches_reference("my-graph", stats))
        self.assertTrue(datasets.size_matches("ca-netscience", 379, 914))


class TestReportWriter(TestCase):
    def test_write_tsv(self):
        rows = [
            ("k5", models.GraphStats(n=5, m=10, max_degree=4, c=1, d=4, gamma=1)),
            ("c4", models.GraphStats(n=4, m=4, max_degree=2, c=3, d=2, gamma=3)),
        ]
        answer_report = (
            "name\tn\tm\tΔ\tc\td\tγ\n"
            "c4\t4\t4\t2\t3\t2\t3\n"
            "k5\t5\t10\t4\t1\t4\t1\n"
        )

        with tempfile.NamedTemporaryFile(mode="w+", encoding="utf-8") as tmp:
            datasets.ReportWriter(rows, tmp.name).write_tsv()
            self.assertEqual(tmp.read(), answer_report)


@skipUnless(config.WEAKCLOSE_DATA_DIR, "WEAKCLOSE_DATA_DIR is not set")
class TestReferenceNetworks(TestCase):
    def test_small_networks(self):
        for name in SMALL_REFERENCE_NETWORKS:
            path = os.path.join(config.WEAKCLOSE_DATA_DIR, f"{name}.txt")
            if not os.path.exists(path):
                continue
            with self.subTest(network=name):
                stats = closure.graph_stats(graph.read_edge_list(path))
                if datasets.matches_reference(name, stats):
                    self.assertEqual(stats, datasets.REFERENCE_TABLE[name])
