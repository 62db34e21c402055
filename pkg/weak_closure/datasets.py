from dataclasses import dataclass
import csv
import functools
import logging
import os

import boto3

from weak_closure import config, graph, models
from weak_closure.errors import ConfigurationError

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


# Published parameters of the social and biological networks
REFERENCE_TABLE = {
    name: models.GraphStats(n=n, m=m, max_degree=max_degree, c=c, d=d, gamma=gamma)
    for name, n, m, max_degree, c, d, gamma in [
        ("adjnoun-adjacency", 112, 425, 49, 14, 6, 6),
        ("arenas-jazz", 198, 2742, 100, 42, 29, 18),
        ("ca-netscience", 379, 914, 34, 5, 8, 3),
        ("bio-celegans", 453, 2025, 237, 26, 10, 9),
        ("bio-diseasome", 516, 1188, 50, 9, 10, 5),
        ("soc-wiki-Vote", 889, 2914, 102, 18, 9, 8),
        ("arenas-email", 1133, 5451, 71, 19, 11, 8),
        ("bio-yeast", 1458, 1948, 56, 8, 5, 4),
        ("ca-CSphd", 1882, 1740, 46, 3, 2, 3),
        ("soc-hamsterster", 2426, 16630, 273, 77, 24, 19),
        ("ca-GrQc", 4158, 13422, 81, 43, 43, 9),
        ("soc-advogato", 5167, 39432, 807, 218, 25, 21),
        ("bio-dmela", 7393, 25569, 190, 72, 11, 12),
        ("ca-HepPh", 11204, 117619, 491, 90, 238, 54),
        ("ca-AstroPh", 17903, 196972, 504, 61, 56, 30),
        ("soc-brightkite", 56739, 212945, 1134, 184, 52, 49),
    ]
}

REPORT_COLUMNS = ["name", "n", "m", "Δ", "c", "d", "γ"]


@functools.lru_cache
def get_mirror(bucket_name: str):
    missing = [
        variable
        for variable, value in (
            ("WEAKCLOSE_S3_KEY_ID", config.WEAKCLOSE_S3_KEY_ID),
            ("WEAKCLOSE_S3_APP_KEY", config.WEAKCLOSE_S3_APP_KEY),
        )
        if not value
    ]
    if missing:
        raise ConfigurationError(
            f"Network mirror {bucket_name} needs {', '.join(missing)} to be set."
        )

    s3_resource = boto3.resource(
        service_name="s3",
        endpoint_url=config.WEAKCLOSE_S3_ENDPOINT_URL,
        aws_access_key_id=config.WEAKCLOSE_S3_KEY_ID,
        aws_secret_access_key=config.WEAKCLOSE_S3_APP_KEY,
    )
    return s3_resource.Bucket(bucket_name)


def network_key(name: str) -> str:
    return f"{config.WEAKCLOSE_S3_PREFIX}{name}.txt"


def fetch_network(name: str, dest: str = "", bucket_name: str | None = None) -> str:
    """Download an edge list from the mirror unless dest already holds it."""
    if name not in REFERENCE_TABLE:
        logger.warning(f"{name} is not one of the reference networks.")
    bucket_name = bucket_name or config.WEAKCLOSE_S3_BUCKET
    if not bucket_name:
        raise ConfigurationError("Set WEAKCLOSE_S3_BUCKET to the bucket holding the networks.")

    local_name = os.path.join(dest, f"{name}.txt")
    if os.path.exists(local_name):
        logger.info(f"{local_name} already exists, not downloading {name}.")
        return local_name

    # an interrupted download must not look like a fetched network
    part_name = f"{local_name}.part"
    get_mirror(bucket_name).download_file(network_key(name), part_name)
    os.replace(part_name, local_name)

    downloaded = graph.read_edge_list(local_name)
    size_matches(name, downloaded.n, downloaded.m)
    logger.info(f"Fetched {name} to {local_name} (n={downloaded.n}, m={downloaded.m}).")
    return local_name


def dataset_name(path: str) -> str:
    return os.path.basename(path).split(".")[0]


def size_matches(name: str, n: int, m: int) -> bool:
    """False, with a warning, when a reference network's file has a different size."""
    reference = REFERENCE_TABLE.get(name)
    if reference is None:
        return True
    if (reference.n, reference.m) != (n, m):
        logger.warning(
            f"{name} has n={n}, m={m} but the reference network has"
            f" n={reference.n}, m={reference.m}; parameters are not comparable."
        )
        return False
    return True


def matches_reference(name: str, stats: models.GraphStats) -> bool:
    return size_matches(name, stats.n, stats.m)


@dataclass
class ReportWriter:
    rows: list[tuple[str, models.GraphStats]]
    output_file: str

    def _row(self, name: str, stats: models.GraphStats) -> list:
        return [name, stats.n, stats.m, stats.max_degree, stats.c, stats.d, stats.gamma]

    def write_tsv(self):
        with open(self.output_file, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, delimiter="\t", lineterminator="\n")
            writer.writerow(REPORT_COLUMNS)
            for name, stats in sorted(self.rows, key=lambda r: r[0]):
                writer.writerow(self._row(name, stats))
