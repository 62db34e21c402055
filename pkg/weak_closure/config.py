import os

# Parallelism
WEAKCLOSE_THREADS = int(os.getenv("WEAKCLOSE_THREADS", "1"))

# Search budgets
WEAKCLOSE_SUBSET_CAP = int(os.getenv("WEAKCLOSE_SUBSET_CAP", "25"))
WEAKCLOSE_COVER_BUDGET = int(os.getenv("WEAKCLOSE_COVER_BUDGET", "200000"))
WEAKCLOSE_NODE_BUDGET = int(os.getenv("WEAKCLOSE_NODE_BUDGET", "2000000"))

# Oracle scale caps
WEAKCLOSE_ORACLE_MAX_N = int(os.getenv("WEAKCLOSE_ORACLE_MAX_N", "16"))
WEAKCLOSE_ORACLE_GAMMA_MAX_N = int(os.getenv("WEAKCLOSE_ORACLE_GAMMA_MAX_N", "12"))

# S3 dataset mirror
WEAKCLOSE_S3_ENDPOINT_URL = os.getenv("WEAKCLOSE_S3_ENDPOINT_URL")
WEAKCLOSE_S3_KEY_ID = os.getenv("WEAKCLOSE_S3_KEY_ID")
WEAKCLOSE_S3_APP_KEY = os.getenv("WEAKCLOSE_S3_APP_KEY")
WEAKCLOSE_S3_BUCKET = os.getenv("WEAKCLOSE_S3_BUCKET")
WEAKCLOSE_S3_PREFIX = os.getenv("WEAKCLOSE_S3_PREFIX", "networks/")

# Local dataset directory used by the reference-table tests
WEAKCLOSE_DATA_DIR = os.getenv("WEAKCLOSE_DATA_DIR")
