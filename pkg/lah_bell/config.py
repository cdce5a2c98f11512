# Configuration for the Lah-Bell toolkit

import os

# Factorials are memoized up to this many distinct arguments
FACTORIAL_CACHE_CAP = int(os.getenv("LAH_BELL_FACTORIAL_CACHE", "512"))

# Exhaustive enumeration of ordered partitions: Bell(9) = 21147 set partitions
ORACLE_MAX_N = int(os.getenv("LAH_BELL_ORACLE_MAX_N", "9"))

# Dobinski numerics (mpmath working precision, in bits)
DOBINSKI_PRECISION_BITS = int(os.getenv("LAH_BELL_PRECISION_BITS", "256"))
MIN_PRECISION_BITS = 128
DOBINSKI_DEFAULT_EPS = "1e-25"

# Worker pool width for `verify` when --jobs is not given
DEFAULT_JOBS = int(os.getenv("LAH_BELL_JOBS", "1"))

LOG_LEVEL = os.getenv("LAH_BELL_LOG_LEVEL", "INFO")

# JSON output schema
SCHEMA_VERSION = "1"

# Default bounds per verification suite. Keys: n_max, m_max, r_max, order, k_max;
# total_max bounds n + m for the two-index recurrences (n_max, m_max clip each index).
SUITE_BOUNDS = {
    "defining": {"n_max": 12, "r_max": 4},
    "spivey": {"total_max": 12, "n_max": 12, "m_max": 12},
    "spivey-r": {"total_max": 10, "n_max": 10, "m_max": 10, "r_max": 4},
    "spivey-lambda": {"total_max": 8, "n_max": 8, "m_max": 8, "r_max": 3},
    "weyl": {"n_max": 8, "m_max": 8, "r_max": 3, "k_max": 4},
    "gf": {"order": 10, "r_max": 3, "k_max": 5},
    "oracle": {"n_max": 9},
    "baseline": {"total_max": 14, "n_max": 20, "m_max": 14, "r_max": 5},
    "dobinski": {"n_max": 10, "r_max": 3},
}

# `verify all --quick`
QUICK_BOUNDS = {
    "defining": {"n_max": 6, "r_max": 2},
    "spivey": {"total_max": 6, "n_max": 6, "m_max": 6},
    "spivey-r": {"total_max": 5, "n_max": 5, "m_max": 5, "r_max": 2},
    "spivey-lambda": {"total_max": 4, "n_max": 4, "m_max": 4, "r_max": 1},
    "weyl": {"n_max": 2, "m_max": 2, "r_max": 1, "k_max": 2},
    "gf": {"order": 5, "r_max": 1, "k_max": 2},
    "oracle": {"n_max": 6},
    "baseline": {"total_max": 8, "n_max": 8, "m_max": 8, "r_max": 2},
    "dobinski": {"n_max": 3, "r_max": 1},
}

# Largest bounds accepted from the command line
BOUND_CAPS = {"total_max": 40, "n_max": 40, "m_max": 40, "r_max": 20, "order": 40, "k_max": 20}

# Parameter grids (rational literals)
GF_LAMBDAS = ("1", "-1", "1/2", "2", "1/3")
GF_XS = ("0", "1", "1/2")
GF_BELL_XS = ("0", "1", "2", "1/2")
GF_ORDER_LAMBDA = 8
DOBINSKI_XS = ("1/2", "1", "2")
DOBINSKI_LAMBDAS = (None, "1", "1/2", "2")
