"""Column layouts of the bench CSV files."""

# bumped whenever a column is added, removed or renamed
SCHEMA_VERSION = 1

# Grid keys of a suite file and the FamilySpec/run field each one feeds
GRID_KEYS = {
    "FAMILY": "family",
    "N": "n",
    "M": "m",
    "GAMMA": "gamma",
    "KIND": "kind",
    "D": "d",
    "K": "k",
    "EPS": "eps",
    "THRESHOLD_MODE": "threshold_mode",
}
SCALAR_KEYS = [
    "NAME", "SEEDS", "GRAPH_SEED", "EXPECT_REJECT_MIN", "EXPECT_REJECT_MAX", "SLOPE_BY", "EXPECT_SLOPE_MAX",
]

CELL_COLUMNS = [
    "cell", "family", "n", "m", "gamma", "kind", "d", "k", "eps", "threshold_mode",
]

PHASE_COLUMNS = [
    "probe_queries", "sampling_queries", "classification_queries",
    "intersection_queries", "validation_queries",
]

# One row per tester run; n and m are the achieved values of the generated graph
RUN_COLUMNS = [
    "schema_version", "suite", *CELL_COLUMNS, "graph_seed", "seed", "status", "error",
    "decision", "witness", "gamma_star", "threshold", "rounds", "timeouts",
    "degree_queries", "neighbor_queries", "pair_queries", "total_queries",
    *PHASE_COLUMNS, "wall_time_s",
]

# One row per cell
SUMMARY_COLUMNS = [
    "schema_version", "suite", *CELL_COLUMNS, "runs", "errors", "rejections",
    "reject_rate", "reject_sigma", "mean_queries", "median_queries",
    *[f"mean_{c}" for c in PHASE_COLUMNS],
    "expect_reject_min", "expect_reject_max", "check",
]

# One row per edge of H(G, t)
UNIFORMITY_COLUMNS = [
    "u", "v", "hits", "empirical", "exact", "exact_per_attempt", "deviation_sigma",
]
