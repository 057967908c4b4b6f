"""Sublinear algorithms over a QueryOracle: edge estimation, Γ* probing, edge sampling and the tester."""
from tritest.algorithms.arboricity import ProbeResult, loop_bound, probe_gamma_star, validated_threshold
from tritest.algorithms.estimator import EdgeCountEstimate, EstimatorConfig, estimate_edges, sample_size
from tritest.algorithms.sampler import EdgeSample, default_timeout, sample_edge, sample_edges
from tritest.algorithms.tester import (
    Decision,
    ThresholdMode,
    TriangleFreenessTester,
    Verdict,
    intersect_neighborhoods,
)
