"""Experiment harness: suite runs and sampler uniformity reports."""
from tritest.bench.runner import (
    SuiteConfig,
    SuiteResult,
    load_suite,
    parse_seeds,
    parse_suite,
    query_slope,
    run_suite,
    summary_path,
    write_suite_result,
)
from tritest.bench.uniformity import UniformityReport, uniformity_report
