"""
Bench suites: seeded tester runs over generated families, written as CSV.

A suite file is a flat KEY=VALUE file (dotenv syntax). Grid keys take
comma-separated lists and the suite runs their full product; SEEDS takes
integers and inclusive ranges such as ``0-299``. See docs/BENCH.md.
"""
import itertools
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np
import pandas as pd
from dotenv import dotenv_values, load_dotenv

from tritest.algorithms.tester import ThresholdMode, TriangleFreenessTester
from tritest.bench.schemas import GRID_KEYS, PHASE_COLUMNS, RUN_COLUMNS, SCALAR_KEYS, SCHEMA_VERSION, SUMMARY_COLUMNS
from tritest.errors import ConfigError, TritestError
from tritest.generators.families import Family, FamilySpec, generate
from tritest.graph.core import Graph, GraphParams
from tritest.graph.oracle import QueryOracle
from tritest.utils.stats import binomial_sigma, fit_loglog_slope

load_dotenv()

logger = logging.getLogger(__name__)

THREADS_ENV = 'TRITEST_THREADS'

_INT_FIELDS = {'n', 'm', 'gamma', 'd', 'k'}
_INT_COLUMNS = [
    "cell", "n", "m", "gamma", "d", "k", "graph_seed", "seed", "gamma_star", "threshold", "rounds",
    "timeouts", "degree_queries", "neighbor_queries", "pair_queries", "total_queries", *PHASE_COLUMNS,
]


def default_threads() -> int:
    """Worker count from TRITEST_THREADS (default 1)."""
    raw = os.environ.get(THREADS_ENV, '1')
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}")
    return max(1, threads)


def parse_seeds(text: str) -> list[int]:
    """
    Parse a seed list such as ``0-3,10`` into [0, 1, 2, 3, 10].

    Raises:
        ConfigError: on a malformed item or a reversed range
    """
    seeds = []
    for item in (s.strip() for s in text.split(',')):
        if not item:
            continue
        lo, sep, hi = item.partition('-')
        try:
            if sep:
                a, b = int(lo), int(hi)
                if b < a:
                    raise ConfigError(f"seed range {item!r} is reversed")
                seeds.extend(range(a, b + 1))
            else:
                seeds.append(int(item))
        except ValueError:
            raise ConfigError(f"bad seed item {item!r}")
    if not seeds:
        raise ConfigError("SEEDS lists no seeds")
    return seeds


def _parse_value(name: str, text: str):
    try:
        if name in _INT_FIELDS:
            return int(text)
        if name == 'eps':
            # accepts 0.25 as well as 1/4
            return float(Fraction(text))
        if name == 'family':
            return Family(text.lower()).value
        if name == 'threshold_mode':
            return ThresholdMode(text.lower()).value
    except ValueError:
        raise ConfigError(f"bad {name} value {text!r}")
    return text


def _parse_optional_float(values: dict, key: str) -> float | None:
    text = values.get(key)
    if text is None or text == '':
        return None
    try:
        return float(Fraction(text))
    except ValueError:
        raise ConfigError(f"bad {key} value {text!r}")


@dataclass(frozen=True)
class SuiteConfig:
    """Parsed suite file."""

    name: str
    grid: dict[str, list] = field(default_factory=dict)
    seeds: list[int] = field(default_factory=lambda: [0])
    graph_seed: int | None = None
    expect_reject_min: float | None = None
    expect_reject_max: float | None = None
    slope_by: str = 'gamma'
    expect_slope_max: float | None = None

    @property
    def has_check(self) -> bool:
        return self.expect_reject_min is not None or self.expect_reject_max is not None

    def cells(self) -> list[dict]:
        """Every grid point, in the order the grid keys are declared."""
        names = list(GRID_KEYS.values())
        return [dict(zip(names, combo)) for combo in itertools.product(*(self.grid[name] for name in names))]


def parse_suite(values: dict[str, str | None], name: str = 'suite') -> SuiteConfig:
    """
    Build a SuiteConfig from raw KEY=VALUE pairs.

    Raises:
        ConfigError: on an unknown key, a missing FAMILY/N/EPS or a bad value
    """
    unknown = sorted(set(values) - set(GRID_KEYS) - set(SCALAR_KEYS))
    if unknown:
        raise ConfigError(f"unknown suite keys: {', '.join(unknown)}")
    for required in ('FAMILY', 'N', 'EPS'):
        if not values.get(required):
            raise ConfigError(f"suite needs {required}")

    grid = {}
    for key, field_name in GRID_KEYS.items():
        raw = values.get(key)
        if raw is None or raw.strip() == '':
            grid[field_name] = [ThresholdMode.VALIDATED.value] if field_name == 'threshold_mode' else [None]
            continue
        grid[field_name] = [_parse_value(field_name, item.strip()) for item in raw.split(',') if item.strip()]

    slope_by = (values.get('SLOPE_BY') or 'gamma').strip().lower()
    if slope_by not in _INT_FIELDS:
        raise ConfigError(f"SLOPE_BY must be one of {', '.join(sorted(_INT_FIELDS))}, got {slope_by!r}")

    graph_seed = values.get('GRAPH_SEED')
    try:
        graph_seed = int(graph_seed) if graph_seed else None
    except ValueError:
        raise ConfigError(f"bad GRAPH_SEED value {graph_seed!r}")

    return SuiteConfig(
        name=values.get('NAME') or name,
        grid=grid,
        seeds=parse_seeds(values.get('SEEDS') or '0'),
        graph_seed=graph_seed,
        expect_reject_min=_parse_optional_float(values, 'EXPECT_REJECT_MIN'),
        expect_reject_max=_parse_optional_float(values, 'EXPECT_REJECT_MAX'),
        slope_by=slope_by,
        expect_slope_max=_parse_optional_float(values, 'EXPECT_SLOPE_MAX'),
    )


def load_suite(file_path: str | Path) -> SuiteConfig:
    """Read a suite file; NAME defaults to the file stem."""
    file_path = Path(file_path)
    if not file_path.is_file():
        raise ConfigError(f"suite file not found: {file_path}")
    return parse_suite(dotenv_values(file_path), name=file_path.stem)


@dataclass
class SuiteResult:
    runs: pd.DataFrame
    summary: pd.DataFrame
    failed_checks: list[str] = field(default_factory=list)
    query_slope: float | None = None

    @property
    def ok(self) -> bool:
        return not self.failed_checks


def _cell_row(suite: str, index: int, cell: dict, graph: Graph | None) -> dict:
    row = {'schema_version': SCHEMA_VERSION, 'suite': suite, 'cell': index, **cell}
    if graph is not None:
        row['n'], row['m'] = graph.n, graph.m
    return row


def _run_one(suite: str, index: int, cell: dict, graph: Graph, graph_seed, seed: int, timing: bool) -> dict:
    row = _cell_row(suite, index, cell, graph)
    row.update(graph_seed=graph_seed, seed=seed)
    tester = TriangleFreenessTester(cell['threshold_mode'])
    oracle = QueryOracle(graph, seed)

    started = time.perf_counter()
    try:
        verdict = tester.run(oracle, GraphParams.of(graph, cell['eps']))
    except TritestError as exc:
        row.update(status='error', error=str(exc))
        return row
    elapsed = time.perf_counter() - started

    ledger = verdict.total_queries
    row.update(
        status='ok',
        error='',
        decision=verdict.decision.value,
        witness=' '.join(map(str, verdict.witness)) if verdict.witness else '',
        gamma_star=verdict.gamma_star,
        threshold=verdict.threshold,
        rounds=verdict.rounds_run,
        timeouts=verdict.timeouts,
        degree_queries=ledger.degree_queries,
        neighbor_queries=ledger.neighbor_queries,
        pair_queries=ledger.pair_queries,
        total_queries=ledger.total,
        wall_time_s=round(elapsed, 6) if timing else 0.0,
    )
    for column in PHASE_COLUMNS:
        row[column] = verdict.phases[column.removesuffix('_queries')].total
    return row


def summarize(runs: pd.DataFrame, config: SuiteConfig) -> tuple[pd.DataFrame, list[str]]:
    """
    Per-cell rejection frequency and query statistics.

    Returns:
        (summary frame, descriptions of failed acceptance checks)
    """
    rows = []
    failed = []
    for index, group in runs.groupby('cell', sort=True):
        ok = group[group['status'] == 'ok']
        first = group.iloc[0]
        row = {'schema_version': SCHEMA_VERSION, 'suite': config.name}
        row.update({c: first[c] for c in ('cell', 'family', 'n', 'm', 'gamma', 'kind', 'd', 'k', 'eps', 'threshold_mode')})

        runs_ok = len(ok)
        rejections = int((ok['decision'] == 'REJECT').sum())
        rate = rejections / runs_ok if runs_ok else np.nan
        row.update(
            runs=runs_ok,
            errors=int((group['status'] == 'error').sum()),
            rejections=rejections,
            reject_rate=rate,
            reject_sigma=binomial_sigma(rate, runs_ok) if runs_ok else np.nan,
            mean_queries=ok['total_queries'].mean() if runs_ok else np.nan,
            median_queries=ok['total_queries'].median() if runs_ok else np.nan,
            expect_reject_min=config.expect_reject_min,
            expect_reject_max=config.expect_reject_max,
        )
        for column in PHASE_COLUMNS:
            row[f'mean_{column}'] = ok[column].mean() if runs_ok else np.nan

        check = ''
        if config.has_check:
            low = config.expect_reject_min if config.expect_reject_min is not None else 0.0
            high = config.expect_reject_max if config.expect_reject_max is not None else 1.0
            check = 'pass' if runs_ok and low <= rate <= high else 'fail'
            if check == 'fail':
                failed.append(f"cell {index}: reject rate {rate:.4f} over {runs_ok} runs outside [{low}, {high}]")
        row['check'] = check
        rows.append(row)
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS), failed


def run_suite(config: SuiteConfig, threads: int | None = None, timing: bool = True) -> SuiteResult:
    """
    Run every (cell, seed) of a suite.

    Cells whose generator rejects the parameters become one error row and
    the suite goes on. Runs execute on a thread pool, one oracle session
    each, and rows come back in (cell, seed) order whatever the completion
    order.

    Args:
        config: Parsed suite
        threads: Worker count; defaults to TRITEST_THREADS
        timing: Record wall time; False writes 0.0 so reruns are byte-identical

    Returns:
        SuiteResult with the run rows, the per-cell summary and failed checks
    """
    threads = threads or default_threads()
    error_rows = []
    jobs = []
    for index, cell in enumerate(config.cells()):
        spec = FamilySpec(cell['family'], cell['n'], cell['m'], cell['gamma'], config.graph_seed,
                          cell['kind'], cell['d'], cell['k'])
        try:
            instance = generate(spec)
        except TritestError as exc:
            logger.warning("cell %d (%s) skipped: %s", index, cell['family'], exc)
            row = _cell_row(config.name, index, cell, None)
            row.update(graph_seed=config.graph_seed, status='error', error=str(exc))
            error_rows.append(row)
            continue
        logger.info("cell %d: %s n=%d m=%d, %d seeds", index, cell['family'], instance.n, instance.m,
                    len(config.seeds))
        for seed in config.seeds:
            jobs.append((config.name, index, cell, instance.graph, config.graph_seed, seed, timing))

    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(lambda job: _run_one(*job), jobs))

    runs = pd.DataFrame(rows + error_rows, columns=RUN_COLUMNS)
    runs = runs.astype({column: "Int64" for column in _INT_COLUMNS})
    runs = runs.sort_values(['cell', 'seed'], kind='stable', na_position='first').reset_index(drop=True)
    summary, failed = summarize(runs, config)
    slope = query_slope(summary, config.slope_by)
    if config.expect_slope_max is not None and (slope is None or slope > config.expect_slope_max):
        shown = 'undefined' if slope is None else f'{slope:.3f}'
        failed.append(f"log-log query slope in {config.slope_by} {shown} above {config.expect_slope_max}")
    return SuiteResult(runs, summary, failed, slope)


def query_slope(summary: pd.DataFrame, by: str = 'gamma') -> float | None:
    """
    Log-log slope of mean total queries against a grid column of the summary.

    Returns None when fewer than two distinct positive values of `by` have runs.
    """
    rows = summary[summary[by].notna() & summary['mean_queries'].notna()]
    rows = rows.groupby(by, sort=True)['mean_queries'].mean()
    rows = rows[(rows.index.astype(float) > 0) & (rows > 0)]
    if len(rows) < 2:
        return None
    return fit_loglog_slope(rows.index.astype(float), rows.to_numpy(dtype=float))


def summary_path(out_path: str | Path) -> Path:
    """``results.csv`` -> ``results_summary.csv``."""
    out_path = Path(out_path)
    return out_path.with_name(f"{out_path.stem}_summary{out_path.suffix or '.csv'}")


def write_suite_result(result: SuiteResult, out_path: str | Path) -> tuple[Path, Path]:
    """Write the run table to out_path and the summary next to it."""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    result.runs.to_csv(out_path, index=False, lineterminator='\n')
    summary = summary_path(out_path)
    result.summary.to_csv(summary, index=False, lineterminator='\n', float_format='%.6f')
    return out_path, summary
