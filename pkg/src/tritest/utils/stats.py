"""Small statistics helpers for seeded experiments."""
import math

import numpy as np


def binomial_sigma(p: float, trials: int) -> float:
    """Standard deviation of an observed frequency over `trials` Bernoulli(p) runs."""
    if trials <= 0:
        raise ValueError("need at least one trial")
    return math.sqrt(p * (1 - p) / trials)


def standard_error(values) -> float:
    """Standard error of the mean of a sample (ddof=1)."""
    arr = np.asarray(values, dtype=float)
    if arr.size < 2:
        raise ValueError("need at least two values for a standard error")
    return float(arr.std(ddof=1) / math.sqrt(arr.size))


def fit_loglog_slope(x, y) -> float:
    """
    Least-squares slope of log(y) against log(x).

    Args:
        x: Positive abscissae (e.g. arboricity values of a sweep)
        y: Positive measurements (e.g. mean query counts)

    Returns:
        Fitted exponent k in y ≈ c·x^k
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size < 2 or np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("slope fit needs at least two positive points")
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)
