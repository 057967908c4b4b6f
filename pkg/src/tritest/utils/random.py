"""Seeded random generators."""
import numpy as np


def make_rng(seed: int | None = None) -> np.random.Generator:
    """
    Get a numpy random generator for one session.

    Every randomised routine draws from a Generator it is handed, never from
    global state, so seeded runs replay exactly and concurrent sessions do
    not share a stream.

    Args:
        seed: Random seed; None draws fresh OS entropy

    Returns:
        numpy Generator instance
    """
    return np.random.default_rng(seed)


def permutation(n: int, seed: int) -> np.ndarray:
    """Seeded random permutation of 0..n-1."""
    return make_rng(seed).permutation(n)
