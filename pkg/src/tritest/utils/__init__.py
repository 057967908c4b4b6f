"""Shared utilities module."""
from .random import make_rng, permutation
from .stats import binomial_sigma, fit_loglog_slope, standard_error
