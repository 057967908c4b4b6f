"""Brute-force ground truth for desk-scale graphs."""
from tritest.exact.arboricity import core_numbers, degeneracy, density_bound, exact_arboricity_small
from tritest.exact.distributions import estimator_expectation, sampler_edge_distribution
from tritest.exact.triangles import (
    TrianglePacking,
    count_triangles,
    enumerate_triangles,
    find_triangle,
    greedy_packing,
    is_triangle_free,
    triangle_deletion_distance,
)
