"""Certified instance generators: lower-bound families, planted triangles and triangle-free controls."""
from tritest.generators.controls import CONTROL_KINDS, gen_planted, gen_triangle_free_control
from tritest.generators.families import (
    CertifiedInstance,
    Family,
    FamilySpec,
    arboricity_bounds,
    certify,
    gen_lb_bipartite_pad,
    gen_lb_isolated_pad,
    gen_lb_matchings,
    generate,
    save_instance,
)
