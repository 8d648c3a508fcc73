"""
Generators
==========

Valuated matroids from tree metrics, polynomial matrices and uniform
matroids, and random instances for testing.
"""
from .trees import TreeInstance, gen_tree_metric, random_tree
from .polynomials import PolyMatrix, gen_representable, random_poly_matrix
from .uniform import gen_uniform_zero, gen_perturbed, random_translation
from .sampling import random_members, random_pairs, random_walk

__all__ = [
    "TreeInstance",
    "gen_tree_metric",
    "random_tree",
    "PolyMatrix",
    "gen_representable",
    "random_poly_matrix",
    "gen_uniform_zero",
    "gen_perturbed",
    "random_translation",
    "random_members",
    "random_pairs",
    "random_walk",
]
