#!/usr/bin/env python3
"""
Uniform valuations
^^^^^^^^^^^^^^^^^^

Constant valuations on uniform matroids and their random translates.
"""
import numpy as np

from ..errors import StructuralError
from ..matroid import GroundSet, uniform_family
from ..valuation import Valuation


def gen_uniform_zero(labels, rank):
    """``omega = 0`` on all ``rank`` -subsets of ``labels``"""
    if not 0 <= rank <= len(labels):
        raise StructuralError(
            f"Cannot choose {rank} out of {len(labels)} elements"
        )
    family = uniform_family(GroundSet(labels), rank)
    return Valuation(family, {base: 0 for base in family})


def random_translation(dim, seed, bound=3):
    """Random integer vector in ``[-bound, bound]^dim``"""
    rs = np.random.RandomState(seed)
    return tuple(int(a) for a in rs.randint(-bound, bound + 1, size=dim))


def gen_perturbed(v, seed, bound=3):
    """``omega + x`` for a random ``x`` in ``[-bound, bound]^E``"""
    return v.translate(random_translation(len(v.ground), seed, bound=bound))


__all__ = ["gen_uniform_zero", "random_translation", "gen_perturbed"]
