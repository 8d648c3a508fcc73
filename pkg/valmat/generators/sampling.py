#!/usr/bin/env python3
"""
Sampling
^^^^^^^^

Random lattice points, obtained by random walks along covers and cocovers
from :py:func:`~valmat.lattice.find_point`.
"""
import numpy as np

from ..lattice import cocovers, covers, find_point


def random_walk(v, start, length, rs):
    """Random walk of ``length`` cover/cocover steps"""
    point = start
    for _ in range(length):
        if rs.rand() < 0.5:
            neighbours = covers(v, point)
        else:
            neighbours = cocovers(v, point) or covers(v, point)
        point = neighbours[rs.randint(len(neighbours))]
    return point


def random_members(v, count, seed, max_steps=4):
    """``count`` random lattice points

    Args:
        v (Valuation): Valuated matroid (without loops)
        count (int): Number of points
        seed (int): Random seed
        max_steps (int, optional): Maximum length of the walks

    Returns:
        list: :py:class:`~valmat.lattice.LatticePoint` s
    """
    rs = np.random.RandomState(seed)
    start = find_point(v)
    return [
        random_walk(v, start, rs.randint(max_steps + 1), rs)
        for _ in range(count)
    ]


def random_pairs(v, count, seed, max_steps=4):
    """``count`` pairs of random lattice points"""
    points = random_members(v, 2 * count, seed, max_steps=max_steps)
    return list(zip(points[::2], points[1::2]))


__all__ = ["random_walk", "random_members", "random_pairs"]
