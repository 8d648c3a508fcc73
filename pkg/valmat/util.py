#!/usr/bin/env python3
"""
Utility functions
=================

Enumeration caps and small helpers for integer/rational vectors and element
bitsets.

Points are plain tuples indexed by the ground set order. Integer points hold
``int`` s and rational points hold :py:class:`fractions.Fraction` s, so that
no floating point arithmetic ever enters a computation.
"""
import math
import os
from dataclasses import dataclass, fields, replace
from fractions import Fraction

import numpy as np

from .errors import ParseError

CAPS_ENV_VAR = "VALMAT_CAPS"


def _default_value(argument, default):
    """Returns ``default`` if ``argument`` is ``None``"""
    if argument is None:
        return default
    else:
        return argument


@dataclass(frozen=True)
class Caps(object):
    """Enumeration caps.

    Everything in this package is exponential in the worst case, these caps
    make sure that it fails loudly instead of running forever.

    Args:
        flats_elements (int): Maximum ground set size for flat enumeration
        exhaustive_elements (int): Maximum ground set size for exhaustive
            property checks
        tw_elements (int): Maximum ground set size for the (TW) membership
            test
        tw_rank (int): Maximum rank for the (TW) membership test
        interval_size (int): Maximum number of points in an interval
        dot_nodes (int): Maximum number of nodes in a DOT export
        oracle_box (int): Maximum number of integer points scanned by the
            brute force oracles
    """
    flats_elements: int = 20
    exhaustive_elements: int = 7
    tw_elements: int = 20
    tw_rank: int = 6
    interval_size: int = 10000
    dot_nodes: int = 500
    oracle_box: int = 200000

    @staticmethod
    def names():
        """Names of all caps"""
        return [field.name for field in fields(Caps)]

    def updated(self, **overrides):
        """Returns a copy with some caps overridden (``None`` s are
        ignored)"""
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **overrides)


def parse_caps(text, base=None):
    """Parse a ``name=int,name=int`` override string

    Args:
        text (str): Overrides, e.g. ``"flats_elements=24,dot_nodes=50"``
        base (Caps, optional): Caps to override (default: ``Caps()``)

    Returns:
        Caps: Updated caps
    """
    caps = _default_value(base, Caps())
    overrides = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ParseError(f"Invalid cap override \"{item}\" in "
                             f"{CAPS_ENV_VAR}, expected name=value")
        name, value = (part.strip() for part in item.split("=", 1))
        if name not in Caps.names():
            raise ParseError(f"Unknown cap \"{name}\" in {CAPS_ENV_VAR}")
        try:
            overrides[name] = int(value)
        except ValueError:
            raise ParseError(
                f"Cap \"{name}\" must be an integer, got \"{value}\""
            )
        if overrides[name] < 0:
            raise ParseError(f"Cap \"{name}\" must be nonnegative")
    return caps.updated(**overrides)


def get_caps(environ=None):
    """Returns the caps, with the overrides in ``VALMAT_CAPS`` applied"""
    environ = _default_value(environ, os.environ)
    return parse_caps(environ.get(CAPS_ENV_VAR, ""))


# Bitsets


def bits(mask):
    """Iterate over the positions of the set bits of ``mask`` in increasing
    order"""
    position = 0
    while mask:
        if mask & 1:
            yield position
        mask >>= 1
        position += 1


def popcount(mask):
    """Number of set bits"""
    return bin(mask).count("1")


def mask_of(indices):
    """Bitset with the given positions set"""
    mask = 0
    for idx in indices:
        mask |= 1 << idx
    return mask


def mask_key(mask):
    """Sort key ordering bitsets by size, then lexicographically by
    positions"""
    return (popcount(mask), tuple(bits(mask)))


# Vectors
#
# Componentwise arithmetic goes through numpy arrays, tuples are only used as
# hashable point keys. Small integers use int64 arrays, anything else
# (fractions, large integers) an object array so the arithmetic stays exact.

INT64_SAFE = 2 ** 31

_floor = np.frompyfunc(math.floor, 1, 1)


def as_array(x):
    """Numpy array of a vector (``int64`` when that is exact)"""
    values = list(x)
    if all(type(a) is int and abs(a) < INT64_SAFE for a in values):
        return np.array(values, dtype=np.int64)
    return np.array(values, dtype=object)


def as_point(array):
    """Tuple of python numbers from an array"""
    return tuple(np.asarray(array).tolist())


def _arrays(x, y):
    """Both vectors as arrays of a common dtype"""
    x, y = as_array(x), as_array(y)
    if x.dtype == object or y.dtype == object:
        return x.astype(object), y.astype(object)
    return x, y


def indicator(mask, dim, value=1):
    """The vector ``value * 1_F`` where ``F`` is the bitset ``mask``"""
    selected = np.array([(mask >> i) & 1 for i in range(dim)], dtype=bool)
    vector = np.zeros(dim, dtype=as_array([value]).dtype)
    vector[selected] = value
    return as_point(vector)


def vadd(x, y):
    x, y = _arrays(x, y)
    return as_point(x + y)


def vsub(x, y):
    x, y = _arrays(x, y)
    return as_point(x - y)


def vshift(x, k):
    """``x + k * 1``"""
    return vadd(x, (k,) * len(x))


def vneg(x):
    return as_point(-as_array(x))


def vmin(x, y):
    """Componentwise minimum"""
    return as_point(np.minimum(*_arrays(x, y)))


def vmax(x, y):
    """Componentwise maximum"""
    return as_point(np.maximum(*_arrays(x, y)))


def vleq(x, y):
    """Vector order ``x <= y``"""
    x, y = _arrays(x, y)
    return bool(np.all(x <= y))


def vfloor(x):
    """Componentwise floor (exact for fractions)"""
    return as_point(_floor(as_array(x).astype(object)))


def as_fractions(x):
    """Converts a vector to a tuple of fractions"""
    return tuple(Fraction(a) for a in x)


def is_integral(x):
    return all(Fraction(a).denominator == 1 for a in x)


def as_integers(x):
    """Converts an integral vector (possibly made of fractions) to ints"""
    if not is_integral(x):
        raise ValueError(f"Vector {x} is not integral")
    return tuple(int(a) for a in x)


def positive_part(k):
    return max(k, 0)


__all__ = [
    "Caps",
    "parse_caps",
    "get_caps",
    "bits",
    "popcount",
    "mask_of",
    "mask_key",
    "as_array",
    "as_point",
    "indicator",
    "vadd",
    "vsub",
    "vshift",
    "vneg",
    "vmin",
    "vmax",
    "vleq",
    "vfloor",
    "as_fractions",
    "as_integers",
]
