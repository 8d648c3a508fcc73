#!/usr/bin/env python3
"""
Oracles
=======

Brute force reference implementations, used by the test suite to check the
primary algorithms.

These only read the raw base values of a valuation: maximizers and parallel
classes are recomputed here from scratch, and lattice points are found by
scanning boxes. Everything is capped by ``oracle_box``.
"""
import numpy as np

from .errors import InconclusiveError, ResourceError, TheoremViolation
from .tropical import is_member, is_member_tw
from .util import get_caps


def _maximizers(v, x):
    """Bases (as sets of indices) maximizing ``omega + x``"""
    values = {
        base: value + sum(x[i] for i in range(len(x)) if (base >> i) & 1)
        for base, value in v.values.items()
    }
    top = max(values.values())
    return [
        {i for i in range(len(x)) if (base >> i) & 1}
        for base, value in values.items() if value == top
    ]


def brute_is_member(v, x):
    """Every element belongs to some maximizer of ``omega + x``"""
    covered = set()
    for base in _maximizers(v, x):
        covered |= base
    return len(covered) == len(x)


def _box(lo, hi, caps):
    shape = [b - a + 1 for a, b in zip(lo, hi)]
    if any(size <= 0 for size in shape):
        return
    if int(np.prod(shape)) > caps.oracle_box:
        raise ResourceError(
            f"The box [{lo}, {hi}] has more than {caps.oracle_box} points"
        )
    for offset in np.ndindex(*shape):
        yield tuple(int(a + o) for a, o in zip(lo, offset))


def brute_members(v, lo, hi, caps=None):
    """All members of the box ``[lo, hi]``"""
    caps = caps or get_caps()
    return [x for x in _box(tuple(lo), tuple(hi), caps)
            if brute_is_member(v, x)]


def brute_interval(v, x, y, caps=None):
    """All members between ``x`` and ``y``, by scanning the box"""
    return brute_members(v, tuple(x), tuple(y), caps=caps)


def brute_join(v, x, y, caps=None):
    """Componentwise minimum of all members above ``x`` and ``y`` in the box
    ``[max(x, y), x + k * 1]``"""
    x, y = tuple(x), tuple(y)
    target = tuple(max(a, b) for a, b in zip(x, y))
    k = max(max(b - a, 0) for a, b in zip(x, y))
    upper = tuple(a + k for a in x)
    members = brute_members(v, target, upper, caps=caps)
    if not members:
        raise TheoremViolation(f"No member above {x} and {y}")
    joined = tuple(min(column) for column in zip(*members))
    if not brute_is_member(v, joined):
        raise TheoremViolation(f"The minimum {joined} is not a member")
    return joined


def _parallel_class(v, x, e):
    classes = {e}
    maximizers = _maximizers(v, x)
    nonloops = set().union(*maximizers)
    for g in nonloops:
        if not any(e in base and g in base for base in maximizers):
            classes.add(g)
    return classes


def _ray(v, x, e, depth):
    points = [tuple(x)]
    for _ in range(depth):
        step = _parallel_class(v, points[-1], e)
        points.append(tuple(
            a + (1 if i in step else 0) for i, a in enumerate(points[-1])
        ))
    return points


def brute_delta(v, x, e, f, depth):
    """Number of common steps of the rays of ``e`` and ``f`` (indices)

    Raises an :py:class:`InconclusiveError` if the rays have not separated
    after ``depth`` steps.
    """
    ray_e, ray_f = _ray(v, x, e, depth), _ray(v, x, f, depth)
    agree = 0
    for i, (a, b) in enumerate(zip(ray_e, ray_f)):
        if a != b:
            return agree
        agree = i
    raise InconclusiveError(
        f"The rays of {v.ground[e]} and {v.ground[f]} still agree after "
        f"{depth} steps"
    )


def brute_member_cross(v, x, caps=None):
    """Both membership definitions, which must agree"""
    loops_free = is_member(v, x)
    twice = is_member_tw(v, x, caps=caps)
    if loops_free != twice:
        raise TheoremViolation(
            f"Membership definitions disagree at {x}: {loops_free} and "
            f"{twice}"
        )
    return loops_free


def brute_exc_violated(v, base, other, e):
    """Whether the exchange inequality fails for ``(B, B', e)``"""
    values = v.values
    lhs = values[base] + values[other]
    for f in range(len(v.ground)):
        if not (other >> f) & 1 or (base >> f) & 1:
            continue
        left = (base & ~(1 << e)) | (1 << f)
        right = (other & ~(1 << f)) | (1 << e)
        if left in values and right in values:
            if values[left] + values[right] >= lhs:
                return False
    return True


__all__ = [
    "brute_is_member",
    "brute_members",
    "brute_interval",
    "brute_join",
    "brute_delta",
    "brute_member_cross",
    "brute_exc_violated",
]
