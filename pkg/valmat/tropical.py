#!/usr/bin/env python3
"""
Tropical linear spaces
======================

The tropical linear space of a valuated matroid is

.. math::

    T(\\omega) = \\{x \\mid M_{\\omega + x} \\text{ has no loop}\\}

where :math:`M_{\\omega + x}` is the matroid of maximizers of
:math:`\\omega + x`. Membership can equivalently be tested with the
"maximum attained twice" condition (see :py:func:`is_member_tw`), which
works verbatim on rational points.

All rational quantities are :py:class:`fractions.Fraction` s.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import (
    DomainError,
    MembershipError,
    ResourceError,
    StructuralError,
    TheoremViolation,
)
from .util import (
    as_fractions,
    bits,
    get_caps,
    indicator,
    mask_of,
    popcount,
    vfloor,
    vmin,
    vshift,
)

logger = logging.getLogger(__name__)


def _check_dim(v, x):
    if len(x) != len(v.ground):
        raise StructuralError(
            f"Point of dimension {len(x)} for a ground set of size "
            f"{len(v.ground)}"
        )


def is_member(v, x):
    """Whether ``x`` lies in :math:`T(\\omega)` (no loop among the
    maximizers of ``omega + x``)"""
    _check_dim(v, x)
    return v.maximizer_family(x).loops() == 0


def is_member_tw(v, x, caps=None):
    """Membership through the "attained twice" condition.

    For every ``(n+1)`` -subset ``C`` of the ground set, the maximum of
    ``omega(C - f) - x(f)`` over the ``f`` in ``C`` with ``C - f`` a base
    must be attained at least twice (subsets with no such ``f`` are
    ignored).

    Args:
        v (Valuation): Valuated matroid
        x (tuple): Integer or rational point
        caps (Caps, optional): Enumeration caps (``tw_elements``,
            ``tw_rank``)

    Returns:
        bool: Membership
    """
    _check_dim(v, x)
    caps = caps or get_caps()
    if len(v.ground) > caps.tw_elements or v.rank > caps.tw_rank:
        raise ResourceError(
            f"The twice-attained test is capped at {caps.tw_elements} "
            f"elements and rank {caps.tw_rank}"
        )
    x = as_fractions(x)
    for subset in combinations(range(len(v.ground)), v.rank + 1):
        circuit = mask_of(subset)
        candidates = [
            v.values[circuit & ~(1 << f)] - x[f]
            for f in subset if (circuit & ~(1 << f)) in v.values
        ]
        if not candidates:
            continue
        top = max(candidates)
        if candidates.count(top) < 2:
            return False
    return True


def _require_member_tw(v, x, caps=None):
    if not is_member_tw(v, x, caps=caps):
        raise MembershipError(
            f"{format_point(v, x)} is not in the tropical linear space"
        )


def _require_member(v, x):
    if not is_member(v, x):
        raise MembershipError(
            f"{format_point(v, x)} is not in the tropical linear space"
        )


def format_point(v, x):
    """``(a=1, b=1/2, ...)``"""
    coords = ", ".join(f"{label}={a}" for label, a in zip(v.ground, x))
    return f"({coords})"


def floor_point(v, x, caps=None):
    """Componentwise floor of a member, which is again a member

    Args:
        v (Valuation): Valuated matroid
        x (tuple): Rational member

    Returns:
        tuple: Integer member
    """
    _require_member_tw(v, x, caps=caps)
    floor = vfloor(as_fractions(x))
    if not is_member(v, floor):
        raise TheoremViolation(
            f"The floor {format_point(v, floor)} of a member is not a member"
        )
    return floor


@dataclass
class FlatChainDecomposition(object):
    """``x = base + sum_i coefficient_i * 1_{flat_i}``

    Attributes:
        base (tuple): Integer point (the floor of ``x``)
        chain (list): Pairs ``(flat, coefficient)`` with strictly increasing
            flats (bitsets) and positive fractions summing to less than 1
    """
    base: tuple
    chain: list = field(default_factory=list)

    def point(self):
        """Recombines the decomposition into a rational point"""
        x = list(as_fractions(self.base))
        for flat, coefficient in self.chain:
            for i in bits(flat):
                x[i] += coefficient
        return tuple(x)

    def is_nested(self):
        return all(
            small & ~large == 0 and small != large
            for (small, _), (large, _) in zip(self.chain, self.chain[1:])
        )


def decompose(v, x, caps=None):
    """Decompose a rational member along a chain of flats.

    With the fractional levels ``a_1 > ... > a_m > 0`` of ``x``, the flats are
    ``F_j = {e | frac(x(e)) >= a_j}`` with coefficients ``a_j - a_{j+1}``.
    Each ``F_j`` is checked to be a flat of the maximizers at ``floor(x)``.

    Args:
        v (Valuation): Valuated matroid
        x (tuple): Rational member

    Returns:
        FlatChainDecomposition: The decomposition
    """
    floor = floor_point(v, x, caps=caps)
    x = as_fractions(x)
    fractional = [a - b for a, b in zip(x, floor)]
    levels = sorted({a for a in fractional if a > 0}, reverse=True)
    family = v.maximizer_family(floor)
    chain = []
    for j, level in enumerate(levels):
        flat = mask_of(i for i, a in enumerate(fractional) if a >= level)
        if family.closure(flat) != flat:
            raise TheoremViolation(
                f"{v.ground.describe(flat)} is not a flat of the maximizers "
                f"at {format_point(v, floor)}"
            )
        next_level = levels[j + 1] if j + 1 < len(levels) else Fraction(0)
        chain.append((flat, level - next_level))
    return FlatChainDecomposition(base=floor, chain=chain)


def trop_min(v, x, y):
    """Componentwise minimum of two members (a member)"""
    return trop_combination(v, x, y, 0, 0)


def trop_combination(v, x, y, alpha, beta):
    """Tropical combination ``min(x + alpha * 1, y + beta * 1)``"""
    _require_member(v, x)
    _require_member(v, y)
    z = vmin(vshift(x, alpha), vshift(y, beta))
    if not is_member(v, z):
        raise TheoremViolation(
            f"The tropical combination {format_point(v, z)} of two members "
            f"is not a member"
        )
    return z


# Tight span


def in_tight_span(v, p):
    """Whether ``p`` satisfies the tight span equations

    .. math::

        p(e) = \\max_{B \\ni e} \\left(\\omega(B) - \\sum_{f \\in B - e} p(f)
        \\right)

    for every element ``e``.
    """
    _check_dim(v, p)
    p = as_fractions(p)
    for e in range(len(v.ground)):
        candidates = [
            v.values[base] - sum(p[f] for f in bits(base & ~(1 << e)))
            for base in v.bases if (base >> e) & 1
        ]
        if not candidates or max(candidates) != p[e]:
            return False
    return True


def tight_span_point(v, x):
    """Point of the tight span representing the member ``x``.

    Shifts ``x`` along ``1`` so that the maximum of ``omega + x`` is 0 and
    negates the result.

    Returns:
        tuple: Rational point ``-(x - (r(x) / n) * 1)``
    """
    _require_member(v, x)
    if v.rank == 0:
        raise DomainError("The tight span of a rank 0 valuation is empty")
    shift = Fraction(v.max_value(x), v.rank)
    p = tuple(shift - a for a in as_fractions(x))
    if not in_tight_span(v, p):
        raise TheoremViolation(
            f"{format_point(v, p)} does not satisfy the tight span equations"
        )
    return p


# Simplification


def restrict_point(simplification, x):
    """Coordinates of ``x`` on the simple valuation's ground set"""
    original = simplification.original.ground
    simple = simplification.valuation.ground
    _check_dim(simplification.original, x)
    return tuple(x[original.index(label)] for label in simple)


def lift_point(simplification, x):
    """Inverse of :py:func:`restrict_point` on tropical linear spaces.

    A deleted element ``e`` with representative ``f`` gets
    ``x(e) = x(f) - alpha``.
    """
    if simplification.loops:
        raise DomainError(
            f"The tropical linear space is empty: "
            f"{', '.join(simplification.loops)} are loops"
        )
    simple = simplification.valuation.ground
    _check_dim(simplification.valuation, x)
    lifted = []
    for label in simplification.original.ground:
        if label in simplification.representatives:
            representative, alpha = simplification.representatives[label]
            lifted.append(x[simple.index(representative)] - alpha)
        else:
            lifted.append(x[simple.index(label)])
    return tuple(lifted)


def shift_lemma_holds(v, x, flat):
    """Whether a maximizer of ``omega + x`` meeting ``flat`` maximally stays
    a maximizer of ``omega + x + 1_flat``"""
    family = v.maximizer_family(x)
    best = max(popcount(base & flat) for base in family)
    shifted = v.maximizer_family(
        tuple(a + b for a, b in zip(x, indicator(flat, len(x))))
    )
    return all(
        base in shifted
        for base in family if popcount(base & flat) == best
    )


__all__ = [
    "is_member",
    "is_member_tw",
    "format_point",
    "floor_point",
    "FlatChainDecomposition",
    "decompose",
    "trop_min",
    "trop_combination",
    "in_tight_span",
    "tight_span_point",
    "restrict_point",
    "lift_point",
    "shift_lemma_holds",
]
