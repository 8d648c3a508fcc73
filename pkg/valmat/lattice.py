#!/usr/bin/env python3
"""
Uniform semimodular lattices
============================

The integer points of a tropical linear space form a uniform semimodular
lattice :math:`L(\\omega)` under the componentwise order. It is infinite, so
it is never materialized: every operation here works locally, from the
maximizer matroid :math:`M_{\\omega + x}` at the points it visits.

- The height is :math:`r(x) = \\max_B (\\omega + x)(B)`.
- The covers of ``x`` are the ``x + 1_F`` for the parallel classes ``F`` of
  :math:`M_{\\omega + x}`.
- The meet is the componentwise minimum.
- The ascending operator (join of all covers) is ``x -> x + 1``.
"""
import logging
from collections import deque

from .errors import (
    DomainError,
    MembershipError,
    OrderError,
    ResourceError,
    StructuralError,
    TheoremViolation,
)
from .util import (
    as_integers,
    get_caps,
    indicator,
    positive_part,
    vadd,
    vleq,
    vmax,
    vmin,
    vshift,
    vsub,
)

logger = logging.getLogger(__name__)


class LatticePoint(object):
    """Certified integer point of the tropical linear space.

    The maximizer family and the height are computed once, at construction.

    Args:
        valuation (Valuation): Valuated matroid
        point (tuple): Integer coordinates (ground order)
    """

    def __init__(self, valuation, point):
        if len(point) != len(valuation.ground):
            raise StructuralError(
                f"Point of dimension {len(point)} for a ground set of size "
                f"{len(valuation.ground)}"
            )
        try:
            self.point = as_integers(point)
        except ValueError:
            raise DomainError(f"Lattice points are integral, got {point}")
        self.valuation = valuation
        self.family = valuation.maximizer_family(self.point)
        loops = self.family.loops()
        if loops:
            raise MembershipError(
                f"{self} is not in the lattice: "
                f"{valuation.ground.describe(loops)} maximize nothing"
            )
        self.height = valuation.max_value(self.point)

    def __len__(self):
        return len(self.point)

    def __getitem__(self, idx):
        return self.point[idx]

    def __iter__(self):
        return iter(self.point)

    def __eq__(self, other):
        if isinstance(other, LatticePoint):
            return self.point == other.point
        if isinstance(other, tuple):
            return self.point == other
        return NotImplemented

    def __hash__(self):
        return hash(self.point)

    def __le__(self, other):
        return vleq(self.point, tuple(other))

    def __ge__(self, other):
        return vleq(tuple(other), self.point)

    def __repr__(self):
        labels = self.valuation.ground
        coords = ", ".join(f"{e}={a}" for e, a in zip(labels, self.point))
        return f"({coords})"

    def labelled(self):
        """``{label: coordinate}``"""
        return dict(zip(self.valuation.ground, self.point))


def certify(v, x):
    """Returns ``x`` as a :py:class:`LatticePoint` (raises a
    :py:class:`MembershipError` for non-members)"""
    if isinstance(x, LatticePoint) and x.valuation is v:
        return x
    return LatticePoint(v, tuple(x))


def require_simple(v):
    """Raises a :py:class:`DomainError` unless ``v`` is simple"""
    if not v.family.is_simple():
        raise DomainError(
            "The valuation must be simple (no loops or parallel elements), "
            "simplify it first"
        )


def _derived(v, point, what):
    """Certify a point the theory guarantees to be a member"""
    try:
        return LatticePoint(v, point)
    except MembershipError as error:
        raise TheoremViolation(f"The {what} is not a member: {error}")


def height(v, x):
    """``r(x) = max_B (omega + x)(B)``"""
    return certify(v, x).height


def covers(v, x):
    """Points covering ``x``, ordered by the smallest element of their
    parallel class"""
    x = certify(v, x)
    dim = len(x)
    return [
        _derived(v, vadd(x.point, indicator(parallel_class, dim)), "cover")
        for parallel_class in x.family.parallel_classes()
    ]


def cocovers(v, x):
    """Points covered by ``x``: ``x - 1_{E - H}`` for the hyperplanes ``H`` of
    the maximizers at ``x`` (which are also the maximizers at ``x - 1``)"""
    x = certify(v, x)
    dim = len(x)
    full = v.ground.full_mask
    return [
        _derived(v, vsub(x.point, indicator(full & ~hyperplane, dim)),
                 "cocover")
        for hyperplane in x.family.hyperplanes()
    ]


def ascend(v, x):
    """Join of all the covers of ``x``, i.e. ``x + 1``"""
    return _derived(v, vshift(certify(v, x).point, 1), "ascent")


def descend(v, x):
    """Meet of all the cocovers of ``x``, i.e. ``x - 1``"""
    return _derived(v, vshift(certify(v, x).point, -1), "descent")


def meet(v, x, y):
    """Componentwise minimum"""
    x, y = certify(v, x), certify(v, y)
    return _derived(v, vmin(x.point, y.point), "meet")


def join(v, x, y):
    """Least member above both ``x`` and ``y``.

    Starts from ``x + k * 1`` (with ``k`` the largest excess of ``y`` over
    ``x``), which dominates both, and descends through cocovers while staying
    above ``max(x, y)``. Members above ``max(x, y)`` are closed under meets,
    so a point with no such cocover is the least one.
    """
    x, y = certify(v, x), certify(v, y)
    target = vmax(x.point, y.point)
    k = max(positive_part(b - a) for a, b in zip(x.point, y.point))
    current = _derived(v, vshift(x.point, k), "shifted point")
    while True:
        for lower in cocovers(v, current):
            if vleq(target, lower.point):
                logger.debug(f"Join descent {current} -> {lower}")
                current = lower
                break
        else:
            return current


def interval_rank(v, x, y):
    """``r[x, y] = r(y) - r(x)`` for ``x <= y``"""
    x, y = certify(v, x), certify(v, y)
    if not x <= y:
        raise OrderError(f"{x} and {y} are not ordered")
    return y.height - x.height


def interval(v, x, y, caps=None):
    """All members ``z`` with ``x <= z <= y``.

    Every such ``z`` is reached from ``x`` by covers inside the box, so this
    is a breadth first search.

    Returns:
        list: Members in breadth first order from ``x``
    """
    caps = caps or get_caps()
    x, y = certify(v, x), certify(v, y)
    if not x <= y:
        raise OrderError(f"{x} and {y} are not ordered")
    seen = {x}
    members = [x]
    queue = deque([x])
    while queue:
        z = queue.popleft()
        for upper in covers(v, z):
            if upper in seen or not upper <= y:
                continue
            if len(members) >= caps.interval_size:
                raise ResourceError(
                    f"The interval [{x}, {y}] has more than "
                    f"{caps.interval_size} points"
                )
            seen.add(upper)
            members.append(upper)
            queue.append(upper)
    return members


def is_segment(v, chain, caps=None):
    """Whether a cover chain is exactly the interval between its ends

    Args:
        v (Valuation): Valuated matroid
        chain (list): Points, each covering the previous one

    Returns:
        bool: ``interval(first, last) == chain``
    """
    if not chain:
        raise StructuralError("Empty chain")
    chain = [certify(v, z) for z in chain]
    for lower, upper in zip(chain, chain[1:]):
        if upper not in covers(v, lower):
            raise StructuralError(f"{upper} does not cover {lower}")
    return set(interval(v, chain[0], chain[-1], caps=caps)) == set(chain)


def flat_points(v, x, caps=None):
    """The isomorphism ``F -> x + 1_F`` from the flats of the maximizers at
    ``x`` onto ``[x, x + 1]``

    Returns:
        list: Pairs ``(flat, point)``
    """
    x = certify(v, x)
    dim = len(x)
    return [
        (flat, _derived(v, vadd(x.point, indicator(flat, dim)), "flat point"))
        for flat in x.family.flats(caps=caps)
    ]


def find_point(v):
    """Some member of the lattice.

    Starting from ``0``, each loop ``e`` of the maximizers is raised by the
    gap between the overall maximum and the best base containing ``e``. A
    raise never evicts a maximizer, so at most ``|E|`` raises are needed.
    """
    loops = v.family.loops()
    if loops:
        raise DomainError(
            f"The tropical linear space is empty: "
            f"{v.ground.describe(loops)} are loops of the matroid"
        )
    point = [0] * len(v.ground)
    for _ in range(len(v.ground) + 1):
        family = v.maximizer_family(point)
        loops = family.loops()
        if not loops:
            return LatticePoint(v, point)
        e = min(i for i in range(len(point)) if (loops >> i) & 1)
        top = v.max_value(point)
        best = max(
            v.shifted_value(base, point)
            for base in v.bases if (base >> e) & 1
        )
        logger.debug(f"Raising {v.ground[e]} by {top - best}")
        point[e] += top - best
    raise TheoremViolation("find_point did not converge")


__all__ = [
    "LatticePoint",
    "certify",
    "require_simple",
    "height",
    "covers",
    "cocovers",
    "ascend",
    "descend",
    "meet",
    "join",
    "interval_rank",
    "interval",
    "is_segment",
    "flat_points",
    "find_point",
]
