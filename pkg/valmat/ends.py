#!/usr/bin/env python3
"""
Rays, ends and ultrametrics
===========================

For a simple valuated matroid, the ends of :math:`L(\\omega)` are the
elements of the ground set. The ray of ``e`` from ``x`` is the chain

.. math::

    a^0 = x, \\quad a^{\\ell + 1} = a^\\ell + 1_{F^\\ell}

where :math:`F^\\ell` is the parallel class of ``e`` in the maximizers at
:math:`a^\\ell`. Two rays from ``x`` agree for :math:`\\delta_x(e, f)` steps,
which defines the ultrametric :math:`d_x = \\exp(-\\delta_x)` (only the
exponents are ever stored).
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, StructuralError, TheoremViolation
from .lattice import certify, find_point, join, require_simple
from .matroid import BaseFamily
from .reconstruct import project_xb
from .tropical import format_point, in_tight_span
from .util import (
    as_fractions,
    bits,
    indicator,
    positive_part,
    vadd,
    vleq,
    vshift,
)

logger = logging.getLogger(__name__)


def element_index(v, e):
    """Index of an element given by label (or already by index)"""
    if isinstance(e, int):
        if not 0 <= e < len(v.ground):
            raise StructuralError(f"No element with index {e}")
        return e
    return v.ground.index(e)


@dataclass
class Ray(object):
    """Finite truncation of the ray of an element

    Attributes:
        direction (int): Index of the element the ray points to
        points (list): ``a^0, ..., a^depth`` (:py:class:`LatticePoint` s)
        steps (list): Parallel classes ``F^0, ..., F^{depth-1}`` (bitsets)
    """
    direction: int
    points: list = field(default_factory=list)
    steps: list = field(default_factory=list)

    @property
    def start(self):
        return self.points[0]

    def __len__(self):
        return len(self.steps)

    def is_nested(self):
        """Steps are weakly decreasing"""
        return all(
            later & ~earlier == 0
            for earlier, later in zip(self.steps, self.steps[1:])
        )

    def direction_class(self):
        """Intersection of all the steps"""
        common = self.steps[0] if self.steps else 1 << self.direction
        for step in self.steps[1:]:
            common &= step
        return common


def trace_ray(v, x, e, depth):
    """First ``depth`` steps of the ray of ``e`` from ``x``

    Args:
        v (Valuation): Simple valuated matroid
        x (tuple): Lattice point
        e (str): Element label
        depth (int): Number of steps

    Returns:
        Ray: The truncated ray
    """
    require_simple(v)
    if depth < 0:
        raise DomainError(f"Negative ray depth {depth}")
    e = element_index(v, e)
    point = certify(v, x)
    ray = Ray(direction=e, points=[point])
    for _ in range(depth):
        step = point.family.parallel_class_of(e)
        point = certify(v, vadd(point.point, indicator(step, len(point))))
        ray.steps.append(step)
        ray.points.append(point)
    return ray


def delta(v, x, e, f):
    """Number of common steps of the rays of ``e`` and ``f`` from ``x``

    Computed in closed form as
    ``r(x) - max{(omega + x)(B) | e, f in B}``.
    """
    require_simple(v)
    e, f = element_index(v, e), element_index(v, f)
    if e == f:
        raise DomainError(
            f"delta({v.ground[e]}, {v.ground[e]}) is infinite"
        )
    x = certify(v, x)
    pair = (1 << e) | (1 << f)
    joint = [
        v.shifted_value(base, x.point)
        for base in v.bases if base & pair == pair
    ]
    if not joint:
        raise DomainError(
            f"No base contains both {v.ground[e]} and {v.ground[f]}"
        )
    return x.height - max(joint)


@dataclass
class UltrametricMatrix(object):
    """Exponents ``delta_x(e, f)`` of the ultrametric ``d_x`` at a point.

    Attributes:
        labels (list): Element labels
        rows (list): ``rows[i][j] = delta_x(i, j)`` (``math.inf`` on the
            diagonal)
    """
    labels: list
    rows: list

    def __getitem__(self, pair):
        e, f = pair
        return self.rows[self.labels.index(e)][self.labels.index(f)]

    def is_symmetric(self):
        size = len(self.labels)
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(size) for j in range(size)
        )

    def is_ultrametric(self):
        """``delta(e, f) >= min(delta(e, g), delta(g, f))`` for all triples"""
        size = len(self.labels)
        return all(
            self.rows[i][j] >= min(self.rows[i][k], self.rows[k][j])
            for i in range(size)
            for j in range(size)
            for k in range(size)
        )


def ultrametric_matrix(v, x):
    """All the ``delta_x(e, f)``"""
    x = certify(v, x)
    size = len(v.ground)
    rows = [
        [math.inf if i == j else delta(v, x, i, j) for j in range(size)]
        for i in range(size)
    ]
    return UltrametricMatrix(labels=list(v.ground), rows=rows)


def dress_terhalle_metric(v, p, e, f):
    """Exponent ``max{(omega - p)(B) | e, f in B}`` of the metric
    ``D_p(e, f)`` at a point ``p`` of the tight span"""
    e, f = element_index(v, e), element_index(v, f)
    if e == f:
        raise DomainError(f"D_p({v.ground[e]}, {v.ground[e]}) is undefined")
    if not in_tight_span(v, p):
        raise DomainError(f"{format_point(v, p)} is not in the tight span")
    p = as_fractions(p)
    pair = (1 << e) | (1 << f)
    joint = [
        v.values[base] - sum(p[i] for i in bits(base))
        for base in v.bases if base & pair == pair
    ]
    if not joint:
        raise DomainError(
            f"No base contains both {v.ground[e]} and {v.ground[f]}"
        )
    return Fraction(max(joint))


def _ray_length_below(v, x, e, y):
    """``max{l | e_x^l <= y}`` for ``x <= y``"""
    point = x
    length = 0
    while True:
        step = point.family.parallel_class_of(e)
        upper = vadd(point.point, indicator(step, len(point)))
        if not vleq(upper, y.point):
            return length
        point = certify(v, upper)
        length += 1


def coordinate(v, x, y):
    """The ``x`` -coordinates of ``y``: ``y_x(e) = max{l | e_x^l <= y}``,
    extended to any ``y`` by ``y_x = (y + k * 1)_x - k * 1``

    Returns:
        tuple: One integer per element
    """
    require_simple(v)
    x, y = certify(v, x), certify(v, y)
    k = max(positive_part(a - b) for a, b in zip(x.point, y.point))
    upper = certify(v, vshift(y.point, k)) if k else y
    return tuple(
        _ray_length_below(v, x, e, upper) - k for e in range(len(v.ground))
    )


def raise_point(v, x, c):
    """Join of the ray points ``e_x^{c(e)}``, with a certifying base.

    Args:
        v (Valuation): Simple valuated matroid
        x (tuple): Lattice point
        c (tuple): Nonnegative integers, one per element

    Returns:
        tuple: ``(y, B)`` with ``B`` a maximizer at ``y`` and
        ``y_x(e) = c(e)`` on ``B``
    """
    require_simple(v)
    if len(c) != len(v.ground) or any(a < 0 for a in c):
        raise DomainError(f"Invalid ray lengths {c}")
    x = certify(v, x)
    y = x
    for e, length in enumerate(c):
        if length:
            y = join(v, y, trace_ray(v, x, e, length).points[-1])
    coords = coordinate(v, x, y)
    for base in y.family:
        if all(coords[e] == c[e] for e in bits(base)):
            return y, base
    raise TheoremViolation(
        f"No maximizer at {y} has coordinates {c} from {x}"
    )


def matroid_at(v, x):
    """Maximizers of ``omega + x``"""
    require_simple(v)
    return certify(v, x).family


def matroid_at_infinity(v):
    """Bases independent at some point of the lattice.

    Every base ``B`` is certified by the point ``x_B`` projected from
    :py:func:`~valmat.lattice.find_point`, at which ``B`` is a maximizer.
    """
    require_simple(v)
    start = find_point(v)
    certified = []
    for base in v.bases:
        point = project_xb(v, start, base)
        if base in point.family:
            certified.append(base)
    family = BaseFamily(v.ground, v.rank, certified)
    if family != v.family or not family.is_base_family():
        raise TheoremViolation(
            "The matroid at infinity differs from the underlying matroid"
        )
    return family


__all__ = [
    "Ray",
    "trace_ray",
    "delta",
    "UltrametricMatrix",
    "ultrametric_matrix",
    "dress_terhalle_metric",
    "coordinate",
    "raise_point",
    "matroid_at",
    "matroid_at_infinity",
]
