#!/usr/bin/env python3
"""
Reconstruction
==============

Recovering a valuated matroid from its lattice. Fix a basepoint ``x``. For a
base ``B``, the skeleton of ``B`` is the set of lattice points where ``B``
is a maximizer, and ``x_B`` is its largest point below ``x``. Then

.. math::

    \\omega^{L, x}(B) = -r[x_B, x] = r(x_B) - r(x)

is projectively equivalent to the original valuation. More precisely
:math:`(\\omega + x)(B) = r(x_B)` for every base.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, TheoremViolation
from .lattice import certify, join, meet, require_simple
from .util import as_fractions, bits, indicator, vadd, vshift
from .valuation import Valuation, projectively_equivalent

logger = logging.getLogger(__name__)


def _require_base(v, base):
    if base not in v.family:
        raise DomainError(f"{v.ground.describe(base)} is not a base")


def skeleton_member(v, base, y):
    """Whether ``y`` is in the skeleton of ``base`` (``base`` maximizes
    ``omega + y``)"""
    require_simple(v)
    _require_base(v, base)
    return base in certify(v, y).family


def project_xb(v, x, base):
    """Largest point of the skeleton of ``base`` below ``x``.

    Iterates ``y <- join_{e in B}(y + 1_{F_e}) - 1`` where ``F_e`` is the
    parallel class of ``e`` at ``y``, until ``base`` is a maximizer. Each
    iteration lowers the height by at least one while ``(omega + y)(B)`` is
    unchanged, which bounds the number of iterations.

    Args:
        v (Valuation): Simple valuated matroid
        x (tuple): Lattice point
        base (int): Base (bitset)

    Returns:
        LatticePoint: ``x_B``
    """
    require_simple(v)
    _require_base(v, base)
    y = certify(v, x)
    bound = y.height - v.shifted_value(base, y.point) + 1
    iterations = 0
    while base not in y.family:
        if iterations >= bound:
            raise TheoremViolation(
                f"Projection of {x} on the skeleton of "
                f"{v.ground.describe(base)} did not stop after {bound} steps"
            )
        upper = None
        for e in bits(base):
            step = y.family.parallel_class_of(e)
            first = certify(v, vadd(y.point, indicator(step, len(y))))
            upper = first if upper is None else join(v, upper, first)
        y = certify(v, vshift(upper.point, -1))
        iterations += 1
        logger.debug(
            f"x_{v.ground.describe(base)} iteration {iterations}: {y}"
        )
    return y


def omega_from_lattice(v, x):
    """The valuation ``B -> r(x_B) - r(x)`` read off the lattice"""
    require_simple(v)
    x = certify(v, x)
    values = {
        base: project_xb(v, x, base).height - x.height for base in v.bases
    }
    return Valuation(v.family, values)


@dataclass
class RoundTrip(object):
    """Result of :py:func:`roundtrip_check`

    Attributes:
        point (LatticePoint): Basepoint ``x``
        rows (list): ``(B, (omega + x)(B), r(x_B), omega^{L,x}(B))`` per base
        reconstructed (Valuation): ``omega^{L,x}``
        witness (tuple): Rational ``h`` with ``omega^{L,x} = omega + h``
    """
    point: object
    rows: list = field(default_factory=list)
    reconstructed: Valuation = None
    witness: tuple = None


def roundtrip_check(v, x):
    """Checks ``(omega + x)(B) = r(x_B)`` on every base and returns the
    projective equivalence between ``omega`` and ``omega^{L,x}``.

    The witness is ``h = x - (r(x) / n) * 1``.

    Returns:
        RoundTrip: Identity table and witness
    """
    require_simple(v)
    x = certify(v, x)
    result = RoundTrip(point=x)
    values = {}
    for base in v.bases:
        shifted = v.shifted_value(base, x.point)
        projected = project_xb(v, x, base).height
        if shifted != projected:
            raise TheoremViolation(
                f"(omega + x)({v.ground.describe(base)}) = {shifted} but "
                f"r(x_B) = {projected} at {x}"
            )
        values[base] = projected - x.height
        result.rows.append((base, shifted, projected, values[base]))
    result.reconstructed = Valuation(v.family, values)
    if v.rank:
        shift = Fraction(x.height, v.rank)
        witness = tuple(a - shift for a in as_fractions(x.point))
    else:
        witness = as_fractions(x.point)
    for base in v.bases:
        value = v.values[base] + sum(witness[i] for i in bits(base))
        if value != result.reconstructed.values[base]:
            raise TheoremViolation(
                f"{witness} is not a projective equivalence at "
                f"{v.ground.describe(base)}"
            )
    if projectively_equivalent(v, result.reconstructed) is None:
        raise TheoremViolation(
            "The reconstructed valuation is not projectively equivalent"
        )
    result.witness = witness
    return result


@dataclass
class ModularReport(object):
    """Result of :py:func:`modular_check`

    Attributes:
        checked (int): Number of pairs checked
        violations (list): ``(x, y, r(x) + r(y), r(x ^ y) + r(x v y))`` for
            the non-modular pairs
    """
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def modular(self):
        return not self.violations


def modular_check(v, pairs):
    """Checks ``r(x) + r(y) = r(x ^ y) + r(x v y)`` on sample pairs

    A report with no violation is evidence of modularity, not a proof.
    """
    report = ModularReport()
    for x, y in pairs:
        x, y = certify(v, x), certify(v, y)
        lhs = x.height + y.height
        rhs = meet(v, x, y).height + join(v, x, y).height
        if lhs < rhs:
            raise TheoremViolation(
                f"Semimodularity fails for {x} and {y}: {lhs} < {rhs}"
            )
        if lhs != rhs:
            report.violations.append((x, y, lhs, rhs))
        report.checked += 1
    return report


__all__ = [
    "skeleton_member",
    "project_xb",
    "omega_from_lattice",
    "RoundTrip",
    "roundtrip_check",
    "ModularReport",
    "modular_check",
]
