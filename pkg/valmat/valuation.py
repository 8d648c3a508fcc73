#!/usr/bin/env python3
"""
Valuated matroids
=================

A valuated matroid is an integer function on the bases of a matroid
satisfying the exchange inequality

.. math::

    \\omega(B) + \\omega(B') \\leq \\omega(B - e + e') + \\omega(B' + e - e')

(for every ``e`` in ``B - B'``, for some ``e'`` in ``B' - B``). Values are only
stored on bases, non-bases implicitly have value :math:`-\\infty`.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from .errors import DomainError, StructuralError, TheoremViolation
from .matroid import BaseFamily
from .util import bits, popcount

logger = logging.getLogger(__name__)

# Values are bounded machine integers
VALUE_BOUND = 2 ** 62


def _check_bound(value, what):
    if not -VALUE_BOUND <= value <= VALUE_BOUND:
        raise DomainError(
            f"{what} = {value} overflows the value bound 2^62"
        )


class Valuation(object):
    """Integer function on the bases of a matroid.

    Args:
        family (BaseFamily): Underlying matroid
        values (dict): Mapping from every base (bitset) to an integer
    """

    def __init__(self, family, values):
        self.family = family
        self.values = {}
        for base, value in values.items():
            if base not in family:
                raise StructuralError(
                    f"{family.ground.describe(base)} has a value but is not "
                    f"a base"
                )
            if isinstance(value, bool) or int(value) != value:
                raise StructuralError(
                    f"Value of {family.ground.describe(base)} must be an "
                    f"integer, got {value!r}"
                )
            _check_bound(int(value), f"omega{family.ground.describe(base)}")
            self.values[base] = int(value)
        for base in family:
            if base not in self.values:
                raise StructuralError(
                    f"Base {family.ground.describe(base)} has no value"
                )
        # Element positions of each base (used by every translation)
        self._members = {base: tuple(bits(base)) for base in family}

    @property
    def ground(self):
        return self.family.ground

    @property
    def rank(self):
        return self.family.rank

    @property
    def bases(self):
        return self.family.bases

    def __call__(self, base):
        """Value of a base (``None`` for non-bases, i.e. minus infinity)"""
        return self.values.get(base)

    def __eq__(self, other):
        return (
            isinstance(other, Valuation)
            and self.family == other.family
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.family, frozenset(self.values.items())))

    def __repr__(self):
        values = ", ".join(
            f"{self.ground.describe(b)}: {self.values[b]}" for b in self.bases
        )
        return f"Valuation({values})"

    def shifted_value(self, base, x):
        """``(omega + x)(B)``, exact for integer and fraction vectors"""
        return self.values[base] + sum(x[i] for i in self._members[base])

    def shifted_values(self, x):
        """``{B: (omega + x)(B)}`` for all bases"""
        return {base: self.shifted_value(base, x) for base in self.bases}

    def max_value(self, x=None):
        """``max_B (omega + x)(B)``"""
        if x is None:
            return max(self.values.values())
        return max(self.shifted_value(base, x) for base in self.bases)

    # Exchange axiom

    def exchange_holds(self, base, other, e):
        """Whether the exchange inequality holds for ``(B, B', e)``"""
        lhs = self.values[base] + self.values[other]
        for f in bits(other & ~base):
            left = (base & ~(1 << e)) | (1 << f)
            right = (other & ~(1 << f)) | (1 << e)
            if left in self.values and right in self.values:
                if self.values[left] + self.values[right] >= lhs:
                    return True
        return False

    def find_exc_violation(self):
        """Returns a counterexample ``(B, B', e)`` to the exchange axiom, or
        ``None``.

        The underlying family must be a matroid, otherwise this raises a
        :py:class:`DomainError` naming the failed base exchange.
        """
        violation = self.family.find_exchange_violation()
        if violation is not None:
            base, other, e = violation
            raise DomainError(
                f"The underlying family is not a matroid: no exchange for "
                f"B={self.ground.describe(base)}, "
                f"B'={self.ground.describe(other)}, e={self.ground[e]}"
            )
        for base in self.bases:
            for other in self.bases:
                for e in bits(base & ~other):
                    if not self.exchange_holds(base, other, e):
                        return base, other, e
        return None

    def check_exc(self):
        """Whether this is a valuated matroid"""
        return self.find_exc_violation() is None

    def validate(self):
        """Raises a :py:class:`DomainError` unless this is a valuated
        matroid"""
        violation = self.find_exc_violation()
        if violation is not None:
            base, other, e = violation
            raise DomainError(
                f"Exchange axiom violated for "
                f"B={self.ground.describe(base)}, "
                f"B'={self.ground.describe(other)}, e={self.ground[e]}"
            )
        return self

    # Translation and maximization

    def translate(self, x):
        """``omega + x`` for an integer vector ``x``"""
        if len(x) != len(self.ground):
            raise StructuralError(
                f"Vector of dimension {len(x)} for a ground set of size "
                f"{len(self.ground)}"
            )
        values = {}
        for base in self.bases:
            value = self.shifted_value(base, x)
            if int(value) != value:
                raise DomainError(
                    f"Translation by a non integral vector {x}"
                )
            _check_bound(value, f"(omega + x){self.ground.describe(base)}")
            values[base] = int(value)
        return Valuation(self.family, values)

    def maximize(self, start):
        """Steepest single exchange ascent from ``start``.

        A base that no single exchange improves is a global maximizer (this is
        where the exchange axiom is used), so the result is always optimal.
        Ties are broken by element order.

        Returns:
            tuple: ``(base, value)``
        """
        if start not in self.family:
            raise DomainError(f"{self.ground.describe(start)} is not a base")
        current = start
        while True:
            best, best_gain = None, 0
            for e in bits(current):
                for f in bits(self.ground.full_mask & ~current):
                    candidate = (current & ~(1 << e)) | (1 << f)
                    if candidate not in self.values:
                        continue
                    gain = self.values[candidate] - self.values[current]
                    if gain > best_gain:
                        best, best_gain = candidate, gain
            if best is None:
                return current, self.values[current]
            logger.debug(
                f"Exchange {self.ground.describe(current)} -> "
                f"{self.ground.describe(best)} (+{best_gain})"
            )
            current = best

    def maximizer_family(self, x=None):
        """The matroid ``M_{omega + x}`` of maximizers of ``omega + x``"""
        if x is None:
            values = self.values
        else:
            values = self.shifted_values(x)
        top = max(values.values())
        return BaseFamily(
            self.ground,
            self.rank,
            [base for base in self.bases if values[base] == top],
        )


def translate(v, x):
    """``omega + x``"""
    return v.translate(x)


def maximizer_family(v, x):
    """Bases maximizing ``omega + x``"""
    return v.maximizer_family(x)


# Simplification


@dataclass
class Simplification(object):
    """Result of :py:func:`simplify`.

    Attributes:
        original (Valuation): The input valuation
        valuation (Valuation): Simple valuation on one representative per
            parallel class
        representatives (dict): Deleted non-loop label ->
            ``(representative label, alpha)`` with
            ``omega(K + e) = omega(K + f) + alpha``
        loops (list): Deleted loops (labels)
    """
    original: Valuation
    valuation: Valuation
    representatives: dict = field(default_factory=dict)
    loops: list = field(default_factory=list)

    def inflate_value(self, base):
        """Value of an original base computed from the simple valuation"""
        ground = self.original.ground
        offset = 0
        labels = []
        for label in ground.labels_of(base):
            if label in self.representatives:
                representative, alpha = self.representatives[label]
                labels.append(representative)
                offset += alpha
            else:
                labels.append(label)
        simple_base = self.valuation.ground.subset(labels)
        return self.valuation.values[simple_base] + offset

    def inflate(self):
        """Rebuild the original valuation from the simple one"""
        values = {
            base: self.inflate_value(base) for base in self.original.bases
        }
        return Valuation(self.original.family, values)


def simplify(v):
    """Restrict a valuation to one representative per parallel class.

    Loops are dropped. For every deleted element ``e`` with representative
    ``f`` (the first element of its class), the offset ``alpha`` with
    ``omega(K + e) = omega(K + f) + alpha`` is recorded after checking it on
    every applicable ``K``.

    Returns:
        Simplification: simplified valuation and bookkeeping
    """
    family = v.family
    ground = v.ground
    representatives = {}
    keep = 0
    for parallel_class in family.parallel_classes():
        members = list(bits(parallel_class))
        rep = members[0]
        keep |= 1 << rep
        for e in members[1:]:
            alpha = None
            for base in v.bases:
                if not (base >> e) & 1:
                    continue
                swapped = (base & ~(1 << e)) | (1 << rep)
                if swapped not in v.values:
                    raise TheoremViolation(
                        f"{ground[e]} and {ground[rep]} are parallel but "
                        f"{ground.describe(swapped)} is not a base"
                    )
                offset = v.values[base] - v.values[swapped]
                if alpha is None:
                    alpha = offset
                elif alpha != offset:
                    raise TheoremViolation(
                        f"Inconsistent offsets {alpha} and {offset} between "
                        f"parallel elements {ground[e]} and {ground[rep]}: "
                        f"the exchange axiom does not hold"
                    )
            representatives[ground[e]] = (ground[rep], alpha)
            logger.debug(
                f"Deleting {ground[e]} (parallel to {ground[rep]}, "
                f"alpha={alpha})"
            )
    restricted = family.restrict(keep)
    values = {
        ground.reindex(base, restricted.ground): v.values[base]
        for base in v.bases if base & ~keep == 0
    }
    return Simplification(
        original=v,
        valuation=Valuation(restricted, values),
        representatives=representatives,
        loops=ground.labels_of(family.loops()),
    )


# Projective equivalence


def _exchange_graph(v):
    """Directed graph on bases with an edge ``B -> B - e + f`` per single
    exchange, labelled with ``e`` (removed) and ``f`` (added)"""
    graph = nx.DiGraph()
    graph.add_nodes_from(v.bases)
    for base in v.bases:
        for e in bits(base):
            for f in bits(v.ground.full_mask & ~base):
                other = (base & ~(1 << e)) | (1 << f)
                if other in v.values:
                    graph.add_edge(base, other, removed=e, added=f)
    return graph


def projectively_equivalent(v, w, integral=False):
    """Find ``h`` with ``w = v + h``.

    Every single exchange ``B -> B - e + f`` forces
    ``h(f) - h(e) = D(B - e + f) - D(B)`` where ``D = w - v``. These
    differences are propagated over the connected components of the element
    graph they define, and one remaining equation on a base fixes the
    additive constants of the components. The witness is then checked on
    every base.

    Args:
        v (Valuation): First valuation
        w (Valuation): Second valuation (same ground set and bases)
        integral (bool, optional): Only look for integer witnesses

    Returns:
        tuple: Witness ``h`` (fractions) or ``None``
    """
    if v.ground != w.ground or v.family != w.family:
        raise DomainError(
            "Projective equivalence needs two valuations on the same bases"
        )
    dim = len(v.ground)
    difference = {base: w.values[base] - v.values[base] for base in v.bases}
    bases_graph = _exchange_graph(v)
    if not nx.is_strongly_connected(bases_graph):
        raise TheoremViolation("The base exchange graph is disconnected")
    # Element graph with the forced differences h(f) - h(e)
    elements = nx.DiGraph()
    elements.add_nodes_from(bits(v.family.nonloops()))
    for base, other, data in bases_graph.edges(data=True):
        e, f = data["removed"], data["added"]
        delta = difference[other] - difference[base]
        for a, b, d in ((e, f, delta), (f, e, -delta)):
            if elements.has_edge(a, b):
                if elements[a][b]["delta"] != d:
                    return None
            else:
                elements.add_edge(a, b, delta=d)
    potential = {}
    components = sorted(
        (sorted(c) for c in nx.weakly_connected_components(elements)),
        key=lambda c: c[0],
    )
    for component in components:
        root = component[0]
        potential[root] = 0
        for a, b in nx.bfs_edges(elements, root):
            potential[b] = potential[a] + elements[a][b]["delta"]
    for a, b, data in elements.edges(data=True):
        if potential[b] - potential[a] != data["delta"]:
            return None
    # One equation on a base fixes the component constants
    base0 = v.bases[0]
    sizes = [popcount(base0 & sum(1 << i for i in c)) for c in components]
    remainder = difference[base0] - sum(potential[i] for i in bits(base0))
    constants = [Fraction(0)] * len(components)
    if integral:
        g, combination = 0, []
        for size in sizes:
            s, t, g = igcdex(g, size)
            combination = [c * s for c in combination] + [t]
        if g == 0 or remainder % g:
            return None
        constants = [Fraction(c * (remainder // g)) for c in combination]
    else:
        first = next(i for i, size in enumerate(sizes) if size > 0)
        constants[first] = Fraction(remainder, sizes[first])
    witness = [Fraction(0)] * dim
    for component, constant in zip(components, constants):
        for i in component:
            witness[i] = potential[i] + constant
    witness = tuple(witness)
    for base in v.bases:
        if sum(witness[i] for i in bits(base)) != difference[base]:
            return None
    return witness


__all__ = [
    "Valuation",
    "Simplification",
    "translate",
    "maximizer_family",
    "simplify",
    "projectively_equivalent",
]
