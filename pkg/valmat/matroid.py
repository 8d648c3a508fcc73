#!/usr/bin/env python3
"""
Matroids
========

Finite matroids given by an explicit list of bases, and the operators derived
from them (rank, closure, flats, loops, parallel classes).

Subsets of the ground set are bitsets (python ``int`` s): element ``i`` of
the :py:class:`GroundSet` belongs to ``mask`` iff ``(mask >> i) & 1``.
"""
import logging
from itertools import combinations

from .errors import StructuralError, ResourceError
from .util import bits, popcount, mask_of, mask_key, get_caps

logger = logging.getLogger(__name__)


class GroundSet(object):
    """Ordered set of element labels.

    This holds the label to index mapping used by every other object. The
    declared order is the iteration order, and the order of the coordinates
    of every point.

    Args:
        labels (list): Distinct, nonempty strings
    """

    def __init__(self, labels):
        # Labels map ints to, well, labels
        self.labels = tuple(labels)
        # Indices does the reverse (label to int)
        self.indices = {}
        for idx, label in enumerate(self.labels):
            if not isinstance(label, str) or not label:
                raise StructuralError(
                    f"Element labels must be nonempty strings, got {label!r}"
                )
            if label in self.indices:
                raise StructuralError(f"Duplicate element label {label}")
            self.indices[label] = idx
        self.full_mask = (1 << len(self.labels)) - 1

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, idx):
        return self.labels[idx]

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.indices

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"GroundSet({list(self.labels)})"

    def index(self, label, fail_if_unknown=True):
        """Returns the label's index

        Args:
            label (str): Element label
            fail_if_unknown (bool): Fail with an error if the label is not in
                the ground set (instead of returning ``None``)

        Returns:
            int: Element index
        """
        if label not in self.indices:
            if fail_if_unknown:
                raise StructuralError(f"{label} not in ground set")
            else:
                return None
        return self.indices[label]

    def subset(self, labels):
        """Converts an iterable of labels to a bitset"""
        return mask_of(self.index(label) for label in labels)

    def labels_of(self, mask):
        """Converts a bitset to the list of its labels (in ground order)"""
        if mask & ~self.full_mask:
            raise StructuralError(f"Subset {mask:b} is not in the ground set")
        return [self.labels[idx] for idx in bits(mask)]

    def describe(self, mask):
        """Human readable string for a bitset, e.g. ``{a,b}``"""
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def restrict(self, mask):
        """Sub ground set made of the elements of ``mask`` (ground order)"""
        return GroundSet(self.labels_of(mask))

    def reindex(self, mask, target):
        """Converts a bitset over this ground set into a bitset over
        ``target`` (which must contain all of ``mask`` 's labels)"""
        return target.subset(self.labels_of(mask))


class BaseFamily(object):
    """Matroid given by its bases.

    The family is only checked to be well-formed here (nonempty, every base
    of size ``rank``, subsets of the ground set). Use
    :py:meth:`is_base_family` to check the exchange axiom.

    Args:
        ground (GroundSet): Ground set
        rank (int): Rank ``n`` (size of every base)
        bases (list): Iterable of bitsets
    """

    def __init__(self, ground, rank, bases):
        self.ground = ground
        self.rank = int(rank)
        if self.rank < 0:
            raise StructuralError(f"Negative rank {rank}")
        base_set = set()
        for base in bases:
            if base & ~ground.full_mask:
                raise StructuralError(
                    f"Base {base:b} contains elements outside the ground set"
                )
            if popcount(base) != self.rank:
                raise StructuralError(
                    f"Base {ground.describe(base)} has size {popcount(base)}"
                    f" but the rank is {self.rank}"
                )
            base_set.add(base)
        if not base_set:
            raise StructuralError("A base family must be nonempty")
        self._base_set = frozenset(base_set)
        # Deterministic order: lexicographic on the element indices
        self.bases = tuple(sorted(base_set, key=lambda b: tuple(bits(b))))
        # Union of the bases containing each element
        self._cover = [0] * len(ground)
        for base in self.bases:
            for idx in bits(base):
                self._cover[idx] |= base

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __contains__(self, mask):
        return mask in self._base_set

    def __eq__(self, other):
        return (
            isinstance(other, BaseFamily)
            and self.ground == other.ground
            and self.rank == other.rank
            and self._base_set == other._base_set
        )

    def __hash__(self):
        return hash((self.ground, self.rank, self._base_set))

    def __repr__(self):
        bases = ", ".join(self.ground.describe(b) for b in self.bases)
        return f"BaseFamily(rank={self.rank}, bases=[{bases}])"

    # Exchange axiom

    def find_exchange_violation(self):
        """Returns a triple ``(B, B', e)`` for which no ``f`` in
        ``B' - B`` makes ``B - e + f`` a base, or ``None``"""
        for base in self.bases:
            for other in self.bases:
                for e in bits(base & ~other):
                    without_e = base & ~(1 << e)
                    if not any(
                        (without_e | (1 << f)) in self._base_set
                        for f in bits(other & ~base)
                    ):
                        return base, other, e
        return None

    def is_base_family(self):
        """Whether the family satisfies the base exchange axiom"""
        return self.find_exchange_violation() is None

    # Rank and closure

    def independent(self, mask):
        """Whether ``mask`` is contained in some base"""
        return any(mask & ~base == 0 for base in self.bases)

    def rank_of(self, mask):
        """Rank of a subset, by greedy augmentation of an independent set"""
        independent = 0
        size = 0
        for idx in bits(mask):
            candidate = independent | (1 << idx)
            if self.independent(candidate):
                independent = candidate
                size += 1
                if size == self.rank:
                    break
        return size

    def closure(self, mask):
        """All the elements ``e`` with ``rank(X + e) = rank(X)``"""
        rank = self.rank_of(mask)
        closed = mask
        for idx in range(len(self.ground)):
            bit = 1 << idx
            if not mask & bit and self.rank_of(mask | bit) == rank:
                closed |= bit
        return closed

    # Loops and parallel classes

    def nonloops(self):
        """Union of all bases"""
        union = 0
        for base in self.bases:
            union |= base
        return union

    def loops(self):
        """Elements contained in no base"""
        return self.ground.full_mask & ~self.nonloops()

    def parallel_class_of(self, idx):
        """Parallel class of a non-loop element (as a bitset)"""
        if not self._cover[idx]:
            raise StructuralError(
                f"Element {self.ground[idx]} is a loop and has no parallel "
                f"class"
            )
        # f is parallel to e iff no base contains both
        return (self.nonloops() & ~self._cover[idx]) | (1 << idx)

    def parallel_classes(self):
        """Partition of the non-loops into parallel classes, ordered by
        their smallest element"""
        classes = []
        seen = 0
        for idx in bits(self.nonloops()):
            if seen & (1 << idx):
                continue
            parallel_class = self.parallel_class_of(idx)
            seen |= parallel_class
            classes.append(parallel_class)
        return classes

    def is_simple(self):
        """No loops and no parallel elements"""
        return (
            self.loops() == 0
            and all(popcount(c) == 1 for c in self.parallel_classes())
        )

    # Flats

    def hyperplanes(self):
        """Flats of rank ``n - 1``, as closures of ``B - e``"""
        if self.rank == 0:
            return []
        hyperplanes = set()
        for base in self.bases:
            for e in bits(base):
                independent = base & ~(1 << e)
                # B - e + g is independent iff it is a base
                closed = independent
                for g in range(len(self.ground)):
                    bit = 1 << g
                    if independent & bit:
                        continue
                    if (independent | bit) not in self._base_set:
                        closed |= bit
                hyperplanes.add(closed)
        return sorted(hyperplanes, key=mask_key)

    def flats(self, caps=None):
        """All flats, ordered by rank then lexicographically.

        Flats are generated from the closure of the empty set by repeatedly
        closing ``F + e``, instead of scanning all subsets.

        Args:
            caps (Caps, optional): Enumeration caps (``flats_elements``)
        """
        caps = caps or get_caps()
        if len(self.ground) > caps.flats_elements:
            raise ResourceError(
                f"Flat enumeration is capped at {caps.flats_elements} "
                f"elements, the ground set has {len(self.ground)}"
            )
        bottom = self.closure(0)
        ranks = {bottom: self.rank_of(bottom)}
        frontier = [bottom]
        while frontier:
            new_frontier = []
            for flat in frontier:
                for idx in range(len(self.ground)):
                    bit = 1 << idx
                    if flat & bit:
                        continue
                    cover = self.closure(flat | bit)
                    if cover not in ranks:
                        ranks[cover] = ranks[flat] + 1
                        new_frontier.append(cover)
            frontier = new_frontier
        logger.debug(f"Enumerated {len(ranks)} flats")
        return sorted(ranks, key=lambda f: (ranks[f], tuple(bits(f))))

    # Restriction

    def restrict(self, mask):
        """Bases contained in ``mask``, over the sub ground set ``mask``"""
        sub_ground = self.ground.restrict(mask)
        bases = [
            self.ground.reindex(base, sub_ground)
            for base in self.bases if base & ~mask == 0
        ]
        return BaseFamily(sub_ground, self.rank, bases)

    def describe_bases(self):
        """List of bases as lists of labels"""
        return [self.ground.labels_of(base) for base in self.bases]


def uniform_family(ground, rank):
    """All ``rank`` -subsets of ``ground``"""
    return BaseFamily(
        ground,
        rank,
        [mask_of(c) for c in combinations(range(len(ground)), rank)],
    )


__all__ = ["GroundSet", "BaseFamily", "uniform_family"]
