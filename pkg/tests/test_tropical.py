#!/usr/bin/env python3

import unittest
from unittest import TestCase
from fractions import Fraction
from itertools import product

from valmat import oracle, tropical
from valmat.errors import (
    DomainError,
    MembershipError,
    ResourceError,
    StructuralError,
)
from valmat.util import Caps, vshift
from valmat.valuation import simplify
from valmat.generators import gen_perturbed, random_members, random_pairs

from tests import instances

half = Fraction(1, 2)


class TestMembership(TestCase):

    def setUp(self):
        self.u23 = instances.u23()
        self.rep23 = instances.rep23()

    def test_is_member(self):
        self.assertTrue(tropical.is_member(self.rep23, (0, 1, 0)))
        self.assertFalse(tropical.is_member(self.rep23, (0, 0, 0)))
        self.assertTrue(tropical.is_member(self.u23, (0, 0, 0)))
        self.assertFalse(tropical.is_member(self.u23, (half, half, 0)))
        self.assertFalse(tropical.is_member_tw(self.u23, (half, half, 0)))
        self.assertTrue(tropical.is_member_tw(self.u23, (half, half, 1)))
        self.assertRaises(StructuralError, tropical.is_member, self.u23,
                          (0, 0))

    def test_definitions_agree(self):
        for seed in range(3):
            v = gen_perturbed(instances.uniform_zero(4, 2), seed, bound=2)
            for x in product(range(-2, 3), repeat=4):
                self.assertEqual(
                    tropical.is_member(v, x), tropical.is_member_tw(v, x)
                )

    def test_caps(self):
        self.assertRaises(ResourceError, tropical.is_member_tw, self.u23,
                          (0, 0, 0), Caps(tw_rank=1))

    def test_format_point(self):
        self.assertEqual(tropical.format_point(self.u23, (half, 0, -1)),
                         "(e1=1/2, e2=0, e3=-1)")


class TestRationalPoints(TestCase):

    def setUp(self):
        self.u23 = instances.u23()
        self.rep23 = instances.rep23()

    def test_floor(self):
        self.assertTupleEqual(
            tropical.floor_point(self.u23, (half, half, half)), (0, 0, 0)
        )
        self.assertRaises(MembershipError, tropical.floor_point, self.u23,
                          (half, half, 0))

    def test_decompose(self):
        x = (half, half, 1)
        decomposition = tropical.decompose(self.u23, x)
        self.assertTupleEqual(decomposition.base, (0, 0, 1))
        self.assertListEqual(decomposition.chain, [(0b011, half)])
        self.assertTupleEqual(decomposition.point(), x)
        self.assertTrue(decomposition.is_nested())
        # Integral points have an empty chain
        self.assertListEqual(
            tropical.decompose(self.rep23, (0, 1, 0)).chain, []
        )

    def test_decompose_levels(self):
        third = Fraction(1, 3)
        decomposition = tropical.decompose(
            self.u23, (2 * third, third, third)
        )
        self.assertListEqual(
            decomposition.chain, [(0b001, third), (0b111, third)]
        )
        self.assertTrue(decomposition.is_nested())
        self.assertRaises(MembershipError, tropical.decompose, self.u23,
                          (2 * third, third, 0))

    def test_tropical_combination(self):
        self.assertTupleEqual(
            tropical.trop_min(self.u23, (1, 0, 0), (0, 1, 0)), (0, 0, 0)
        )
        self.assertTupleEqual(
            tropical.trop_combination(self.u23, (1, 0, 0), (0, 1, 0), 0, 1),
            (1, 0, 0),
        )
        self.assertRaises(MembershipError, tropical.trop_min, self.u23,
                          (2, 1, 0), (0, 0, 0))


class TestTightSpan(TestCase):

    def test_tight_span_point(self):
        rep23 = instances.rep23()
        p = tropical.tight_span_point(rep23, (0, 1, 0))
        self.assertTupleEqual(p, (half, -half, half))
        self.assertTrue(tropical.in_tight_span(rep23, p))
        self.assertFalse(tropical.in_tight_span(rep23, (0, 0, 0)))
        # Shifting along 1 does not move the tight span point
        self.assertTupleEqual(tropical.tight_span_point(rep23, (1, 2, 1)), p)

    def test_tree(self):
        self.assertTrue(tropical.in_tight_span(instances.tree(), (0, 0, 0)))


class TestSimplification(TestCase):

    def test_restrict_and_lift(self):
        result = simplify(instances.parallel())
        self.assertTupleEqual(tropical.restrict_point(result, (1, 2, 0)),
                              (1, 2))
        self.assertTupleEqual(tropical.lift_point(result, (1, 2)), (1, 2, 0))
        self.assertTrue(tropical.is_member(result.original, (1, 2, 0)))
        self.assertTrue(tropical.is_member(result.valuation, (1, 2)))

    def test_loops(self):
        result = simplify(instances.with_loop())
        self.assertRaises(DomainError, tropical.lift_point, result, (0, 0))


class TestShiftLemma(TestCase):

    def test_flats(self):
        v = instances.u23()
        x = (0, 0, 0)
        for flat in v.maximizer_family(x).flats():
            self.assertTrue(tropical.shift_lemma_holds(v, x, flat))


class TestCorpusMembership(TestCase):

    def test_definitions_agree(self):
        radius = instances.BOX_RADIUS
        for name, v in instances.small_corpus():
            box = product(range(-radius, radius + 1), repeat=len(v.ground))
            for x in box:
                # Raises if the two definitions disagree
                self.assertIsInstance(oracle.brute_member_cross(v, x), bool,
                                      msg=name)

    def test_shift_along_ones(self):
        for name, v in instances.corpus():
            for x in random_members(v, instances.NUM_BASEPOINTS, seed=0):
                for k in range(-3, 4):
                    self.assertTrue(
                        tropical.is_member(v, vshift(x.point, k)), msg=name
                    )

    def test_tropical_combinations(self):
        for name, v in instances.corpus():
            for x, y in random_pairs(v, instances.NUM_PAIRS, seed=1):
                self.assertTrue(tropical.is_member(
                    v, tropical.trop_min(v, x.point, y.point)
                ), msg=name)
                for alpha, beta in product(range(-2, 3), repeat=2):
                    z = tropical.trop_combination(v, x.point, y.point,
                                                  alpha, beta)
                    self.assertTrue(tropical.is_member(v, z), msg=name)

    def test_tight_span(self):
        for name, v in instances.corpus():
            for x in random_members(v, instances.NUM_BASEPOINTS, seed=2):
                p = tropical.tight_span_point(v, x.point)
                self.assertTrue(tropical.in_tight_span(v, p), msg=name)


class TestCorpusShiftLemma(TestCase):

    def test_all_subsets(self):
        for name, v in instances.small_corpus():
            size = len(v.ground)
            for x in random_members(v, instances.NUM_BASEPOINTS, seed=3):
                for subset in range(1 << size):
                    self.assertTrue(
                        tropical.shift_lemma_holds(v, x.point, subset),
                        msg=f"{name} at {x} with {subset:b}",
                    )


if __name__ == '__main__':
    unittest.main()
