#!/usr/bin/env python3

import unittest
from unittest import TestCase
from fractions import Fraction

from valmat.errors import DomainError, StructuralError
from valmat.matroid import BaseFamily
from valmat.valuation import (
    Valuation,
    maximizer_family,
    projectively_equivalent,
    simplify,
    translate,
)
from valmat.util import bits, vadd
from valmat.generators import gen_perturbed, random_translation

from tests import instances


class TestValuation(TestCase):

    def setUp(self):
        self.u23 = instances.u23()
        self.rep23 = instances.rep23()

    def test_values(self):
        family = self.rep23.family
        self.assertRaises(StructuralError, Valuation, family, {0b011: 0})
        self.assertRaises(StructuralError, Valuation, family,
                          {0b011: 0, 0b101: 1.5, 0b110: 0})
        self.assertRaises(StructuralError, Valuation, family,
                          {0b011: 0, 0b101: True, 0b110: 0})
        self.assertRaises(StructuralError, Valuation, family,
                          {0b011: 0, 0b101: 1, 0b110: 0, 0b111: 0})
        self.assertRaises(DomainError, Valuation, family,
                          {0b011: 0, 0b101: 2 ** 63, 0b110: 0})

    def test_lookup(self):
        self.assertEqual(self.rep23(0b101), 1)
        self.assertIsNone(self.rep23(0b001))
        self.assertEqual(self.rep23.shifted_value(0b101, (1, 1, 0)), 2)
        self.assertEqual(self.rep23.max_value(), 1)
        self.assertEqual(self.rep23.max_value((0, 1, 0)), 1)

    def test_exchange_axiom(self):
        self.assertTrue(self.u23.check_exc())
        self.assertTrue(self.rep23.check_exc())
        self.assertIs(self.rep23.validate(), self.rep23)
        bad = instances.bad()
        self.assertTupleEqual(bad.find_exc_violation(), (0b0011, 0b1100, 0))
        self.assertFalse(bad.exchange_holds(0b0011, 0b1100, 0))
        with self.assertRaisesRegex(DomainError, "B=\\{e1,e2\\}"):
            bad.validate()

    def test_not_a_matroid(self):
        ground = instances.uniform_zero(4, 2).ground
        family = BaseFamily(ground, 2, [0b0011, 0b1100])
        v = Valuation(family, {0b0011: 0, 0b1100: 0})
        self.assertRaises(DomainError, v.find_exc_violation)

    def test_translate(self):
        w = translate(self.rep23, (1, 1, 0))
        self.assertDictEqual(w.values, {0b011: 2, 0b101: 2, 0b110: 1})
        self.assertRaises(StructuralError, self.rep23.translate, (1, 1))
        self.assertRaises(DomainError, self.rep23.translate,
                          (Fraction(1, 2), 0, 0))

    def test_maximize(self):
        w = self.rep23.translate((1, 1, 0))
        self.assertTupleEqual(w.maximize(0b110), (0b101, 2))
        self.assertRaises(DomainError, w.maximize, 0b001)
        # Local search always finds the global maximum
        for seed in range(5):
            v = gen_perturbed(instances.uniform_zero(5, 3), seed)
            for start in v.bases:
                _, value = v.maximize(start)
                self.assertEqual(value, v.max_value())

    def test_maximizer_family(self):
        self.assertEqual(
            maximizer_family(self.rep23, (0, 1, 0)), self.rep23.family
        )
        self.assertTupleEqual(
            self.rep23.maximizer_family((0, 0, 0)).bases, (0b101,)
        )


class TestSimplify(TestCase):

    def test_parallel(self):
        v = instances.parallel()
        result = simplify(v)
        self.assertDictEqual(result.representatives, {"e3": ("e2", 2)})
        self.assertListEqual(result.loops, [])
        self.assertListEqual(list(result.valuation.ground), ["e1", "e2"])
        self.assertTrue(result.valuation.family.is_simple())
        self.assertEqual(result.inflate_value(0b101), 2)
        self.assertEqual(result.inflate(), v)

    def test_loops(self):
        result = simplify(instances.with_loop())
        self.assertListEqual(result.loops, ["e3"])
        self.assertListEqual(list(result.valuation.ground), ["e1", "e2"])

    def test_simple(self):
        result = simplify(instances.rep23())
        self.assertEqual(result.valuation, instances.rep23())
        self.assertDictEqual(result.representatives, {})


class TestProjectiveEquivalence(TestCase):

    def test_translates(self):
        rep23 = instances.rep23()
        witness = projectively_equivalent(
            rep23, rep23.translate((0, 0, -1))
        )
        self.assertTupleEqual(witness, (0, 0, -1))

    def test_tree(self):
        witness = projectively_equivalent(
            instances.tree_distances(), instances.tree()
        )
        self.assertTupleEqual(witness, (-2, -2, -1))

    def test_rational_witness(self):
        u23, rep23 = instances.u23(), instances.rep23()
        self.assertTupleEqual(
            projectively_equivalent(u23, rep23),
            (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2)),
        )
        self.assertIsNone(projectively_equivalent(u23, rep23, integral=True))

    def test_not_equivalent(self):
        u24 = instances.uniform_zero(4, 2)
        values = dict(u24.values)
        values[0b0011] = 1
        self.assertIsNone(
            projectively_equivalent(u24, Valuation(u24.family, values))
        )
        self.assertRaises(DomainError, projectively_equivalent,
                          u24, instances.u23())

    def test_random_translations(self):
        v = instances.uniform_zero(4, 2)
        for seed in range(5):
            x = random_translation(4, seed)
            self.assertTupleEqual(
                projectively_equivalent(v, v.translate(x), integral=True), x
            )

    def test_corpus_translates(self):
        for name, v in instances.corpus():
            for seed in range(instances.NUM_TRANSLATIONS):
                x = random_translation(len(v.ground), seed)
                w = v.translate(x)
                witness = projectively_equivalent(v, w)
                self.assertIsNotNone(witness, msg=f"{name} + {x}")
                for base in v.bases:
                    self.assertEqual(
                        v.values[base] + sum(witness[i] for i in bits(base)),
                        w.values[base], msg=name,
                    )
                self.assertIsNotNone(
                    projectively_equivalent(v, w, integral=True), msg=name
                )


class TestCorpusValuations(TestCase):

    def test_exchange_axiom(self):
        for name, v in instances.corpus():
            self.assertTrue(v.check_exc(), msg=name)
            self.assertTrue(v.family.is_base_family(), msg=name)

    def test_maximize(self):
        for name, v in instances.corpus():
            for seed in range(instances.NUM_TRANSLATIONS):
                w = v.translate(random_translation(len(v.ground), seed))
                start = w.bases[seed % len(w.bases)]
                base, value = w.maximize(start)
                self.assertEqual(value, w.max_value(), msg=name)
                self.assertIn(base, w.maximizer_family(), msg=name)

    def test_maximizer_families(self):
        for name, v in instances.corpus():
            for seed in range(instances.NUM_TRANSLATIONS):
                x = random_translation(len(v.ground), seed)
                family = v.maximizer_family(x)
                self.assertTrue(family.is_base_family(), msg=name)
                top = v.max_value(x)
                for base in v.bases:
                    self.assertEqual(base in family,
                                     v.shifted_value(base, x) == top)

    def test_translate_composition(self):
        for name, v in instances.corpus():
            for seed in range(instances.NUM_TRANSLATIONS // 5):
                x = random_translation(len(v.ground), seed)
                y = random_translation(len(v.ground), seed + 1000)
                self.assertEqual(v.translate(x).translate(y),
                                 v.translate(vadd(x, y)), msg=name)


if __name__ == '__main__':
    unittest.main()
