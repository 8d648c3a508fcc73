#!/usr/bin/env python3

import unittest
from unittest import TestCase

from valmat import reconstruct
from valmat.errors import DomainError
from valmat.ends import coordinate
from valmat.lattice import find_point, meet
from valmat.util import bits, indicator, vadd, vleq
from valmat.valuation import projectively_equivalent, simplify
from valmat.generators import (
    gen_perturbed,
    gen_representable,
    gen_tree_metric,
    random_members,
    random_pairs,
    random_poly_matrix,
    random_tree,
)

from tests import instances


class TestProjection(TestCase):

    def test_project_xb(self):
        rep23 = instances.rep23()
        y = reconstruct.project_xb(rep23, (1, 1, 0), 0b110)
        self.assertEqual(y, (0, 1, 0))
        self.assertEqual(y.height - 2, -1)
        tree = instances.tree()
        self.assertEqual(
            reconstruct.project_xb(tree, (0, 0, 0), 0b011), (0, 0, -2)
        )

    def test_projection_is_below(self):
        rep23 = instances.rep23()
        x = (1, 1, 0)
        for base in rep23.bases:
            y = reconstruct.project_xb(rep23, x, base)
            self.assertTrue(y <= x)
            self.assertIn(base, y.family)
        # x is already in the skeleton of {e1,e2}
        self.assertEqual(reconstruct.project_xb(rep23, x, 0b011), x)

    def test_skeleton(self):
        rep23 = instances.rep23()
        self.assertTrue(reconstruct.skeleton_member(rep23, 0b101, (0, 1, 0)))
        self.assertFalse(
            reconstruct.skeleton_member(rep23, 0b110, (1, 1, 0))
        )
        self.assertRaises(DomainError, reconstruct.skeleton_member, rep23,
                          0b001, (0, 1, 0))
        self.assertRaises(DomainError, reconstruct.project_xb,
                          instances.parallel(), (0, 0, 0), 0b011)


class TestRoundTrip(TestCase):

    def test_omega_from_lattice(self):
        rep23 = instances.rep23()
        w = reconstruct.omega_from_lattice(rep23, (1, 1, 0))
        self.assertDictEqual(w.values, {0b011: 0, 0b101: 0, 0b110: -1})
        self.assertTupleEqual(projectively_equivalent(rep23, w), (0, 0, -1))

    def test_roundtrip(self):
        result = reconstruct.roundtrip_check(instances.rep23(), (1, 1, 0))
        self.assertTupleEqual(result.witness, (0, 0, -1))
        self.assertEqual(len(result.rows), 3)
        for _, shifted, projected, value in result.rows:
            self.assertEqual(shifted, projected)
            self.assertEqual(value, projected - 2)

    def test_fixture_roundtrips(self):
        for name in ["u23", "rep23", "tree"]:
            v = instances.load_fixture(name)
            v.validate()
            result = reconstruct.roundtrip_check(v, find_point(v))
            self.assertIsNotNone(result.witness)

    def test_tree_roundtrip(self):
        tree = instances.tree()
        w = reconstruct.omega_from_lattice(tree, (0, 0, 0))
        self.assertEqual(w, tree)
        for seed in range(3):
            v = gen_tree_metric(random_tree(seed, max_leaves=5))
            reconstruct.roundtrip_check(v, find_point(v))

    def test_random_roundtrips(self):
        for seed in range(3):
            v = gen_perturbed(instances.uniform_zero(4, 2), seed)
            for x in random_members(v, 2, seed):
                reconstruct.roundtrip_check(v, x)
        for seed in range(3):
            v = gen_representable(random_poly_matrix(seed))
            simple = simplify(v).valuation
            result = reconstruct.roundtrip_check(simple, find_point(simple))
            self.assertIsNotNone(result.witness)

    def test_corpus_roundtrips(self):
        for name, v in instances.corpus():
            points = random_members(v, instances.NUM_BASEPOINTS, seed=0)
            for x in points:
                result = reconstruct.roundtrip_check(v, x)
                self.assertIsNotNone(result.witness, msg=name)


class TestModularity(TestCase):

    def test_not_modular(self):
        report = reconstruct.modular_check(
            instances.u34(), [((1, 1, 0, 0), (0, 0, 1, 1))]
        )
        self.assertEqual(report.checked, 1)
        self.assertFalse(report.modular)
        x, y, lhs, rhs = report.violations[0]
        self.assertGreater(lhs, rhs)

    def test_sampled_pairs(self):
        v = instances.rep23()
        report = reconstruct.modular_check(v, random_pairs(v, 5, seed=0))
        self.assertEqual(report.checked, 5)


class TestCorpusReconstruction(TestCase):

    def test_projection_is_maximal(self):
        for name, v in instances.corpus():
            size = len(v.ground)
            for x in random_members(v, instances.NUM_BASEPOINTS, seed=1):
                for base in v.bases:
                    y = reconstruct.project_xb(v, x, base)
                    self.assertTrue(y <= x, msg=name)
                    self.assertIn(base, y.family, msg=name)
                    # No step along the skeleton stays below x
                    for e in bits(base):
                        step = y.family.parallel_class_of(e)
                        upper = vadd(y.point, indicator(step, size))
                        self.assertFalse(vleq(upper, x.point), msg=name)

    def test_heights_below(self):
        for name, v in instances.small_corpus():
            for x, z in random_pairs(v, instances.NUM_PAIRS, seed=2):
                y = meet(v, x, z)
                coords = coordinate(v, x, y)
                for base in v.bases:
                    projected = reconstruct.project_xb(v, x, base)
                    total = projected.height + sum(coords[e] for e in
                                                   bits(base))
                    if base in y.family:
                        self.assertEqual(total, y.height, msg=name)
                    else:
                        self.assertLess(total, y.height, msg=name)

    def test_basepoint_independence(self):
        for name, v in instances.corpus():
            points = random_members(v, instances.NUM_BASEPOINTS, seed=3)
            first = reconstruct.omega_from_lattice(v, points[0])
            for x in points[1:]:
                other = reconstruct.omega_from_lattice(v, x)
                self.assertIsNotNone(projectively_equivalent(first, other),
                                     msg=f"{name} at {x}")

    def test_representable(self):
        for name, v in instances.corpus():
            if not name.startswith("poly"):
                continue
            for x in random_members(v, instances.NUM_BASEPOINTS, seed=4):
                w = reconstruct.omega_from_lattice(v, x)
                for base in v.bases:
                    self.assertEqual(
                        w.values[base],
                        v.shifted_value(base, x.point) - x.height, msg=name,
                    )


if __name__ == '__main__':
    unittest.main()
