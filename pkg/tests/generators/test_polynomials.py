#!/usr/bin/env python3

import unittest
from unittest import TestCase
from itertools import combinations

from valmat.errors import DomainError, ParseError, StructuralError
from valmat.generators import (
    PolyMatrix,
    gen_representable,
    random_poly_matrix,
)
from valmat.generators.polynomials import t

from tests import instances


class TestPolyMatrix(TestCase):

    def setUp(self):
        self.labels = ["e1", "e2", "e3"]

    def test_representable(self):
        matrix = PolyMatrix([[1, 0, 1], [0, 1, "t"]], self.labels)
        self.assertEqual(gen_representable(matrix), instances.rep23())

    def test_missing_bases(self):
        matrix = PolyMatrix([[1, "t", 0], [0, 0, 1]], self.labels)
        v = gen_representable(matrix)
        self.assertDictEqual(v.values, {0b101: 0, 0b110: 1})
        self.assertNotIn(0b011, v.family)

    def test_determinants(self):
        matrix = PolyMatrix([[1, t, t ** 2 - 1], ["2*t", 3, "t**3"]])
        self.assertListEqual(list(matrix.ground), ["1", "2", "3"])
        self.assertEqual(matrix.det_fraction_free((0, 1)).as_expr(),
                         3 - 2 * t ** 2)
        for seed in range(3):
            matrix = random_poly_matrix(seed, num_rows=3, num_columns=5)
            for columns in combinations(range(5), 3):
                self.assertEqual(matrix.det_fraction_free(columns),
                                 matrix.det_cofactor(columns))

    def test_invalid_matrices(self):
        self.assertRaises(ParseError, PolyMatrix, [[1, "1/2"]])
        self.assertRaises(ParseError, PolyMatrix, [[1, "("]])
        self.assertRaises(StructuralError, PolyMatrix, [[1, 0], [1]])
        self.assertRaises(StructuralError, PolyMatrix, [[1], [0]])
        self.assertRaises(StructuralError, PolyMatrix, [[1, 0]], ["a"])
        self.assertRaises(DomainError, gen_representable,
                          PolyMatrix([[1, 2], [2, 4]]))

    def test_random_matrices(self):
        for seed in range(5):
            matrix = random_poly_matrix(seed)
            self.assertEqual(matrix.num_rows, 2)
            self.assertEqual(matrix.num_columns, 4)
            v = gen_representable(matrix)
            self.assertTrue(v.check_exc())
            round_trip = PolyMatrix.from_dict(matrix.to_dict())
            self.assertEqual(gen_representable(round_trip), v)


if __name__ == '__main__':
    unittest.main()
