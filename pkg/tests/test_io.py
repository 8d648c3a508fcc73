#!/usr/bin/env python3
import os
import unittest
from unittest import TestCase
import tempfile
import shutil
import json
from fractions import Fraction

from valmat import io
from valmat.errors import ParseError
from valmat.generators import PolyMatrix

from tests import instances


class TestInstances(TestCase):

    def setUp(self):
        self.path = tempfile.mkdtemp()
        self.filename = os.path.join(self.path, "instance.json")
        self.document = json.loads(
            io.read_text(instances.fixture_path("rep23"))
        )

    def tearDown(self):
        shutil.rmtree(self.path)

    def _parse_error(self, document):
        with self.assertRaises(ParseError) as context:
            io.parse_document(json.dumps(document))
        return context.exception

    def test_fixtures(self):
        self.assertEqual(instances.load_fixture("u23"), instances.u23())
        self.assertEqual(instances.load_fixture("rep23"), instances.rep23())
        self.assertEqual(instances.load_fixture("tree"), instances.tree())
        self.assertEqual(instances.load_fixture("bad"), instances.bad())
        _, provenance = io.parse_document(
            io.read_text(instances.fixture_path("tree"))
        )
        self.assertEqual(provenance["tree"], "(z (a u u') v)")

    def test_emit(self):
        text = io.emit_instance(instances.rep23(),
                                provenance={"generator": "test"})
        self.assertTrue(text.endswith("}\n"))
        data = json.loads(text)
        self.assertListEqual(data["elements"], ["e1", "e2", "e3"])
        self.assertListEqual(
            [entry["base"] for entry in data["bases"]],
            [["e1", "e2"], ["e1", "e3"], ["e2", "e3"]],
        )
        io.write_text(self.filename, text)
        v, provenance = io.parse_document(io.read_text(self.filename))
        self.assertEqual(v, instances.rep23())
        self.assertDictEqual(provenance, {"generator": "test"})
        # Emission is deterministic
        self.assertEqual(io.emit_instance(v, provenance), text)

    def test_invalid_json(self):
        with self.assertRaises(ParseError) as context:
            io.parse_document('{\n  "format": ')
        self.assertEqual(context.exception.line, 2)
        self.assertEqual(context.exception.exit_code, 2)

    def test_invalid_documents(self):
        self.document["format"] = "other"
        self.assertEqual(self._parse_error(self.document).path, "format")
        self.document["format"] = io.INSTANCE_FORMAT
        self.document["elements"] = ["e1", "e1", "e3"]
        self.assertEqual(self._parse_error(self.document).path,
                         "elements[1]")
        self.document["elements"] = ["e1", "e2", "e3"]
        self.document["rank"] = 4
        self.assertEqual(self._parse_error(self.document).path, "rank")
        self.document["rank"] = 2
        self.document["bases"][1]["value"] = 1.5
        self.assertEqual(self._parse_error(self.document).path,
                         "bases[1].value")
        self.document["bases"][1]["value"] = 1
        self.document["bases"][2]["base"] = ["e2", "x"]
        self.assertEqual(self._parse_error(self.document).path,
                         "bases[2].base[1]")
        self.document["bases"][2]["base"] = ["e2"]
        self.assertEqual(self._parse_error(self.document).path,
                         "bases[2].base")
        self.document["bases"][2]["base"] = ["e2", "e1"]
        self.assertEqual(self._parse_error(self.document).path,
                         "bases[2].base")

    def test_error_positions(self):
        text = (
            '{\n'
            '  "format": "valmat-instance",\n'
            '  "version": 1,\n'
            '  "elements": ["e1", "e2", "e3"],\n'
            '  "rank": 2,\n'
            '  "bases": [\n'
            '    {"base": ["e1", "e2"], "value": 0},\n'
            '    {"base": ["e1", "x"], "value": 1}\n'
            '  ]\n'
            '}\n'
        )
        with self.assertRaises(ParseError) as context:
            io.parse_document(text)
        error = context.exception
        self.assertEqual(error.path, "bases[1].base[1]")
        self.assertEqual((error.line, error.column), (8, 21))
        self.assertIn("line 8, column 21", str(error))
        # Non integer value
        text = text.replace('"x"', '"e3"')
        text = text.replace('"value": 0', '"value": 1.5')
        with self.assertRaises(ParseError) as context:
            io.parse_document(text)
        error = context.exception
        self.assertEqual(error.path, "bases[0].value")
        self.assertEqual((error.line, error.column), (7, 37))
        # Missing entries point at their parent
        with self.assertRaises(ParseError) as context:
            io.parse_document(text.replace('  "rank": 2,\n', ''))
        error = context.exception
        self.assertEqual(error.path, "rank")
        self.assertEqual((error.line, error.column), (1, 1))


class TestPoints(TestCase):

    def setUp(self):
        self.ground = instances.u23().ground

    def test_parse_point(self):
        self.assertTupleEqual(io.parse_point("e1=1, e3=-2", self.ground),
                              (1, 0, -2))
        self.assertTupleEqual(
            io.parse_point("e2=1/2", self.ground, rational=True),
            (0, Fraction(1, 2), 0),
        )
        self.assertTupleEqual(io.parse_point("", self.ground), (0, 0, 0))

    def test_point_errors(self):
        with self.assertRaises(ParseError) as context:
            io.parse_point("e1=1,x=2", self.ground)
        self.assertEqual(context.exception.column, 6)
        self.assertRaises(ParseError, io.parse_point, "e1", self.ground)
        self.assertRaises(ParseError, io.parse_point, "e1=1,e1=2",
                          self.ground)
        self.assertRaises(ParseError, io.parse_point, "e1=1/2", self.ground)
        self.assertRaises(ParseError, io.parse_vector, "e1=-1", self.ground)

    def test_labels(self):
        self.assertListEqual(io.parse_labels("e1, e3", self.ground),
                             ["e1", "e3"])
        self.assertRaises(ParseError, io.parse_labels, "e1,e4", self.ground)

    def test_format(self):
        self.assertEqual(io.format_value(Fraction(-3, 2)), "-3/2")
        self.assertEqual(io.format_value(Fraction(4, 2)), 2)
        self.assertDictEqual(
            io.point_to_dict(self.ground, (Fraction(1, 2), 0, -1)),
            {"e1": "1/2", "e2": 0, "e3": -1},
        )
        self.assertListEqual(io.subset_to_list(self.ground, 0b101),
                             ["e1", "e3"])


class TestMatrices(TestCase):

    def test_parse_matrix(self):
        matrix = io.parse_matrix(json.dumps(
            {"labels": ["e1", "e2", "e3"], "rows": [[1, 0, 1], [0, 1, "t"]]}
        ))
        self.assertIsInstance(matrix, PolyMatrix)
        self.assertListEqual(list(matrix.ground), ["e1", "e2", "e3"])
        self.assertDictEqual(
            matrix.to_dict(),
            {"labels": ["e1", "e2", "e3"],
             "rows": [["1", "0", "1"], ["0", "1", "t"]]},
        )
        self.assertRaises(ParseError, io.parse_matrix, '{"rows": [[1], []]}')
        self.assertRaises(ParseError, io.parse_matrix, '[1, 2]')


if __name__ == '__main__':
    unittest.main()
