#!/usr/bin/env python3
"""
Input/output functions
======================

Reading and writing instance documents, points and polynomial matrices.

An instance document is a JSON object:

.. code-block:: json

    {
      "format": "valmat-instance",
      "version": 1,
      "elements": ["e1", "e2", "e3"],
      "rank": 2,
      "bases": [
        {"base": ["e1", "e2"], "value": 0},
        {"base": ["e1", "e3"], "value": 1},
        {"base": ["e2", "e3"], "value": 0}
      ],
      "provenance": {"generator": "gen-poly"}
    }

Emission is canonical: elements keep their declared order (which is the
coordinate order of every point), labels inside a base follow that order
and bases are sorted by their element indices.
"""
import json
from fractions import Fraction

from .errors import ParseError, StructuralError
from .generators.polynomials import PolyMatrix
from .matroid import BaseFamily, GroundSet
from .valuation import Valuation

INSTANCE_FORMAT = "valmat-instance"
INSTANCE_VERSION = 1


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(
            f"Invalid JSON: {error.msg}", line=error.lineno,
            column=error.colno
        )


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


# Source positions of schema errors

_decoder = json.JSONDecoder()


def _skip_space(text, idx):
    while idx < len(text) and text[idx] in " \t\n\r":
        idx += 1
    return idx


def _child_offset(text, idx, key):
    """Offset of the value at ``key`` (a string for objects, an integer for
    arrays) in the container starting at ``idx``, ``None`` if absent.

    Repeated object keys resolve to the last one, as in :py:func:`json.loads`
    """
    found = None
    closing = "}" if text[idx] == "{" else "]"
    position = 0
    idx = _skip_space(text, idx + 1)
    while idx < len(text) and text[idx] != closing:
        if closing == "}":
            name, idx = _decoder.raw_decode(text, idx)
            idx = _skip_space(text, _skip_space(text, idx) + 1)
        else:
            name = position
        if name == key:
            found = idx
        _, idx = _decoder.raw_decode(text, idx)
        idx = _skip_space(text, idx)
        if idx < len(text) and text[idx] == ",":
            idx = _skip_space(text, idx + 1)
        position += 1
    return found


def _locate(text, parts):
    """Offset of the deepest existing entry along ``parts``"""
    idx = _skip_space(text, 0)
    for part in parts:
        if idx >= len(text) or text[idx] not in "{[":
            break
        child = _child_offset(text, idx, part)
        if child is None:
            break
        idx = child
    return idx


def _format_path(parts):
    path = ""
    for part in parts:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}" if path else part
    return path or "$"


def _schema_error(text, message, *parts):
    """A :py:class:`ParseError` at the JSON path ``parts``, with the line and
    column where the offending entry (or its closest existing parent) starts"""
    idx = _locate(text, parts)
    line = text.count("\n", 0, idx) + 1
    column = idx - text.rfind("\n", 0, idx)
    return ParseError(message, line=line, column=column,
                      path=_format_path(parts))


def parse_document(text):
    """Parse an instance document

    Schema errors carry the JSON path of the offending entry and the line
    and column where it starts.

    Args:
        text (str): JSON text

    Returns:
        tuple: ``(valuation, provenance)`` where ``provenance`` is a dict or
        ``None``
    """
    data = _load_json(text)
    if not isinstance(data, dict):
        raise _schema_error(text, "An instance document is a JSON object")
    if data.get("format") != INSTANCE_FORMAT:
        raise _schema_error(
            text, f"Expected format \"{INSTANCE_FORMAT}\"", "format"
        )
    if data.get("version") != INSTANCE_VERSION:
        raise _schema_error(
            text, f"Unsupported version {data.get('version')!r}", "version"
        )
    # Elements
    elements = data.get("elements")
    if not isinstance(elements, list) or not elements:
        raise _schema_error(text, "Expected a nonempty list of labels",
                            "elements")
    for idx, label in enumerate(elements):
        if not isinstance(label, str) or not label:
            raise _schema_error(text, "Labels are nonempty strings",
                                "elements", idx)
        if label in elements[:idx]:
            raise _schema_error(text, f"Duplicate label {label}",
                                "elements", idx)
    ground = GroundSet(elements)
    # Rank
    rank = data.get("rank")
    if not _is_int(rank) or not 0 <= rank <= len(ground):
        raise _schema_error(text, f"Invalid rank {rank!r}", "rank")
    # Bases
    bases = data.get("bases")
    if not isinstance(bases, list) or not bases:
        raise _schema_error(text, "Expected a nonempty list of bases",
                            "bases")
    values = {}
    for idx, entry in enumerate(bases):
        if not isinstance(entry, dict):
            raise _schema_error(
                text, "Expected {\"base\": [...], \"value\": k}", "bases", idx
            )
        labels = entry.get("base")
        if not isinstance(labels, list):
            raise _schema_error(text, "Expected a list of labels",
                                "bases", idx, "base")
        for position, label in enumerate(labels):
            if not isinstance(label, str) or label not in ground:
                raise _schema_error(text, f"Unknown label {label!r}",
                                    "bases", idx, "base", position)
        base = ground.subset(labels)
        if len(labels) != rank or len(set(labels)) != rank:
            raise _schema_error(
                text,
                f"Base {labels} has {len(set(labels))} distinct elements but "
                f"the rank is {rank}", "bases", idx, "base"
            )
        if base in values:
            raise _schema_error(text,
                                f"Duplicate base {ground.describe(base)}",
                                "bases", idx, "base")
        value = entry.get("value")
        if not _is_int(value):
            raise _schema_error(text, f"Value {value!r} is not an integer",
                                "bases", idx, "value")
        values[base] = value
    family = BaseFamily(ground, rank, values)
    provenance = data.get("provenance")
    if provenance is not None and not isinstance(provenance, dict):
        raise _schema_error(text, "Provenance is a JSON object",
                            "provenance")
    return Valuation(family, values), provenance


def parse_instance(text):
    """Parse an instance document into a :py:class:`Valuation`"""
    valuation, _ = parse_document(text)
    return valuation


def instance_to_dict(v, provenance=None):
    document = {
        "format": INSTANCE_FORMAT,
        "version": INSTANCE_VERSION,
        "elements": list(v.ground),
        "rank": v.rank,
        "bases": [
            {"base": v.ground.labels_of(base), "value": v.values[base]}
            for base in v.bases
        ],
    }
    if provenance is not None:
        document["provenance"] = provenance
    return document


def emit_instance(v, provenance=None):
    """Canonical instance document for ``v``"""
    return dumps(instance_to_dict(v, provenance=provenance))


def dumps(data):
    """Deterministic JSON (insertion ordered keys, 2 spaces indent)"""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# Points


def parse_value(text, rational=False):
    """Integer (or, with ``rational``, fraction such as ``-3/2``)"""
    text = text.strip()
    try:
        if rational:
            return Fraction(text)
        return int(text)
    except (ValueError, ZeroDivisionError):
        kind = "a rational" if rational else "an integer"
        raise ParseError(f"\"{text}\" is not {kind}")


def parse_point(text, ground, rational=False):
    """Parse ``label=value,label=value`` (omitted labels are 0)

    Args:
        text (str): Point description
        ground (GroundSet): Ground set
        rational (bool, optional): Allow fractions

    Returns:
        tuple: Coordinates in ground order
    """
    coords = [Fraction(0) if rational else 0] * len(ground)
    seen = set()
    for column, item in _items(text):
        if "=" not in item:
            raise ParseError(f"Expected label=value, got \"{item}\"",
                             column=column)
        label, value = (part.strip() for part in item.split("=", 1))
        idx = ground.index(label, fail_if_unknown=False)
        if idx is None:
            raise ParseError(f"Unknown label {label}", column=column)
        if label in seen:
            raise ParseError(f"Label {label} given twice", column=column)
        seen.add(label)
        coords[idx] = parse_value(value, rational=rational)
    return tuple(coords)


def parse_vector(text, ground):
    """Like :py:func:`parse_point` for nonnegative integer vectors"""
    vector = parse_point(text, ground)
    if any(a < 0 for a in vector):
        raise ParseError(f"Negative entry in \"{text}\"")
    return vector


def parse_labels(text, ground=None):
    """Comma separated labels (checked against ``ground`` if given)"""
    labels = []
    for column, label in _items(text):
        if ground is not None and label not in ground:
            raise ParseError(f"Unknown label {label}", column=column)
        labels.append(label)
    return labels


def _items(text):
    """Nonempty comma separated items with their (1-based) column"""
    column = 1
    for item in text.split(","):
        if item.strip():
            yield column, item.strip()
        column += len(item) + 1


def format_value(value):
    """JSON value for an integer or a fraction (``"p/q"``)"""
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def point_to_dict(ground, x):
    """``{label: value}`` in ground order"""
    return {label: format_value(a) for label, a in zip(ground, x)}


def subset_to_list(ground, mask):
    return ground.labels_of(mask)


# Matrices


def parse_matrix(text):
    """Parse ``{"labels": [...], "rows": [["1", "t"], ...]}``"""
    data = _load_json(text)
    try:
        return PolyMatrix.from_dict(data)
    except StructuralError as error:
        raise ParseError(str(error), path="rows")


# Files


def read_text(filename, encoding="utf-8"):
    """Read text from a file"""
    with open(filename, "r", encoding=encoding) as f:
        return f.read()


def write_text(filename, text, encoding="utf-8"):
    """Save text to a file"""
    with open(filename, "w", encoding=encoding) as f:
        f.write(text)


__all__ = [
    "INSTANCE_FORMAT",
    "INSTANCE_VERSION",
    "parse_document",
    "parse_instance",
    "instance_to_dict",
    "emit_instance",
    "dumps",
    "parse_value",
    "parse_point",
    "parse_vector",
    "parse_labels",
    "format_value",
    "point_to_dict",
    "subset_to_list",
    "parse_matrix",
    "read_text",
    "write_text",
]
