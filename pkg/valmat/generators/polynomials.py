#!/usr/bin/env python3
"""
Polynomial matrices
^^^^^^^^^^^^^^^^^^^

Representable valuated matroids: for an ``n x m`` matrix over ``Z[t]``, the
degree of the determinant of ``n`` columns is a valuation on the column
sets with a nonzero determinant.
"""
import logging
from itertools import combinations

import numpy as np
from sympy import Matrix, Poly, Symbol, ZZ, SympifyError, sympify
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import BasePolynomialError

from ..errors import DomainError, ParseError, StructuralError
from ..matroid import BaseFamily, GroundSet
from ..util import mask_of
from ..valuation import Valuation

logger = logging.getLogger(__name__)

t = Symbol("t")

ring = ZZ[t]


def _as_poly(entry):
    """Integer polynomial in ``t`` from an int, a string or an expression"""
    try:
        poly = Poly(sympify(entry), t, domain=ZZ)
    except (BasePolynomialError, SympifyError, TypeError) as error:
        raise ParseError(
            f"\"{entry}\" is not an integer polynomial in t ({error})"
        )
    return poly


class PolyMatrix(object):
    """Matrix of integer polynomials in ``t`` with labelled columns.

    Args:
        rows (list): ``n`` rows of ``m`` entries (ints, strings such as
            ``"2*t**2 - 1"`` or sympy expressions)
        labels (list, optional): Column labels (default ``1, ..., m``)
    """

    def __init__(self, rows, labels=None):
        self.rows = [[_as_poly(entry) for entry in row] for row in rows]
        if not self.rows:
            raise StructuralError("A polynomial matrix needs at least a row")
        self.num_rows = len(self.rows)
        self.num_columns = len(self.rows[0])
        if any(len(row) != self.num_columns for row in self.rows):
            raise StructuralError("Rows of different lengths")
        if self.num_columns < self.num_rows:
            raise StructuralError(
                f"{self.num_rows} rows but only {self.num_columns} columns"
            )
        if labels is None:
            labels = [str(i + 1) for i in range(self.num_columns)]
        self.ground = GroundSet(labels)
        if len(self.ground) != self.num_columns:
            raise StructuralError(
                f"{len(self.ground)} labels for {self.num_columns} columns"
            )

    @staticmethod
    def from_dict(data):
        """Reads ``{"labels": [...], "rows": [[...], ...]}``"""
        if not isinstance(data, dict) or "rows" not in data:
            raise ParseError("A matrix needs a \"rows\" field")
        return PolyMatrix(data["rows"], data.get("labels"))

    def submatrix(self, columns):
        return [[row[j] for j in columns] for row in self.rows]

    def det_fraction_free(self, columns):
        """Determinant of the given columns by fraction free elimination in
        ``Z[t]``"""
        domain_matrix = DomainMatrix(
            [[ring.from_sympy(p.as_expr()) for p in row]
             for row in self.submatrix(columns)],
            (self.num_rows, self.num_rows),
            ring,
        )
        return Poly(ring.to_sympy(domain_matrix.det()), t, domain=ZZ)

    def det_cofactor(self, columns):
        """Determinant of the given columns by cofactor expansion"""
        matrix = Matrix([[p.as_expr() for p in row]
                         for row in self.submatrix(columns)])
        return Poly(matrix.det(method="laplace").expand(), t, domain=ZZ)

    def to_dict(self):
        return {
            "labels": list(self.ground),
            "rows": [[str(p.as_expr()) for p in row] for row in self.rows],
        }


def gen_representable(matrix):
    """Valuation ``B -> deg det(B)`` on the column sets with a nonzero
    determinant

    Args:
        matrix (PolyMatrix): Polynomial matrix

    Returns:
        Valuation: Representable valuation
    """
    values = {}
    for columns in combinations(range(matrix.num_columns), matrix.num_rows):
        determinant = matrix.det_fraction_free(columns)
        if determinant.is_zero:
            continue
        values[mask_of(columns)] = determinant.degree()
    if not values:
        raise DomainError("Every maximal minor of the matrix vanishes")
    family = BaseFamily(matrix.ground, matrix.num_rows, values)
    return Valuation(family, values)


def random_poly_matrix(seed, num_rows=2, num_columns=4, degree=2,
                       density=0.6):
    """Random sparse polynomial matrix with at least one nonzero maximal
    minor

    Args:
        seed (int): Random seed
        num_rows (int, optional): ``n``
        num_columns (int, optional): ``m``
        degree (int, optional): Maximum degree of the entries
        density (float, optional): Probability for an entry to be nonzero

    Returns:
        PolyMatrix: Random matrix
    """
    rs = np.random.RandomState(seed)
    while True:
        rows = []
        for _ in range(num_rows):
            row = []
            for _ in range(num_columns):
                if rs.rand() >= density:
                    row.append(0)
                    continue
                coefficients = rs.randint(-2, 3, size=degree + 1)
                row.append(sum(
                    int(c) * t ** k for k, c in enumerate(coefficients)
                ))
            rows.append(row)
        matrix = PolyMatrix(rows)
        try:
            gen_representable(matrix)
        except DomainError:
            logger.debug(f"Degenerate random matrix for seed {seed}")
            continue
        return matrix


__all__ = [
    "t",
    "PolyMatrix",
    "gen_representable",
    "random_poly_matrix",
]
