#!/usr/bin/env python
#
# Copyright (C) 2026, the xrips team.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.



"""Unit tests for the core.linalg module.
"""


import itertools
import math
import unittest
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from xrips.core.linalg import *
from xrips.core.rand import xInstanceGenerator
from xrips.utils.errors import xCoefficientError
from xrips.utils.logging_ import suppress_logging
suppress_logging()


def small_matrices(max_size=4):
    """Hypothesis strategy for small integer matrices, as lists of rows.
    """
    def build(shape):
        rows, cols = shape
        row = st.lists(st.integers(-6, 6), min_size=cols, max_size=cols)
        return st.lists(row, min_size=rows, max_size=rows)
    return st.tuples(st.integers(1, max_size),
                     st.integers(1, max_size)).flatmap(build)


def determinantal_divisors(rows):
    """Oracle: the invariant factors as ratios of the gcds of the minors.
    """
    m = sympy.Matrix(rows)
    factors = []
    previous = 1
    for k in range(1, min(m.shape) + 1):
        minors = [m.extract(list(r), list(c)).det()\
                  for r in itertools.combinations(range(m.rows), k)\
                  for c in itertools.combinations(range(m.cols), k)]
        gcd = 0
        for minor in minors:
            gcd = math.gcd(gcd, int(minor))
        if gcd == 0:
            break
        factors.append(gcd//previous)
        previous = gcd
    return factors


class TestCoefficients(unittest.TestCase):

    """Unit test for xCoefficients.
    """

    def test_parse(self):
        """Command-line syntax.
        """
        self.assertEqual(xCoefficients.parse('z'), INTEGERS)
        self.assertEqual(xCoefficients.parse(' Q '), RATIONALS)
        f7 = xCoefficients.parse('zp:7')
        self.assertEqual(f7.p, 7)
        self.assertTrue(f7.is_field)
        self.assertFalse(INTEGERS.is_field)
        self.assertEqual(str(f7), 'zp:7')
        self.assertRaises(xCoefficientError, xCoefficients.parse, 'zp:4')
        self.assertRaises(xCoefficientError, xCoefficients.parse, 'zp:x')
        self.assertRaises(xCoefficientError, xCoefficients.parse, 'r')
        self.assertRaises(xCoefficientError, INTEGERS.check_field)

    def test_to_python(self):
        """Conversion of domain elements.
        """
        self.assertEqual(INTEGERS.to_python(ZZ(-3)), -3)
        half = element(Fraction(1, 2), QQ)
        self.assertEqual(RATIONALS.to_python(half), Fraction(1, 2))
        self.assertEqual(RATIONALS.to_python(element(4, QQ)), 4)
        f5 = xCoefficients.parse('zp:5')
        self.assertEqual(f5.to_python(element(-1, f5.domain)), 4)


class TestFieldAlgebra(unittest.TestCase):

    """Unit test for the linear algebra over fields.
    """

    def test_rank(self):
        """Rank over the rationals and over a prime field.
        """
        m = integer_matrix([[2, 0], [0, 2]])
        self.assertEqual(rank(m), 2)
        self.assertEqual(rank(m, xCoefficients.parse('zp:2').domain), 0)
        self.assertEqual(rank(zeros(0, 3, QQ)), 0)

    @given(small_matrices())
    @settings(max_examples=50, deadline=None)
    def test_nullspace(self, rows):
        """Rank-nullity and a X = 0.
        """
        m = matrix(rows, QQ)
        kernel = nullspace(m)
        self.assertEqual(kernel.shape, (m.shape[1], m.shape[1] - rank(m)))
        self.assertTrue(is_zero(matmul(m, kernel)))
        self.assertEqual(rank(kernel), kernel.shape[1])

    def test_solve(self):
        """Consistent and inconsistent systems.
        """
        a = matrix([[1, 1], [1, -1], [2, 0]], QQ)
        x = solve(a, matrix([[3], [1], [4]], QQ))
        self.assertTrue(matrices_equal(x, matrix([[2], [1]], QQ)))
        self.assertTrue(solve(a, matrix([[3], [1], [5]], QQ)) is None)
        self.assertEqual(solve(a, zeros(3, 0, QQ)).shape, (2, 0))

    def test_independent_columns(self):
        """Columns independent modulo a subspace.
        """
        b = matrix([[1], [0], [0]], QQ)
        z = matrix([[1, 0, 0], [0, 1, 2], [0, 0, 0]], QQ)
        self.assertEqual(independent_columns(b, z), [1])

    def test_degenerate_shapes(self):
        """Products and stacks with empty matrices.
        """
        a = zeros(2, 0, QQ)
        b = zeros(0, 3, QQ)
        self.assertEqual(matmul(a, b).shape, (2, 3))
        self.assertTrue(is_zero(matmul(a, b)))
        self.assertEqual(transpose(b).shape, (3, 0))
        self.assertEqual(hstack(a, identity(2, QQ)).shape, (2, 2))
        self.assertEqual(entries(zeros(2, 0, QQ)), [[], []])
        self.assertRaises(ValueError, matmul, b, b)


class TestSmithNormalForm(unittest.TestCase):

    """Unit test for the Smith normal form.
    """

    def test_textbook(self):
        """A textbook example.
        """
        m = integer_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        snf = smith_normal_form(m)
        self.assertEqual(snf.diagonal, [2, 6, 12])
        self.assertEqual(snf.torsion(), [2, 6, 12])
        self.assertEqual(snf.rank(), 3)
        self.assertEqual(elementary_divisors(m), [2, 6, 12])
        self.assertTrue(is_unimodular(snf.left))
        self.assertTrue(is_unimodular(snf.right))

    def test_degenerate(self):
        """Empty and zero matrices.
        """
        snf = smith_normal_form(zeros(0, 3, ZZ))
        self.assertEqual(snf.diagonal, [])
        self.assertEqual(snf.right.shape, (3, 3))
        snf = smith_normal_form(zeros(2, 3, ZZ))
        self.assertEqual(snf.diagonal, [0, 0])
        self.assertEqual(elementary_divisors(zeros(2, 3, ZZ)), [])
        self.assertFalse(is_unimodular(integer_matrix([[2]])))
        self.assertFalse(is_unimodular(integer_matrix([[1, 0]])))

    @given(small_matrices())
    @settings(max_examples=100, deadline=None)
    def test_oracle(self, rows):
        """Invariant factors against the determinantal divisors.
        """
        m = integer_matrix(rows)
        self.assertEqual(elementary_divisors(m), determinantal_divisors(rows))
        self.assertEqual([d for d in smith_normal_form(m).diagonal if d],
                         determinantal_divisors(rows))

    def test_random(self):
        """Unimodularity, divisibility and exact reconstruction on random
        matrices up to 12 x 12.
        """
        gen = xInstanceGenerator(0)
        for trial in range(500):
            rows, cols = gen.size(1, 12), gen.size(1, 12)
            m = gen.integer_matrix(rows, cols)
            snf = smith_normal_form(m)
            self.assertTrue(is_unimodular(snf.left))
            self.assertTrue(is_unimodular(snf.right))
            product = matmul(matmul(snf.left, m), snf.right)
            self.assertTrue(matrices_equal(product, snf.diagonal_matrix()))
            nonzero = [d for d in snf.diagonal if d]
            for a, b in zip(nonzero[:-1], nonzero[1:]):
                self.assertEqual(b % a, 0)
            self.assertEqual(len(nonzero), rank(m))


if __name__ == '__main__':
    unittest.main()
