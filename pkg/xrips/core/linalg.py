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


"""Exact linear algebra over the integers, the rationals and the prime fields.

All the matrices are sympy DomainMatrix objects in dense format. The helpers
in this module take care of the degenerate shapes (zero rows or columns),
which show up all the time when working with chain complexes.
"""


from fractions import Fraction

from sympy import isprime
from sympy.polys.domains import ZZ, QQ, GF
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp,\
    invariant_factors

from xrips.utils.errors import xCoefficientError


COEFFICIENT_KINDS = ['integers', 'rationals', 'prime_field']


class xCoefficients:

    """The coefficient group of the (co)homology: the integers, the
    rationals or a prime field.

    Args
    ----
    kind : str
        One of 'integers', 'rationals' or 'prime_field'.

    p : int, optional
        The characteristic of the prime field.
    """

    def __init__(self, kind='integers', p=None):
        """Constructor.
        """
        if kind not in COEFFICIENT_KINDS:
            raise xCoefficientError('unknown coefficients "%s" (allowed: %s)'\
                                    % (kind, COEFFICIENT_KINDS))
        if kind == 'prime_field':
            if p is None or not isprime(int(p)):
                raise xCoefficientError('%s is not a prime' % p)
            p = int(p)
        else:
            p = None
        self.kind = kind
        self.p = p

    @classmethod
    def parse(cls, text):
        """Create the coefficients from a command-line string, i.e., 'z',
        'q' or 'zp:P'.
        """
        text = str(text).strip().lower()
        if text == 'z':
            return cls('integers')
        if text == 'q':
            return cls('rationals')
        if text.startswith('zp:'):
            try:
                p = int(text[3:])
            except ValueError:
                raise xCoefficientError('invalid characteristic in "%s"' % text)
            return cls('prime_field', p)
        raise xCoefficientError('cannot parse coefficients "%s" (use z, q or '
                                'zp:P)' % text)

    @property
    def is_field(self):
        """True for the rationals and the prime fields.
        """
        return self.kind != 'integers'

    @property
    def domain(self):
        """The sympy domain the matrices are built over.
        """
        if self.kind == 'integers':
            return ZZ
        if self.kind == 'rationals':
            return QQ
        return GF(self.p)

    @property
    def field(self):
        """The field the ranks are computed over (the rationals for the
        integers).
        """
        if self.kind == 'integers':
            return QQ
        return self.domain

    def check_field(self, what='this operation'):
        """Raise an xCoefficientError unless the coefficients form a field.
        """
        if not self.is_field:
            raise xCoefficientError('%s needs field coefficients (q or zp:P), '
                                    'got %s' % (what, self))

    def to_python(self, value):
        """Convert a domain element to a plain python number (int or
        Fraction), for serialization.
        """
        if self.kind == 'integers':
            return int(value)
        if self.kind == 'rationals':
            value = Fraction(int(value.numerator), int(value.denominator))
            if value.denominator == 1:
                return int(value)
            return value
        return int(value) % self.p

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xCoefficients) and self.kind == other.kind\
            and self.p == other.p

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __hash__(self):
        """Hash function.
        """
        return hash((self.kind, self.p))

    def __str__(self):
        """String formatting (same syntax accepted by parse()).
        """
        if self.kind == 'integers':
            return 'z'
        if self.kind == 'rationals':
            return 'q'
        return 'zp:%d' % self.p

    def __repr__(self):
        """Representation.
        """
        return 'xCoefficients(%s)' % self


INTEGERS = xCoefficients('integers')
RATIONALS = xCoefficients('rationals')


def zeros(rows, cols, domain):
    """Return the zero matrix of a given shape.
    """
    return DomainMatrix.zeros((rows, cols), domain).to_dense()


def identity(n, domain):
    """Return the n x n identity matrix.
    """
    if n == 0:
        return zeros(0, 0, domain)
    return DomainMatrix.eye(n, domain).to_dense()


def element(x, domain):
    """Convert a plain number (int or Fraction) to an element of a domain.
    """
    if isinstance(x, Fraction):
        return domain(x.numerator)/domain(x.denominator)
    if isinstance(x, int):
        return domain(x)
    return domain.convert(x)


def matrix(rows, domain, shape=None):
    """Build a dense matrix from a list of rows of numbers.
    """
    rows = [list(row) for row in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    if 0 in shape:
        return zeros(shape[0], shape[1], domain)
    values = [[element(x, domain) for x in row] for row in rows]
    return DomainMatrix(values, shape, domain)


def integer_matrix(rows, shape=None):
    """Build a dense matrix over the integers.
    """
    return matrix(rows, ZZ, shape)


def sparse_matrix(entries, shape, domain):
    """Build a dense matrix from a dictionary {(i, j): value}.
    """
    if 0 in shape:
        return zeros(shape[0], shape[1], domain)
    rows = {}
    for (i, j), value in entries.items():
        value = element(value, domain)
        if value:
            rows.setdefault(i, {})[j] = value
    return DomainMatrix(rows, shape, domain).to_dense()


def convert(m, domain):
    """Convert a matrix to another domain.
    """
    if 0 in m.shape:
        return zeros(m.shape[0], m.shape[1], domain)
    return m.convert_to(domain)


def entries(m):
    """Return the matrix entries as a list of rows.
    """
    if m.shape[0] == 0:
        return []
    if m.shape[1] == 0:
        return [[] for i in range(m.shape[0])]
    return m.to_list()


def from_columns(columns, length, domain):
    """Build a matrix out of a list of column vectors.
    """
    if length == 0 or not columns:
        return zeros(length, len(columns), domain)
    rows = [[column[i] for column in columns] for i in range(length)]
    return DomainMatrix(rows, (length, len(columns)), domain)


def columns(m):
    """Return the list of the column vectors of a matrix.
    """
    rows = entries(m)
    return [[row[j] for row in rows] for j in range(m.shape[1])]


def select_columns(m, indices):
    """Return the submatrix formed by a subset of the columns.
    """
    rows = entries(m)
    return matrix([[row[j] for j in indices] for row in rows], m.domain,
                  (m.shape[0], len(indices)))


def select_rows(m, indices):
    """Return the submatrix formed by a subset of the rows.
    """
    rows = entries(m)
    return matrix([rows[i] for i in indices], m.domain,
                  (len(indices), m.shape[1]))


def hstack(*blocks):
    """Stack a sequence of matrices with the same number of rows side by
    side.
    """
    first = blocks[0]
    rows = first.shape[0]
    cols = sum(b.shape[1] for b in blocks)
    if rows == 0 or cols == 0:
        return zeros(rows, cols, first.domain)
    blocks = [b for b in blocks if b.shape[1] > 0]
    return blocks[0].hstack(*blocks[1:])


def matmul(a, b):
    """Matrix product, with the degenerate shapes handled.
    """
    if a.shape[1] != b.shape[0]:
        raise ValueError('cannot multiply %s by %s matrices' %\
                         (a.shape, b.shape))
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0], b.shape[1], a.domain)
    return a*b


def transpose(m):
    """Transpose, with the degenerate shapes handled.
    """
    if 0 in m.shape:
        return zeros(m.shape[1], m.shape[0], m.domain)
    return m.transpose()


def matrices_equal(a, b):
    """Return True if two matrices have the same shape and entries.
    """
    return a.shape == b.shape and entries(a) == entries(b)


def is_zero(m):
    """Return True if all the entries vanish.
    """
    return all(not x for row in entries(m) for x in row)


def rank(m, field=None):
    """Return the rank of a matrix over a field (by default the field of
    fractions of the matrix domain).
    """
    if 0 in m.shape:
        return 0
    if field is None:
        field = QQ if m.domain == ZZ else m.domain
    return m.convert_to(field).rank()


def rref(m):
    """Return the reduced row echelon form and the pivot columns of a matrix
    over a field.
    """
    if 0 in m.shape:
        return m, ()
    reduced, pivots = m.rref()
    return reduced.to_dense(), tuple(pivots)


def nullspace(m):
    """Return a matrix whose columns are a basis of the kernel of a matrix
    over a field.
    """
    rows, cols = m.shape
    domain = m.domain
    reduced, pivots = rref(m)
    reduced = entries(reduced)
    basis = []
    for f in range(cols):
        if f in pivots:
            continue
        vector = [domain.zero]*cols
        vector[f] = domain.one
        for i, p in enumerate(pivots):
            vector[p] = -reduced[i][f]
        basis.append(vector)
    return from_columns(basis, cols, domain)


def solve(a, b):
    """Return a solution X of the linear system a X = b over a field, or None
    if the system is inconsistent.
    """
    rows, cols = a.shape
    k = b.shape[1]
    domain = a.domain
    if rows == 0 or k == 0:
        return zeros(cols, k, domain)
    reduced, pivots = rref(hstack(a, b))
    if any(p >= cols for p in pivots):
        return None
    reduced = entries(reduced)
    solution = [[domain.zero]*k for i in range(cols)]
    for i, p in enumerate(pivots):
        for j in range(k):
            solution[p][j] = reduced[i][cols + j]
    return matrix(solution, domain, (cols, k))


def independent_columns(b, z):
    """Return the indices of a maximal set of columns of z that are linearly
    independent modulo the column space of b.
    """
    if z.shape[0] == 0:
        return []
    reduced, pivots = rref(hstack(b, z))
    return [p - b.shape[1] for p in pivots if p >= b.shape[1]]


class xSNFResult:

    """Smith normal form of an integer matrix m: left * m * right = D, with D
    diagonal, non-negative, and each diagonal entry dividing the next.

    Args
    ----
    diagonal : list of int
        The min(rows, cols) diagonal entries of D.

    left : DomainMatrix
        The unimodular rows x rows transformation.

    right : DomainMatrix
        The unimodular cols x cols transformation.
    """

    def __init__(self, diagonal, left, right):
        """Constructor.
        """
        self.diagonal = [int(d) for d in diagonal]
        self.left = left
        self.right = right

    def diagonal_matrix(self):
        """Return D as a full matrix.
        """
        rows, cols = self.left.shape[0], self.right.shape[0]
        values = dict(((i, i), d) for i, d in enumerate(self.diagonal) if d)
        return sparse_matrix(values, (rows, cols), ZZ)

    def rank(self):
        """Return the number of nonzero diagonal entries.
        """
        return len([d for d in self.diagonal if d])

    def torsion(self):
        """Return the diagonal entries larger than one.
        """
        return [d for d in self.diagonal if d > 1]

    def __str__(self):
        """String formatting.
        """
        return 'Smith normal form, diagonal %s' % self.diagonal


def smith_normal_form(m):
    """Return the Smith normal form of an integer matrix, along with the
    unimodular transformations.

    Raises a RuntimeError if the decomposition does not reconstruct exactly.
    """
    m = convert(m, ZZ)
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return xSNFResult([], identity(rows, ZZ), identity(cols, ZZ))
    smf, left, right = smith_normal_decomp(m)
    smf = entries(smf.to_dense())
    left = entries(left.to_dense())
    diagonal = []
    for i in range(min(rows, cols)):
        d = int(smf[i][i])
        if d < 0:
            d = -d
            left[i] = [-x for x in left[i]]
        diagonal.append(d)
    result = xSNFResult(diagonal, matrix(left, ZZ, (rows, rows)),
                        right.to_dense())
    check = matmul(matmul(result.left, m), result.right)
    if not matrices_equal(check, result.diagonal_matrix()):
        raise RuntimeError('Smith normal form does not reconstruct the input')
    for a, b in zip(diagonal[:-1], diagonal[1:]):
        if (a == 0 and b != 0) or (a != 0 and b % a != 0):
            raise RuntimeError('Smith normal form violates divisibility: %s' %\
                               diagonal)
    return result


def elementary_divisors(m):
    """Return the nonzero invariant factors of an integer matrix (the diagonal
    of the Smith normal form, without the transformations).
    """
    m = convert(m, ZZ)
    if 0 in m.shape:
        return []
    factors = [abs(int(d)) for d in invariant_factors(m)]
    return [d for d in factors if d]


def is_unimodular(m):
    """Return True if m is a square integer matrix with determinant +1 or -1.
    """
    rows, cols = m.shape
    if rows != cols:
        return False
    if rows == 0:
        return True
    return abs(int(convert(m, ZZ).det())) == 1
