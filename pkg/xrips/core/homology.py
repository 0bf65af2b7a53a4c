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


"""Chain complexes, simplicial (co)homology, induced maps and the long exact
sequence of a pair.

Orientation convention: the boundary of the simplex (v_0, ..., v_k) is the
alternating sum of its facets, the facet without v_i carrying the sign
(-1)^i. Relative chains of a pair (K, L) are expressed on the quotient basis
of the simplices of K not in L.

The homology bases used for the induced maps are made of cycles chosen
deterministically (the first cycles in the kernel basis that are independent
modulo the boundaries), so that two maps computed on the same complexes are
always expressed on the same bases.
"""


from fractions import Fraction
import math

from xrips.core.complex_ import xSimplicialComplex, xComplexPair, facets,\
    inclusion_map, simplicial_map
from xrips.core.linalg import INTEGERS, rank, convert, nullspace, hstack,\
    select_columns, select_rows, independent_columns, solve, sparse_matrix,\
    matmul, transpose, entries, identity, is_zero, matrices_equal, zeros,\
    elementary_divisors, columns
from xrips.core.verdict import xVerdict
from xrips.utils.logging_ import logger


def _is_pair(k):
    """Return True for a pair of complexes.
    """
    return isinstance(k, xComplexPair)


class xChainComplex:

    """The chain complex of a simplicial complex, or the relative chain
    complex of a pair, with the boundary matrices over a given coefficient
    domain.

    Args
    ----
    k : xSimplicialComplex or xComplexPair
        The complex (or pair).

    coeffs : xCoefficients
        The coefficients.
    """

    def __init__(self, k, coeffs=INTEGERS):
        """Constructor.
        """
        self.complex = k
        self.coeffs = coeffs
        self.domain = coeffs.domain
        self.max_dim = k.max_dim
        if _is_pair(k):
            total = k.total
            self.bases = tuple(k.relative_simplices_of_dim(d)\
                               for d in range(self.max_dim + 1))
        else:
            total = k
            self.bases = tuple(k.simplices_of_dim(d)\
                               for d in range(self.max_dim + 1))
        self.complete = total.complete and total.dimension() <= self.max_dim
        self._index = tuple(dict((s, i) for i, s in enumerate(basis))\
                            for basis in self.bases)
        self._boundaries = {}

    def dim(self, d):
        """Return the rank of the chain group in dimension d.
        """
        if d < 0 or d > self.max_dim:
            return 0
        return len(self.bases[d])

    def basis(self, d):
        """Return the simplices spanning the chain group in dimension d.
        """
        if d < 0 or d > self.max_dim:
            return ()
        return self.bases[d]

    def index(self, d, s):
        """Return the position of a simplex in the basis of dimension d (or
        None if the simplex is not a basis element).
        """
        if d < 0 or d > self.max_dim:
            return None
        return self._index[d].get(s)

    def boundary(self, d):
        """Return the matrix of the boundary map from the d-chains to the
        (d - 1)-chains.

        Above the enumeration cap (and in dimension zero) the domain or the
        target is trivial and the matrix has a zero dimension.
        """
        if d not in self._boundaries:
            values = {}
            for j, s in enumerate(self.basis(d)):
                if d == 0:
                    break
                for i, face in enumerate(facets(s)):
                    row = self.index(d - 1, face)
                    if row is not None:
                        values[(row, j)] = (-1)**i
            shape = (self.dim(d - 1), self.dim(d))
            self._boundaries[d] = sparse_matrix(values, shape, self.domain)
        return self._boundaries[d]

    def truncated_dims(self):
        """Return the dimensions whose (co)homology might be affected by the
        enumeration cap.
        """
        if self.complete:
            return []
        return [self.max_dim]

    def chain(self, d, vector):
        """Turn a coefficient vector into a list of [simplex, coefficient]
        pairs, with the zero coefficients dropped.
        """
        return [[list(s), x] for s, x in zip(self.basis(d), vector) if x]

    def __str__(self):
        """String formatting.
        """
        return 'Chain complex over %s, ranks %s' %\
            (self.coeffs, [self.dim(d) for d in range(self.max_dim + 1)])


def chain_complex(k, coeffs=INTEGERS):
    """Return the chain complex of a complex or pair.
    """
    return xChainComplex(k, coeffs)


def boundary_matrices(k, coeffs=INTEGERS):
    """Return the list of the boundary matrices of a complex or pair, the
    k-th element being the map from the k-chains to the (k - 1)-chains (the
    zeroth one has no rows).
    """
    cc = chain_complex(k, coeffs)
    return [cc.boundary(d) for d in range(cc.max_dim + 1)]


class xHomologyResult:

    """The (co)homology groups of a complex or pair, dimension by dimension.

    Args
    ----
    coeffs : xCoefficients
        The coefficients.

    betti : list of int
        The Betti numbers, starting from dimension zero.

    torsion : list of lists of int
        The torsion coefficients (integer coefficients only).

    generators : list, optional
        The cycle (or cocycle) representatives, dimension by dimension.

    truncated : list of int
        The dimensions that are unreliable because of the enumeration cap.

    reduced : bool
        Whether this is reduced (co)homology.

    kind : str
        'homology' or 'cohomology'.
    """

    def __init__(self, coeffs, betti, torsion=None, generators=None,
                 truncated=None, reduced=False, kind='homology'):
        """Constructor.
        """
        self.coeffs = coeffs
        self.betti = [int(b) for b in betti]
        if torsion is None:
            torsion = [[] for b in self.betti]
        self.torsion = [list(t) for t in torsion]
        self.generators = generators
        self.truncated = list(truncated or [])
        self.reduced = reduced
        self.kind = kind

    def num_dims(self):
        """Return the number of dimensions computed.
        """
        return len(self.betti)

    def betti_up_to(self, n):
        """Return the Betti numbers in dimension 0...n - 1.
        """
        return self.betti[:n]

    def torsion_up_to(self, n):
        """Return the torsion coefficients in dimension 0...n - 1.
        """
        return self.torsion[:n]

    def agrees_with(self, other, n):
        """Return True if the Betti numbers and torsion coincide with those of
        another result in dimension 0...n - 1.
        """
        return self.betti_up_to(n) == other.betti_up_to(n) and\
            self.torsion_up_to(n) == other.torsion_up_to(n)

    def is_acyclic(self, n=None):
        """Return True if all the groups (up to dimension n - 1, if given)
        vanish.
        """
        if n is None:
            n = self.num_dims()
        return not any(self.betti_up_to(n)) and\
            not any(self.torsion_up_to(n))

    def as_dict(self):
        """Return a JSON-friendly representation.
        """
        data = {
            'kind': self.kind,
            'coefficients': str(self.coeffs),
            'reduced': self.reduced,
            'betti': list(self.betti),
            'torsion': [list(t) for t in self.torsion],
            'truncated_dims': list(self.truncated)
        }
        if self.generators is not None:
            data['generators'] = [[[[s, _format_number(x)] for s, x in c]\
                                   for c in gens] for gens in self.generators]
        return data

    def __eq__(self, other):
        """Comparison operator (the generators are not compared).
        """
        return isinstance(other, xHomologyResult) and\
            self.coeffs == other.coeffs and self.betti == other.betti and\
            self.torsion == other.torsion and self.reduced == other.reduced\
            and self.kind == other.kind

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __str__(self):
        """String formatting.
        """
        text = '%s%s over %s: betti %s' % ('reduced ' if self.reduced else '',
                                           self.kind, self.coeffs, self.betti)
        if any(self.torsion):
            text += ', torsion %s' % self.torsion
        if self.truncated:
            text += ' (truncated in dimension %s)' % self.truncated
        return text


def _format_number(x):
    """Format a Fraction as 'n/d', leave the other numbers alone.
    """
    if isinstance(x, Fraction):
        return str(x)
    return x


def _integral(vector):
    """Scale a rational vector to a primitive-ish integer vector.
    """
    denominators = [x.denominator for x in vector]
    scale = 1
    for d in denominators:
        scale = scale*d//math.gcd(scale, d)
    return [int(x*scale) for x in vector]


def homology_basis(cc, d, field=None):
    """Return the boundary matrix B (from the (d + 1)-chains) and a matrix H
    whose columns are cycles forming a basis of the d-th homology, both over
    a field.
    """
    if field is None:
        field = cc.coeffs.field
    cycles = nullspace(convert(cc.boundary(d), field))
    boundaries = convert(cc.boundary(d + 1), field)
    chosen = independent_columns(boundaries, cycles)
    return boundaries, select_columns(cycles, chosen)


def cohomology_basis(cc, d):
    """Return the coboundary matrix (from the (d - 1)-cochains) and a matrix
    whose columns are cocycles forming a basis of the d-th cohomology.
    """
    cocycles = nullspace(transpose(cc.boundary(d + 1)))
    coboundaries = transpose(cc.boundary(d))
    chosen = independent_columns(coboundaries, cocycles)
    return coboundaries, select_columns(cocycles, chosen)


def coordinates(boundaries, basis, chains):
    """Return the coordinates, on a homology basis, of the classes of the
    cycles in the columns of chains.
    """
    x = solve(hstack(boundaries, basis), chains)
    if x is None:
        raise RuntimeError('chain is not a cycle')
    offset = boundaries.shape[1]
    return select_rows(x, range(offset, offset + basis.shape[1]))


def _generators(cc, d, basis):
    """Format the columns of a homology basis as lists of [simplex,
    coefficient] pairs.
    """
    coeffs = cc.coeffs
    gens = []
    for column in columns(basis):
        if coeffs.is_field:
            vector = [coeffs.to_python(x) for x in column]
        else:
            vector = [Fraction(int(x.numerator), int(x.denominator))\
                      for x in column]
            vector = _integral(vector)
        gens.append(cc.chain(d, vector))
    return gens


def _reduce(betti, k):
    """Subtract one from the zeroth Betti number where the reduced groups
    differ from the ordinary ones.
    """
    if _is_pair(k):
        empty_sub = not k.sub.simplices_of_dim(0)
        nonempty = bool(k.total.simplices_of_dim(0))
    else:
        empty_sub = True
        nonempty = bool(k.simplices_of_dim(0))
    if empty_sub and nonempty and betti:
        betti[0] -= 1
    return betti


def homology(k, coeffs=INTEGERS, reduced=False, generators=False):
    """Compute the homology of a complex (or pair) in dimension
    0...max_dim.

    With integer coefficients the Betti numbers come from the ranks over the
    rationals and the torsion from the invariant factors of the boundary
    matrices. The top dimension is flagged as truncated (and a warning
    logged) unless the complex has no simplices above the enumeration cap.

    Generators, when requested, are reduced cycle representatives (over the
    integers they span the free part only).
    """
    cc = chain_complex(k, coeffs)
    field = coeffs.field
    ranks = [rank(cc.boundary(d), field) for d in range(cc.max_dim + 2)]
    betti = []
    torsion = []
    gens = [] if generators else None
    for d in range(cc.max_dim + 1):
        betti.append(cc.dim(d) - ranks[d] - ranks[d + 1])
        if coeffs.is_field:
            torsion.append([])
        else:
            torsion.append([t for t in elementary_divisors(cc.boundary(d + 1))\
                            if t > 1])
        if generators:
            boundaries, basis = homology_basis(cc, d, field)
            gens.append(_generators(cc, d, basis))
    if reduced:
        betti = _reduce(betti, k)
    truncated = cc.truncated_dims()
    if truncated:
        logger.warning('Homology in dimension %d is truncated by the '
                       'enumeration cap (raise the maximum dimension).' %\
                       truncated[0])
    return xHomologyResult(coeffs, betti, torsion, gens, truncated, reduced)


def cohomology(k, coeffs, reduced=False, generators=False):
    """Compute the cohomology of a complex (or pair) over a field, from the
    ranks of the transposed boundary matrices.
    """
    coeffs.check_field('cohomology')
    cc = chain_complex(k, coeffs)
    ranks = [rank(transpose(cc.boundary(d))) for d in range(cc.max_dim + 2)]
    betti = []
    gens = [] if generators else None
    for d in range(cc.max_dim + 1):
        betti.append(cc.dim(d) - ranks[d] - ranks[d + 1])
        if generators:
            coboundaries, basis = cohomology_basis(cc, d)
            gens.append(_generators(cc, d, basis))
    if reduced:
        betti = _reduce(betti, k)
    truncated = cc.truncated_dims()
    if truncated:
        logger.warning('Cohomology in dimension %d is truncated by the '
                       'enumeration cap.' % truncated[0])
    return xHomologyResult(coeffs, betti, None, gens, truncated, reduced,
                           'cohomology')


def _orientation(images):
    """Return the sign of the permutation sorting a list of distinct
    vertices.
    """
    inversions = sum(1 for i in range(len(images))\
                     for j in range(i + 1, len(images))\
                     if images[i] > images[j])
    return -1 if inversions % 2 else 1


def chain_map(f, source, target, d):
    """Return the matrix of the chain map induced by a simplicial map in
    dimension d (degenerate images go to zero, and so do the images falling
    in the target subcomplex).
    """
    values = {}
    for j, s in enumerate(source.basis(d)):
        images = [f(v) for v in s]
        if len(set(images)) < len(images):
            continue
        i = target.index(d, tuple(sorted(images)))
        if i is not None:
            values[(i, j)] = _orientation(images)
    shape = (target.dim(d), source.dim(d))
    return sparse_matrix(values, shape, source.domain)


class xInducedMapResult:

    """The maps induced in (co)homology, one matrix per dimension, on the
    canonical homology bases of the two sides.

    Args
    ----
    coeffs : xCoefficients
        The (field) coefficients.

    matrices : list of DomainMatrix
        The matrix in each dimension, from 0 up.

    truncated : list of int
        The dimensions affected by the enumeration cap.
    """

    def __init__(self, coeffs, matrices, truncated=None):
        """Constructor.
        """
        self.coeffs = coeffs
        self.matrices = list(matrices)
        self.truncated = list(truncated or [])

    def num_dims(self):
        """Return the number of dimensions.
        """
        return len(self.matrices)

    def matrix(self, d):
        """Return the matrix in dimension d.
        """
        return self.matrices[d]

    def compose(self, other):
        """Return the composite self o other (i.e., other comes first).
        """
        n = min(self.num_dims(), other.num_dims())
        matrices = [matmul(self.matrices[d], other.matrices[d])\
                    for d in range(n)]
        truncated = sorted(set(self.truncated) | set(other.truncated))
        return xInducedMapResult(self.coeffs, matrices, truncated)

    def is_identity(self, n=None):
        """Return True if the matrices in dimension 0...n - 1 are identities.
        """
        if n is None:
            n = self.num_dims()
        for m in self.matrices[:n]:
            if m.shape[0] != m.shape[1]:
                return False
            if not matrices_equal(m, identity(m.shape[0], m.domain)):
                return False
        return True

    def is_isomorphism(self, d):
        """Return True if the map in dimension d is invertible.
        """
        m = self.matrices[d]
        return m.shape[0] == m.shape[1] and rank(m) == m.shape[0]

    def ranks(self):
        """Return the rank of the map in each dimension.
        """
        return [rank(m) for m in self.matrices]

    def agrees_with(self, other, n):
        """Return True if the matrices coincide in dimension 0...n - 1.
        """
        if self.num_dims() < n or other.num_dims() < n:
            return False
        return all(matrices_equal(a, b) for a, b in\
                   zip(self.matrices[:n], other.matrices[:n]))

    def as_dict(self):
        """Return a JSON-friendly representation.
        """
        return {
            'coefficients': str(self.coeffs),
            'matrices': [[[_format_number(self.coeffs.to_python(x))\
                           for x in row] for row in entries(m)]\
                         for m in self.matrices],
            'truncated_dims': list(self.truncated)
        }

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xInducedMapResult) and\
            self.coeffs == other.coeffs and\
            self.num_dims() == other.num_dims() and\
            self.agrees_with(other, self.num_dims())

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __str__(self):
        """String formatting.
        """
        text = 'Induced map over %s' % self.coeffs
        for d, m in enumerate(self.matrices):
            text += '\n  H_%d: %s' % (d, entries(m))
        return text


def induced_map(f, coeffs, top_dim=None):
    """Compute the maps induced in homology by a simplicial map (or by the
    inclusion of the subcomplex of a pair into the total complex), over a
    field.

    The result covers dimension 0...min(max_dim) of the two sides, or
    0...top_dim if this is smaller.
    """
    coeffs.check_field('induced maps')
    if _is_pair(f):
        f = inclusion_map(f.sub, f.total)
    source = chain_complex(f.domain, coeffs)
    target = chain_complex(f.codomain, coeffs)
    top = min(source.max_dim, target.max_dim)
    if top_dim is not None:
        top = min(top, top_dim)
    matrices = []
    for d in range(top + 1):
        _, source_basis = homology_basis(source, d)
        boundaries, target_basis = homology_basis(target, d)
        images = matmul(chain_map(f, source, target, d), source_basis)
        matrices.append(coordinates(boundaries, target_basis, images))
    truncated = sorted(set(d for d in source.truncated_dims() +\
                           target.truncated_dims() if d <= top))
    return xInducedMapResult(coeffs, matrices, truncated)


def empty_complex(space, max_dim):
    """Return the empty complex on a space.
    """
    return xSimplicialComplex(space, [], max_dim)


def _connecting_images(p, coeffs, d, relative_cycles):
    """Return the coordinates, on the homology basis of L in dimension d - 1,
    of the boundaries of the relative d-cycles in the columns of
    relative_cycles.

    A relative cycle is lifted to a chain of K, its boundary is taken in K
    and then read as a cycle of L.
    """
    relative = chain_complex(p, coeffs)
    total = chain_complex(p.total, coeffs)
    sub = chain_complex(p.sub, coeffs)
    lift = {}
    for j, s in enumerate(relative.basis(d)):
        lift[(total.index(d, s), j)] = 1
    lift = sparse_matrix(lift, (total.dim(d), relative.dim(d)), coeffs.domain)
    images = matmul(total.boundary(d), matmul(lift, relative_cycles))
    keep = [i for i, s in enumerate(total.basis(d - 1))\
            if sub.index(d - 1, s) is not None]
    drop = [i for i in range(total.dim(d - 1)) if i not in keep]
    if not is_zero(select_rows(images, drop)):
        raise RuntimeError('boundary of a relative cycle not in the '
                           'subcomplex')
    # The sub basis is the subsequence of the total basis in dimension d - 1.
    images = select_rows(images, keep)
    boundaries, sub_basis = homology_basis(sub, d - 1)
    return coordinates(boundaries, sub_basis, images)


def connecting_map(p, coeffs, d):
    """Return the matrix of the connecting map from the d-th homology of a
    pair (K, L) to the (d - 1)-th homology of L.
    """
    coeffs.check_field('the connecting map')
    relative = chain_complex(p, coeffs)
    _, basis = homology_basis(relative, d)
    if d == 0:
        return zeros(0, basis.shape[1], coeffs.domain)
    return _connecting_images(p, coeffs, d, basis)


def connecting_image(p, coeffs, d):
    """Return a matrix whose columns span the image of the connecting map from
    dimension d, in coordinates on the homology basis of L in dimension
    d - 1.

    Only the relative d-cycles are needed (the relative boundaries map to
    zero), so this works up to the enumeration cap included, where the d-th
    relative homology itself is not available.
    """
    coeffs.check_field('the connecting map')
    relative = chain_complex(p, coeffs)
    if d <= 0 or d > relative.max_dim:
        raise ValueError('dimension %d outside 1...%d' % (d, relative.max_dim))
    cycles = nullspace(relative.boundary(d))
    return _connecting_images(p, coeffs, d, cycles)


def check_les_exactness(p, coeffs, top_dim):
    """Check the exactness of the long exact sequence of a pair

    ... -> H_k(L) -> H_k(K) -> H_k(K, L) -> H_{k-1}(L) -> ... -> H_0(K, L) -> 0

    over a field, at all the slots up to dimension top_dim (the complexes
    must be enumerated up to top_dim + 1).

    At each slot the composite of the two adjacent maps must vanish, and the
    rank of the incoming map must equal the dimension of the group minus the
    rank of the outgoing one. The witness holds the rank table.
    """
    coeffs.check_field('the exactness check')
    notes = []
    if top_dim > p.max_dim - 1:
        notes.append('top dimension lowered from %d to %d by the enumeration '
                     'cap' % (top_dim, p.max_dim - 1))
        top_dim = p.max_dim - 1
    absolute = xComplexPair(p.total, empty_complex(p.space, p.total.max_dim))
    incl = induced_map(inclusion_map(p.sub, p.total), coeffs, top_dim)
    proj = induced_map(simplicial_map(list(p.space.points()), absolute, p),
                       coeffs, top_dim)
    delta = [connecting_map(p, coeffs, d) for d in range(top_dim + 1)]
    table = []
    failures = []

    def slot(name, incoming, outgoing):
        dim = incoming.shape[0]
        rank_in = rank(incoming)
        rank_out = rank(outgoing)
        row = {'group': name, 'dim': dim, 'rank_in': rank_in,
               'rank_out': rank_out}
        table.append(row)
        if not is_zero(matmul(outgoing, incoming)) or\
           rank_in != dim - rank_out:
            failures.append(name)

    # Above the top slot only the image of the connecting map is needed.
    if top_dim >= 0:
        delta.append(connecting_image(p, coeffs, top_dim + 1))
    for d in range(top_dim + 1):
        slot('H_%d(A)' % d, delta[d + 1], incl.matrix(d))
        slot('H_%d(X)' % d, incl.matrix(d), proj.matrix(d))
        slot('H_%d(X,A)' % d, proj.matrix(d), delta[d])
    passed = not failures
    witness = {'ranks': table}
    if failures:
        witness['failures'] = failures
        logger.info('Long exact sequence not exact at %s.' % failures)
    return xVerdict(passed, witness, notes)
