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


"""Finite point sets, semi-pseudometrics, relations and semi-uniform bases.

Points are always addressed by their index 0...size - 1; labels are for
display only. A relation is the (finite) element U of a semi-uniform
structure: a set of ordered pairs of point indices always containing the
diagonal. A semi-uniform base is a finite, intersection-closed family of such
relations, which is all we need to evaluate the (co)homology limits on a
finite space.
"""


import itertools

import numpy
from scipy.spatial import distance

from xrips.core.verdict import xVerdict
from xrips.utils.logging_ import logger
from xrips.utils.errors import xDuplicateLabelError, xIndexRangeError,\
    xAsymmetricMatrixError, xNonzeroDiagonalError, xNegativeDistanceError,\
    xSpaceMismatchError, xEmptySetError, xNegativeScaleError,\
    xSemiUniformError


"""The two flavors of metric relations: strict (d < q) and closed (d <= q).
"""
METRIC_MODES = ['strict', 'closed']


class xFiniteSpace:

    """A finite set of labeled points.

    Args
    ----
    labels : iterable of str
        The (pairwise distinct) display labels, one per point.
    """

    def __init__(self, labels):
        """Constructor.
        """
        self.labels = tuple(str(label) for label in labels)
        self.size = len(self.labels)
        self._index = {}
        for i, label in enumerate(self.labels):
            if label in self._index:
                raise xDuplicateLabelError('label "%s" appears twice' % label)
            self._index[label] = i

    @classmethod
    def from_size(cls, size):
        """Create a space whose labels are the point indices.
        """
        return cls([str(i) for i in range(size)])

    def index(self, label):
        """Return the index of the point with a given label.
        """
        try:
            return self._index[str(label)]
        except KeyError:
            raise xIndexRangeError('unknown point label "%s"' % label)

    def points(self):
        """Return the range of the point indices.
        """
        return range(self.size)

    def check_index(self, i):
        """Make sure that a point index is valid and return it as an int.
        """
        if isinstance(i, (bool, numpy.bool_)) or\
           not isinstance(i, (int, numpy.integer)):
            raise xIndexRangeError('point index %r is not an integer' % (i,))
        if i < 0 or i >= self.size:
            raise xIndexRangeError('point index %d not in [0, %d)' %\
                                   (i, self.size))
        return int(i)

    def check_indices(self, indices):
        """Validate a set of point indices and return it as a frozenset.
        """
        return frozenset(self.check_index(i) for i in indices)

    def product(self, other):
        """Return the cartesian product with another space.

        Points are indexed in row-major order, i.e., the point (x, y) has
        index x * other.size + y.
        """
        labels = ['(%s,%s)' % (a, b) for a in self.labels for b in other.labels]
        return xFiniteSpace(labels)

    def subspace(self, indices):
        """Return the subspace on a set of points (in increasing index order).
        """
        return xFiniteSpace([self.labels[i] for i in sorted(indices)])

    def __len__(self):
        """Return the number of points.
        """
        return self.size

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xFiniteSpace) and self.labels == other.labels

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __hash__(self):
        """Hash function.
        """
        return hash(self.labels)

    def __str__(self):
        """String formatting.
        """
        return 'Finite space on %d point(s) %s' % (self.size, list(self.labels))


def check_same_space(first, second):
    """Raise an xSpaceMismatchError if two objects do not live on the same
    point set.
    """
    if first.space != second.space:
        raise xSpaceMismatchError('objects live on different spaces (%d vs. '
                                  '%d points)' % (first.space.size,
                                                  second.space.size))


class xSemiPseudometric:

    """A semi-pseudometric on a finite space: a symmetric table of
    non-negative distances vanishing on the diagonal.

    The triangle inequality is not required, and distinct points are allowed
    to be at zero distance.

    Args
    ----
    space : xFiniteSpace
        The underlying point set.

    dist : array-like
        The square table of distances.
    """

    def __init__(self, space, dist):
        """Constructor.
        """
        self.space = space
        dist = numpy.array(dist, dtype=float)
        if dist.shape != (space.size, space.size):
            raise xSpaceMismatchError('distance table shape %s does not match '
                                      'the %d points of the space' %\
                                      (dist.shape, space.size))
        diagonal = numpy.nonzero(numpy.diag(dist))[0]
        if len(diagonal):
            i = int(diagonal[0])
            raise xNonzeroDiagonalError('d(%s, %s) = %s' %\
                                        (space.labels[i], space.labels[i],
                                         dist[i, i]))
        negative = numpy.argwhere(dist < 0)
        if len(negative):
            i, j = negative[0]
            raise xNegativeDistanceError('d(%s, %s) = %s' %\
                                         (space.labels[i], space.labels[j],
                                          dist[i, j]))
        asymmetric = numpy.argwhere(dist != dist.T)
        if len(asymmetric):
            i, j = asymmetric[0]
            raise xAsymmetricMatrixError('d(%s, %s) = %s but d(%s, %s) = %s' %\
                                         (space.labels[i], space.labels[j],
                                          dist[i, j], space.labels[j],
                                          space.labels[i], dist[j, i]))
        dist.flags.writeable = False
        self.dist = dist

    def __call__(self, i, j):
        """Return the distance between two points.
        """
        return float(self.dist[i, j])

    def distances(self):
        """Return the sorted array of the distinct distance values.
        """
        return numpy.unique(self.dist)

    def diameter(self):
        """Return the largest distance.
        """
        return float(self.dist.max())

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xSemiPseudometric) and\
            self.space == other.space and\
            numpy.array_equal(self.dist, other.dist)

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __str__(self):
        """String formatting.
        """
        return 'Semi-pseudometric on %d point(s), diameter %s' %\
            (self.space.size, self.diameter())


def shifted_metric(d, q):
    """Return the semi-pseudometric d_q, i.e., d - q where d > q and 0
    elsewhere.

    The strict relations of d_q at scale r are the strict relations of d at
    scale q + r.
    """
    if q < 0:
        raise xNegativeScaleError('negative scale %s' % q)
    return xSemiPseudometric(d.space, numpy.where(d.dist > q, d.dist - q, 0.))


def closed_metric(d, q):
    """Return the semi-pseudometric d_{<=q}, i.e., d where d > q and 0
    elsewhere.
    """
    if q < 0:
        raise xNegativeScaleError('negative scale %s' % q)
    return xSemiPseudometric(d.space, numpy.where(d.dist > q, d.dist, 0.))


def scale_tolerance(d, q=None):
    """Return half of the smallest positive gap in the multiset of the
    distances of d (with the scale q added to the multiset, if given).

    For any positive delta below this value the strict relation at q + delta
    coincides with the closed relation at q. Return infinity when there is
    no gap at all.
    """
    values = d.distances()
    if q is not None:
        values = numpy.unique(numpy.append(values, float(q)))
    gaps = numpy.diff(values)
    gaps = gaps[gaps > 0]
    if not len(gaps):
        return float('inf')
    return 0.5*float(gaps.min())


def point_cloud_metric(points, labels=None):
    """Return the euclidean metric on a finite point cloud.

    Args
    ----
    points : array-like of shape (n, k)
        The point coordinates.

    labels : list of str, optional
        The point labels (default to the indices).
    """
    points = numpy.atleast_2d(numpy.array(points, dtype=float))
    if labels is None:
        space = xFiniteSpace.from_size(len(points))
    else:
        space = xFiniteSpace(labels)
    dist = distance.squareform(distance.pdist(points))
    return xSemiPseudometric(space, dist)


def circle_metric(num_points, radius=1.):
    """Return the euclidean (chordal) metric on num_points points evenly
    spaced on a circle.
    """
    phi = numpy.linspace(0., 2.*numpy.pi, num_points, endpoint=False)
    points = numpy.vstack((radius*numpy.cos(phi), radius*numpy.sin(phi))).T
    return point_cloud_metric(points)


def interval_metric(num_points):
    """Return the metric on the uniform discretization
    {0, 1/(n - 1), ..., 1} of the unit interval.
    """
    if num_points < 2:
        raise xSemiUniformError('an interval needs at least two points')
    points = numpy.linspace(0., 1., num_points).reshape((num_points, 1))
    return point_cloud_metric(points)


class xRelation:

    """A relation U on a finite space, i.e., a set of ordered pairs of point
    indices.

    The diagonal is always adjoined, whatever the input pairs are, so that
    every relation is a legitimate element of a semi-uniform structure.

    Args
    ----
    space : xFiniteSpace
        The underlying point set.

    pairs : iterable of (int, int)
        The ordered pairs of point indices.
    """

    def __init__(self, space, pairs=()):
        """Constructor.
        """
        self.space = space
        _pairs = set((i, i) for i in space.points())
        for pair in pairs:
            i, j = pair
            _pairs.add((space.check_index(i), space.check_index(j)))
        self.pairs = frozenset(_pairs)
        self._successors = None

    def successors(self, i):
        """Return the set U[i] of the points related to a given one.
        """
        if self._successors is None:
            succ = [set() for i in self.space.points()]
            for (x, y) in self.pairs:
                succ[x].add(y)
            self._successors = tuple(frozenset(s) for s in succ)
        return self._successors[i]

    def off_diagonal(self):
        """Return the sorted list of the pairs (i, j) with i != j.
        """
        return sorted((i, j) for (i, j) in self.pairs if i != j)

    def is_symmetric(self):
        """Return True if (i, j) in U implies (j, i) in U.
        """
        return all((j, i) in self.pairs for (i, j) in self.pairs)

    def __contains__(self, pair):
        """Membership operator.
        """
        return tuple(pair) in self.pairs

    def __iter__(self):
        """Iterate over the pairs in lexicographic order.
        """
        return iter(sorted(self.pairs))

    def __len__(self):
        """Return the number of pairs (diagonal included).
        """
        return len(self.pairs)

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xRelation) and self.space == other.space and\
            self.pairs == other.pairs

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __le__(self, other):
        """Inclusion operator.
        """
        check_same_space(self, other)
        return self.pairs <= other.pairs

    def __lt__(self, other):
        """Strict inclusion operator.
        """
        check_same_space(self, other)
        return self.pairs < other.pairs

    def __hash__(self):
        """Hash function.
        """
        return hash((self.space, self.pairs))

    def __str__(self):
        """String formatting.
        """
        labels = self.space.labels
        text = ', '.join('(%s,%s)' % (labels[i], labels[j]) for (i, j) in\
                         self.off_diagonal())
        return 'Relation on %d point(s): diagonal + {%s}' %\
            (self.space.size, text)


def full_relation(space):
    """Return the full relation X x X.
    """
    return xRelation(space, itertools.product(space.points(), repeat=2))


def diagonal_relation(space):
    """Return the diagonal relation.
    """
    return xRelation(space)


def relation_inverse(u):
    """Return the inverse relation U^-1 = {(y, x) | (x, y) in U}.
    """
    return xRelation(u.space, ((j, i) for (i, j) in u.pairs))


def relation_image(u, a):
    """Return the image U[A] = {y | (x, y) in U for some x in A}.

    Since U contains the diagonal, A is always contained in U[A].
    """
    a = u.space.check_indices(a)
    image = set()
    for x in a:
        image |= u.successors(x)
    return frozenset(image)


def relation_intersect(u, v):
    """Return the intersection of two relations on the same space.
    """
    check_same_space(u, v)
    return xRelation(u.space, u.pairs & v.pairs)


def symmetric_part(u):
    """Return the symmetric part U & U^-1 of a relation.
    """
    return xRelation(u.space, ((i, j) for (i, j) in u.pairs\
                               if (j, i) in u.pairs))


def metric_relation(d, q, mode='closed'):
    """Return the relation of the pairs of points within a given scale.

    Args
    ----
    d : xSemiPseudometric
        The semi-pseudometric.

    q : float
        The scale (non negative).

    mode : 'strict' or 'closed'
        Select {d < q} (strict) or {d <= q} (closed). Distances are compared
        exactly, so ties d = q only make it into the closed relation.
    """
    if q < 0:
        raise xNegativeScaleError('negative scale %s' % q)
    if mode not in METRIC_MODES:
        raise ValueError('unknown metric mode "%s" (allowed: %s)' %\
                         (mode, METRIC_MODES))
    q = float(q)
    if mode == 'strict':
        mask = d.dist < q
    else:
        mask = d.dist <= q
    pairs = [(int(i), int(j)) for (i, j) in numpy.argwhere(mask)]
    return xRelation(d.space, pairs)


def graph_relation(edges, space, directed=False):
    """Return the relation E + diagonal of a (directed) graph.

    Args
    ----
    edges : iterable of (int, int)
        The edges as pairs of point indices.

    space : xFiniteSpace
        The vertex set.

    directed : bool
        If False, every edge is added in both directions.
    """
    pairs = []
    for (i, j) in edges:
        pairs.append((i, j))
        if not directed:
            pairs.append((j, i))
    return xRelation(space, pairs)


def product_relation(u, v):
    """Return the product relation on X x Y (row-major point indexing):
    ((x, y), (x', y')) is related iff (x, x') is in u and (y, y') is in v.
    """
    size = v.space.size
    pairs = [(x*size + y, xp*size + yp) for (x, xp) in u.pairs\
             for (y, yp) in v.pairs]
    return xRelation(u.space.product(v.space), pairs)


def relativize(u, a):
    """Return the relativization U_A = U & (A x A), as a relation on the
    subspace A (reindexed in increasing order of the original indices).
    """
    a = u.space.check_indices(a)
    if not a:
        raise xEmptySetError('cannot relativize to an empty set')
    points = sorted(a)
    position = dict((x, k) for k, x in enumerate(points))
    pairs = [(position[i], position[j]) for (i, j) in u.pairs\
             if i in position and j in position]
    return xRelation(u.space.subspace(points), pairs)


def inclusion_order(members):
    """Return the list of the index pairs (i, j) such that the i-th relation
    of a list is strictly contained in the j-th.
    """
    return [(i, j) for i, u in enumerate(members)\
            for j, v in enumerate(members) if u < v]


def family_summary(members):
    """Return a JSON-friendly summary of a family of relations.
    """
    return {
        'num_members': len(members),
        'member_sizes': [len(u) for u in members],
        'inclusion_order': [list(item) for item in inclusion_order(members)]
    }


class xSemiUniformBase:

    """A finite base for a semi-uniform structure.

    The members are relations on a common space, each containing the diagonal
    (which is granted by construction). By default the family is closed
    under pairwise intersection at construction, which makes it directed
    with respect to the inclusion; with close=False the weaker filter-base
    condition (every pairwise intersection contains a member) is checked
    instead. In both cases the inverse of each member must contain a member.

    Members are stored sorted by size (and lexicographically), with the
    duplicates removed.

    Args
    ----
    space : xFiniteSpace
        The underlying point set.

    members : iterable of xRelation
        The generating relations.

    close : bool
        Close the family under pairwise intersection.
    """

    def __init__(self, space, members, close=True):
        """Constructor.
        """
        self.space = space
        members = set(members)
        if not members:
            raise xSemiUniformError('a semi-uniform base needs at least one '
                                    'member')
        for u in members:
            if u.space != space:
                raise xSpaceMismatchError('base member on a different space')
        if close:
            members = self._intersection_closure(members)
        self.members = tuple(sorted(members,
                                    key=lambda u: (len(u), sorted(u.pairs))))
        if not close:
            self._check_intersections()
        self._check_inverses()

    @staticmethod
    def _intersection_closure(members):
        """Close a family of relations under pairwise intersection.
        """
        closure = set(members)
        frontier = set(members)
        while frontier:
            new = set()
            for u in frontier:
                for v in closure:
                    w = relation_intersect(u, v)
                    if w not in closure:
                        new.add(w)
            closure |= new
            frontier = new
        return closure

    def _check_intersections(self):
        """Make sure every pairwise intersection contains a member.
        """
        for u, v in itertools.combinations(self.members, 2):
            w = relation_intersect(u, v)
            if not any(m <= w for m in self.members):
                raise xSemiUniformError('the intersection of two members does '
                                        'not contain any member')

    def _check_inverses(self):
        """Make sure the inverse of each member contains a member.
        """
        for u in self.members:
            inverse = relation_inverse(u)
            if not any(m <= inverse for m in self.members):
                raise xSemiUniformError('the inverse of a member does not '
                                        'contain any member: %s' % u)

    def minimum(self):
        """Return the member contained in all the others (or None).
        """
        for u in self.members:
            if all(u <= v for v in self.members):
                return u
        return None

    def inclusion_order(self):
        """Return the list of the index pairs (i, j) such that the i-th member
        is strictly contained in the j-th.
        """
        return inclusion_order(self.members)

    def index(self, u):
        """Return the position of a member.
        """
        return self.members.index(u)

    def summary(self):
        """Return a JSON-friendly summary of the base.
        """
        return family_summary(self.members)

    def __iter__(self):
        """Iterate over the members.
        """
        return iter(self.members)

    def __len__(self):
        """Return the number of members.
        """
        return len(self.members)

    def __getitem__(self, i):
        """Return the i-th member.
        """
        return self.members[i]

    def __str__(self):
        """String formatting.
        """
        return 'Semi-uniform base with %d member(s) on %d point(s)' %\
            (len(self.members), self.space.size)


def symmetric_base(b):
    """Return the base formed by the symmetric parts of the members of a
    base (the symmetric members are cofinal in any semi-uniform structure).
    """
    return xSemiUniformBase(b.space, [symmetric_part(u) for u in b])


def scale_base(d, q, deltas):
    """Return the base {d < q + delta} for a list of positive deltas.

    For small enough deltas all the members coincide with the closed
    relation {d <= q}, which is then the minimum of the base.
    """
    deltas = list(deltas)
    if not deltas:
        raise xEmptySetError('no deltas for the scale base')
    if q < 0:
        raise xNegativeScaleError('negative scale %s' % q)
    for delta in deltas:
        if not delta > 0:
            raise xNegativeScaleError('non positive delta %s' % delta)
    members = [metric_relation(d, float(q) + float(delta), 'strict')\
               for delta in deltas]
    return xSemiUniformBase(d.space, members)


def vertex_map(f, domain, codomain):
    """Validate a vertex function between two spaces and return it as a
    tuple of codomain indices.

    Args
    ----
    f : sequence, dict or callable
        The image of each domain point index.
    """
    if callable(f) and not isinstance(f, dict):
        images = [f(i) for i in domain.points()]
    elif isinstance(f, dict):
        try:
            images = [f[i] for i in domain.points()]
        except KeyError as e:
            raise xIndexRangeError('vertex function undefined at %s' % e)
    else:
        images = list(f)
        if len(images) != domain.size:
            raise xIndexRangeError('vertex function defined on %d points, '
                                   'domain has %d' % (len(images), domain.size))
    return tuple(codomain.check_index(j) for j in images)


def check_uniform_continuity(f, bx, by):
    """Check the uniform continuity of a vertex function between two
    semi-uniform spaces given through their bases.

    f is uniformly continuous iff for every member V of by there is a member
    U of bx such that (i, j) in U implies (f(i), f(j)) in V.

    The witness of a successful check maps the index of each V to the index
    of the largest suitable U; the witness of a failure reports the first
    offending V along with a violating pair for each U.
    """
    f = vertex_map(f, bx.space, by.space)
    choices = {}
    for k, v in enumerate(by):
        violations = {}
        for l, u in reversed(list(enumerate(bx))):
            bad = [(i, j) for (i, j) in sorted(u.pairs)\
                   if (f[i], f[j]) not in v.pairs]
            if not bad:
                choices[k] = l
                break
            violations[l] = bad[0]
        if k not in choices:
            logger.debug('Uniform continuity fails at base member %d.' % k)
            witness = {
                'violating_member': k,
                'violating_relation': v.off_diagonal(),
                'violations': violations
            }
            return xVerdict(False, witness)
    return xVerdict(True, {'choices': choices})


def check_pq_continuity(f, dx, dy, p, q):
    """Check the (p, q)-continuity of a vertex function between two
    semi-pseudometric spaces.

    On finite spaces the epsilon-delta quantifiers collapse, and f is
    (p, q)-continuous iff d_X(x, y) <= p implies d_Y(f(x), f(y)) <= q. This is
    equivalent to the uniform continuity with respect to the semi-uniformities
    induced at scales p and q.
    """
    if p < 0 or q < 0:
        raise xNegativeScaleError('negative scale (p = %s, q = %s)' % (p, q))
    f = numpy.array(vertex_map(f, dx.space, dy.space), dtype=int)
    image = dy.dist[numpy.ix_(f, f)]
    bad = numpy.argwhere((dx.dist <= float(p))*(image > float(q)))
    if len(bad):
        i, j = (int(k) for k in bad[0])
        witness = {'pair': (i, j), 'source_distance': dx(i, j),
                   'target_distance': float(image[i, j])}
        return xVerdict(False, witness)
    return xVerdict(True)
