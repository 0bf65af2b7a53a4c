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


"""Finite additive (Cech) closure spaces, interiors and covers.

An additive closure operator on a finite set is completely determined by the
closures N(x) = c({x}) of the single points, since c(A) is the union of the
N(x) for x in A. This is the representation used throughout.
"""


import itertools

from xrips.core.space import xRelation, xSemiUniformBase, check_same_space
from xrips.core.verdict import xVerdict
from xrips.utils.logging_ import logger
from xrips.utils.errors import xNotACoverError, xNotInteriorCoverError,\
    xNegativeScaleError, xSemiUniformError


"""The two relations that can be built out of a cover.
"""
COVER_RELATIONS = ['vietoris', 'ii']


class xAdditiveClosure:

    """An additive closure operator on a finite space, given through the
    closures of the single points.

    Each point is adjoined to its own neighborhood, so that the closure is
    always expansive.

    Args
    ----
    space : xFiniteSpace
        The underlying point set.

    nbhds : sequence of index sets
        The closure N(x) of each point x.
    """

    def __init__(self, space, nbhds):
        """Constructor.
        """
        nbhds = list(nbhds)
        if len(nbhds) != space.size:
            raise xNotACoverError('%d neighborhoods given for %d points' %\
                                  (len(nbhds), space.size))
        self.space = space
        self.nbhds = tuple(space.check_indices(n) | frozenset([x]) for x, n in\
                           enumerate(nbhds))

    def __call__(self, a):
        """Shortcut for closure_of_set().
        """
        return closure_of_set(self, a)

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xAdditiveClosure) and\
            self.space == other.space and self.nbhds == other.nbhds

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __hash__(self):
        """Hash function.
        """
        return hash((self.space, self.nbhds))

    def __str__(self):
        """String formatting.
        """
        labels = self.space.labels
        text = '\n'.join('N(%s) = {%s}' % (labels[x],\
                         ','.join(labels[y] for y in sorted(n)))\
                         for x, n in enumerate(self.nbhds))
        return 'Additive closure on %d point(s)\n%s' % (self.space.size, text)


class xCover:

    """A cover of a finite space, i.e., a list of subsets whose union is the
    whole space.

    Whether the cover is an interior cover depends on the closure operator,
    and is checked by is_interior_cover().

    Args
    ----
    space : xFiniteSpace
        The underlying point set.

    sets : iterable of index sets
        The members of the cover.
    """

    def __init__(self, space, sets):
        """Constructor.
        """
        self.space = space
        self.sets = tuple(space.check_indices(s) for s in sets)
        covered = frozenset().union(*self.sets)
        missing = sorted(set(space.points()) - covered)
        if missing:
            raise xNotACoverError('point(s) %s not covered' %\
                                  [space.labels[x] for x in missing])

    def __iter__(self):
        """Iterate over the members.
        """
        return iter(self.sets)

    def __len__(self):
        """Return the number of members.
        """
        return len(self.sets)

    def __getitem__(self, i):
        """Return the i-th member.
        """
        return self.sets[i]

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xCover) and self.space == other.space and\
            self.sets == other.sets

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __hash__(self):
        """Hash function.
        """
        return hash((self.space, self.sets))

    def __str__(self):
        """String formatting.
        """
        labels = self.space.labels
        text = ', '.join('{%s}' % ','.join(labels[x] for x in sorted(s))\
                         for s in self.sets)
        return 'Cover with %d member(s): %s' % (len(self.sets), text)


def discrete_closure(space):
    """Return the discrete closure, with c(A) = A for all A.
    """
    return xAdditiveClosure(space, [[x] for x in space.points()])


def closure_of_set(c, a):
    """Return the closure c(A) as the union of the point neighborhoods.
    """
    a = c.space.check_indices(a)
    return frozenset().union(*[c.nbhds[x] for x in a])


def interior_set(c, a):
    """Return the interior i(A) = X - c(X - A).
    """
    a = c.space.check_indices(a)
    points = frozenset(c.space.points())
    return points - closure_of_set(c, points - a)


def is_interior_cover(c, u):
    """Check whether the interiors of the members of a cover still cover the
    space.

    The witness of a failure lists the uncovered points.
    """
    check_same_space(c, u)
    covered = frozenset().union(*[interior_set(c, s) for s in u])
    uncovered = sorted(set(c.space.points()) - covered)
    if uncovered:
        return xVerdict(False, {'uncovered': uncovered})
    return xVerdict(True)


def is_topological(c):
    """Check whether the closure is idempotent, i.e., c(c({x})) = c({x}) for
    all the points (which is enough for an additive operator).
    """
    for x in c.space.points():
        twice = closure_of_set(c, c.nbhds[x])
        if twice != c.nbhds[x]:
            witness = {'point': x, 'closure': sorted(c.nbhds[x]),
                       'double_closure': sorted(twice)}
            return xVerdict(False, witness)
    return xVerdict(True)


def vietoris_relation(u):
    """Return the Vietoris relation of a cover: the pairs of points lying in a
    common member.
    """
    pairs = set()
    for s in u:
        pairs.update(itertools.product(s, repeat=2))
    return xRelation(u.space, pairs)


def ii_relation(c, u):
    """Return the interior-inclusion relation of an interior cover: the pairs
    (x, y) such that, for some member U, one point is in the interior of U
    and the other is in U.
    """
    check_same_space(c, u)
    verdict = is_interior_cover(c, u)
    if not verdict:
        raise xNotInteriorCoverError('not an interior cover, uncovered '
                                     'point(s) %s' % verdict['uncovered'])
    pairs = set()
    for s in u:
        interior = interior_set(c, s)
        for (x, y) in itertools.product(interior, s):
            pairs.add((x, y))
            pairs.add((y, x))
    return xRelation(u.space, pairs)


def cover_refines(coarse, fine):
    """Check whether every member of the fine cover is contained in some member
    of the coarse one.
    """
    check_same_space(coarse, fine)
    for k, s in enumerate(fine):
        if not any(s <= t for t in coarse):
            return xVerdict(False, {'member': k, 'set': sorted(s)})
    return xVerdict(True)


def cover_meet(u, v):
    """Return the cover of the non-empty pairwise intersections of the members
    of two covers (which refines both).
    """
    check_same_space(u, v)
    sets = []
    for s, t in itertools.product(u, v):
        meet = s & t
        if meet and meet not in sets:
            sets.append(meet)
    return xCover(u.space, sets)


def metric_closure_space(d, r):
    """Return the closure c_r(A) = {x | d(x, A) <= r} of a semi-pseudometric.
    """
    if r < 0:
        raise xNegativeScaleError('negative radius %s' % r)
    nbhds = [[y for y in d.space.points() if d.dist[x, y] <= float(r)]\
             for x in d.space.points()]
    return xAdditiveClosure(d.space, nbhds)


def graph_closure_space(edges, space):
    """Return the closure of a graph, where the closure of a vertex is the
    vertex itself plus its neighbors.

    The edges are read as undirected.
    """
    nbhds = [set([x]) for x in space.points()]
    for (i, j) in edges:
        i, j = space.check_index(i), space.check_index(j)
        nbhds[i].add(j)
        nbhds[j].add(i)
    return xAdditiveClosure(space, nbhds)


def closure_graph_edges(c):
    """Return the list of the directed edges (x, y) with y in N(x), x != y.
    """
    return [(x, y) for x in c.space.points() for y in sorted(c.nbhds[x])\
            if y != x]


def cover_base(c, covers, kind='vietoris'):
    """Return the semi-uniform base generated by the Vietoris (or
    interior-inclusion) relations of a list of interior covers.
    """
    if kind not in COVER_RELATIONS:
        raise ValueError('unknown cover relation "%s" (allowed: %s)' %\
                         (kind, COVER_RELATIONS))
    covers = list(covers)
    if not covers:
        raise xSemiUniformError('no covers for the base')
    members = []
    for u in covers:
        verdict = is_interior_cover(c, u)
        if not verdict:
            if kind == 'ii':
                raise xNotInteriorCoverError('uncovered point(s) %s' %\
                                             verdict['uncovered'])
            logger.warning('%s is not an interior cover.' % u)
        if kind == 'vietoris':
            members.append(vietoris_relation(u))
        else:
            members.append(ii_relation(c, u))
    return xSemiUniformBase(c.space, members)
