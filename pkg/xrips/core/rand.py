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


"""Seeded random instances (relations, graphs, metrics, covers, maps and
integer matrices) for the fuzz tests and the verification suites.
"""


import itertools

import numpy

from xrips.core.space import xFiniteSpace, xRelation, xSemiPseudometric,\
    graph_relation, point_cloud_metric
from xrips.core.closure import xCover
from xrips.core.linalg import integer_matrix


class xInstanceGenerator:

    """Random instance generator.

    All the randomness comes from a private numpy.random.RandomState, so that
    the same seed always yields the same sequence of instances.

    Args
    ----
    seed : int, optional
        The random seed.
    """

    def __init__(self, seed=None):
        """Constructor.
        """
        self.seed = seed
        self.rng = numpy.random.RandomState(seed)

    def size(self, low, high):
        """Return a random size in [low, high].
        """
        return int(self.rng.randint(low, high + 1))

    def space(self, n):
        """Return the space on n points labeled by their index.
        """
        return xFiniteSpace.from_size(n)

    def edges(self, n, p=0.5):
        """Return the edges of an Erdos-Renyi random graph on n vertices.
        """
        return [(i, j) for i, j in itertools.combinations(range(n), 2)\
                if self.rng.uniform() < p]

    def graph_relation(self, n, p=0.5):
        """Return the relation of a random graph.
        """
        return graph_relation(self.edges(n, p), self.space(n))

    def relation(self, n, p=0.5, symmetric=True, space=None):
        """Return a random relation on n points.
        """
        if space is None:
            space = self.space(n)
        if symmetric:
            return graph_relation(self.edges(n, p), space)
        pairs = [(i, j) for i in range(n) for j in range(n)\
                 if i != j and self.rng.uniform() < p]
        return xRelation(space, pairs)

    def metric(self, n, max_distance=5, zero_fraction=0.):
        """Return a random semi-pseudometric with small integer distances
        (so that ties are common), not necessarily satisfying the triangle
        inequality.
        """
        dist = self.rng.randint(1, max_distance + 1, size=(n, n)).astype(float)
        dist[self.rng.uniform(size=(n, n)) < zero_fraction] = 0.
        dist = numpy.triu(dist, 1)
        return xSemiPseudometric(self.space(n), dist + dist.T)

    def point_cloud(self, n, dim=2):
        """Return the euclidean metric of n random points in the unit cube.
        """
        return point_cloud_metric(self.rng.uniform(size=(n, dim)))

    def cover(self, n, max_sets, p=0.3):
        """Return a random cover of n points with at most max_sets members,
        all of them non-empty.
        """
        num_sets = self.size(1, max_sets)
        sets = [set() for i in range(num_sets)]
        for x in range(n):
            sets[self.rng.randint(num_sets)].add(x)
            for s in sets:
                if self.rng.uniform() < p:
                    s.add(x)
        sets = [s for s in sets if s]
        return xCover(self.space(n), sets)

    def subsets(self, n, p=0.5):
        """Return two random nested subsets B in A of the n points.
        """
        a = set(x for x in range(n) if self.rng.uniform() < p)
        bset = set(x for x in a if self.rng.uniform() < p)
        return a, bset

    def scales(self, d, num_scales):
        """Return a few random scales for a metric, drawn from its distances
        and the midpoints between consecutive distances.
        """
        values = d.distances()
        candidates = list(values) + list(0.5*(values[1:] + values[:-1]))
        num_scales = min(num_scales, len(candidates))
        choice = self.rng.choice(len(candidates), num_scales, replace=False)
        return sorted(float(candidates[i]) for i in choice)

    def vertex_map(self, n, m):
        """Return a random function from n points to m points.
        """
        return [int(y) for y in self.rng.randint(m, size=n)]

    def integer_matrix(self, rows, cols, low=-9, high=9):
        """Return a random integer matrix with entries in [low, high].
        """
        values = self.rng.randint(low, high + 1, size=(rows, cols))
        return integer_matrix(values.tolist(), (rows, cols))
