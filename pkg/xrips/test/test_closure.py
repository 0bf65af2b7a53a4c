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



"""Unit tests for the core.closure module.
"""


import unittest

from hypothesis import given, settings, strategies as st

from xrips.core.space import xFiniteSpace, full_relation, graph_relation,\
    xSemiPseudometric
from xrips.core.closure import *
from xrips.utils.errors import *
from xrips.utils.logging_ import suppress_logging
suppress_logging()


CYCLE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]


def closures(max_points=5):
    """Hypothesis strategy for small additive closures.
    """
    def build(n):
        return st.lists(subsets(n), min_size=n, max_size=n).map(
            lambda nbhds: xAdditiveClosure(xFiniteSpace.from_size(n), nbhds))
    return st.integers(1, max_points).flatmap(build)


def subsets(n):
    """Hypothesis strategy for the subsets of the first n points.
    """
    return st.frozensets(st.integers(0, n - 1))


def reaching(c, x):
    """Return the points whose closure contains x.

    A set has x in its interior exactly when it contains all of them.
    """
    return frozenset(y for y in c.space.points() if x in c.nbhds[y])


def interior_covers(c):
    """Hypothesis strategy for the interior covers of a closure space, made of
    one member per point, each containing the points reaching it.
    """
    n = c.space.size
    return st.lists(subsets(n), min_size=n, max_size=n).map(
        lambda extra: xCover(c.space, [reaching(c, x) | extra[x]\
                                       for x in c.space.points()]))


class TestClosure(unittest.TestCase):

    """Unit test for the closure operators.
    """

    def setUp(self):
        """Setup: the closure of the 4-cycle, and the cover by the arcs of
        three consecutive vertices.
        """
        self.space = xFiniteSpace(['n', 'e', 's', 'w'])
        self.c = graph_closure_space(CYCLE_EDGES, self.space)
        self.arcs = xCover(self.space, [[3, 0, 1], [0, 1, 2], [1, 2, 3],
                                        [2, 3, 0]])
        self.pairs = xCover(self.space, [[0, 1], [1, 2], [2, 3], [3, 0]])

    def test_closure_interior(self):
        """Closure and interior of sets.
        """
        self.assertEqual(self.c([0]), frozenset([3, 0, 1]))
        self.assertEqual(self.c([]), frozenset())
        self.assertEqual(interior_set(self.c, [3, 0, 1]), frozenset([0]))
        self.assertEqual(interior_set(self.c, [0, 1]), frozenset())
        d = discrete_closure(self.space)
        self.assertEqual(d([1, 2]), frozenset([1, 2]))
        self.assertTrue(is_topological(d))

    def test_topological(self):
        """The closure of a cycle is not idempotent.
        """
        verdict = is_topological(self.c)
        self.assertFalse(verdict)
        self.assertEqual(verdict['point'], 0)
        self.assertEqual(verdict['double_closure'], [0, 1, 2, 3])

    def test_interior_cover(self):
        """The arcs form an interior cover, the edges do not.
        """
        self.assertTrue(is_interior_cover(self.c, self.arcs))
        verdict = is_interior_cover(self.c, self.pairs)
        self.assertFalse(verdict)
        self.assertEqual(verdict['uncovered'], [0, 1, 2, 3])

    def test_relations(self):
        """The Vietoris relation of the arcs is full, the interior-inclusion
        relation is the cycle.
        """
        self.assertEqual(vietoris_relation(self.arcs), full_relation(self.space))
        self.assertEqual(ii_relation(self.c, self.arcs),
                         graph_relation(CYCLE_EDGES, self.space))
        self.assertRaises(xNotInteriorCoverError, ii_relation, self.c,
                          self.pairs)

    def test_cover_base(self):
        """Bases generated by covers.
        """
        base = cover_base(self.c, [self.arcs], 'ii')
        self.assertEqual(base.minimum(), graph_relation(CYCLE_EDGES, self.space))
        self.assertRaises(xNotInteriorCoverError, cover_base, self.c,
                          [self.pairs], 'ii')
        base = cover_base(self.c, [self.arcs, self.pairs], 'vietoris')
        self.assertEqual(base.minimum(), graph_relation(CYCLE_EDGES, self.space))
        self.assertRaises(xSemiUniformError, cover_base, self.c, [])
        self.assertRaises(ValueError, cover_base, self.c, [self.arcs], 'cech')

    def test_refinement(self):
        """The meet refines both covers.
        """
        meet = cover_meet(self.arcs, self.pairs)
        self.assertTrue(cover_refines(self.arcs, meet))
        self.assertTrue(cover_refines(self.pairs, meet))
        verdict = cover_refines(self.pairs, self.arcs)
        self.assertFalse(verdict)
        self.assertEqual(verdict['member'], 0)

    def test_not_a_cover(self):
        """Covers must cover.
        """
        self.assertRaises(xNotACoverError, xCover, self.space, [[0, 1]])
        self.assertRaises(xNotACoverError, xAdditiveClosure, self.space, [[0]])
        self.assertRaises(xIndexRangeError, xCover, self.space, [[0, 1, 2, 7]])

    def test_metric_closure(self):
        """Closure of a semi-pseudometric.
        """
        d = xSemiPseudometric(xFiniteSpace.from_size(3),
                              [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        c = metric_closure_space(d, 1)
        self.assertEqual(c([0]), frozenset([0, 1]))
        self.assertEqual(c([1]), frozenset([0, 1, 2]))
        self.assertRaises(xNegativeScaleError, metric_closure_space, d, -1)

    @given(closures())
    @settings(deadline=None)
    def test_graph_round_trip(self, c):
        """The graph of a closure gives the closure back when symmetric, and
        its symmetrization otherwise.
        """
        edges = closure_graph_edges(c)
        back = graph_closure_space(edges, c.space)
        self.assertTrue(all(n <= m for n, m in zip(c.nbhds, back.nbhds)))
        if all((y, x) in edges for (x, y) in edges):
            self.assertEqual(back, c)

    @given(st.data())
    @settings(deadline=None)
    def test_meet_of_interior_covers(self, data):
        """The meet of two interior covers is an interior cover.
        """
        c = data.draw(closures())
        first = data.draw(interior_covers(c))
        second = data.draw(interior_covers(c))
        self.assertTrue(is_interior_cover(c, first))
        self.assertTrue(is_interior_cover(c, second))
        meet = cover_meet(first, second)
        self.assertTrue(is_interior_cover(c, meet))
        self.assertTrue(cover_refines(first, meet))
        self.assertTrue(cover_refines(second, meet))


class TestClosureProperties(unittest.TestCase):

    """Property tests for the interior operator and the cover relations.
    """

    @given(st.data())
    @settings(deadline=None)
    def test_interior_monotone(self, data):
        """i(A) is contained in A, and i is monotone.
        """
        c = data.draw(closures())
        a = data.draw(subsets(c.space.size))
        b = data.draw(st.sets(st.sampled_from(sorted(a)))) if a else set()
        self.assertTrue(interior_set(c, a) <= a)
        self.assertTrue(interior_set(c, b) <= interior_set(c, a))

    @given(st.data())
    @settings(deadline=None)
    def test_interior_of_intersection(self, data):
        """A point interior to both U and V is interior to their
        intersection.
        """
        c = data.draw(closures())
        u = data.draw(subsets(c.space.size))
        v = data.draw(subsets(c.space.size))
        both = interior_set(c, u) & interior_set(c, v)
        self.assertTrue(both <= interior_set(c, u & v))

    @given(st.data())
    @settings(deadline=None)
    def test_interior_cover_by_construction(self, data):
        """A set containing all the points whose neighborhood reaches x has x
        in its interior.
        """
        c = data.draw(closures())
        for x in c.space.points():
            self.assertIn(x, interior_set(c, reaching(c, x)))
        self.assertTrue(is_interior_cover(c, data.draw(interior_covers(c))))

    @given(st.data())
    @settings(deadline=None)
    def test_refinement_shrinks_relations(self, data):
        """Refining a cover shrinks both the Vietoris and the
        interior-inclusion relations.
        """
        c = data.draw(closures())
        coarse = data.draw(interior_covers(c))
        finest = xCover(c.space, [reaching(c, x) for x in c.space.points()])
        for fine in [finest, cover_meet(coarse, data.draw(interior_covers(c)))]:
            self.assertTrue(cover_refines(coarse, fine))
            self.assertTrue(vietoris_relation(fine) <=\
                            vietoris_relation(coarse))
            self.assertTrue(ii_relation(c, fine) <= ii_relation(c, coarse))

    @given(st.data())
    @settings(deadline=None)
    def test_ii_within_vietoris(self, data):
        """The interior-inclusion relation is contained in the Vietoris one.
        """
        c = data.draw(closures())
        u = data.draw(interior_covers(c))
        self.assertTrue(ii_relation(c, u) <= vietoris_relation(u))

    @given(st.data())
    @settings(deadline=None)
    def test_discrete_relations_agree(self, data):
        """For the discrete closure every cover is an interior cover, and
        the two cover relations coincide.
        """
        n = data.draw(st.integers(1, 5))
        c = discrete_closure(xFiniteSpace.from_size(n))
        sets = data.draw(st.lists(subsets(n), max_size=4))
        u = xCover(c.space, sets + [[x] for x in c.space.points()])
        self.assertTrue(is_interior_cover(c, u))
        self.assertEqual(ii_relation(c, u), vietoris_relation(u))


if __name__ == '__main__':
    unittest.main()
