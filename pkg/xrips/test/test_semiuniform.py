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



"""Unit tests for the core.semiuniform module.
"""


import unittest

from hypothesis import given, settings, strategies as st

from xrips.core.space import xFiniteSpace, xRelation, xSemiUniformBase,\
    graph_relation, full_relation, point_cloud_metric, circle_metric,\
    scale_base, metric_relation
from xrips.core.closure import xCover, graph_closure_space, cover_base
from xrips.core.complex_ import pair_complex
from xrips.core.linalg import INTEGERS, RATIONALS, xCoefficients
from xrips.core.semiuniform import *
from xrips.utils.errors import xHypothesisError, xNoMinimumError,\
    xNotSymmetricError, xCoefficientError, xContinuityError, xEmptySetError
from xrips.utils.logging_ import suppress_logging
suppress_logging()


def cycle(n):
    """Return the relation of the n-cycle.
    """
    return graph_relation([(i, (i + 1) % n) for i in range(n)],
                          xFiniteSpace.from_size(n))


def square():
    """Return the metric of the four corners of the unit square.
    """
    return point_cloud_metric([[0., 0.], [1., 0.], [1., 1.], [0., 1.]],
                              ['a', 'b', 'c', 'd'])


class TestLimits(unittest.TestCase):

    """Unit test for the evaluation of the limits.
    """

    def test_single_member(self):
        """A base with a single member.
        """
        base = xSemiUniformBase(cycle(4).space, [cycle(4)])
        report = limit_homology(base, coeffs=RATIONALS)
        self.assertEqual(report.minimum_index, 0)
        self.assertEqual(report.result.betti_up_to(2), [1, 1])
        self.assertEqual(report.cohomology.betti_up_to(2), [1, 1])
        self.assertTrue(report.is_stable())
        data = report.as_dict()
        self.assertEqual(data['minimum_size'], len(cycle(4)))
        self.assertIn('cohomology', data)
        self.assertNotIn('cohomology', limit_homology(base).as_dict())

    def test_relative(self):
        """The limit of a pair.
        """
        base = xSemiUniformBase(cycle(4).space, [cycle(4)])
        report = limit_homology(base, a=[0, 1, 2])
        self.assertEqual(report.result.betti_up_to(2), [0, 1])
        report = limit_homology(base, a=[])
        self.assertEqual(report.result.betti_up_to(2), [1, 1])

    def test_stabilization(self):
        """The inclusion of the cycle in the full relation is not an
        isomorphism.
        """
        u = cycle(4)
        base = xSemiUniformBase(u.space, [full_relation(u.space), u])
        report = limit_homology(base)
        self.assertEqual(base[report.minimum_index], u)
        self.assertFalse(report.is_stable())
        self.assertEqual(report.stabilization[0][1]['ranks'][1], 0)
        self.assertEqual(limit_homology(base, stabilization=False)\
                         .stabilization, [])

    def test_no_minimum(self):
        """Two incomparable relations.
        """
        space = xFiniteSpace.from_size(3)
        members = [graph_relation([(0, 1)], space),
                   graph_relation([(1, 2)], space)]
        self.assertEqual(base_minimum(members), None)
        self.assertRaises(xNoMinimumError, limit_homology, members)

    def test_closure_space(self):
        """The 4-cycle closure with the cover by the three-point arcs.
        """
        c = graph_closure_space([(0, 1), (1, 2), (2, 3), (3, 0)],
                                xFiniteSpace(['n', 'e', 's', 'w']))
        arcs = xCover(c.space, [[3, 0, 1], [0, 1, 2], [1, 2, 3], [2, 3, 0]])
        report = limit_homology(cover_base(c, [arcs], 'vietoris'))
        self.assertEqual(report.result.betti_up_to(2), [1, 0])
        report = limit_homology(cover_base(c, [arcs], 'ii'))
        self.assertEqual(report.result.betti_up_to(2), [1, 1])

    def test_circle(self):
        """Twelve points on a circle at scale 0.6.
        """
        d = circle_metric(12)
        report = limit_homology(scale_base(d, 0.6, [0.01, 0.1]))
        self.assertEqual(report.result.betti_up_to(2), [1, 1])
        self.assertTrue(verify_scale_limit(d, 0.6))


class TestAxioms(unittest.TestCase):

    """Unit test for the axiom verification.
    """

    def test_dimension(self):
        """The dimension axiom with all kinds of coefficients.
        """
        for text in ('z', 'q', 'zp:2', 'zp:3'):
            verdict = verify_dimension(xCoefficients.parse(text))
            self.assertTrue(verdict, verdict)
            self.assertEqual(verdict.axiom, 'dimension')
        self.assertEqual(verify_dimension(INTEGERS).notes,
                         ['cohomology checked over q'])

    def test_excision(self):
        """Excising a point of an arc of the 4-cycle.
        """
        base = xSemiUniformBase(cycle(4).space, [cycle(4)])
        verdict = check_excision_hypothesis(base, [0, 1, 2], [1])
        self.assertTrue(verdict)
        self.assertEqual(verdict['member'], 0)
        verdict = verify_excision(base, [0, 1, 2], [1])
        self.assertTrue(verdict, verdict)
        self.assertEqual(verdict['members_checked'], 1)
        self.assertTrue(verify_excision(base, [0, 1, 2], [], RATIONALS))

    def test_excision_hypothesis(self):
        """The neighborhood of B leaks out of A.
        """
        base = xSemiUniformBase(cycle(4).space, [cycle(4)])
        verdict = check_excision_hypothesis(base, [0, 1], [0])
        self.assertFalse(verdict)
        self.assertEqual(verdict['point'], 3)
        self.assertRaises(xHypothesisError, verify_excision, base, [0, 1],
                          [0])
        self.assertRaises(xHypothesisError, check_excision_hypothesis, base,
                          [0], [1])

    def test_excision_whole_space(self):
        """Excising everything.
        """
        base = xSemiUniformBase(cycle(4).space, [cycle(4)])
        self.assertTrue(verify_excision(base, [0, 1, 2, 3], [0, 1, 2, 3]))

    def test_interval(self):
        """The discretized interval, above and below the spacing.
        """
        self.assertTrue(check_interval_acyclic(8, 1.5/7))
        self.assertTrue(check_interval_acyclic(8, 10.))
        verdict = check_interval_acyclic(8, 0.1)
        self.assertFalse(verdict)
        self.assertEqual(verdict['betti'][0], 8)
        self.assertEqual(len(verdict.notes), 1)

    def test_homotopy_cylinder(self):
        """The cylinder over the 4-cycle.
        """
        verdict = verify_homotopy_cylinder(cycle(4), 5, 0.3)
        self.assertTrue(verdict, verdict)
        self.assertEqual(verdict.notes, [])
        directed = xRelation(xFiniteSpace.from_size(2), [(0, 1)])
        self.assertRaises(xNotSymmetricError, verify_homotopy_cylinder,
                          directed, 5, 0.3)
        self.assertRaises(xCoefficientError, verify_homotopy_cylinder,
                          cycle(4), 5, 0.3, INTEGERS)

    def test_relative_cylinder(self):
        """The cylinder over the 4-cycle relative to two of its points.
        """
        for subset in ([0, 2], [0, 1], [0, 1, 2, 3]):
            verdict = verify_homotopy_cylinder(cycle(4), 5, 0.3,
                                               subset=subset)
            self.assertTrue(verdict, verdict)
            self.assertTrue(verdict.instance.endswith('relative to %s' %\
                                                      subset))
        verdict = verify_homotopy_cylinder(cycle(4), 5, 0.2, subset=[0, 2])
        self.assertFalse(verdict)
        self.assertIn('g0', verdict.witness)
        self.assertIn('non_acyclic_carriers', verdict.witness)
        self.assertEqual(len(verdict.notes), 1)
        self.assertRaises(xEmptySetError, verify_homotopy_cylinder, cycle(4),
                          5, 0.3, RATIONALS, 2, [])

    @given(st.integers(1, 3), st.data())
    @settings(max_examples=25, deadline=None)
    def test_relative_cylinder_random(self, n, data):
        """Random relations on few points, relative to a random subset.
        """
        space = xFiniteSpace.from_size(n)
        edges = data.draw(st.lists(st.tuples(st.integers(0, n - 1),
                                             st.integers(0, n - 1))))
        subset = data.draw(st.frozensets(st.integers(0, n - 1), min_size=1))
        u = graph_relation(edges, space)
        self.assertTrue(verify_homotopy_cylinder(u, 4, 0.4, subset=subset))

    def test_homotopic_maps(self):
        """The constant homotopy of the identity.
        """
        n = 4
        h = [x for x in range(4) for t in range(n)]
        verdict = verify_homotopic_maps(h, cycle(4), cycle(4), n, 0.5)
        self.assertTrue(verdict, verdict)

    def test_path_excision(self):
        """Excision on the path a-b-c-d.
        """
        space = xFiniteSpace(['a', 'b', 'c', 'd'])
        base = xSemiUniformBase(space, [graph_relation([(0, 1), (1, 2),
                                                        (2, 3)], space)])
        self.assertTrue(check_excision_hypothesis(base, [0, 1], [0]))
        verdict = check_excision_hypothesis(base, [0, 1], [1])
        self.assertFalse(verdict)
        self.assertEqual(verdict['label'], 'c')
        self.assertTrue(check_excision_hypothesis(base, [0, 1], []))
        self.assertTrue(verify_excision(base, [0, 1], [0]))

    def test_small_cylinders(self):
        """Cylinders over the discrete and the full relation.
        """
        space = xFiniteSpace.from_size(2)
        self.assertTrue(verify_homotopy_cylinder(xRelation(space), 4, 0.4))
        space = xFiniteSpace.from_size(3)
        self.assertTrue(verify_homotopy_cylinder(full_relation(space), 4,
                                                 0.4))
        verdict = verify_homotopy_cylinder(cycle(4), 5, 0.2)
        self.assertEqual(len(verdict.notes), 1)

    def test_dowker_arcs(self):
        """A path cover and the cover of the hexagon by three arcs.
        """
        space = xFiniteSpace.from_size(3)
        self.assertTrue(verify_dowker(xCover(space, [[0, 1], [1, 2]])))
        self.assertTrue(verify_dowker(xCover(space, [[0, 1, 2]])))
        space = xFiniteSpace.from_size(6)
        arcs = xCover(space, [[0, 1, 2], [2, 3, 4], [4, 5, 0]])
        verdict = verify_dowker(arcs, max_dim=2)
        self.assertTrue(verdict, verdict)

    def test_discrete_base(self):
        """The base made of the diagonal only.
        """
        space = xFiniteSpace.from_size(3)
        report = limit_homology(xSemiUniformBase(space, [xRelation(space)]))
        self.assertEqual(report.result.betti, [3, 0, 0])

    def test_dowker(self):
        """Nerve versus Vietoris complex.
        """
        space = xFiniteSpace.from_size(4)
        arcs = xCover(space, [[0, 1], [1, 2], [2, 3], [3, 0]])
        verdict = verify_dowker(arcs)
        self.assertTrue(verdict, verdict)
        self.assertEqual(verdict.notes, [])
        space = xFiniteSpace.from_size(3)
        triangle = xCover(space, [[0, 1], [1, 2], [2, 0]])
        verdict = verify_dowker(triangle)
        self.assertTrue(verdict, verdict)
        self.assertEqual(len(verdict.notes), 1)

    def test_functoriality(self):
        """A rotation followed by a reflection of the 4-cycle.
        """
        base = xSemiUniformBase(cycle(4).space, [cycle(4)])
        verdict = verify_functoriality([1, 2, 3, 0], [0, 3, 2, 1], base,
                                       base, base)
        self.assertTrue(verdict, verdict)
        self.assertRaises(xContinuityError, verify_functoriality,
                          [0, 2, 1, 3], [0, 1, 2, 3], base, base, base)

    def test_exactness(self):
        """Exactness on a base and on an explicit pair.
        """
        base = xSemiUniformBase(cycle(4).space, [cycle(4)])
        self.assertTrue(verify_exactness(base, RATIONALS, 2, [0, 2]))
        self.assertTrue(verify_exactness(base, RATIONALS, 2))
        p = pair_complex(cycle(5), [0, 1], 3)
        verdict = verify_exactness(p, xCoefficients.parse('zp:2'), 2)
        self.assertTrue(verdict, verdict)

    def test_graph(self):
        """The complete graph and the cycle.
        """
        space = xFiniteSpace.from_size(4)
        k4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        self.assertTrue(verify_graph_limit(k4, space))
        self.assertTrue(verify_graph_limit([(0, 1), (1, 2), (2, 3), (3, 0)],
                                           space))
        result = limit_homology(xSemiUniformBase(space, [graph_relation(
            k4, space)]), max_dim=3).result
        self.assertEqual(result.betti, [1, 0, 0, 0])

    def test_scale(self):
        """The square at and around the side length.
        """
        d = square()
        for q in (0.5, 1., 1.2, 1.4142135623730951, 2.):
            verdict = verify_scale_limit(d, q)
            self.assertTrue(verdict, verdict)
        report = limit_homology(scale_base(d, 1., [0.1, 0.2]))
        self.assertEqual(report.minimum, metric_relation(d, 1., 'closed'))
        self.assertEqual(report.result.betti_up_to(2), [1, 1])

    def test_classical(self):
        """Strict versus closed relations.
        """
        d = square()
        verdict = verify_classical_agreement(d, 1.2)
        self.assertTrue(verdict)
        self.assertEqual(verdict.notes, [])
        verdict = verify_classical_agreement(d, 1.)
        self.assertTrue(verdict)
        self.assertEqual(verdict.notes, ['q is a distance, the groups differ'])


if __name__ == '__main__':
    unittest.main()
