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



"""Unit tests for the core.homology module.
"""


import itertools
import unittest

from hypothesis import given, settings, strategies as st

from xrips.core.space import xFiniteSpace, xRelation, graph_relation,\
    metric_relation, circle_metric
from xrips.core.complex_ import xComplexPair, clique_complex,\
    vietoris_rips_complex, pair_complex, complex_from_maximal_simplices,\
    simplicial_map, identity_map, inclusion_map, are_contiguous
from xrips.core.linalg import INTEGERS, RATIONALS, xCoefficients, matmul,\
    is_zero, entries, rank
from xrips.core.homology import *
from xrips.utils.errors import xCoefficientError
from xrips.utils.logging_ import suppress_logging
suppress_logging()


F2 = xCoefficients.parse('zp:2')
F3 = xCoefficients.parse('zp:3')

PROJECTIVE_PLANE = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
                    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]


def symmetric_relations(max_points=6):
    """Hypothesis strategy for small symmetric relations.
    """
    def build(n):
        pairs = list(itertools.combinations(range(n), 2))
        mask = st.lists(st.booleans(), min_size=len(pairs),
                        max_size=len(pairs))
        return mask.map(lambda m: graph_relation(
            [p for p, keep in zip(pairs, m) if keep],
            xFiniteSpace.from_size(n)))
    return st.integers(1, max_points).flatmap(build)


def point_pairs(n, max_size=4):
    """Hypothesis strategy for a few pairs of points among the first n.
    """
    return st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                    max_size=max_size)


def symmetrize(pairs):
    """Return the pairs together with their reverses.
    """
    return list(pairs) + [(j, i) for (i, j) in pairs]


def cycle(n):
    """Return the relation of the n-cycle.
    """
    return graph_relation([(i, (i + 1) % n) for i in range(n)],
                          xFiniteSpace.from_size(n))


class TestHomology(unittest.TestCase):

    """Unit test for the homology computation.
    """

    def test_point(self):
        """The one-point space.
        """
        k = clique_complex(xRelation(xFiniteSpace.from_size(1)), 2)
        for coeffs in (INTEGERS, RATIONALS, F2):
            result = homology(k, coeffs)
            self.assertEqual(result.betti, [1, 0, 0])
            self.assertFalse(any(result.torsion))
        self.assertEqual(homology(k, reduced=True).betti, [0, 0, 0])
        self.assertTrue(homology(k, reduced=True).is_acyclic())

    def test_cycle(self):
        """The 4-cycle is a circle.
        """
        k = clique_complex(cycle(4), 2)
        result = homology(k)
        self.assertEqual(result.betti, [1, 1, 0])
        self.assertEqual(result.truncated, [])
        self.assertEqual(cohomology(k, RATIONALS).betti, [1, 1, 0])
        self.assertRaises(xCoefficientError, cohomology, k, INTEGERS)

    def test_truncation(self):
        """The top dimension is flagged when the cap cuts the complex.
        """
        k = clique_complex(graph_relation(itertools.combinations(range(4), 2),
                                          xFiniteSpace.from_size(4)), 1)
        result = homology(k)
        self.assertEqual(result.truncated, [1])
        self.assertEqual(result.betti_up_to(1), [1])

    def test_projective_plane(self):
        """Torsion in the first homology of the projective plane.
        """
        k = complex_from_maximal_simplices(xFiniteSpace.from_size(6),
                                           PROJECTIVE_PLANE, 2)
        self.assertEqual(k.euler_characteristic(), 1)
        result = homology(k, INTEGERS)
        self.assertEqual(result.betti, [1, 0, 0])
        self.assertEqual(result.torsion, [[], [2], []])
        self.assertEqual(homology(k, F2).betti, [1, 1, 1])
        self.assertEqual(homology(k, F3).betti, [1, 0, 0])
        self.assertEqual(cohomology(k, F2).betti, [1, 1, 1])

    def test_sphere(self):
        """The boundary of the tetrahedron.
        """
        k = complex_from_maximal_simplices(xFiniteSpace.from_size(4),
            itertools.combinations(range(4), 3), 3)
        self.assertEqual(homology(k).betti, [1, 0, 1, 0])

    def test_circle_recovery(self):
        """Twelve points on the unit circle at scale 0.6.
        """
        u = metric_relation(circle_metric(12), 0.6, 'closed')
        self.assertEqual(u, cycle(12))
        self.assertEqual(homology(clique_complex(u, 2)).betti_up_to(2), [1, 1])

    def test_relative(self):
        """The 4-cycle relative to an arc.
        """
        p = pair_complex(cycle(4), [0, 1, 2], 2)
        result = homology(p)
        self.assertEqual(result.betti_up_to(2), [0, 1])
        k = clique_complex(cycle(4), 2)
        empty = xComplexPair(k, empty_complex(k.space, 2))
        self.assertEqual(homology(empty), homology(k))
        self.assertEqual(homology(empty, reduced=True).betti, [0, 1, 0])

    def test_generators(self):
        """The generator of the first homology of the 4-cycle.
        """
        k = clique_complex(cycle(4), 2)
        for coeffs in (INTEGERS, RATIONALS):
            gens = homology(k, coeffs, generators=True).generators
            self.assertEqual(len(gens[0]), 1)
            self.assertEqual(len(gens[1]), 1)
            chain = gens[1][0]
            self.assertEqual(len(chain), 4)
            self.assertTrue(all(abs(x) == 1 for s, x in chain))
        gens = cohomology(k, RATIONALS, generators=True).generators
        self.assertEqual(len(gens[1]), 1)

    def test_as_dict(self):
        """JSON-friendly representation.
        """
        data = homology(clique_complex(cycle(4), 2), generators=True).as_dict()
        self.assertEqual(data['coefficients'], 'z')
        self.assertEqual(data['betti'], [1, 1, 0])
        self.assertEqual(len(data['generators'][1]), 1)

    @given(symmetric_relations())
    @settings(max_examples=30, deadline=None)
    def test_boundary_squared(self, u):
        """The boundary of a boundary vanishes.
        """
        ms = boundary_matrices(clique_complex(u, 3))
        for a, b in zip(ms[:-1], ms[1:]):
            self.assertTrue(is_zero(matmul(a, b)))

    @given(symmetric_relations())
    @settings(max_examples=30, deadline=None)
    def test_euler_characteristic(self, u):
        """Euler-Poincare formula on complete complexes.
        """
        k = clique_complex(u, 5)
        betti = homology(k, RATIONALS).betti
        self.assertEqual(sum((-1)**d*b for d, b in enumerate(betti)),
                         k.euler_characteristic())

    @given(symmetric_relations())
    @settings(max_examples=30, deadline=None)
    def test_universal_coefficients(self, u):
        """Betti numbers mod 2 from the integral homology.
        """
        k = clique_complex(u, 5)
        integral = homology(k, INTEGERS)
        mod2 = homology(k, F2)
        for d in range(k.max_dim + 1):
            even = lambda ts: len([t for t in ts if t % 2 == 0])
            expected = integral.betti[d] + even(integral.torsion[d])
            if d > 0:
                expected += even(integral.torsion[d - 1])
            self.assertEqual(mod2.betti[d], expected)

    @given(symmetric_relations())
    @settings(max_examples=30, deadline=None)
    def test_duality(self, u):
        """Homology and cohomology over a field have the same dimensions.
        """
        k = clique_complex(u, 3)
        self.assertEqual(homology(k, RATIONALS).betti,
                         cohomology(k, RATIONALS).betti)


class TestInducedMaps(unittest.TestCase):

    """Unit test for the induced maps and the long exact sequence.
    """

    def setUp(self):
        """Setup.
        """
        self.k = clique_complex(cycle(4), 2)

    def test_rotation_reflection(self):
        """Rotations preserve the orientation of the cycle, reflections
        reverse it.
        """
        rotation = induced_map(simplicial_map([1, 2, 3, 0], self.k, self.k),
                               RATIONALS, 1)
        self.assertTrue(rotation.is_identity())
        reflection = induced_map(simplicial_map([0, 3, 2, 1], self.k, self.k),
                                 RATIONALS, 1)
        self.assertEqual([[RATIONALS.to_python(x) for x in row] for row in
                          entries(reflection.matrix(1))], [[-1]])
        self.assertTrue(reflection.is_isomorphism(1))
        self.assertTrue(reflection.compose(reflection).is_identity())
        self.assertEqual(induced_map(identity_map(self.k), RATIONALS, 1),
                         reflection.compose(reflection))

    def test_fold(self):
        """Folding the cycle onto an edge kills the first homology.
        """
        edge = clique_complex(graph_relation([(0, 1)],
                                             xFiniteSpace.from_size(2)), 2)
        fold = induced_map(simplicial_map([0, 1, 0, 1], self.k, edge),
                           RATIONALS)
        self.assertEqual(fold.ranks(), [1, 0, 0])
        self.assertFalse(fold.is_isomorphism(1))
        self.assertRaises(xCoefficientError, induced_map,
                          identity_map(self.k), INTEGERS)

    @given(symmetric_relations(5), st.data())
    @settings(max_examples=40, deadline=None)
    def test_contiguous_maps(self, u, data):
        """Contiguous maps induce the same maps in homology.
        """
        n = u.space.size
        m = data.draw(st.integers(1, 5))
        f = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
        g = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
        pairs = data.draw(point_pairs(m))
        for (x, y) in u.pairs:
            pairs += [(a[x], b[y]) for a in (f, g) for b in (f, g)]
        v = xRelation(xFiniteSpace.from_size(m), symmetrize(pairs))
        source = clique_complex(u, 2)
        target = clique_complex(v, 4)
        fmap = simplicial_map(f, source, target)
        gmap = simplicial_map(g, source, target)
        self.assertTrue(are_contiguous(fmap, gmap))
        for coeffs in (RATIONALS, F3):
            self.assertEqual(induced_map(fmap, coeffs),
                             induced_map(gmap, coeffs))

    @given(symmetric_relations(5), st.data())
    @settings(max_examples=40, deadline=None)
    def test_naturality_square(self, u, data):
        """Enlarging the relations on both sides commutes with the induced
        maps.
        """
        n = u.space.size
        larger_u = xRelation(u.space, list(u.pairs) +\
                             symmetrize(data.draw(point_pairs(n))))
        m = data.draw(st.integers(1, 5))
        target = xFiniteSpace.from_size(m)
        f = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
        v = xRelation(target, [(f[x], f[y]) for (x, y) in u.pairs] +\
                      symmetrize(data.draw(point_pairs(m))))
        larger_v = xRelation(target, list(v.pairs) +\
                             [(f[x], f[y]) for (x, y) in larger_u.pairs] +\
                             symmetrize(data.draw(point_pairs(m))))
        k, larger_k = clique_complex(u, 2), clique_complex(larger_u, 2)
        h, larger_h = clique_complex(v, 2), clique_complex(larger_v, 2)
        first_map = induced_map(inclusion_map(h, larger_h), RATIONALS).compose(
            induced_map(simplicial_map(f, k, h), RATIONALS))
        first_inclusion = induced_map(simplicial_map(f, larger_k, larger_h),
                                      RATIONALS).compose(
            induced_map(inclusion_map(k, larger_k), RATIONALS))
        self.assertEqual(first_map, first_inclusion)

    def test_connecting_map(self):
        """The circle relative to two antipodal points.
        """
        p = pair_complex(cycle(4), [0, 2], 2)
        self.assertEqual(homology(p, RATIONALS).betti_up_to(2), [0, 2])
        delta = connecting_map(p, RATIONALS, 1)
        self.assertEqual(delta.shape, (2, 2))
        self.assertEqual(rank(delta), 1)
        self.assertEqual(connecting_map(p, RATIONALS, 0).shape[0], 0)

    def test_exactness(self):
        """The long exact sequence of a few pairs.
        """
        for a in ([0], [0, 2], [0, 1, 2]):
            p = pair_complex(cycle(4), a, 3)
            verdict = check_les_exactness(p, RATIONALS, 2)
            self.assertTrue(verdict, verdict)
            self.assertEqual(verdict.notes, [])
        verdict = check_les_exactness(pair_complex(cycle(4), [0], 2),
                                      RATIONALS, 2)
        self.assertTrue(verdict)
        self.assertEqual(len(verdict.notes), 1)

    def test_exactness_at_the_top(self):
        """The filled triangle relative to its boundary: the top slot of the
        subcomplex is reached by the connecting map alone.
        """
        space = xFiniteSpace.from_size(3)
        total = complex_from_maximal_simplices(space, [(0, 1, 2)], 2)
        sub = complex_from_maximal_simplices(space, [(0, 1), (1, 2), (0, 2)],
                                             2)
        p = xComplexPair(total, sub)
        image = connecting_image(p, RATIONALS, 2)
        self.assertEqual(image.shape[0], 1)
        self.assertEqual(rank(image), 1)
        verdict = check_les_exactness(p, RATIONALS, 1)
        self.assertTrue(verdict, verdict)
        groups = [row['group'] for row in verdict['ranks']]
        self.assertEqual(groups, ['H_0(A)', 'H_0(X)', 'H_0(X,A)',
                                  'H_1(A)', 'H_1(X)', 'H_1(X,A)'])
        top = verdict['ranks'][3]
        self.assertEqual((top['dim'], top['rank_in'], top['rank_out']),
                         (1, 1, 0))
        self.assertRaises(ValueError, connecting_image, p, RATIONALS, 3)
        self.assertRaises(xCoefficientError, connecting_image, p, INTEGERS, 2)

    @given(symmetric_relations(5), st.data())
    @settings(max_examples=40, deadline=None)
    def test_exactness_random_pairs(self, u, data):
        """The long exact sequence of a random pair is exact at every slot,
        and the connecting map and its image span the same space.
        """
        n = u.space.size
        a = data.draw(st.frozensets(st.integers(0, n - 1), min_size=1))
        p = pair_complex(u, a, 3)
        verdict = check_les_exactness(p, RATIONALS, 2)
        self.assertTrue(verdict, verdict)
        self.assertEqual(len(verdict['ranks']), 9)
        for d in (1, 2):
            self.assertEqual(rank(connecting_map(p, RATIONALS, d)),
                             rank(connecting_image(p, RATIONALS, d)))


if __name__ == '__main__':
    unittest.main()
