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


"""Vietoris-Rips (co)homology of finite semi-uniform spaces and mechanical
verification of the homology axioms on concrete instances.

On a finite space a semi-uniform base always has a smallest member as soon
as it is closed under intersection, and the inverse (direct) system of the
(co)homology groups is then eventually constant: the limits are simply the
groups at the smallest member. No attempt is made at evaluating genuine
infinite limits.
"""


import networkx
import numpy

from xrips.core.space import xFiniteSpace, xRelation, xSemiUniformBase,\
    family_summary, relation_image, relativize, symmetric_part,\
    metric_relation, graph_relation, product_relation, interval_metric,\
    scale_base, scale_tolerance, check_uniform_continuity, vertex_map
from xrips.core.closure import vietoris_relation
from xrips.core.complex_ import xComplexPair,\
    vietoris_rips_complex, clique_complex, pair_complex, nerve_of_cover,\
    cover_complex, simplicial_map, identity_map, complex_from_maximal_simplices
from xrips.core.homology import homology, cohomology, induced_map,\
    check_les_exactness, empty_complex
from xrips.core.linalg import INTEGERS, RATIONALS
from xrips.core.verdict import xVerdict, xAxiomVerdict
from xrips.utils.logging_ import logger
from xrips.utils.errors import xNoMinimumError, xHypothesisError,\
    xNotSymmetricError, xContinuityError


class xLimitReport:

    """The (co)homology limits over a semi-uniform base, evaluated at its
    smallest member.

    Args
    ----
    base_summary : dict
        Member count, sizes and inclusion order of the base.

    minimum_index : int
        The position of the smallest member in the base.

    minimum : xRelation
        The smallest member.

    result : xHomologyResult
        The homology at the smallest member (i.e., the inverse limit).

    cohomology : xHomologyResult or None
        The cohomology at the smallest member (i.e., the direct limit), for
        field coefficients.

    stabilization : list of (int, xVerdict)
        For each other member, whether the inclusion of the smallest member
        induces isomorphisms.
    """

    def __init__(self, base_summary, minimum_index, minimum, result,
                 cohomology=None, stabilization=None):
        """Constructor.
        """
        self.base_summary = base_summary
        self.minimum_index = minimum_index
        self.minimum = minimum
        self.result = result
        self.cohomology = cohomology
        self.stabilization = list(stabilization or [])

    def is_stable(self):
        """Return True if all the inclusion-induced maps are isomorphisms.
        """
        return all(verdict.passed for index, verdict in self.stabilization)

    def as_dict(self):
        """Return a JSON-friendly representation.
        """
        data = {
            'base': self.base_summary,
            'minimum_index': self.minimum_index,
            'minimum_size': len(self.minimum),
            'homology': self.result.as_dict(),
            'stabilization': [{'member': index, 'stable': verdict.passed}\
                              for index, verdict in self.stabilization]
        }
        if self.cohomology is not None:
            data['cohomology'] = self.cohomology.as_dict()
        return data

    def __str__(self):
        """String formatting.
        """
        text = 'Limit over %d member(s), minimum #%d: %s' %\
            (self.base_summary['num_members'], self.minimum_index,
             self.result)
        if self.cohomology is not None:
            text += '\n%s' % self.cohomology
        return text


def base_minimum(members):
    """Return the index of the member contained in all the others, or None.
    """
    for i, u in enumerate(members):
        if all(u <= v for v in members):
            return i
    return None


def _complex(u, a, max_dim):
    """Return the complex of a relation, or the pair complex when a subset is
    given (an empty subset gives the pair with the empty subcomplex).
    """
    if a is None:
        return vietoris_rips_complex(u, max_dim)
    a = u.space.check_indices(a)
    if not a:
        total = vietoris_rips_complex(u, max_dim)
        return xComplexPair(total, empty_complex(u.space, max_dim))
    return pair_complex(u, a, max_dim)


def limit_homology(b, a=None, coeffs=INTEGERS, max_dim=2, stabilization=True,
                   generators=False):
    """Evaluate the Vietoris-Rips (co)homology of a finite semi-uniform space
    (or pair) through a base of the structure.

    Args
    ----
    b : xSemiUniformBase or list of xRelation
        The base (a plain list of relations is accepted as well, in which
        case it is not guaranteed to have a smallest member).

    a : index set, optional
        The subspace A for the relative groups.

    coeffs : xCoefficients
        The coefficients.

    max_dim : int
        The enumeration cap of the complexes.

    stabilization : bool
        Check that the inclusion of the smallest member in every other member
        induces isomorphisms in dimension 0...max_dim - 1.
    """
    members = list(b)
    index = base_minimum(members)
    if index is None:
        raise xNoMinimumError('the base has no smallest member, limit not '
                              'evaluated')
    minimum = members[index]
    logger.debug('Evaluating the limit at member #%d (%d pairs).' %\
                 (index, len(minimum)))
    k = _complex(minimum, a, max_dim)
    result = homology(k, coeffs, generators=generators)
    cohom = None
    if coeffs.is_field:
        cohom = cohomology(k, coeffs, generators=generators)
    field = coeffs if coeffs.is_field else RATIONALS
    checks = []
    if stabilization:
        for i, u in enumerate(members):
            if i == index or u == minimum:
                continue
            target = _complex(u, a, max_dim)
            f = simplicial_map(list(u.space.points()), k, target)
            m = induced_map(f, field, max_dim - 1)
            stable = all(m.is_isomorphism(d) for d in range(m.num_dims()))
            if stable:
                checks.append((i, xVerdict(True)))
            else:
                checks.append((i, xVerdict(False, {'ranks': m.ranks()})))
    summary = family_summary(members)
    return xLimitReport(summary, index, minimum, result, cohom, checks)


def _space_description(space):
    """Short description of a space, for the verdicts.
    """
    return '%d-point space' % space.size


def verify_dimension(coeffs=INTEGERS, max_dim=2):
    """Verify the dimension axiom: the one-point space has the homology (and
    cohomology) of a point.
    """
    space = xFiniteSpace.from_size(1)
    base = xSemiUniformBase(space, [xRelation(space)])
    report = limit_homology(base, coeffs=coeffs, max_dim=max_dim)
    expected = [1] + [0]*max_dim
    notes = []
    witness = {}
    if report.result.betti != expected or any(report.result.torsion):
        witness['homology'] = report.result
    cohom = report.cohomology
    if cohom is None:
        cohom = cohomology(_complex(base.minimum(), None, max_dim), RATIONALS)
        notes.append('cohomology checked over q')
    if cohom.betti != expected:
        witness['cohomology'] = cohom
    instance = 'one-point space over %s' % coeffs
    return xAxiomVerdict('dimension', instance, not witness, witness, notes)


def check_excision_hypothesis(b, a, bset):
    """Check the excision hypothesis U[B] in A.

    The check passes iff some member W is such that U[B] is contained in A
    for all the members U contained in W; the witness of a success is the
    largest such W, the witness of a failure is a point of U[B] - A for the
    smallest member U.
    """
    a = b.space.check_indices(a)
    bset = b.space.check_indices(bset)
    if not bset <= a:
        raise xHypothesisError('B is not contained in A')
    members = list(b)
    good = [relation_image(u, bset) <= a for u in members]
    candidates = [w for w in range(len(members)) if\
                  all(good[i] for i, u in enumerate(members)\
                      if u <= members[w])]
    if candidates:
        w = max(candidates, key=lambda i: (len(members[i]), -i))
        return xVerdict(True, {'member': w})
    i = min(range(len(members)), key=lambda i: (len(members[i]), i))
    points = sorted(relation_image(members[i], bset) - a)
    witness = {'member': i, 'point': points[0],
               'label': b.space.labels[points[0]]}
    return xVerdict(False, witness)


def _excised_pair(u, a, bset, max_dim):
    """Return the pair (X - B, A - B) with the relativized relation, or None
    when X - B is empty.
    """
    rest = sorted(set(u.space.points()) - bset)
    if not rest:
        return None
    position = dict((x, i) for i, x in enumerate(rest))
    local = relativize(u, rest)
    return _complex(local, [position[x] for x in a - bset], max_dim)


def verify_excision(b, a, bset, coeffs=INTEGERS, max_dim=3):
    """Verify the excision axiom: under the hypothesis U[B] in A, the pairs
    (X - B, A - B) and (X, A) have the same homology.

    The groups are compared, in dimension 0...max_dim - 1, for the symmetric
    part of each member below the member W found by
    check_excision_hypothesis().
    """
    a = b.space.check_indices(a)
    bset = b.space.check_indices(bset)
    hypothesis = check_excision_hypothesis(b, a, bset)
    if not hypothesis:
        raise xHypothesisError('excision hypothesis violated: %s' % hypothesis)
    w = b[hypothesis['member']]
    relations = []
    for u in b:
        if u <= w and symmetric_part(u) not in relations:
            relations.append(symmetric_part(u))
    instance = 'A = %s, B = %s on a %s' % (sorted(a), sorted(bset),
                                           _space_description(b.space))
    for i, u in enumerate(relations):
        full = homology(_complex(u, a, max_dim), coeffs)
        pair = _excised_pair(u, a, bset, max_dim)
        if pair is None:
            excised = None
            passed = full.is_acyclic(max_dim)
        else:
            excised = homology(pair, coeffs)
            passed = excised.agrees_with(full, max_dim)
        if not passed:
            witness = {'relation': u.off_diagonal(), 'full': full,
                       'excised': excised}
            return xAxiomVerdict('excision', instance, False, witness)
    return xAxiomVerdict('excision', instance, True,
                         {'members_checked': len(relations)})


def interval_relation(n, r):
    """Return the strict relation at scale r on the uniform n-point
    discretization of the unit interval.
    """
    return metric_relation(interval_metric(n), r, 'strict')


def _spacing(n):
    """Return the spacing of the n-point discretization of the interval.
    """
    return 1./(n - 1)


def check_interval_acyclic(n, r, max_dim=3, coeffs=RATIONALS):
    """Check that the Vietoris-Rips complex of the discretized interval at
    scale r is acyclic, i.e., that its reduced homology vanishes in dimension
    0...max_dim - 1.

    This only holds when r is larger than the spacing 1/(n - 1) of the
    points; below that the verdict fails and the (unreduced) Betti numbers
    are reported.
    """
    k = clique_complex(interval_relation(n, r), max_dim)
    result = homology(k, coeffs, reduced=True)
    instance = '%d-point interval at r = %s' % (n, r)
    if r > _spacing(n):
        if result.is_acyclic(max_dim):
            return xAxiomVerdict('interval', instance, True)
        return xAxiomVerdict('interval', instance, False, {'reduced': result})
    betti = homology(k, coeffs).betti
    notes = ['hypothesis not met: r <= spacing %s' % _spacing(n)]
    return xAxiomVerdict('interval', instance, False, {'betti': betti}, notes)


def cylinder_relation(u, n, r):
    """Return the product of a relation and the interval relation, on
    X x I_n with the point (x, t) at index x*n + t.
    """
    return product_relation(u, interval_relation(n, r))


def verify_homotopy_cylinder(u, n, r, coeffs=RATIONALS, max_dim=2,
                             subset=None):
    """Verify the homotopy axiom on the cylinder X x I_n: the two end maps
    x -> (x, 0) and x -> (x, 1) induce the same maps in homology (in
    dimension 0...max_dim - 1).

    With a subset A the check runs on the pair (X x I_n, A x I_n), the end
    maps being maps of pairs from (X, A).

    The carriers S(s), i.e., the subcomplexes of the cylinder spanned by
    s x I_n for the maximal simplices s of the base complex (and of its
    subcomplex, for pairs), are checked to be acyclic as well.
    """
    if not u.is_symmetric():
        raise xNotSymmetricError('the homotopy check needs a symmetric '
                                 'relation')
    coeffs.check_field('the homotopy check')
    notes = []
    if r <= _spacing(n):
        notes.append('hypothesis not met: r <= spacing %s' % _spacing(n))
    cylinder = cylinder_relation(u, n, r)
    if subset is None:
        base = clique_complex(u, max_dim)
        total = clique_complex(cylinder, max_dim)
        simplices = base.maximal_simplices()
    else:
        subset = u.space.check_indices(subset)
        base = pair_complex(u, subset, max_dim)
        total = pair_complex(cylinder, [x*n + t for x in subset\
                                        for t in range(n)], max_dim)
        simplices = base.total.maximal_simplices() +\
            base.sub.maximal_simplices()
    g0 = simplicial_map([x*n for x in u.space.points()], base, total)
    g1 = simplicial_map([x*n + n - 1 for x in u.space.points()], base, total)
    m0 = induced_map(g0, coeffs, max_dim - 1)
    m1 = induced_map(g1, coeffs, max_dim - 1)
    witness = {}
    if not m0.agrees_with(m1, max_dim):
        witness['g0'] = m0
        witness['g1'] = m1
    bad = []
    for s in simplices:
        carrier = [x*n + t for x in s for t in range(n)]
        local = clique_complex(relativize(cylinder, carrier), max_dim)
        if not homology(local, coeffs, reduced=True).is_acyclic(max_dim):
            bad.append(list(s))
    if bad:
        witness['non_acyclic_carriers'] = bad
    instance = 'cylinder over a %s, n = %d, r = %s' %\
        (_space_description(u.space), n, r)
    if subset is not None:
        instance += ', relative to %s' % sorted(subset)
    return xAxiomVerdict('homotopy', instance, not witness, witness, notes)


def verify_homotopic_maps(h, u, v, n, r, coeffs=RATIONALS, max_dim=2):
    """Verify that the two ends f0 = h(., 0) and f1 = h(., 1) of a discrete
    homotopy h: X x I_n -> Y induce the same maps in homology.

    h is given on the points of X x I_n (row-major) and must be simplicial
    from the complex of the cylinder relation to the complex of v.
    """
    coeffs.check_field('the homotopy check')
    notes = []
    if r <= _spacing(n):
        notes.append('hypothesis not met: r <= spacing %s' % _spacing(n))
    cylinder = cylinder_relation(u, n, r)
    target = vietoris_rips_complex(v, max_dim)
    h = simplicial_map(h, vietoris_rips_complex(cylinder, max_dim), target)
    base = vietoris_rips_complex(u, max_dim)
    f0 = simplicial_map([h(x*n) for x in u.space.points()], base, target)
    f1 = simplicial_map([h(x*n + n - 1) for x in u.space.points()], base,
                        target)
    m0 = induced_map(f0, coeffs, max_dim - 1)
    m1 = induced_map(f1, coeffs, max_dim - 1)
    instance = 'homotopy on a %s, n = %d, r = %s' %\
        (_space_description(u.space), n, r)
    if m0.agrees_with(m1, max_dim):
        return xAxiomVerdict('homotopy', instance, True, notes=notes)
    return xAxiomVerdict('homotopy', instance, False, {'f0': m0, 'f1': m1},
                         notes)


def verify_dowker(u, coeffs=RATIONALS, max_dim=3):
    """Verify the Dowker duality between the nerve of a cover and its
    Vietoris complex (the sets of points contained in a common member), in
    dimension 0...max_dim - 1.

    The flag complex of the Vietoris relation is reported as well, but it is
    not required to match, since three members meeting pairwise with no
    common point give a 2-simplex that neither complex has.
    """
    nerve = homology(nerve_of_cover(u, max_dim), coeffs)
    vietoris = homology(cover_complex(u, max_dim), coeffs)
    flag = homology(clique_complex(vietoris_relation(u), max_dim), coeffs)
    notes = []
    if not flag.agrees_with(nerve, max_dim):
        notes.append('the flag complex of the Vietoris relation differs: %s'\
                     % flag.betti_up_to(max_dim))
    instance = 'cover with %d member(s) of a %s' %\
        (len(u), _space_description(u.space))
    if nerve.agrees_with(vietoris, max_dim):
        return xAxiomVerdict('dowker', instance, True, notes=notes)
    witness = {'nerve': nerve, 'vietoris': vietoris}
    return xAxiomVerdict('dowker', instance, False, witness, notes)


def verify_functoriality(f, g, bx, by, bz, coeffs=RATIONALS, max_dim=2):
    """Verify functoriality for two uniformly continuous maps f: X -> Y and
    g: Y -> Z: (g o f)_* = g_* o f_* and id_* = id, in dimension
    0...max_dim - 1.

    For each member W of the base of Z, the member V of the base of Y mapped
    by g into W and the member U of the base of X mapped by f into V are
    used.
    """
    coeffs.check_field('the functoriality check')
    fx = check_uniform_continuity(f, bx, by)
    if not fx:
        raise xContinuityError('f is not uniformly continuous: %s' % fx)
    gy = check_uniform_continuity(g, by, bz)
    if not gy:
        raise xContinuityError('g is not uniformly continuous: %s' % gy)
    f = vertex_map(f, bx.space, by.space)
    g = vertex_map(g, by.space, bz.space)
    gf = [g[y] for y in f]
    instance = 'maps %s -> %s -> %s' % (_space_description(bx.space),
                                        _space_description(by.space),
                                        _space_description(bz.space))
    for k in range(len(bz)):
        j = gy['choices'][k]
        i = fx['choices'][j]
        ku = vietoris_rips_complex(bx[i], max_dim)
        kv = vietoris_rips_complex(by[j], max_dim)
        kw = vietoris_rips_complex(bz[k], max_dim)
        mf = induced_map(simplicial_map(f, ku, kv), coeffs, max_dim - 1)
        mg = induced_map(simplicial_map(g, kv, kw), coeffs, max_dim - 1)
        mgf = induced_map(simplicial_map(gf, ku, kw), coeffs, max_dim - 1)
        witness = {'members': [i, j, k]}
        if not mgf.agrees_with(mg.compose(mf), max_dim):
            witness.update({'composite': mgf, 'product': mg.compose(mf)})
            return xAxiomVerdict('functoriality', instance, False, witness)
        ident = induced_map(identity_map(ku), coeffs, max_dim - 1)
        if not ident.is_identity(max_dim):
            witness['identity'] = ident
            return xAxiomVerdict('functoriality', instance, False, witness)
    return xAxiomVerdict('functoriality', instance, True,
                         {'members_checked': len(bz)})


def verify_exactness(source, coeffs=RATIONALS, top_dim=2, a=None):
    """Verify the exactness axiom on a pair of complexes, or on the pair
    (X, A) at the smallest member of a semi-uniform base.
    """
    if isinstance(source, xComplexPair):
        p = source
    else:
        members = list(source)
        index = base_minimum(members)
        if index is None:
            raise xNoMinimumError('the base has no smallest member')
        p = _complex(members[index], a if a is not None else [], top_dim + 1)
    verdict = check_les_exactness(p, coeffs, top_dim)
    instance = 'pair on a %s (%d relative simplices)' %\
        (_space_description(p.space),
         sum(len(p.relative_simplices_of_dim(d))\
             for d in range(p.max_dim + 1)))
    return xAxiomVerdict('exactness', instance, verdict.passed,
                         verdict.witness, verdict.notes)


def verify_classical_agreement(d, q, coeffs=INTEGERS, max_dim=2):
    """Compare the homology of the strict and closed relations at scale q.

    When q is not one of the distances the two relations (and groups)
    coincide, and any difference is a failure; when q is a distance the
    difference is only recorded.
    """
    strict = homology(clique_complex(metric_relation(d, q, 'strict'),
                                     max_dim), coeffs)
    closed = homology(clique_complex(metric_relation(d, q, 'closed'),
                                     max_dim), coeffs)
    instance = '%s at q = %s' % (_space_description(d.space), q)
    agree = strict.agrees_with(closed, max_dim)
    witness = {'strict': strict, 'closed': closed}
    if bool(numpy.any(d.dist == float(q))):
        note = 'q is a distance, the groups %s' %\
            ('agree' if agree else 'differ')
        return xAxiomVerdict('classical', instance, True, witness, [note])
    return xAxiomVerdict('classical', instance, agree, witness)


def graph_clique_complex(edges, space, max_dim):
    """Return the clique complex of a graph, generated by its maximal
    cliques.
    """
    graph = networkx.Graph()
    graph.add_nodes_from(space.points())
    graph.add_edges_from((i, j) for (i, j) in edges if i != j)
    return complex_from_maximal_simplices(space, networkx.find_cliques(graph),
                                          max_dim)


def verify_graph_limit(edges, space, coeffs=INTEGERS, max_dim=3):
    """Verify that the homology of the semi-uniform space generated by a
    graph is the homology of the clique complex of the graph.
    """
    edges = list(edges)
    base = xSemiUniformBase(space, [graph_relation(edges, space)])
    report = limit_homology(base, coeffs=coeffs, max_dim=max_dim)
    direct = homology(graph_clique_complex(edges, space, max_dim), coeffs)
    instance = 'graph with %d vertices and %d edges' % (space.size,
                                                        len(edges))
    if report.result.agrees_with(direct, max_dim):
        return xAxiomVerdict('graph', instance, True)
    witness = {'limit': report.result, 'clique': direct}
    return xAxiomVerdict('graph', instance, False, witness)


def verify_scale_limit(d, q, coeffs=INTEGERS, max_dim=3):
    """Verify that the homology of the semi-uniform structure at scale q
    (generated by the strict relations at q + delta) is the homology of the
    closed relation at q.
    """
    tolerance = scale_tolerance(d, q)
    if numpy.isinf(tolerance):
        deltas = [1.]
    else:
        deltas = [0.5*tolerance, tolerance, 4.*tolerance]
    report = limit_homology(scale_base(d, q, deltas), coeffs=coeffs,
                            max_dim=max_dim, stabilization=False)
    closed = metric_relation(d, q, 'closed')
    direct = homology(clique_complex(closed, max_dim), coeffs)
    instance = '%s at q = %s' % (_space_description(d.space), q)
    witness = {}
    if report.minimum != closed:
        witness['minimum'] = report.minimum.off_diagonal()
    if not report.result.agrees_with(direct, max_dim):
        witness.update({'limit': report.result, 'closed': direct})
    return xAxiomVerdict('scale', instance, not witness, witness)
