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


"""Vietoris-Rips (clique) complexes, pairs of complexes, nerves of covers and
simplicial maps.

Simplices are tuples of point indices in strictly increasing order, and each
simplex carries the orientation induced by this order. Complexes are only
enumerated up to a given dimension: remember that computing H_k requires the
(k + 1)-simplices, i.e., max_dim >= k + 1.
"""


import itertools

import networkx

from xrips.core.space import xFiniteSpace, relativize, vertex_map
from xrips.core.verdict import xVerdict
from xrips.utils.logging_ import logger
from xrips.utils.errors import xDomainError, xEmptySetError,\
    xNotSymmetricError, xSimplicialMapError, xSpaceMismatchError


def simplex(vertices):
    """Return the canonical form (sorted tuple of distinct indices) of a
    simplex.
    """
    vertices = tuple(sorted(set(int(v) for v in vertices)))
    if not vertices:
        raise xDomainError('a simplex needs at least one vertex')
    return vertices


def facets(s):
    """Return the facets of a simplex, the i-th facet being the one obtained
    by dropping the i-th vertex.
    """
    return [s[:i] + s[i + 1:] for i in range(len(s))]


class xSimplicialComplex:

    """A finite simplicial complex whose vertices are points of a finite
    space, enumerated up to a given dimension.

    Args
    ----
    space : xFiniteSpace
        The point set the vertices are taken from.

    simplices : iterable of vertex sequences
        All the simplices (the set must be closed under taking faces).

    max_dim : int
        The enumeration cap: no simplex of dimension larger than this is
        stored.

    complete : bool
        True if the complex has no simplices at all above max_dim, i.e., if
        nothing was left out by the enumeration.
    """

    def __init__(self, space, simplices, max_dim, complete=True):
        """Constructor.
        """
        if max_dim < 0:
            raise xDomainError('negative maximum dimension %d' % max_dim)
        self.space = space
        self.max_dim = int(max_dim)
        self.complete = bool(complete)
        layers = [set() for k in range(self.max_dim + 1)]
        for s in simplices:
            s = simplex(s)
            for v in s:
                space.check_index(v)
            if len(s) > self.max_dim + 1:
                raise xDomainError('simplex %s exceeds the maximum '
                                   'dimension %d' % (s, self.max_dim))
            layers[len(s) - 1].add(s)
        self.simplices = tuple(tuple(sorted(layer)) for layer in layers)
        self._index = tuple(dict((s, i) for i, s in enumerate(layer))\
                            for layer in self.simplices)
        for k in range(1, self.max_dim + 1):
            for s in self.simplices[k]:
                for face in facets(s):
                    if face not in self._index[k - 1]:
                        raise xDomainError('face %s of %s missing, the '
                                           'complex is not closed' % (face, s))

    def simplices_of_dim(self, k):
        """Return the sorted tuple of the k-simplices (empty above the cap).
        """
        if k < 0 or k > self.max_dim:
            return ()
        return self.simplices[k]

    def num_simplices(self, k):
        """Return the number of k-simplices.
        """
        return len(self.simplices_of_dim(k))

    def index(self, s):
        """Return the position of a simplex within its dimension layer.
        """
        return self._index[len(s) - 1][s]

    def vertices(self):
        """Return the sorted list of the vertices.
        """
        return [s[0] for s in self.simplices[0]]

    def dimension(self):
        """Return the largest dimension with at least one simplex (-1 for the
        empty complex).
        """
        dims = [k for k in range(self.max_dim + 1) if self.simplices[k]]
        return max(dims) if dims else -1

    def f_vector(self):
        """Return the number of simplices in each dimension, up to the
        dimension of the complex.
        """
        return [self.num_simplices(k) for k in range(self.dimension() + 1)]

    def euler_characteristic(self):
        """Return the alternating sum of the f-vector.
        """
        return sum((-1)**k*n for k, n in enumerate(self.f_vector()))

    def maximal_simplices(self):
        """Return the simplices that are not a facet of any other simplex.
        """
        covered = set()
        for layer in self.simplices[1:]:
            for s in layer:
                covered.update(facets(s))
        return [s for layer in self.simplices for s in layer\
                if s not in covered]

    def is_subcomplex_of(self, other):
        """Return True if every simplex is also a simplex of other.
        """
        return all(s in other for layer in self.simplices for s in layer)

    def all_simplices(self):
        """Iterate over all the simplices, by dimension.
        """
        return itertools.chain(*self.simplices)

    def __contains__(self, s):
        """Membership operator.
        """
        s = tuple(s)
        if not s or len(s) > self.max_dim + 1:
            return False
        return s in self._index[len(s) - 1]

    def __len__(self):
        """Return the total number of simplices.
        """
        return sum(len(layer) for layer in self.simplices)

    def __eq__(self, other):
        """Comparison operator (the enumeration cap is not compared).
        """
        return isinstance(other, xSimplicialComplex) and\
            self.space == other.space and\
            set(self.all_simplices()) == set(other.all_simplices())

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __hash__(self):
        """Hash function.
        """
        return hash((self.space, frozenset(self.all_simplices())))

    def __str__(self):
        """String formatting.
        """
        text = 'Simplicial complex on %d point(s), f-vector %s' %\
            (self.space.size, self.f_vector())
        if not self.complete:
            text += ' (truncated at dimension %d)' % self.max_dim
        return text


class xComplexPair:

    """A pair (K, L) of simplicial complexes with L a subcomplex of K.
    """

    def __init__(self, total, sub):
        """Constructor.
        """
        if total.space != sub.space:
            raise xSpaceMismatchError('the two complexes of a pair must live '
                                      'on the same space')
        if not sub.is_subcomplex_of(total):
            raise xDomainError('not a subcomplex')
        self.total = total
        self.sub = sub
        self.space = total.space
        self.max_dim = min(total.max_dim, sub.max_dim)

    def relative_simplices_of_dim(self, k):
        """Return the k-simplices of the total complex not in the
        subcomplex (i.e., the basis of the relative chains).
        """
        return tuple(s for s in self.total.simplices_of_dim(k)\
                     if s not in self.sub)

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xComplexPair) and\
            self.total == other.total and self.sub == other.sub

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __hash__(self):
        """Hash function.
        """
        return hash((self.total, self.sub))

    def __str__(self):
        """String formatting.
        """
        return 'Pair of complexes\n  total: %s\n  sub:   %s' %\
            (self.total, self.sub)


def complex_from_maximal_simplices(space, simplices, max_dim):
    """Return the complex generated by a list of simplices, i.e., all their
    faces up to max_dim, plus all the points of the space as vertices.
    """
    faces = set((x,) for x in space.points())
    complete = True
    for s in simplices:
        s = simplex(s)
        if len(s) > max_dim + 1:
            complete = False
        for n in range(2, min(len(s), max_dim + 1) + 1):
            faces.update(itertools.combinations(s, n))
    return xSimplicialComplex(space, faces, max_dim, complete)


def _off_diagonal_graph(u, directed=False):
    """Return the networkx (di)graph of the off-diagonal pairs of a relation,
    with all the points as nodes.
    """
    graph = networkx.DiGraph() if directed else networkx.Graph()
    graph.add_nodes_from(u.space.points())
    graph.add_edges_from(u.off_diagonal())
    return graph


def clique_complex(u, max_dim):
    """Return the clique complex of a symmetric relation, up to max_dim.

    A set of points is a simplex iff all its pairs are related. Cliques are
    enumerated by increasing size, extending each clique by the common
    neighbors of its vertices.
    """
    if not u.is_symmetric():
        raise xNotSymmetricError('clique_complex() needs a symmetric relation '
                                 '(use directed_clique_complex() or take the '
                                 'symmetric_part() first)')
    graph = _off_diagonal_graph(u)
    simplices = []
    complete = True
    for clique in networkx.enumerate_all_cliques(graph):
        if len(clique) > max_dim + 1:
            complete = False
            break
        simplices.append(clique)
    return xSimplicialComplex(u.space, simplices, max_dim, complete)


def is_directed_simplex(graph, vertices):
    """Return True if the vertices admit an ordering in which every pair is
    a forward edge of a directed graph.

    This is done by repeatedly removing a vertex with edges to all the
    remaining ones.
    """
    remaining = set(vertices)
    while len(remaining) > 1:
        source = None
        for v in sorted(remaining):
            if all(graph.has_edge(v, w) for w in remaining if w != v):
                source = v
                break
        if source is None:
            return False
        remaining.remove(source)
    return True


def directed_clique_complex(u, max_dim):
    """Return the directed clique complex of a relation, up to max_dim.

    A set of points is a simplex iff for some ordering of it, every pair of
    distinct points (in that order) belongs to the relation. For symmetric
    relations this is the clique complex.
    """
    digraph = _off_diagonal_graph(u, directed=True)
    graph = digraph.to_undirected()
    simplices = []
    complete = True
    for clique in networkx.enumerate_all_cliques(graph):
        # No simplex one dimension above the cap means none at all above it.
        if len(clique) > max_dim + 2:
            break
        if not is_directed_simplex(digraph, clique):
            continue
        if len(clique) > max_dim + 1:
            complete = False
            break
        simplices.append(clique)
    return xSimplicialComplex(u.space, simplices, max_dim, complete)


def vietoris_rips_complex(u, max_dim):
    """Return the Vietoris-Rips complex of a relation: the clique complex for
    symmetric relations, the directed clique complex otherwise.
    """
    if u.is_symmetric():
        return clique_complex(u, max_dim)
    return directed_clique_complex(u, max_dim)


def pair_complex(u, a, max_dim):
    """Return the pair formed by the complex of a relation and the complex of
    its relativization to a subset, embedded back in the ambient space.
    """
    a = u.space.check_indices(a)
    if not a:
        raise xEmptySetError('empty subspace for the pair complex')
    total = vietoris_rips_complex(u, max_dim)
    points = sorted(a)
    local = vietoris_rips_complex(relativize(u, a), max_dim)
    simplices = [[points[v] for v in s] for s in local.all_simplices()]
    sub = xSimplicialComplex(u.space, simplices, max_dim, local.complete)
    return xComplexPair(total, sub)


def nerve_space(u):
    """Return the point set labeling the members of a cover.
    """
    return xFiniteSpace(['U%d' % k for k in range(len(u))])


def nerve_of_cover(u, max_dim):
    """Return the nerve of a cover: the vertices are the members, and a set
    of members spans a simplex iff they have a point in common.
    """
    for k, s in enumerate(u):
        if not s:
            raise xEmptySetError('member %d of the cover is empty' % k)
    stars = set()
    for x in u.space.points():
        stars.add(tuple(k for k, s in enumerate(u) if x in s))
    return complex_from_maximal_simplices(nerve_space(u), stars, max_dim)


def cover_complex(u, max_dim):
    """Return the Vietoris complex of a cover: a set of points spans a simplex
    iff it is contained in some member.
    """
    return complex_from_maximal_simplices(u.space, [s for s in u if s],
                                          max_dim)


def _total(k):
    """Return the total complex of a pair (or the complex itself).
    """
    if isinstance(k, xComplexPair):
        return k.total
    return k


class xSimplicialVertexMap:

    """A simplicial map between two complexes (or two pairs of complexes),
    defined by a function on the vertices.

    The image of a simplex is the set of the images of its vertices, which
    may well have a smaller dimension. The simplicial property (and, for
    pairs, the mapping of the subcomplex into the subcomplex) is checked at
    construction.

    Args
    ----
    domain : xSimplicialComplex or xComplexPair
        The domain.

    codomain : xSimplicialComplex or xComplexPair
        The codomain (must be a pair iff the domain is).

    assignment : sequence of int
        The image of each point of the domain space.
    """

    def __init__(self, domain, codomain, assignment):
        """Constructor.
        """
        if isinstance(domain, xComplexPair) != isinstance(codomain,\
                                                          xComplexPair):
            raise xSimplicialMapError('a map of pairs needs pairs on both '
                                      'sides')
        self.domain = domain
        self.codomain = codomain
        self.assignment = vertex_map(assignment, domain.space, codomain.space)
        self._check(_total(domain), _total(codomain), 'complex')
        if isinstance(domain, xComplexPair):
            self._check(domain.sub, codomain.sub, 'subcomplex')

    def _check(self, domain, codomain, what):
        """Make sure that all the simplices are mapped into simplices.
        """
        for s in domain.all_simplices():
            image = self.image(s)
            if image not in codomain:
                message = 'the image %s of the simplex %s is not in the '\
                          'target %s' % (list(image), list(s), what)
                if len(image) > codomain.max_dim + 1 and not codomain.complete:
                    message += ' (beyond the enumeration cap)'
                raise xSimplicialMapError(message)

    def image(self, s):
        """Return the image of a simplex.
        """
        return tuple(sorted(set(self.assignment[v] for v in s)))

    def __call__(self, v):
        """Return the image of a vertex.
        """
        return self.assignment[v]

    def __eq__(self, other):
        """Comparison operator.
        """
        return isinstance(other, xSimplicialVertexMap) and\
            self.domain == other.domain and self.codomain == other.codomain\
            and self.assignment == other.assignment

    def __ne__(self, other):
        """Comparison operator.
        """
        return not self.__eq__(other)

    def __hash__(self):
        """Hash function.
        """
        return hash(self.assignment)

    def __str__(self):
        """String formatting.
        """
        return 'Simplicial map %s' % list(self.assignment)


def simplicial_map(f, dom, cod):
    """Build and validate a simplicial map from a vertex function.
    """
    return xSimplicialVertexMap(dom, cod, f)


def identity_map(k):
    """Return the identity map of a complex (or pair).
    """
    return xSimplicialVertexMap(k, k, list(k.space.points()))


def inclusion_map(sub, total):
    """Return the inclusion of a subcomplex in a complex on the same space.
    """
    if sub.space != total.space:
        raise xSpaceMismatchError('inclusion between different spaces')
    return xSimplicialVertexMap(sub, total, list(sub.space.points()))


def compose(f, g):
    """Return the composite map "first f, then g".
    """
    if f.codomain != g.domain:
        raise xSimplicialMapError('maps are not composable')
    assignment = [g.assignment[v] for v in f.assignment]
    return xSimplicialVertexMap(f.domain, g.codomain, assignment)


def are_contiguous(f, g):
    """Check whether two simplicial maps with the same domain and codomain are
    contiguous, i.e., f(s) U g(s) is a simplex for every simplex s (in the
    subcomplex as well, for maps of pairs).
    """
    if f.domain != g.domain or f.codomain != g.codomain:
        raise xSimplicialMapError('contiguity needs maps with the same domain '
                                  'and codomain')
    targets = [(_total(f.domain), _total(f.codomain))]
    if isinstance(f.domain, xComplexPair):
        targets.append((f.domain.sub, f.codomain.sub))
    for domain, codomain in targets:
        for s in domain.all_simplices():
            union = tuple(sorted(set(f.image(s)) | set(g.image(s))))
            if union not in codomain:
                logger.debug('Maps not contiguous at %s.' % list(s))
                return xVerdict(False, {'simplex': list(s),
                                        'union': list(union)})
    return xVerdict(True)
