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


"""Canned verification suites, i.e., batteries of axiom checks on seeded
random (or exhaustively enumerated) instances.
"""


import importlib.util
import itertools
import os

from xrips.config import verify_default
from xrips.core.space import xFiniteSpace, xRelation, xSemiUniformBase,\
    graph_relation, relation_image, relation_intersect
from xrips.core.linalg import xCoefficients
from xrips.core.rand import xInstanceGenerator
from xrips.core.semiuniform import verify_dimension, verify_excision,\
    verify_exactness, verify_homotopy_cylinder, check_interval_acyclic,\
    verify_dowker, verify_functoriality, verify_graph_limit,\
    verify_scale_limit, verify_classical_agreement
from xrips.utils.profile import xChrono
from xrips.utils.logging_ import logger
from xrips.utils.os_ import check_input_file
from xrips.utils.errors import xInputError


def default_config():
    """Return the default suite parameters as a dictionary.
    """
    return _parameters(verify_default)


def _parameters(module):
    """Collect the (upper-case) parameters defined in a module.
    """
    return dict((key, getattr(module, key)) for key in dir(module)\
                if key.isupper())


def load_suite_config(file_path=None):
    """Load the suite parameters from a python configuration file, on top of
    the defaults.
    """
    config = default_config()
    if file_path is None:
        return config
    check_input_file(file_path, 'py')
    module_name = os.path.basename(file_path).replace('.py', '')
    spec = importlib.util.spec_from_file_location(module_name, file_path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    custom = _parameters(module)
    unknown = sorted(set(custom) - set(config))
    if unknown:
        logger.warning('Unknown suite parameter(s) in %s: %s' %\
                       (file_path, ', '.join(unknown)))
    config.update(custom)
    return config


def _coeffs(config, key):
    """Parse the coefficients of a suite.
    """
    return xCoefficients.parse(config[key])


def dimension_suite(config, gen):
    """The dimension axiom, for each of the configured coefficients.
    """
    return [verify_dimension(xCoefficients.parse(text),
                             config['DIMENSION_MAX_DIM'])\
            for text in config['DIMENSION_COEFFICIENTS']]


def excision_suite(config, gen):
    """Excision on bases made of two nested random graph relations.
    """
    coeffs = _coeffs(config, 'EXCISION_COEFFICIENTS')
    verdicts = []
    for trial in range(config['EXCISION_TRIALS']):
        n = gen.size(1, config['EXCISION_MAX_POINTS'])
        space = gen.space(n)
        edges = gen.edges(n, config['EXCISION_EDGE_PROBABILITY'])
        subedges = [e for e in edges if gen.rng.uniform() < 0.5]
        base = xSemiUniformBase(space, [graph_relation(edges, space),
                                        graph_relation(subedges, space)])
        a, bset = gen.subsets(n, config['EXCISION_SUBSET_PROBABILITY'])
        for u in base:
            a |= relation_image(u, bset)
        verdicts.append(verify_excision(base, a, bset, coeffs,
                                        config['EXCISION_MAX_DIM']))
    return verdicts


def exactness_suite(config, gen):
    """Exactness of the long exact sequence of random pairs.
    """
    coeffs = _coeffs(config, 'EXACTNESS_COEFFICIENTS')
    top_dim = config['EXACTNESS_MAX_DIM'] - 1
    verdicts = []
    for trial in range(config['EXACTNESS_TRIALS']):
        n = gen.size(1, config['EXACTNESS_MAX_POINTS'])
        u = gen.relation(n, config['EXACTNESS_EDGE_PROBABILITY'])
        a, _ = gen.subsets(n)
        base = xSemiUniformBase(u.space, [u])
        verdicts.append(verify_exactness(base, coeffs, top_dim, sorted(a)))
    return verdicts


def symmetric_relations(n):
    """Iterate over all the symmetric relations on n points.
    """
    space = xFiniteSpace.from_size(n)
    pairs = list(itertools.combinations(range(n), 2))
    for mask in itertools.product([False, True], repeat=len(pairs)):
        yield graph_relation([p for p, m in zip(pairs, mask) if m], space)


def homotopy_suite(config, gen):
    """The cylinder check for all the symmetric relations on few points, both
    absolute and relative to a random subset, and for the 4-cycle, absolute
    and relative to the configured subsets.
    """
    coeffs = _coeffs(config, 'HOMOTOPY_COEFFICIENTS')
    max_dim = config['HOMOTOPY_MAX_DIM']
    verdicts = []
    for n in range(1, config['HOMOTOPY_MAX_POINTS'] + 1):
        for u in symmetric_relations(n):
            verdicts.append(verify_homotopy_cylinder(u,
                config['HOMOTOPY_NUM_STEPS'], config['HOMOTOPY_SCALE'],
                coeffs, max_dim))
            subset, _ = gen.subsets(n)
            if subset:
                verdicts.append(verify_homotopy_cylinder(u,
                    config['HOMOTOPY_NUM_STEPS'], config['HOMOTOPY_SCALE'],
                    coeffs, max_dim, subset))
    cycle = graph_relation([(0, 1), (1, 2), (2, 3), (3, 0)],
                           xFiniteSpace.from_size(4))
    for subset in [None] + list(config['HOMOTOPY_CYCLE_SUBSETS']):
        verdicts.append(verify_homotopy_cylinder(cycle,
            config['HOMOTOPY_CYCLE_NUM_STEPS'],
            config['HOMOTOPY_CYCLE_SCALE'], coeffs, max_dim, subset))
    return verdicts


def interval_suite(config, gen):
    """Acyclicity of the discretized interval above the spacing.
    """
    coeffs = _coeffs(config, 'INTERVAL_COEFFICIENTS')
    verdicts = []
    for n in range(2, config['INTERVAL_MAX_POINTS'] + 1):
        for factor in config['INTERVAL_SCALE_FACTORS']:
            verdicts.append(check_interval_acyclic(n, factor/(n - 1.),
                config['INTERVAL_MAX_DIM'], coeffs))
    return verdicts


def dowker_suite(config, gen):
    """Dowker duality on random covers.
    """
    coeffs = _coeffs(config, 'DOWKER_COEFFICIENTS')
    verdicts = []
    for trial in range(config['DOWKER_TRIALS']):
        n = gen.size(1, config['DOWKER_MAX_POINTS'])
        cover = gen.cover(n, config['DOWKER_MAX_SETS'])
        verdicts.append(verify_dowker(cover, coeffs, config['DOWKER_MAX_DIM']))
    return verdicts


def _pullback(v, f, space):
    """Return the relation {(x, y) | (f(x), f(y)) in V} on a space.
    """
    pairs = [(i, j) for i in space.points() for j in space.points()\
             if (f[i], f[j]) in v]
    return xRelation(space, pairs)


def functoriality_suite(config, gen):
    """Functoriality on random maps X -> Y -> Z, with the bases of X and Y
    cut down so that the maps are uniformly continuous.
    """
    coeffs = _coeffs(config, 'FUNCTORIALITY_COEFFICIENTS')
    p = config['FUNCTORIALITY_EDGE_PROBABILITY']
    max_points = config['FUNCTORIALITY_MAX_POINTS']
    verdicts = []
    for trial in range(config['FUNCTORIALITY_TRIALS']):
        nx, ny, nz = [gen.size(1, max_points) for i in range(3)]
        f = gen.vertex_map(nx, ny)
        g = gen.vertex_map(ny, nz)
        w = gen.relation(nz, p)
        v = relation_intersect(gen.relation(ny, p), _pullback(w, g,
                                                               gen.space(ny)))
        u = relation_intersect(gen.relation(nx, p), _pullback(v, f,
                                                               gen.space(nx)))
        bases = [xSemiUniformBase(r.space, [r]) for r in (u, v, w)]
        verdicts.append(verify_functoriality(f, g, *bases, coeffs=coeffs,
            max_dim=config['FUNCTORIALITY_MAX_DIM']))
    return verdicts


def graph_suite(config, gen):
    """Semi-uniform spaces generated by random graphs, and the complete
    graph on four vertices.
    """
    coeffs = _coeffs(config, 'GRAPH_COEFFICIENTS')
    max_dim = config['GRAPH_MAX_DIM']
    space = xFiniteSpace.from_size(4)
    verdicts = [verify_graph_limit(itertools.combinations(range(4), 2), space,
                                   coeffs, max_dim)]
    for trial in range(config['GRAPH_TRIALS']):
        n = gen.size(1, config['GRAPH_MAX_VERTICES'])
        edges = gen.edges(n, config['GRAPH_EDGE_PROBABILITY'])
        verdicts.append(verify_graph_limit(edges, gen.space(n), coeffs,
                                           max_dim))
    return verdicts


def metric_suite(config, gen):
    """Semi-uniform structures of random metric spaces at a few scales.
    """
    coeffs = _coeffs(config, 'METRIC_COEFFICIENTS')
    max_dim = config['METRIC_MAX_DIM']
    verdicts = []
    for trial in range(config['METRIC_TRIALS']):
        n = gen.size(1, config['METRIC_MAX_POINTS'])
        d = gen.metric(n, config['METRIC_MAX_DISTANCE'])
        for q in gen.scales(d, config['METRIC_SCALES_PER_TRIAL']):
            verdicts.append(verify_scale_limit(d, q, coeffs, max_dim))
            verdicts.append(verify_classical_agreement(d, q, coeffs, max_dim))
    return verdicts


SUITES = {
    'dimension': dimension_suite,
    'excision': excision_suite,
    'exactness': exactness_suite,
    'homotopy': homotopy_suite,
    'interval': interval_suite,
    'dowker': dowker_suite,
    'functoriality': functoriality_suite,
    'graph': graph_suite,
    'metric': metric_suite
}

SUITE_NAMES = ['dimension', 'excision', 'exactness', 'homotopy', 'interval',
               'dowker', 'functoriality', 'graph', 'metric']


def run_suite(name, config=None, seed=0):
    """Run a verification suite (or all of them, for name = 'all') and
    return the list of the verdicts.

    Each suite gets its own generator, seeded with the same seed, so that the
    instances of a suite do not depend on the other suites being run.
    """
    if config is None:
        config = default_config()
    if name == 'all':
        names = SUITE_NAMES
    elif name in SUITES:
        names = [name]
    else:
        raise xInputError('unknown suite "%s" (allowed: %s)' %\
                          (name, ', '.join(SUITE_NAMES + ['all'])))
    verdicts = []
    chrono = xChrono()
    for name in names:
        logger.info('Running the %s suite (seed = %s)...' % (name, seed))
        results = SUITES[name](config, xInstanceGenerator(seed))
        failures = len([v for v in results if not v.passed])
        logger.info('%d check(s), %d failure(s) in %.3f s.' %\
                    (len(results), failures, chrono.lap(name)))
        verdicts += results
    if len(names) > 1:
        logger.info('Suite timing: %s.' % chrono.summary())
    return verdicts
