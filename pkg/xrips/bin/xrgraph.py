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



__description__ = 'Homology of the semi-uniform space generated by a graph'


import sys

from xrips.core.fileio import xResultDocument, load_space, homology_summary,\
    execute
from xrips.core.linalg import xCoefficients
from xrips.core.space import xSemiUniformBase, relation_inverse
from xrips.core.semiuniform import limit_homology, verify_graph_limit
from xrips.utils.logging_ import logger, startmsg
from xrips.utils.errors import xInputError


"""Command-line switches.
"""
import argparse

formatter = argparse.ArgumentDefaultsHelpFormatter
PARSER = argparse.ArgumentParser(description=__description__,
                                 formatter_class=formatter)
PARSER.add_argument('--graph', type=str, default=None,
                    help='path to the input edge list')
PARSER.add_argument('--json', type=str, default=None,
                    help='path to the input JSON graph document')
PARSER.add_argument('--coeff', type=str, default='z',
                    help='the coefficients (z, q or zp:P)')
PARSER.add_argument('--max-dim', type=int, default=3,
                    help='the enumeration cap (groups reported up to '
                    'max-dim - 1)')
PARSER.add_argument('--check', action='store_true', default=False,
                    help='compare with the homology of the clique complex '
                    'of the graph')
PARSER.add_argument('--outfile', type=str, default=None,
                    help='path to the output result document')
PARSER.add_argument('--logfile', type=str, default=None,
                    help='path to the optional log file')


def graph_base(doc):
    """Return the semi-uniform base generated by the edge relation of a graph
    (and its inverse, for directed graphs).
    """
    u = doc.relation()
    members = [u]
    if not u.is_symmetric():
        members.append(relation_inverse(u))
    return xSemiUniformBase(doc.space, members)


def xrgraph(**kwargs):
    """Compute the homology of the semi-uniform space generated by a graph.
    """
    if kwargs['max_dim'] < 1:
        raise xInputError('--max-dim must be at least 1')
    doc = load_space(**kwargs)
    if doc.kind != 'graph':
        raise xInputError('xrgraph needs a graph document, got a %s one' %\
                          doc.kind)
    logger.info('Loaded %s.' % doc)
    coeffs = xCoefficients.parse(kwargs['coeff'])
    base = graph_base(doc)
    report = limit_homology(base, coeffs=coeffs, max_dim=kwargs['max_dim'])
    logger.info(report)
    results = homology_summary(report.result, kwargs['max_dim'])
    results['num_points'] = doc.space.size
    results['labels'] = list(doc.space.labels)
    results['base'] = report.base_summary
    if report.cohomology is not None:
        results['cohomology'] = homology_summary(report.cohomology,
                                                 kwargs['max_dim'])
    verdicts = []
    if kwargs['check']:
        u = base.minimum()
        verdicts.append(verify_graph_limit(u.off_diagonal(), doc.space,
                                           coeffs, kwargs['max_dim']))
    return xResultDocument('graph', kwargs, results, verdicts)


if __name__=='__main__':
    args = PARSER.parse_args()
    startmsg()
    sys.exit(execute(xrgraph, **args.__dict__))
