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



__description__ = 'Vietoris-Rips homology of a closure space through its covers'


import sys

from xrips.core.fileio import xResultDocument, load_space, homology_summary,\
    execute
from xrips.core.linalg import xCoefficients
from xrips.core.closure import COVER_RELATIONS, cover_base, is_topological,\
    is_interior_cover
from xrips.core.semiuniform import limit_homology
from xrips.utils.logging_ import logger, startmsg
from xrips.utils.errors import xInputError


"""Command-line switches.
"""
import argparse

formatter = argparse.ArgumentDefaultsHelpFormatter
PARSER = argparse.ArgumentParser(description=__description__,
                                 formatter_class=formatter)
PARSER.add_argument('--space', type=str, required=True,
                    help='path to the input JSON closure document')
PARSER.add_argument('--relation', choices=COVER_RELATIONS,
                    default='vietoris',
                    help='the relation attached to each cover')
PARSER.add_argument('--cover', type=int, default=None,
                    help='use a single cover of the document (by index) '
                    'instead of all of them')
PARSER.add_argument('--coeff', type=str, default='z',
                    help='the coefficients (z, q or zp:P)')
PARSER.add_argument('--max-dim', type=int, default=2,
                    help='the enumeration cap (groups reported up to '
                    'max-dim - 1)')
PARSER.add_argument('--outfile', type=str, default=None,
                    help='path to the output result document')
PARSER.add_argument('--logfile', type=str, default=None,
                    help='path to the optional log file')


def xrclosure(**kwargs):
    """Compute the homology of a closure space, with the semi-uniform
    structure generated by the relations of its covers.
    """
    if kwargs['max_dim'] < 1:
        raise xInputError('--max-dim must be at least 1')
    doc = load_space(json=kwargs['space'])
    if doc.kind != 'closure':
        raise xInputError('xrclosure needs a closure document, got a %s one' %\
                          doc.kind)
    logger.info('Loaded %s.' % doc)
    c = doc.closure()
    if kwargs['cover'] is not None:
        covers = [doc.cover(kwargs['cover'])]
    else:
        covers = [doc.cover(i) for i in range(len(doc.covers))]
    if not covers:
        raise xInputError('the document has no covers')
    coeffs = xCoefficients.parse(kwargs['coeff'])
    base = cover_base(c, covers, kwargs['relation'])
    report = limit_homology(base, coeffs=coeffs, max_dim=kwargs['max_dim'])
    logger.info(report)
    results = homology_summary(report.result, kwargs['max_dim'])
    results['num_points'] = doc.space.size
    results['labels'] = list(doc.space.labels)
    results['base'] = report.base_summary
    results['topological'] = is_topological(c).passed
    results['interior_covers'] = [is_interior_cover(c, u).passed\
                                  for u in covers]
    return xResultDocument('closure', kwargs, results)


if __name__=='__main__':
    args = PARSER.parse_args()
    startmsg()
    sys.exit(execute(xrclosure, **args.__dict__))
