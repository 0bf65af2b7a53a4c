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



__description__ = 'Vietoris-Rips homology of a space at a given scale'


import sys

from xrips.core.fileio import xResultDocument, load_space, parse_subset,\
    homology_summary, execute
from xrips.core.linalg import xCoefficients
from xrips.core.space import METRIC_MODES
from xrips.core.complex_ import xComplexPair, vietoris_rips_complex,\
    pair_complex
from xrips.core.homology import homology, cohomology, empty_complex
from xrips.utils.logging_ import logger, startmsg
from xrips.utils.errors import xInputError


"""Command-line switches.
"""
import argparse

formatter = argparse.ArgumentDefaultsHelpFormatter
PARSER = argparse.ArgumentParser(description=__description__,
                                 formatter_class=formatter)
PARSER.add_argument('--dist', type=str, default=None,
                    help='path to the input csv distance matrix')
PARSER.add_argument('--graph', type=str, default=None,
                    help='path to the input edge list')
PARSER.add_argument('--json', type=str, default=None,
                    help='path to the input JSON space document')
PARSER.add_argument('--scale', type=float, default=None,
                    help='the scale q (distance documents only)')
PARSER.add_argument('--mode', choices=METRIC_MODES, default='closed',
                    help='closed (d <= q) or strict (d < q) relation')
PARSER.add_argument('--coeff', type=str, default='z',
                    help='the coefficients (z, q or zp:P)')
PARSER.add_argument('--max-dim', type=int, default=2,
                    help='the enumeration cap (groups reported up to '
                    'max-dim - 1)')
PARSER.add_argument('--subset', type=str, default=None,
                    help='comma-separated labels of the subspace A for the '
                    'relative groups')
PARSER.add_argument('--cohomology', action='store_true', default=False,
                    help='compute cohomology instead of homology')
PARSER.add_argument('--reduced', action='store_true', default=False,
                    help='compute the reduced groups')
PARSER.add_argument('--generators', action='store_true', default=False,
                    help='report the (co)cycle representatives')
PARSER.add_argument('--outfile', type=str, default=None,
                    help='path to the output result document')
PARSER.add_argument('--logfile', type=str, default=None,
                    help='path to the optional log file')


def build_complex(doc, subset=None, **kwargs):
    """Build the complex (or pair) described by a space document and the
    command-line switches.
    """
    max_dim = kwargs['max_dim']
    if doc.kind == 'closure':
        raise xInputError('use xrclosure for closure documents')
    a = parse_subset(subset, doc.space)
    if doc.kind == 'complex':
        if a is not None:
            raise xInputError('--subset is not supported for explicit '
                              'complexes')
        return doc.complex(max_dim)
    if doc.kind == 'distance' and kwargs.get('scale') is None:
        raise xInputError('--scale is needed for a distance matrix')
    u = doc.relation(kwargs.get('scale'), kwargs.get('mode', 'closed'))
    if a is None:
        return vietoris_rips_complex(u, max_dim)
    if not a:
        return xComplexPair(vietoris_rips_complex(u, max_dim),
                            empty_complex(u.space, max_dim))
    return pair_complex(u, a, max_dim)


def xrhomology(**kwargs):
    """Compute the Vietoris-Rips (co)homology of a space.
    """
    if kwargs['max_dim'] < 1:
        raise xInputError('--max-dim must be at least 1')
    doc = load_space(**kwargs)
    logger.info('Loaded %s.' % doc)
    coeffs = xCoefficients.parse(kwargs['coeff'])
    k = build_complex(doc, **kwargs)
    logger.info(k)
    if kwargs['cohomology']:
        result = cohomology(k, coeffs, kwargs['reduced'],
                            kwargs['generators'])
    else:
        result = homology(k, coeffs, kwargs['reduced'], kwargs['generators'])
    logger.info(result)
    total = k.total if isinstance(k, xComplexPair) else k
    results = homology_summary(result, kwargs['max_dim'])
    results['num_points'] = doc.space.size
    results['labels'] = list(doc.space.labels)
    results['f_vector'] = total.f_vector()
    return xResultDocument('homology', kwargs, results)


if __name__=='__main__':
    args = PARSER.parse_args()
    startmsg()
    sys.exit(execute(xrhomology, **args.__dict__))
