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



__description__ = 'Betti numbers of a finite metric space over a range of scales'


import sys
from fractions import Fraction

from joblib import Parallel, delayed

from xrips.core.fileio import xResultDocument, load_space, homology_summary,\
    format_sweep_table, execute
from xrips.core.linalg import xCoefficients
from xrips.core.space import METRIC_MODES, metric_relation
from xrips.core.complex_ import vietoris_rips_complex
from xrips.core.homology import homology
from xrips.utils.profile import xChrono
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
PARSER.add_argument('--json', type=str, default=None,
                    help='path to the input JSON distance document')
PARSER.add_argument('--scales', type=str, required=True,
                    help='the scales, as LO:HI:STEP (HI included)')
PARSER.add_argument('--mode', choices=METRIC_MODES, default='closed',
                    help='closed (d <= q) or strict (d < q) relation')
PARSER.add_argument('--coeff', type=str, default='z',
                    help='the coefficients (z, q or zp:P)')
PARSER.add_argument('--max-dim', type=int, default=2,
                    help='the enumeration cap (groups reported up to '
                    'max-dim - 1)')
PARSER.add_argument('--jobs', type=int, default=1,
                    help='the number of parallel jobs')
PARSER.add_argument('--threads', action='store_true', default=False,
                    help='run the jobs in threads rather than processes')
PARSER.add_argument('--output', choices=['tsv', 'json'], default='tsv',
                    help='the output format')
PARSER.add_argument('--outfile', type=str, default=None,
                    help='path to the output file')
PARSER.add_argument('--logfile', type=str, default=None,
                    help='path to the optional log file')


def parse_scales(text):
    """Parse a LO:HI:STEP scale range into a list of floats.

    The arithmetic is carried out on the exact decimal values, so that, e.g.,
    0.1:0.3:0.1 gives exactly three scales.
    """
    try:
        lo, hi, step = [Fraction(x.strip()) for x in text.split(':')]
    except ValueError:
        raise xInputError('invalid scale range "%s" (expected LO:HI:STEP)' %\
                          text)
    if step <= 0:
        raise xInputError('the scale step must be positive')
    if lo < 0 or hi < lo:
        raise xInputError('invalid scale range "%s"' % text)
    num_scales = int((hi - lo)/step) + 1
    return [float(lo + i*step) for i in range(num_scales)]


def scale_homology(d, q, mode, coeffs, max_dim):
    """Compute the homology at a single scale.
    """
    k = vietoris_rips_complex(metric_relation(d, q, mode), max_dim)
    return homology(k, coeffs)


def xrsweep(**kwargs):
    """Compute the Betti numbers over a range of scales.
    """
    if kwargs['max_dim'] < 1:
        raise xInputError('--max-dim must be at least 1')
    if kwargs['jobs'] == 0:
        raise xInputError('--jobs cannot be zero')
    doc = load_space(dist=kwargs['dist'], json=kwargs['json'])
    if doc.kind != 'distance':
        raise xInputError('xrsweep needs a distance document, got a %s one' %\
                          doc.kind)
    scales = parse_scales(kwargs['scales'])
    coeffs = xCoefficients.parse(kwargs['coeff'])
    chrono = xChrono()
    logger.info('Sweeping %d scale(s) with %d job(s)...' %\
                (len(scales), kwargs['jobs']))
    prefer = 'threads' if kwargs['threads'] else None
    results = Parallel(n_jobs=kwargs['jobs'], prefer=prefer)(
        delayed(scale_homology)(doc.metric, q, kwargs['mode'], coeffs,
                                kwargs['max_dim']) for q in scales)
    logger.info('Done %s.' % chrono)
    rows = list(zip(scales, results))
    table = None
    if kwargs['output'] == 'tsv':
        table = format_sweep_table(rows, kwargs['max_dim'])
    data = {
        'num_points': doc.space.size,
        'labels': list(doc.space.labels),
        'rows': [dict(scale=q, **homology_summary(r, kwargs['max_dim']))\
                 for q, r in rows]
    }
    return xResultDocument('sweep', kwargs, data, table=table)


if __name__=='__main__':
    args = PARSER.parse_args()
    startmsg()
    sys.exit(execute(xrsweep, **args.__dict__))
