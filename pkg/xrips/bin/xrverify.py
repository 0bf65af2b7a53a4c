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



__description__ = 'Verify the homology axioms on concrete instances'


import sys

from xrips.core.fileio import xResultDocument, execute
from xrips.core.suites import SUITE_NAMES, load_suite_config, run_suite
from xrips.utils.profile import xChrono
from xrips.utils.logging_ import logger, startmsg


"""Command-line switches.
"""
import argparse

formatter = argparse.ArgumentDefaultsHelpFormatter
PARSER = argparse.ArgumentParser(description=__description__,
                                 formatter_class=formatter)
PARSER.add_argument('--suite', choices=SUITE_NAMES + ['all'], default='all',
                    help='the verification suite')
PARSER.add_argument('--seed', type=int, default=0,
                    help='the random seed for the generated instances')
PARSER.add_argument('--configfile', type=str, default=None,
                    help='optional configuration file overriding the '
                    'default suite parameters')
PARSER.add_argument('--all-verdicts', action='store_true', default=False,
                    help='write all the verdicts, not only the failures')
PARSER.add_argument('--outfile', type=str, default=None,
                    help='path to the output result document')
PARSER.add_argument('--logfile', type=str, default=None,
                    help='path to the optional log file')


def summarize(verdicts):
    """Count the checks and the failures for each axiom.
    """
    summary = {}
    for verdict in verdicts:
        entry = summary.setdefault(verdict.axiom, {'checks': 0, 'failures': 0})
        entry['checks'] += 1
        if not verdict.passed:
            entry['failures'] += 1
    return summary


def xrverify(**kwargs):
    """Run a verification suite.
    """
    chrono = xChrono()
    config = load_suite_config(kwargs['configfile'])
    verdicts = run_suite(kwargs['suite'], config, kwargs['seed'])
    failures = [v for v in verdicts if not v.passed]
    logger.info('%d check(s), %d failure(s), all done %s.' %\
                (len(verdicts), len(failures), chrono))
    results = {'summary': summarize(verdicts), 'num_checks': len(verdicts),
               'num_failures': len(failures)}
    if kwargs['all_verdicts']:
        return xResultDocument('verify', kwargs, results, verdicts)
    return xResultDocument('verify', kwargs, results, failures)


if __name__=='__main__':
    args = PARSER.parse_args()
    startmsg()
    sys.exit(execute(xrverify, **args.__dict__))
