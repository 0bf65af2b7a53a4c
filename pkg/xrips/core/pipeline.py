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



"""Single entry point for all the executables, and scripted access to them.

We need to import the xrips executables but we don't have an __init__ file in
there (and we don't want to add one).
"""


import sys

from xrips import XRIPS_BIN
sys.path.append(XRIPS_BIN)
sys.dont_write_bytecode = 1
from xrhomology import xrhomology, PARSER as XRHOMOLOGY_PARSER
from xrgraph import xrgraph, PARSER as XRGRAPH_PARSER
from xrclosure import xrclosure, PARSER as XRCLOSURE_PARSER
from xrsweep import xrsweep, PARSER as XRSWEEP_PARSER
from xrverify import xrverify, PARSER as XRVERIFY_PARSER

from xrips.core.fileio import EXIT_INPUT_ERROR, execute
from xrips.utils.logging_ import logger, startmsg


COMMANDS = {
    'homology': (xrhomology, XRHOMOLOGY_PARSER),
    'graph': (xrgraph, XRGRAPH_PARSER),
    'closure': (xrclosure, XRCLOSURE_PARSER),
    'sweep': (xrsweep, XRSWEEP_PARSER),
    'verify': (xrverify, XRVERIFY_PARSER)
}

COMMAND_NAMES = ['homology', 'graph', 'closure', 'sweep', 'verify']


def run_command(argv):
    """Run a command line (the subcommand followed by its switches) and return
    the exit code: 0 on success, 1 when a verification fails, 2 on an input
    error.
    """
    if not argv or argv[0] not in COMMANDS:
        logger.error('usage: xrips {%s} [switches]' % ','.join(COMMAND_NAMES))
        return EXIT_INPUT_ERROR
    function, parser = COMMANDS[argv[0]]
    try:
        kwargs = parser.parse_args(argv[1:]).__dict__
    except SystemExit as e:
        return e.code
    return execute(function, **kwargs)


def main():
    """Console script.
    """
    startmsg()
    sys.exit(run_command(sys.argv[1:]))


class xPipeline:

    """Scripted access to the executables.

    Keyword arguments are turned into command-line switches (underscores
    into dashes, boolean flags into bare switches), validated through the
    parser of the executable, and the result documents are collected.
    """

    def __init__(self):
        """Constructor.
        """
        self.documents = []

    def command_line(self, **kwargs):
        """Turn a dictionary into a list of switches understood by argparse.
        """
        switches = []
        for key, value in kwargs.items():
            key = '--%s' % key.replace('_', '-')
            if value is True:
                switches.append(key)
            elif value is False or value is None:
                continue
            else:
                switches += [key, '%s' % value]
        return switches

    def run(self, command, **kwargs):
        """Run an executable and return its result document.

        Errors are raised, not turned into exit codes.
        """
        function, parser = COMMANDS[command]
        kwargs = parser.parse_args(self.command_line(**kwargs)).__dict__
        doc = function(**kwargs)
        self.documents.append(doc)
        return doc

    def homology(self, **kwargs):
        """Run xrhomology.
        """
        return self.run('homology', **kwargs)

    def graph(self, **kwargs):
        """Run xrgraph.
        """
        return self.run('graph', **kwargs)

    def closure(self, **kwargs):
        """Run xrclosure.
        """
        return self.run('closure', **kwargs)

    def sweep(self, **kwargs):
        """Run xrsweep.
        """
        return self.run('sweep', **kwargs)

    def verify(self, **kwargs):
        """Run xrverify.
        """
        return self.run('verify', **kwargs)
