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


"""Logging utilities, building on top of the python logging module.

Everything goes to the standard error, so that the result documents written
by the executables on the standard output stay machine-readable. The initial
level can be set through the XRIPS_LOGLEVEL environment variable.
"""

import contextlib
import logging
import os
import sys


logger = logging.getLogger('xrips')


""" Configure the main terminal logger.
"""
consoleHandler = logging.StreamHandler(sys.stderr)
consoleHandler.setLevel(logging.DEBUG)
consoleFormatter = logging.Formatter(">>> %(message)s")
consoleHandler.setFormatter(consoleFormatter)
logger.addHandler(consoleHandler)


def set_verbosity(level):
    """Set the logging level by name (e.g., 'INFO', 'WARNING').

    Args
    ----
    level : str
        The name of a level of the logging module (case insensitive).
    """
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError('unknown logging level "%s"' % level)
    logger.setLevel(value)


def suppress_logging():
    """Set the logging level to critical.

    This is imported by the unit tests, which don't need logging.
    """
    logger.setLevel(logging.CRITICAL)


set_verbosity(os.environ.get('XRIPS_LOGLEVEL', 'DEBUG'))


class xFileFormatter(logging.Formatter):

    """Logging file formatter class.

    Unlike the terminal, the log file carries the time and the level of each
    record.
    """

    def __init__(self):
        """Constructor.
        """
        logging.Formatter.__init__(self, '%(asctime)s [%(levelname)s] '
                                   '%(message)s', '%Y-%m-%d %H:%M:%S')


class xFileHandler(logging.FileHandler):

    """Logging file handler class, duplicating the terminal log to a file.
    """

    def __init__(self, file_path, mode='a', encoding='utf-8', delay=False):
        """Constructor.
        """
        logger.info('Opening output log file %s...' % file_path)
        logging.FileHandler.__init__(self, file_path, mode, encoding, delay)
        self.setLevel(logging.DEBUG)
        self.setFormatter(xFileFormatter())
        logger.addHandler(self)

    def close(self):
        """Detach from the logger and close the file.
        """
        if self in logger.handlers:
            logger.removeHandler(self)
            logging.FileHandler.close(self)
            logger.info('Output log file %s closed.' % self.baseFilename)


@contextlib.contextmanager
def logfile(file_path=None):
    """Duplicate the log to a file for the duration of a with block.

    Nothing happens when file_path is None.
    """
    if file_path is None:
        yield None
        return
    handler = xFileHandler(file_path)
    try:
        yield handler
    finally:
        handler.close()


def startmsg():
    """Print the start message (on the standard error).
    """
    from xrips.__version__ import TAG, BUILD_DATE
    sys.stderr.write('\n    Welcome to xrips %s (built on %s).\n\n' %\
                     (TAG, BUILD_DATE))
    sys.stderr.write('    Copyright (C) 2026, the xrips team.\n\n'
                     '    xrips comes with ABSOLUTELY NO WARRANTY.\n'
                     '    This is free software, and you are welcome to '
                     'redistribute it under certain\n    conditions. See the '
                     'LICENSE file for details.\n\n')
