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


"""Collection of os-related utilities.
"""


import os
import tempfile

from xrips.utils.logging_ import logger
from xrips.utils.errors import xInputError


def check_input_file(file_path, extension=None):
    """Make sure that an input file exists (and, optionally, has the right
    extension).

    Raises xInputError if anything fails, which the executables turn into
    the input-error exit code.
    """
    if not os.path.exists(file_path):
        raise xInputError('input file %s does not exist' % file_path)
    if not os.path.isfile(file_path):
        raise xInputError('input file %s is not a file' % file_path)
    if extension is not None and not file_path.endswith('.%s' % extension):
        raise xInputError('input file %s is not a .%s file' %\
                          (file_path, extension))


def read_text(file_path):
    """Read an input text file in one shot.
    """
    check_input_file(file_path)
    logger.info('Reading %s...' % file_path)
    try:
        with open(file_path, encoding='utf-8') as input_file:
            return input_file.read()
    except UnicodeDecodeError as e:
        raise xInputError('input file %s is not valid UTF-8 (%s)' %\
                          (file_path, e))


def mkdir(dir_path):
    """Create a directory (unless it already exists).

    Return 0 upon succesfull operation, 1 otherwise.
    """
    if os.path.isdir(dir_path):
        return 0
    logger.info('About to create folder %s...' % dir_path)
    try:
        os.makedirs(dir_path)
    except OSError as e:
        logger.error('Could not create folder (%s)' % e)
        return 1
    return 0


def write_text(file_path, text):
    """Write a text file, creating the parent folder if necessary.

    The text goes to a temporary file in the same folder first, which is then
    renamed, so that an existing output is never left half-written.
    """
    folder = os.path.dirname(os.path.abspath(file_path))
    if mkdir(folder):
        raise xInputError('cannot create the output folder %s' % folder)
    logger.info('Writing %s...' % file_path)
    handle, tmp_path = tempfile.mkstemp(dir=folder, suffix='.tmp')
    try:
        with os.fdopen(handle, 'w', encoding='utf-8') as output_file:
            output_file.write(text)
        os.replace(tmp_path, file_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    return file_path
