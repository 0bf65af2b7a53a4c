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


"""xrips: Vietoris-Rips homology of finite semi-uniform spaces.
"""


import os

PACKAGE_NAME = 'xrips'

"""Basic folder structure of the package.
"""
XRIPS_ROOT = os.path.abspath(os.path.dirname(__file__))
XRIPS_BIN = os.path.join(XRIPS_ROOT, 'bin')
XRIPS_CONFIG = os.path.join(XRIPS_ROOT, 'config')


"""Version of the JSON schemas for space and result documents.
"""
SCHEMA_VERSION = '1'
