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



from setuptools import setup, find_packages

from xrips import PACKAGE_NAME
from xrips.__version__ import TAG


_AUTHOR = 'The xrips team'
_DESCRIPTION = 'Vietoris-Rips homology of finite semi-uniform spaces'
_LICENSE = 'GNU General Public License v3 or later'
_PACKAGES = find_packages(exclude=['xrips.test'])
_PACKAGE_DATA = {'xrips': ['bin/*.py', 'config/data/*']}
_CLASSIFIERS = [
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: '
    'GNU General Public License v3 or later (GPLv3+)',
    'Operating System :: OS Independent',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: Implementation :: CPython',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Development Status :: 3 - Alpha'
]
_ENTRY_POINTS = {
    'console_scripts': ['xrips = xrips.core.pipeline:main']
}
_DEPENDENCIES = [
    'numpy',
    'scipy',
    'sympy>=1.13',
    'networkx',
    'joblib'
]
_EXTRAS = {
    'test': ['hypothesis', 'pytest']
}


_KWARGS = dict(name=PACKAGE_NAME,
               version=TAG,
               author=_AUTHOR,
               description=_DESCRIPTION,
               license=_LICENSE,
               packages=_PACKAGES,
               package_data=_PACKAGE_DATA,
               include_package_data=True,
               classifiers=_CLASSIFIERS,
               entry_points=_ENTRY_POINTS,
               python_requires='>=3.8',
               install_requires=_DEPENDENCIES,
               extras_require=_EXTRAS)


setup(**_KWARGS)
