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



"""Unit tests for the core.suites module.
"""


import os
import shutil
import tempfile
import unittest

from xrips.core.suites import *
from xrips.utils.errors import xInputError
from xrips.utils.logging_ import suppress_logging
suppress_logging()


"""Trimmed-down parameters, so that each suite runs in a few seconds.
"""
SMALL_CONFIG = {
    'EXCISION_TRIALS': 10,
    'EXCISION_MAX_POINTS': 6,
    'EXACTNESS_TRIALS': 5,
    'EXACTNESS_MAX_POINTS': 6,
    'HOMOTOPY_MAX_POINTS': 3,
    'INTERVAL_MAX_POINTS': 5,
    'DOWKER_TRIALS': 10,
    'FUNCTORIALITY_TRIALS': 5,
    'GRAPH_TRIALS': 5,
    'GRAPH_MAX_VERTICES': 7,
    'METRIC_TRIALS': 5,
    'METRIC_MAX_POINTS': 6
}


def small_config():
    """Return the default configuration with fewer (and smaller) trials.
    """
    config = default_config()
    config.update(SMALL_CONFIG)
    return config


class TestSuites(unittest.TestCase):

    """Unit test for the verification suites.
    """

    def test_config(self):
        """Default and custom configurations.
        """
        config = default_config()
        self.assertEqual(config['EXCISION_TRIALS'], 200)
        self.assertTrue(all(key.isupper() for key in config))
        self.assertEqual(load_suite_config(), config)
        folder = tempfile.mkdtemp()
        try:
            file_path = os.path.join(folder, 'custom.py')
            with open(file_path, 'w') as output_file:
                output_file.write('DOWKER_TRIALS = 3\nUNKNOWN_KEY = 1\n')
            custom = load_suite_config(file_path)
            self.assertEqual(custom['DOWKER_TRIALS'], 3)
            self.assertEqual(custom['EXCISION_TRIALS'], 200)
            text_path = os.path.join(folder, 'custom.txt')
            with open(text_path, 'w') as output_file:
                output_file.write('DOWKER_TRIALS = 3\n')
            self.assertRaises(xInputError, load_suite_config, text_path)
        finally:
            shutil.rmtree(folder)
        self.assertRaises(xInputError, load_suite_config, 'missing.py')

    def test_suites(self):
        """Every suite passes on its seeded instances.
        """
        config = small_config()
        for name in SUITE_NAMES:
            verdicts = run_suite(name, config, seed=1)
            self.assertTrue(len(verdicts) > 0, name)
            for verdict in verdicts:
                self.assertTrue(verdict, verdict)

    def test_axioms(self):
        """The axiom names of the verdicts.
        """
        config = small_config()
        self.assertEqual(set(v.axiom for v in run_suite('dimension', config)),
                         set(['dimension']))
        self.assertEqual(len(run_suite('dimension', config)), 3)
        self.assertEqual(len(run_suite('interval', config)), 12)
        axioms = set(v.axiom for v in run_suite('metric', config))
        self.assertEqual(axioms, set(['scale', 'classical']))

    def test_reproducibility(self):
        """The same seed gives the same instances.
        """
        config = small_config()
        first = [v.instance for v in run_suite('dowker', config, seed=7)]
        second = [v.instance for v in run_suite('dowker', config, seed=7)]
        self.assertEqual(first, second)
        self.assertRaises(xInputError, run_suite, 'persistence')

    def test_symmetric_relations(self):
        """Exhaustive enumeration.
        """
        self.assertEqual(len(list(symmetric_relations(3))), 8)
        self.assertTrue(all(u.is_symmetric() for u in
                            symmetric_relations(3)))


if __name__ == '__main__':
    unittest.main()
