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


"""Default parameters of the verification suites run by xrverify.

An alternative configuration file (passed through --configfile) only needs
to define the parameters it changes.
"""


"""Dimension axiom.
"""
DIMENSION_COEFFICIENTS = ['z', 'q', 'zp:2']
DIMENSION_MAX_DIM = 2

"""Excision: random nested graph relations, with A enlarged so that the
hypothesis holds.
"""
EXCISION_TRIALS = 200
EXCISION_MAX_POINTS = 8
EXCISION_EDGE_PROBABILITY = 0.4
EXCISION_SUBSET_PROBABILITY = 0.5
EXCISION_COEFFICIENTS = 'q'
EXCISION_MAX_DIM = 3

"""Exactness of the long exact sequence of a pair.
"""
EXACTNESS_TRIALS = 50
EXACTNESS_MAX_POINTS = 8
EXACTNESS_EDGE_PROBABILITY = 0.5
EXACTNESS_COEFFICIENTS = 'q'
EXACTNESS_MAX_DIM = 3

"""Homotopy: exhaustive over the symmetric relations on few points (each one
also relative to a random subset), plus the 4-cycle, absolute and relative to
the listed subsets.
"""
HOMOTOPY_MAX_POINTS = 4
HOMOTOPY_NUM_STEPS = 4
HOMOTOPY_SCALE = 0.4
HOMOTOPY_CYCLE_NUM_STEPS = 5
HOMOTOPY_CYCLE_SCALE = 0.3
HOMOTOPY_CYCLE_SUBSETS = [[0, 2], [0, 1]]
HOMOTOPY_COEFFICIENTS = 'q'
HOMOTOPY_MAX_DIM = 2

"""Acyclicity of the discretized interval (the scales are multiples of the
spacing of the points).
"""
INTERVAL_MAX_POINTS = 8
INTERVAL_SCALE_FACTORS = [1.5, 2.5, 10.]
INTERVAL_COEFFICIENTS = 'q'
INTERVAL_MAX_DIM = 3

"""Dowker duality.
"""
DOWKER_TRIALS = 100
DOWKER_MAX_POINTS = 7
DOWKER_MAX_SETS = 5
DOWKER_COEFFICIENTS = 'q'
DOWKER_MAX_DIM = 3

"""Functoriality.
"""
FUNCTORIALITY_TRIALS = 20
FUNCTORIALITY_MAX_POINTS = 5
FUNCTORIALITY_EDGE_PROBABILITY = 0.6
FUNCTORIALITY_COEFFICIENTS = 'q'
FUNCTORIALITY_MAX_DIM = 2

"""Semi-uniform spaces generated by graphs.
"""
GRAPH_TRIALS = 20
GRAPH_MAX_VERTICES = 10
GRAPH_EDGE_PROBABILITY = 0.5
GRAPH_COEFFICIENTS = 'z'
GRAPH_MAX_DIM = 3

"""Semi-uniform structures of finite metric spaces at a given scale.
"""
METRIC_TRIALS = 20
METRIC_MAX_POINTS = 8
METRIC_MAX_DISTANCE = 5
METRIC_SCALES_PER_TRIAL = 3
METRIC_COEFFICIENTS = 'z'
METRIC_MAX_DIM = 3
