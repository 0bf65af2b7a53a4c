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


"""Minimal timing utilities for the long-running operations.
"""


import time


class xChrono:

    """Chronometer with named laps.

    The elapsed time is measured with a monotonic clock from the moment the
    object is created (or reset). Each call to lap() closes a lap, so that a
    run over several suites (or scales) can be broken down in the log.

    Examples
    --------
    >>> from xrips.utils.profile import xChrono
    >>> chrono = xChrono()
    >>> for name in ['dimension', 'excision']:
    ...     run(name)
    ...     chrono.lap(name)
    >>> logger.info(chrono.summary())
    """

    def __init__(self):
        """Constructor.
        """
        self.reset()

    def reset(self):
        """Reset the chronometer and forget all the laps.
        """
        self.start_time = time.perf_counter()
        self.last_time = self.start_time
        self.laps = []

    def __call__(self):
        """Return the time elapsed since the start.
        """
        return time.perf_counter() - self.start_time

    def lap(self, name):
        """Close a lap and return its duration in seconds.

        Args
        ----
        name : str
            The name the lap is recorded under.
        """
        now = time.perf_counter()
        elapsed = now - self.last_time
        self.last_time = now
        self.laps.append((name, elapsed))
        return elapsed

    def summary(self):
        """Return a one-line breakdown of the laps, slowest first.
        """
        if not self.laps:
            return 'no laps %s' % self
        laps = sorted(self.laps, key=lambda item: item[1], reverse=True)
        text = ', '.join('%s %.3f s' % (name, elapsed) for name, elapsed in laps)
        return '%s %s' % (text, self)

    def __enter__(self):
        self.reset()
        return self

    def __exit__(self, *exc_info):
        return False

    def __str__(self):
        """String formatting.
        """
        return '[t0 + %.3f s]' % self()
