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


"""Verdicts returned by the checking and verification operations.
"""


import numpy


class xVerdict:

    """Outcome of a check.

    A verdict evaluates to True in a boolean context if and only if the
    check passed, so that it can be used directly in conditions and
    assertions.

    Args
    ----
    passed : bool
        Whether the check passed.

    witness : dict, optional
        Data documenting the outcome (mandatory and non-empty on failure).

    notes : list of str, optional
        Free-form remarks (e.g., a hypothesis that was not met).
    """

    def __init__(self, passed, witness=None, notes=None):
        """Constructor.
        """
        self.passed = bool(passed)
        self.witness = dict(witness or {})
        self.notes = list(notes or [])
        if not self.passed and not self.witness:
            raise RuntimeError('A failed verdict needs a witness')

    def __bool__(self):
        """Truth value.
        """
        return self.passed

    def __getitem__(self, key):
        """Shortcut to the witness entries.
        """
        return self.witness[key]

    def as_dict(self):
        """Return a JSON-friendly representation.
        """
        return {
            'passed': self.passed,
            'witness': _jsonify(self.witness),
            'notes': list(self.notes)
        }

    def __str__(self):
        """String formatting.
        """
        text = 'PASS' if self.passed else 'FAIL'
        if self.witness:
            text += ' %s' % _jsonify(self.witness)
        for note in self.notes:
            text += ' (%s)' % note
        return text


class xAxiomVerdict(xVerdict):

    """Outcome of the verification of an axiom (or theorem) on a concrete
    instance.

    Args
    ----
    axiom : str
        The name of the axiom, e.g. 'excision'.

    instance : str
        A short description of the instance the axiom was checked on.
    """

    def __init__(self, axiom, instance, passed, witness=None, notes=None):
        """Constructor.
        """
        xVerdict.__init__(self, passed, witness, notes)
        self.axiom = axiom
        self.instance = instance

    def as_dict(self):
        """Overloaded method.
        """
        data = {'axiom': self.axiom, 'instance': self.instance}
        data.update(xVerdict.as_dict(self))
        return data

    def __str__(self):
        """String formatting.
        """
        return '%s on %s: %s' % (self.axiom, self.instance,
                                 xVerdict.__str__(self))


def _jsonify(value):
    """Turn the witness data into plain JSON types (sets and tuples become
    sorted lists, objects with an as_dict() method are expanded).
    """
    if hasattr(value, 'as_dict'):
        return _jsonify(value.as_dict())
    if isinstance(value, dict):
        return dict((str(key), _jsonify(item)) for key, item in value.items())
    if isinstance(value, (set, frozenset)):
        return [_jsonify(item) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [_jsonify(item) for item in value]
    if isinstance(value, numpy.ndarray):
        return _jsonify(value.tolist())
    if isinstance(value, numpy.generic):
        return value.item()
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)
