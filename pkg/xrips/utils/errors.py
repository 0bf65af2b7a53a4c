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


"""Exception hierarchy for the package.

Input errors (anything wrong with a file or a command-line argument) map to
the exit code 2 of the executables; all the other errors are raised by the
library operations when a precondition is violated.
"""


class xRipsError(Exception):

    """Base class for all the xrips exceptions.
    """

    pass


class xInputError(xRipsError, ValueError):

    """Base class for the input errors.

    Args
    ----
    message : str
        The error message.

    line : int, optional
        The (1-based) line of the input where the problem was found.

    column : int, optional
        The (1-based) column of the input where the problem was found.

    source : str, optional
        The name of the input (typically a file path).
    """

    CATEGORY = 'input error'

    def __init__(self, message, line=None, column=None, source=None):
        """Constructor.
        """
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        xRipsError.__init__(self, self.diagnostic())

    def diagnostic(self):
        """Return the full diagnostic string, anchored to the input position
        when this is known.
        """
        anchor = ''
        if self.source is not None:
            anchor += '%s:' % self.source
        if self.line is not None:
            anchor += '%d:' % self.line
            if self.column is not None:
                anchor += '%d:' % self.column
        if anchor:
            anchor += ' '
        return '%s%s: %s' % (anchor, self.CATEGORY, self.message)


class xParseError(xInputError):

    CATEGORY = 'malformed input'


class xAsymmetricMatrixError(xInputError):

    CATEGORY = 'asymmetric matrix'


class xNonzeroDiagonalError(xInputError):

    CATEGORY = 'nonzero diagonal'


class xNegativeDistanceError(xInputError):

    CATEGORY = 'negative distance'


class xIndexRangeError(xInputError, IndexError):

    CATEGORY = 'index out of range'


class xDuplicateLabelError(xInputError):

    CATEGORY = 'duplicate label'


class xEmptySpaceError(xInputError):

    CATEGORY = 'empty space'


class xDomainError(xRipsError, ValueError):

    """Base class for the errors raised when the preconditions of a library
    operation are not met.
    """

    pass


class xSpaceMismatchError(xDomainError):
    pass


class xNotSymmetricError(xDomainError):
    pass


class xNotACoverError(xDomainError):
    pass


class xNotInteriorCoverError(xDomainError):
    pass


class xEmptySetError(xDomainError):
    pass


class xNegativeScaleError(xDomainError):
    pass


class xSemiUniformError(xDomainError):
    pass


class xSimplicialMapError(xDomainError):
    pass


class xCoefficientError(xDomainError):
    pass


class xNoMinimumError(xDomainError):
    pass


class xHypothesisError(xDomainError):
    pass


class xContinuityError(xDomainError):
    pass
