# -*- coding: utf-8
"""
sgspec.twodist.exceptions: error classes

Every domain error is a ValueError with a `code` attribute; the command line
interface reports that code and maps the class to an exit status.

>>> err = DuplicateEdge('Duplicate edge (0, 1)!')
>>> isinstance(err, ValueError)
True
>>> err.code
'DUPLICATE_EDGE'
>>> str(err)
'Duplicate edge (0, 1)!'
>>> LimitExceeded('too large').exit_status
3
"""

# Python compatibility:
from __future__ import absolute_import

__all__ = [
    'SgspecError',
    # graphs:
    'DuplicateEdge',
    'LoopEdge',
    'IndexOutOfRange',
    'InvalidColoring',
    # exact algebra:
    'NonIntegerEntries',
    'NotSymmetric',
    'UnsupportedDegree',
    # spectral:
    'ReducibleMinpoly',
    # search:
    'LimitExceeded',
    # constructions:
    'UnknownName',
    'BadParams',
    'VerificationFailed',
    # codes:
    'NotTopEigenvalue',
    'DimensionTooSmall',
    'NotUnit',
    'AmbiguousProduct',
    'NumericFailure',
    # files:
    'BadFormat',
    ]


class SgspecError(ValueError):
    code = 'ERROR'
    exit_status = 2


class DuplicateEdge(SgspecError):
    code = 'DUPLICATE_EDGE'


class LoopEdge(SgspecError):
    code = 'LOOP'


class IndexOutOfRange(SgspecError):
    code = 'INDEX_OUT_OF_RANGE'


class InvalidColoring(SgspecError):
    code = 'INVALID_COLORING'


class NonIntegerEntries(SgspecError):
    code = 'NON_INTEGER_ENTRIES'


class NotSymmetric(SgspecError):
    code = 'NOT_SYMMETRIC'


class UnsupportedDegree(SgspecError):
    """
    An operation needs ordered-field arithmetic, which we have for rational
    and quadratic values only; or two quadratic fields were mixed.
    """
    code = 'UNSUPPORTED_DEGREE'


class ReducibleMinpoly(SgspecError):
    code = 'REDUCIBLE_MINPOLY'


class LimitExceeded(SgspecError):
    code = 'LIMIT_EXCEEDED'
    exit_status = 3


class UnknownName(SgspecError):
    code = 'UNKNOWN_NAME'


class BadParams(SgspecError):
    code = 'BAD_PARAMS'


class VerificationFailed(SgspecError):
    code = 'VERIFICATION_FAILED'
    exit_status = 1


class NotTopEigenvalue(SgspecError):
    code = 'NOT_TOP_EIGENVALUE'


class DimensionTooSmall(SgspecError):
    code = 'DIMENSION_TOO_SMALL'


class NotUnit(SgspecError):
    code = 'NOT_UNIT'


class AmbiguousProduct(SgspecError):
    code = 'AMBIGUOUS_PRODUCT'


class NumericFailure(SgspecError):
    code = 'NUMERIC_FAILURE'


class BadFormat(SgspecError):
    code = 'BAD_FORMAT'


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
