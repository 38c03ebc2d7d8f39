# -*- coding: utf-8
"""
sgspec.twodist._configkeys: the known settings keys and their factories

Each factory takes a resolved value (or the text of an environment variable)
and returns the checked setting; it raises ValueError for unusable values.

>>> _factories[('search', 'max_n')]('8')
8
>>> _factories[('search', 'max_n')](11)
Traceback (most recent call last):
  ...
ValueError: Integer in 1..10 expected; found 11!
>>> _factories[('codes', 'tolerance')]('1e-6')
1e-06
>>> _factories[('limits', 'wall_clock')](None) is None
True
"""

# Python compatibility:
from __future__ import absolute_import

from six import integer_types, string_types

# Standard library:
from collections import OrderedDict

# Local imports:
from sgspec.twodist.enumeration import HARD_LIMIT

__all__ = [
    'SECTIONS',
    'integer',
    'positive_number',
    ]


def integer(lo, hi=None, optional=False):
    """
    Return a factory for integers in lo..hi

    >>> integer(1)(True)
    Traceback (most recent call last):
      ...
    ValueError: Integer >= 1 expected; found True!
    >>> integer(0)(2.0)
    2
    >>> integer(0)(2.5)
    Traceback (most recent call last):
      ...
    ValueError: Integer >= 0 expected; found 2.5!
    """
    if hi is None:
        expected = 'Integer >= %d' % (lo,)
    else:
        expected = 'Integer in %d..%d' % (lo, hi)

    def factory(value):
        if value is None and optional:
            return None
        res = None
        if isinstance(value, bool):
            pass
        elif isinstance(value, integer_types):
            res = value
        elif isinstance(value, float):
            if value.is_integer():
                res = int(value)
        elif isinstance(value, string_types):
            try:
                res = int(value.strip())
            except ValueError:
                pass
        if (res is None
                or res < lo
                or (hi is not None and res > hi)):
            raise ValueError('%(expected)s expected; found %(value)r!'
                             % dict(expected=expected, value=value))
        return res
    factory.__name__ = 'integer'
    return factory


def positive_number(optional=False):
    """
    Return a factory for positive (floating point) numbers

    >>> positive_number()(0)
    Traceback (most recent call last):
      ...
    ValueError: Positive number expected; found 0!
    >>> positive_number(optional=True)('none') is None
    True
    """

    def factory(value):
        if optional and (value is None
                         or (isinstance(value, string_types)
                             and value.strip().lower() in ('none',
                                                           'unlimited'))):
            return None
        res = None
        if isinstance(value, bool):
            pass
        elif isinstance(value, integer_types + (float,)):
            res = float(value)
        elif isinstance(value, string_types):
            try:
                res = float(value.strip())
            except ValueError:
                pass
        if res is None or not res > 0:
            raise ValueError('Positive number expected; found %(value)r!'
                             % locals())
        return res
    factory.__name__ = 'positive_number'
    return factory


_factories = OrderedDict([
    (('search',), dict),
    (('search', 'max_n'), integer(1, HARD_LIMIT)),
    (('search', 'jobs'), integer(1)),
    (('search', 'shard_depth'), integer(1, HARD_LIMIT)),
    (('search', 'witness_limit'), integer(0)),
    (('limits',), dict),
    (('limits', 'wall_clock'), positive_number(optional=True)),
    (('limits', 'arena_mib'), integer(16, optional=True)),
    (('codes',), dict),
    (('codes', 'tolerance'), positive_number()),
    ])

SECTIONS = [key[0] for key in _factories if len(key) == 1]


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
