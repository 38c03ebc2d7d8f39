# -*- coding: utf-8
"""
sgspec.twodist.reports: JSON serialization of exact values and reports

Rationals become "p" or "p/q" strings; quadratic values become objects with
rational "a", "b" and an integer "m".  Reports keep their key order and are
written compactly, so equal reports are byte-identical.

>>> number_to_json(Fraction(-3, 6))
'-1/2'
>>> dumps(number_to_json((1 + AlgebraicNumber.sqrt(33)) / 2))
'{"a":"1/2","b":"1/2","m":33}'
>>> number_from_json({'a': '0', 'b': '1', 'm': 3})
<AlgebraicNumber sqrt(3)>
>>> number_from_json('7/3')
<AlgebraicNumber 7/3>
"""

# Python compatibility:
from __future__ import absolute_import

from six import integer_types, string_types

# Standard library:
import json
from collections import OrderedDict
from fractions import Fraction

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber, as_number, rational_text
from sgspec.twodist.exceptions import BadFormat

__all__ = [
    'dumps',
    'loads',
    'number_from_json',
    'number_to_json',
    'poly_to_json',
    ]


def number_to_json(value):
    value = as_number(value)
    if value.is_rational:
        return rational_text(value.a)
    res = OrderedDict()
    res['a'] = rational_text(value.a)
    res['b'] = rational_text(value.b)
    res['m'] = value.m
    return res


def _rational(text):
    if isinstance(text, integer_types):
        return Fraction(text)
    if not isinstance(text, string_types):
        raise BadFormat('Rational "p/q" expected; found %(text)r!'
                        % locals())
    try:
        return Fraction(text)
    except ValueError:
        raise BadFormat('Rational "p/q" expected; found %(text)r!'
                        % locals())


def number_from_json(obj):
    if isinstance(obj, dict):
        try:
            return AlgebraicNumber(_rational(obj['a']),
                                   _rational(obj['b']),
                                   int(obj['m']))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, BadFormat):
                raise
            raise BadFormat('Quadratic number {"a", "b", "m"} expected!')
    return AlgebraicNumber(_rational(obj))


def poly_to_json(poly):
    return [int(c) for c in poly]


def dumps(obj):
    return json.dumps(obj, separators=(',', ':'))


def loads(text):
    try:
        return json.loads(text, object_pairs_hook=OrderedDict)
    except ValueError as e:
        raise BadFormat('Invalid JSON report: %s' % (e,))


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
