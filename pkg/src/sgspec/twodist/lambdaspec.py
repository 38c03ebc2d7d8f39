# -*- coding: utf-8
"""
sgspec.twodist.lambdaspec: exact numbers and eigenvalue specifications

Numbers are written with integer (or decimal) literals, the four basic
operations, parentheses, and square roots:

>>> parse_number('3/2')
<AlgebraicNumber 3/2>
>>> parse_number('(1+sqrt(33))/2')
<AlgebraicNumber 1/2+1/2*sqrt(33)>
>>> parse_number('-2/5 + 3*sqrt(12)')
<AlgebraicNumber -2/5+6*sqrt(3)>

An eigenvalue of degree > 2 is given by its minimal polynomial (coefficients
in ascending order) and an isolating interval (lo, hi]:

>>> parse_lambda_spec('minpoly:[-2,0,0,1]:interval:[1,2]')
<SpectralQuery root of x^3 - 2 in (1, 2]>
>>> parse_lambda_spec('sqrt(3)')
<SpectralQuery sqrt(3)>
"""

# Python compatibility:
from __future__ import absolute_import

from six.moves import range

# Standard library:
from fractions import Fraction
from tokenize import NAME

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber, as_number
from sgspec.twodist.exceptions import BadFormat, UnsupportedDegree
from sgspec.twodist.parse import generate_token_groups
from sgspec.twodist.spectral import SpectralQuery

__all__ = [
    'parse_lambda_spec',
    'parse_number',
    'parse_rational',
    ]

FUNCTIONS = {
    'sqrt': AlgebraicNumber.sqrt,
    }


def _groups(text):
    try:
        return [grp for grp in generate_token_groups(text)
                if not grp.is_terminator]
    except ValueError as e:
        raise BadFormat('%(text)r: %(e)s' % locals())


class _Expression(object):
    """
    Recursive descent over a list of TokensGroups:

      expr   := term (('+' | '-') term)*
      term   := factor (('*' | '/') factor)*
      factor := ('+' | '-') factor | atom
      atom   := NUMBER | '(' expr ')' | 'sqrt' '(' expr ')'
    """

    def __init__(self, groups, text):
        self.groups = groups
        self.text = text
        self.pos = 0

    def error(self, expected):
        text = self.text
        if self.pos < len(self.groups):
            found = repr(self.groups[self.pos])
        else:
            found = 'the end'
        raise BadFormat('%(text)r: %(expected)s expected; found %(found)s!'
                        % locals())

    def peek_op(self, *ops):
        if self.pos >= len(self.groups):
            return None
        grp = self.groups[self.pos]
        for op in ops:
            if grp.is_op(op):
                return op
        return None

    def expect_op(self, op):
        if not self.peek_op(op):
            self.error(repr(op))
        self.pos += 1

    def parse(self):
        if not self.groups:
            self.error('A number')
        res = self.expr()
        if self.pos < len(self.groups):
            self.error('An operator')
        return res

    def expr(self):
        res = self.term()
        op = self.peek_op('+', '-')
        while op:
            self.pos += 1
            if op == '+':
                res = res + self.term()
            else:
                res = res - self.term()
            op = self.peek_op('+', '-')
        return res

    def term(self):
        res = self.factor()
        op = self.peek_op('*', '/')
        while op:
            self.pos += 1
            if op == '*':
                res = res * self.factor()
            else:
                res = res / self.factor()
            op = self.peek_op('*', '/')
        return res

    def factor(self):
        op = self.peek_op('+', '-')
        if op:
            self.pos += 1
            val = self.factor()
            return -val if op == '-' else val
        return self.atom()

    def atom(self):
        if self.pos >= len(self.groups):
            self.error('A number')
        grp = self.groups[self.pos]
        if grp.is_number:
            self.pos += 1
            try:
                return as_number(Fraction(grp.text))
            except ValueError:
                self.error('A rational literal')
        if grp.is_op('('):
            self.pos += 1
            res = self.expr()
            self.expect_op(')')
            return res
        if grp.ttype == NAME and grp.dotted_name in FUNCTIONS:
            function = FUNCTIONS[grp.dotted_name]
            self.pos += 1
            self.expect_op('(')
            arg = self.expr()
            self.expect_op(')')
            if not arg.is_rational:
                raise UnsupportedDegree('%s(%s): nested square roots are'
                                        ' not supported!'
                                        % (grp.dotted_name, arg))
            return function(arg.a)
        self.error('A number')


def parse_number(text):
    """
    Evaluate a number text to an exact AlgebraicNumber

    >>> parse_number('sqrt(2) + sqrt(3)')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.UnsupportedDegree: Can't mix sqrt(2) and sqrt(3)!
    >>> parse_number('sqrt(sqrt(2))')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.UnsupportedDegree: sqrt(sqrt(2)): nested square roots are not supported!
    >>> parse_number('1/(2-2)')
    Traceback (most recent call last):
      ...
    ZeroDivisionError: division by zero
    >>> parse_number('2 3')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadFormat: '2 3': An operator expected; found <NUMBER 3>!
    >>> parse_number('cbrt(2)')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadFormat: 'cbrt(2)': A number expected; found <NAME cbrt>!
    >>> parse_number('')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadFormat: '': A number expected; found the end!
    """
    return _Expression(_groups(text), text).parse()


def parse_rational(text):
    """
    >>> parse_rational('-2/10')
    Fraction(-1, 5)
    >>> parse_rational('sqrt(2)')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadFormat: 'sqrt(2)': rational number expected!
    """
    value = parse_number(text)
    if not value.is_rational:
        raise BadFormat('%(text)r: rational number expected!' % locals())
    return value.a


def _split_list(groups, text):
    """
    Split '[' item ',' item ... ']' into the groups of the items
    """
    if (len(groups) < 2
            or not groups[0].is_op('[')
            or not groups[-1].is_op(']')):
        raise BadFormat('%(text)r: [...] expected!' % locals())
    items = []
    buf = []
    depth = 0
    for grp in groups[1:-1]:
        if grp.opens_brace:
            depth += 1
        elif grp.closes_brace:
            depth -= 1
        elif depth == 0 and grp.is_op(','):
            items.append(buf)
            buf = []
            continue
        buf.append(grp)
    if buf:
        items.append(buf)
    return items


def _parse_minpoly_spec(groups, text):
    for i, expected in ((0, 'minpoly'), (1, ':')):
        if i >= len(groups) or groups[i].text != expected:
            raise BadFormat('%(text)r: minpoly:[...]:interval:[lo,hi]'
                            ' expected!' % locals())
    rest = groups[2:]
    split = None
    for i in range(len(rest) - 2):
        if (rest[i].is_op(':')
                and rest[i+1].text == 'interval'
                and rest[i+2].is_op(':')):
            split = i
            break
    if split is None:
        raise BadFormat('%(text)r: minpoly:[...]:interval:[lo,hi]'
                        ' expected!' % locals())
    coefficients = []
    for item in _split_list(rest[:split], text):
        value = _Expression(item, text).parse()
        if not value.is_rational or value.a.denominator != 1:
            raise BadFormat('%(text)r: integer coefficients expected;'
                            ' found %(value)s!' % locals())
        coefficients.append(int(value.a))
    bounds = []
    for item in _split_list(rest[split+3:], text):
        value = _Expression(item, text).parse()
        if not value.is_rational:
            raise BadFormat('%(text)r: rational interval bounds expected;'
                            ' found %(value)s!' % locals())
        bounds.append(value.a)
    if len(bounds) != 2:
        raise BadFormat('%(text)r: interval [lo,hi] expected!' % locals())
    return SpectralQuery.from_minpoly(coefficients, bounds)


def parse_lambda_spec(text):
    """
    Parse an eigenvalue specification to a SpectralQuery

    >>> q = parse_lambda_spec('minpoly:[-8,-1,1]:interval:[3,4]')
    >>> q.value
    <AlgebraicNumber 1/2+1/2*sqrt(33)>
    >>> parse_lambda_spec('minpoly:[-3,0,1]:interval:[-2,-1]').value
    <AlgebraicNumber -sqrt(3)>
    >>> parse_lambda_spec('minpoly:[0,-1,1]:interval:[1/2,2]')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.ReducibleMinpoly: x^2 - x is reducible (factor x)!
    >>> parse_lambda_spec('minpoly:[1,1/2]:interval:[-3,0]')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadFormat: 'minpoly:[1,1/2]:interval:[-3,0]': integer coefficients expected; found 1/2!
    """
    groups = _groups(text)
    if groups and groups[0].text == 'minpoly':
        return _parse_minpoly_spec(groups, text)
    return SpectralQuery.of(_Expression(groups, text).parse())


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
