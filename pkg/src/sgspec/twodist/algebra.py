# -*- coding: utf-8
"""
sgspec.twodist.algebra: exact rational and quadratic-irrational numbers

An AlgebraicNumber is a + b*sqrt(m) with rational a, b and a square-free
m >= 0; rational values have b = m = 0.  Arithmetic is exact, and so is
comparison: the sign of a + b*sqrt(m) is decided by comparing a**2 with
b**2 * m when the signs of a and b differ.

>>> r3 = AlgebraicNumber.sqrt(3)
>>> r3
<AlgebraicNumber sqrt(3)>
>>> r3 * r3
<AlgebraicNumber 3>
>>> r3 * r3 == 3
True
>>> (1 + AlgebraicNumber.sqrt(33)) / 2
<AlgebraicNumber 1/2+1/2*sqrt(33)>

Square factors are moved out of the radicand:

>>> AlgebraicNumber.sqrt(12)
<AlgebraicNumber 2*sqrt(3)>
>>> AlgebraicNumber.sqrt(4)
<AlgebraicNumber 2>
>>> AlgebraicNumber.sqrt(Fraction(1, 3))
<AlgebraicNumber 1/3*sqrt(3)>

Comparisons are exact:

>>> AlgebraicNumber(Fraction(7, 4)) > r3
True
>>> AlgebraicNumber(Fraction(173, 100)) < r3
True
>>> sorted([r3, 2, Fraction(3, 2)])
[Fraction(3, 2), <AlgebraicNumber sqrt(3)>, 2]

Values from two different quadratic fields can't be combined:

>>> r3 + AlgebraicNumber.sqrt(2)
Traceback (most recent call last):
  ...
sgspec.twodist.exceptions.UnsupportedDegree: Can't mix sqrt(3) and sqrt(2)!
"""

# Python compatibility:
from __future__ import absolute_import

from six import integer_types

# Standard library:
import math
from fractions import Fraction
from numbers import Rational

# Local imports:
from sgspec.twodist.exceptions import UnsupportedDegree

__all__ = [
    'AlgebraicNumber',
    'as_number',
    'rational_text',
    'squarefree_split',
    ]


def squarefree_split(m):
    """
    Return (s, r) with m = s**2 * r and r square-free

    >>> squarefree_split(12)
    (2, 3)
    >>> squarefree_split(33)
    (1, 33)
    >>> squarefree_split(0)
    (0, 0)
    >>> squarefree_split(49)
    (7, 1)
    """
    if m == 0:
        return (0, 0)
    s = 1
    k = 2
    while k * k <= m:
        kk = k * k
        while m % kk == 0:
            m //= kk
            s *= k
        k += 1
    return (s, m)


def rational_text(value):
    """
    Canonical text of a rational value: "p" for integers, "p/q" otherwise

    >>> rational_text(Fraction(-2, 4))
    '-1/2'
    >>> rational_text(Fraction(6, 3))
    '2'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return '%d' % value.numerator
    return '%d/%d' % (value.numerator, value.denominator)


def _sign(x):
    if x > 0:
        return 1
    elif x < 0:
        return -1
    return 0


class AlgebraicNumber(tuple):
    """
    An exact value a + b*sqrt(m); immutable and hashable.

    >>> x = AlgebraicNumber(1, 2, 3)
    >>> x.a, x.b, x.m
    (Fraction(1, 1), Fraction(2, 1), 3)
    >>> x.degree
    2
    >>> x.conjugate()
    <AlgebraicNumber 1-2*sqrt(3)>
    >>> x * x.conjugate()
    <AlgebraicNumber -11>
    >>> AlgebraicNumber(5, 0, 7).m
    0
    >>> hash(AlgebraicNumber(3)) == hash(3)
    True
    """

    def __new__(cls, a=0, b=0, m=0):
        a = Fraction(a)
        b = Fraction(b)
        m = int(m)
        if m < 0:
            raise UnsupportedDegree('Negative radicand %(m)d;'
                                    ' we support real values only!'
                                    % locals())
        if b and m:
            s, m = squarefree_split(m)
            b *= s
            if m == 1:
                a += b
                b = Fraction(0)
                m = 0
        else:
            b = Fraction(0)
            m = 0
        return tuple.__new__(cls, (a, b, m))

    @classmethod
    def _make(cls, a, b, m):
        # a, b Fractions; m square-free (or 0 with b == 0)
        if not b:
            return tuple.__new__(cls, (a, b, 0))
        return tuple.__new__(cls, (a, b, m))

    def __getnewargs__(self):
        return tuple(self)

    @classmethod
    def sqrt(cls, value):
        """
        The exact square root of a non-negative rational value
        """
        value = Fraction(value)
        if value < 0:
            raise UnsupportedDegree('sqrt(%(value)s) is not real!'
                                    % locals())
        p, q = value.numerator, value.denominator
        # sqrt(p/q) = sqrt(p*q) / q
        return cls(0, Fraction(1, q), p * q)

    @property
    def a(self):
        return self[0]

    @property
    def b(self):
        return self[1]

    @property
    def m(self):
        return self[2]

    @property
    def is_rational(self):
        return not self[1]

    @property
    def degree(self):
        """
        The algebraic degree: 1 for rational values, 2 otherwise
        """
        return 1 if not self[1] else 2

    def conjugate(self):
        return self._make(self[0], -self[1], self[2])

    def minpoly_coefficients(self):
        """
        Coefficients (constant term first) of the primitive integer minimal
        polynomial with positive leading coefficient

        >>> AlgebraicNumber.sqrt(3).minpoly_coefficients()
        (-3, 0, 1)
        >>> ((1 + AlgebraicNumber.sqrt(33)) / 2).minpoly_coefficients()
        (-8, -1, 1)
        >>> AlgebraicNumber(Fraction(3, 2)).minpoly_coefficients()
        (-3, 2)
        >>> AlgebraicNumber(0).minpoly_coefficients()
        (0, 1)
        """
        a, b, m = self
        if not b:
            return (-a.numerator, a.denominator)
        # (x - a)**2 - b**2 m
        coeffs = [a * a - b * b * m, -2 * a, Fraction(1)]
        lcm = 1
        for c in coeffs:
            den = c.denominator
            lcm = lcm * den // math.gcd(lcm, den)
        ints = [int(c * lcm) for c in coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        return tuple(c // g for c in ints)

    # ------------------------------------------- [ arithmetic ... [
    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            return other
        if isinstance(other, integer_types + (Fraction, Rational)):
            return AlgebraicNumber._make(Fraction(other), Fraction(0), 0)
        return None

    def _field(self, other):
        m1 = self[2]
        m2 = other[2]
        if not m1:
            return m2
        if not m2 or m1 == m2:
            return m1
        raise UnsupportedDegree("Can't mix sqrt(%d) and sqrt(%d)!"
                                % (m1, m2))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = self._field(other)
        return self._make(self[0] + other[0], self[1] + other[1], m)

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self[0], -self[1], self[2])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = self._field(other)
        return self._make(self[0] - other[0], self[1] - other[1], m)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = self._field(other)
        a1, b1 = self[0], self[1]
        a2, b2 = other[0], other[1]
        if not b1:
            return self._make(a1 * a2, a1 * b2, m)
        if not b2:
            return self._make(a1 * a2, b1 * a2, m)
        return self._make(a1 * a2 + b1 * b2 * m, a1 * b2 + a2 * b1, m)

    __rmul__ = __mul__

    def inverse(self):
        a, b, m = self
        if not b:
            if not a:
                raise ZeroDivisionError('division by zero')
            return self._make(1 / a, b, 0)
        norm = a * a - b * b * m
        # norm != 0 since m is no rational square
        return self._make(a / norm, -b / norm, m)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._field(other)
        if not other[1]:
            if not other[0]:
                raise ZeroDivisionError('division by zero')
            return self._make(self[0] / other[0], self[1] / other[0],
                              self[2])
        return self * other.inverse()

    __div__ = __truediv__

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    __rdiv__ = __rtruediv__

    def __pow__(self, exponent):
        if not isinstance(exponent, integer_types):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        res = AlgebraicNumber._make(Fraction(1), Fraction(0), 0)
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            base = base * base
            exponent >>= 1
        return res

    def __abs__(self):
        return -self if self.sign() < 0 else self
    # ------------------------------------------- ] ... arithmetic ]

    # ------------------------------------------- [ comparison ... [
    def sign(self):
        """
        -1, 0 or 1, decided exactly

        >>> (AlgebraicNumber(2) - AlgebraicNumber.sqrt(3)).sign()
        1
        >>> (AlgebraicNumber(1) - AlgebraicNumber.sqrt(3)).sign()
        -1
        """
        a, b, m = self
        sa = _sign(a)
        if not b:
            return sa
        sb = _sign(b)
        if sa == 0 or sa == sb:
            return sb
        # signs differ; a**2 == b**2 m is impossible for square-free m > 1
        if a * a > b * b * m:
            return sa
        return sb

    def _cmp(self, other):
        other = self._coerce(other)
        if other is None:
            return None
        return (self - other).sign()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return tuple(self) == tuple(other)

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        if not self[1]:
            return hash(self[0])
        return hash(tuple(self))

    def __lt__(self, other):
        res = self._cmp(other)
        if res is None:
            return NotImplemented
        return res < 0

    def __le__(self, other):
        res = self._cmp(other)
        if res is None:
            return NotImplemented
        return res <= 0

    def __gt__(self, other):
        res = self._cmp(other)
        if res is None:
            return NotImplemented
        return res > 0

    def __ge__(self, other):
        res = self._cmp(other)
        if res is None:
            return NotImplemented
        return res >= 0

    def __bool__(self):
        return bool(self[0]) or bool(self[1])

    __nonzero__ = __bool__
    # ------------------------------------------- ] ... comparison ]

    def floor(self):
        """
        The exact floor, as an int

        >>> AlgebraicNumber.sqrt(3).floor()
        1
        >>> (-AlgebraicNumber.sqrt(3)).floor()
        -2
        >>> AlgebraicNumber(Fraction(-4, 2)).floor()
        -2
        """
        a, b, m = self
        if not b:
            return math.floor(a)
        f = int(math.floor(float(self)))
        while self < f:
            f -= 1
        while self >= f + 1:
            f += 1
        return f

    def __float__(self):
        a, b, m = self
        if not b:
            return float(a)
        return float(a) + float(b) * math.sqrt(m)

    def __str__(self):
        a, b, m = self
        if not b:
            return rational_text(a)
        if b == 1:
            rad = 'sqrt(%d)' % m
        elif b == -1:
            rad = '-sqrt(%d)' % m
        else:
            rad = '%s*sqrt(%d)' % (rational_text(b), m)
        if not a:
            return rad
        if rad.startswith('-'):
            return rational_text(a) + rad
        return rational_text(a) + '+' + rad

    def __repr__(self):
        return '<AlgebraicNumber %s>' % (self,)


def as_number(value):
    """
    Coerce ints, Fractions and AlgebraicNumbers to an AlgebraicNumber

    >>> as_number(Fraction(1, 2))
    <AlgebraicNumber 1/2>
    >>> as_number('1/2')
    Traceback (most recent call last):
      ...
    TypeError: Number expected; found <class 'str'>!
    """
    if isinstance(value, AlgebraicNumber):
        return value
    if isinstance(value, integer_types + (Fraction, Rational)):
        return AlgebraicNumber(value)
    raise TypeError('Number expected; found %s!' % (type(value),))


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
