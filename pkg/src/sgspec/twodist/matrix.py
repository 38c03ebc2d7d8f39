# -*- coding: utf-8
"""
sgspec.twodist.matrix: dense exact matrices, rank and PSD certificates

Entries are ints, Fractions or AlgebraicNumbers of one common quadratic field
sqrt(m) (m = 0 for rational matrices).  Rational entries are stored as ints
whenever they are integral, which keeps the integer fast paths (Bareiss
elimination with exact integer division) available.

>>> m = ExactMatrix([[2, 1], [1, 2]])
>>> m
<ExactMatrix 2x2 over Q>
>>> m.rows, m.cols, m.field
(2, 2, 0)
>>> rank_exact(m)
2
>>> rank_exact(ExactMatrix.ones(4))
1
>>> psd_ldlt(m).pivots
(2, Fraction(3, 2))
"""

# Python compatibility:
from __future__ import absolute_import

from six import integer_types
from six.moves import range, zip

# Standard library:
import math
import operator
from fractions import Fraction

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber
from sgspec.twodist.exceptions import (
    NonIntegerEntries,
    NotSymmetric,
    UnsupportedDegree,
    )

__all__ = [
    'ExactMatrix',
    'LdlFactor',
    'PsdCertificate',
    'psd_ldlt',
    'rank_exact',
    ]


def _entry(x):
    """
    Normalize a matrix entry; rational values become ints where possible

    >>> _entry(Fraction(4, 2))
    2
    >>> _entry(AlgebraicNumber(Fraction(1, 2)))
    Fraction(1, 2)
    >>> _entry(True)
    1
    """
    if isinstance(x, AlgebraicNumber):
        if x.b:
            return x
        x = x.a
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        return x
    if isinstance(x, integer_types):
        return int(x)
    raise TypeError('Exact entry expected; found %r!' % (x,))


def _div(x, y):
    if isinstance(x, integer_types) and isinstance(y, integer_types):
        return Fraction(x, y)
    return x / y


class ExactMatrix(tuple):
    """
    An immutable matrix, stored as a tuple of row tuples.

    >>> r3 = AlgebraicNumber.sqrt(3)
    >>> a = ExactMatrix([[0, 1], [1, 0]])
    >>> b = ExactMatrix.identity(2) * r3 - a
    >>> b
    <ExactMatrix 2x2 over Q(sqrt(3))>
    >>> b[0]
    (<AlgebraicNumber sqrt(3)>, -1)
    >>> (a * a).is_identity()
    True
    >>> ExactMatrix([[1, 2], [3]])
    Traceback (most recent call last):
      ...
    ValueError: Row 1 has 1 entries; expected 2!
    """

    def __new__(cls, rows):
        rows = tuple(tuple(_entry(x) for x in row) for row in rows)
        if rows:
            width = len(rows[0])
            for i, row in enumerate(rows):
                if len(row) != width:
                    cnt = len(row)
                    raise ValueError('Row %(i)d has %(cnt)d entries; '
                                     'expected %(width)d!' % locals())
        self = tuple.__new__(cls, rows)
        field = 0
        for row in rows:
            for x in row:
                if isinstance(x, AlgebraicNumber) and x.m != field:
                    if field:
                        m = x.m
                        raise UnsupportedDegree('Entries from sqrt(%(field)d)'
                                                ' and sqrt(%(m)d)!'
                                                % locals())
                    field = x.m
        self._field = field
        return self

    def __getnewargs__(self):
        return (tuple(self),)

    @classmethod
    def identity(cls, n, scale=1):
        return cls([[scale if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        if cols is None:
            cols = rows
        return cls([[0] * cols for i in range(rows)])

    @classmethod
    def ones(cls, rows, cols=None):
        if cols is None:
            cols = rows
        return cls([[1] * cols for i in range(rows)])

    @property
    def rows(self):
        return len(self)

    @property
    def cols(self):
        if not self:
            return 0
        return len(self[0])

    @property
    def field(self):
        """
        The radicand m of the field Q(sqrt(m)); 0 for rational matrices
        """
        return self._field

    @property
    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        n = self.rows
        if n != self.cols:
            return False
        for i in range(n):
            row = self[i]
            for j in range(i + 1, n):
                if row[j] != self[j][i]:
                    return False
        return True

    def is_integer(self):
        for row in self:
            for x in row:
                if not isinstance(x, integer_types):
                    return False
        return True

    def is_identity(self, scale=1):
        n = self.rows
        if n != self.cols:
            return False
        for i, row in enumerate(self):
            for j, x in enumerate(row):
                if x != (scale if i == j else 0):
                    return False
        return True

    def integer_rows(self):
        """
        The entries as lists of ints; raises NonIntegerEntries otherwise
        """
        if not self.is_integer():
            raise NonIntegerEntries('Integer matrix expected!')
        return [list(row) for row in self]

    def transpose(self):
        return ExactMatrix(zip(*self)) if self else self

    def _elementwise(self, other, op):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError('Shape mismatch: %dx%d vs. %dx%d!'
                             % (self.rows, self.cols,
                                other.rows, other.cols))
        return ExactMatrix([[op(x, y) for x, y in zip(r1, r2)]
                            for r1, r2 in zip(self, other)])

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._elementwise(other, operator.add)

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._elementwise(other, operator.sub)

    def __neg__(self):
        return ExactMatrix([[-x for x in row] for row in self])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("Can't multiply %dx%d by %dx%d!"
                                 % (self.rows, self.cols,
                                    other.rows, other.cols))
            columns = list(zip(*other))
            res = []
            for row in self:
                nz = [(k, x) for k, x in enumerate(row) if x]
                res.append([sum([x * col[k] for k, x in nz], 0)
                            for col in columns])
            return ExactMatrix(res)
        if isinstance(other, (AlgebraicNumber, Fraction) + integer_types):
            return ExactMatrix([[x * other for x in row] for row in self])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (AlgebraicNumber, Fraction) + integer_types):
            return ExactMatrix([[other * x for x in row] for row in self])
        return NotImplemented

    def quadratic_form(self, vector):
        """
        The exact value of x^T M x
        """
        total = 0
        for xi, row in zip(vector, self):
            if not xi:
                continue
            acc = 0
            for xj, mij in zip(vector, row):
                if xj and mij:
                    acc = acc + mij * xj
            total = total + xi * acc
        return total

    def __repr__(self):
        field = self._field
        if field:
            name = 'Q(sqrt(%d))' % field
        else:
            name = 'Q'
        return '<ExactMatrix %dx%d over %s>' % (self.rows, self.cols, name)


def _integral_rows(mat):
    """
    Scale each row of a rational matrix by the lcm of its denominators
    """
    res = []
    for row in mat:
        lcm = 1
        for x in row:
            if isinstance(x, Fraction):
                den = x.denominator
                lcm = lcm * den // math.gcd(lcm, den)
        if lcm == 1:
            res.append(list(row))
        else:
            res.append([int(x * lcm) for x in row])
    return res


def rank_exact(mat):
    """
    The exact rank, by fraction-free (Bareiss) elimination

    Rational matrices are scaled to integer rows first, so that each step
    divides exactly by the previous pivot; over Q(sqrt(m)) the same
    recursion runs with exact field division.

    >>> rank_exact(ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]]))
    2
    >>> rank_exact(ExactMatrix([[Fraction(1, 2), Fraction(1, 3)],
    ...                         [3, 2]]))
    1
    >>> r2 = AlgebraicNumber.sqrt(2)
    >>> rank_exact(ExactMatrix([[r2, 1], [2, r2]]))
    1

    Integer and quadratic entries may be mixed:

    >>> r3 = AlgebraicNumber.sqrt(3)
    >>> rank_exact(ExactMatrix([[2, 1, 0], [1, 2, 0], [0, 0, r3]]))
    3
    >>> rank_exact(ExactMatrix([[2, 1, r3], [4, 2, 2*r3], [1, 3, 0]]))
    2
    >>> rank_exact(ExactMatrix.zeros(3))
    0
    >>> rank_exact(ExactMatrix([]))
    0
    """
    if not mat.rows or not mat.cols:
        return 0
    if mat.field:
        rows = [list(row) for row in mat]
        div = _div
    else:
        rows = _integral_rows(mat)
        div = operator.floordiv
    nrows, ncols = mat.rows, mat.cols
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pval = prow[c]
        for i in range(rank + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = div(pval * row[j] - f * prow[j], prev)
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = div(pval * row[j], prev)
            row[c] = 0
        prev = pval
        rank += 1
        if rank == nrows:
            break
    return rank


class LdlFactor(object):
    """
    A factorization M = L D L^T of a PSD matrix, grown one row at a time

    L is unit lower triangular (we store the entries below the diagonal),
    D holds the non-negative pivots.  A zero pivot comes with a zero column
    of L.  bordered() tests whether M, extended by a new last row and
    column, is still PSD; the search uses this to check a child graph in
    O(n**2) given the factor of its parent.

    >>> f = LdlFactor()
    >>> f = f.bordered([], 2)
    >>> f = f.bordered([1], 2)
    >>> f.pivots
    (2, Fraction(3, 2))
    >>> f.bordered([1, 1], 0) is None
    True
    >>> len(f.bordered([1, 1], 2))
    3
    """
    __slots__ = ('lower', 'pivots')

    def __init__(self, lower=(), pivots=()):
        self.lower = tuple(lower)
        self.pivots = tuple(pivots)

    def __len__(self):
        return len(self.pivots)

    def __getstate__(self):
        return (self.lower, self.pivots)

    def __setstate__(self, state):
        self.lower, self.pivots = state

    def solve_lower(self, column):
        """
        y with L y = column (forward substitution)
        """
        y = []
        for k, row in enumerate(self.lower):
            acc = column[k]
            for j, l in enumerate(row):
                if l:
                    yj = y[j]
                    if yj:
                        acc = acc - l * yj
            y.append(acc)
        return y

    def schur(self, column, corner):
        """
        Return (y, l, s, bad) for the bordered matrix:

        y = L^{-1} column, l the new row of L, s the new pivot,
        bad the index of a zero pivot with y[bad] != 0 (or None)
        """
        y = self.solve_lower(column)
        lrow = []
        s = corner
        bad = None
        for j, (yj, dj) in enumerate(zip(y, self.pivots)):
            if dj:
                if yj:
                    lj = _normalize_scalar(_div(yj, dj))
                    lrow.append(lj)
                    s = s - lj * yj
                else:
                    lrow.append(0)
            else:
                if yj and bad is None:
                    bad = j
                lrow.append(0)
        return (y, lrow, _normalize_scalar(s), bad)

    def bordered(self, column, corner):
        """
        The factor of [[M, c], [c^T, corner]], or None if that isn't PSD
        """
        y, lrow, s, bad = self.schur(column, corner)
        if bad is not None or s < 0:
            return None
        return LdlFactor(self.lower + (tuple(lrow),),
                         self.pivots + (s,))

    def lift(self, z_top):
        """
        Solve L^T x = z_top (back substitution)
        """
        n = len(self.pivots)
        x = list(z_top)
        for i in range(n - 1, -1, -1):
            acc = x[i]
            for r in range(i + 1, n):
                l = self.lower[r][i]
                if l and x[r]:
                    acc = acc - l * x[r]
            x[i] = acc
        return x


class PsdCertificate(tuple):
    """
    The outcome of psd_ldlt: ('PSD', pivots, None)
    or ('NOT_PSD', pivots so far, witness vector)

    >>> cert = psd_ldlt(ExactMatrix.identity(2, -1))
    >>> cert
    <PsdCertificate NOT_PSD witness=(1, 0)>
    >>> cert.is_psd
    False
    """

    @property
    def verdict(self):
        return self[0]

    @property
    def is_psd(self):
        return self[0] == 'PSD'

    @property
    def pivots(self):
        return self[1]

    @property
    def witness(self):
        return self[2]

    def __repr__(self):
        if self.is_psd:
            return '<PsdCertificate PSD pivots=%d>' % (len(self[1]),)
        return '<PsdCertificate NOT_PSD witness=%s>' % (tuple(self[2]),)


def psd_ldlt(mat):
    """
    Certify that a symmetric matrix is positive semidefinite, exactly

    Rows are added one at a time (see LdlFactor).  On success we return the
    pivot sequence, all >= 0; otherwise an exact vector x with
    x^T mat x < 0.

    >>> cert = psd_ldlt(ExactMatrix([[1, 1], [1, 1]]))
    >>> cert.verdict, cert.pivots
    ('PSD', (1, 0))
    >>> m = ExactMatrix([[0, 1], [1, 0]])
    >>> cert = psd_ldlt(m)
    >>> cert.verdict
    'NOT_PSD'
    >>> m.quadratic_form(cert.witness) < 0
    True
    >>> m = ExactMatrix([[1, 2], [2, 1]])
    >>> cert = psd_ldlt(m)
    >>> cert.witness
    (-2, 1)
    >>> m.quadratic_form(cert.witness)
    -3
    >>> psd_ldlt(ExactMatrix([[1, 2], [0, 1]]))
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.NotSymmetric: Symmetric matrix expected!
    """
    if not mat.is_symmetric():
        raise NotSymmetric('Symmetric matrix expected!')
    n = mat.rows
    factor = LdlFactor()
    for k in range(n):
        row = mat[k]
        column = row[:k]
        corner = row[k]
        y, lrow, s, bad = factor.schur(column, corner)
        if bad is None and not s < 0:
            factor = LdlFactor(factor.lower + (tuple(lrow),),
                               factor.pivots + (s,))
            continue
        # a vector z for the congruent matrix [[D, y], [y^T, corner]]
        z = [0] * k
        if bad is not None:
            # d_bad = 0: 2 y_bad t + corner < 0
            z[bad] = _div(-(corner + 1), 2 * y[bad])
        else:
            for j, lj in enumerate(lrow):
                if lj:
                    z[j] = -lj
        x = factor.lift(z) + [1] + [0] * (n - k - 1)
        witness = tuple(_normalize_scalar(v) for v in x)
        cert = PsdCertificate(('NOT_PSD', factor.pivots, witness))
        cert.factor = factor
        return cert
    cert = PsdCertificate(('PSD', factor.pivots, None))
    cert.factor = factor
    return cert


def _normalize_scalar(x):
    try:
        return _entry(x)
    except TypeError:
        return x


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
