# -*- coding: utf-8
"""
sgspec.twodist.spectral: exact spectral queries on signed graphs

Nothing here consults floating point numbers, except spectrum_float, which
exists for cross-checks only.

>>> from sgspec.twodist.graphs import SignedGraph
>>> k4 = SignedGraph(4, [(u, v, -1) for u in range(4) for v in range(u+1, 4)])
>>> multiplicity(k4, 1)
3
>>> compare_top_eigenvalue(k4, 1).verdict
'EQUAL'
>>> tail_check(k4, 2, 1)
True
"""

# Python compatibility:
from __future__ import absolute_import

from six.moves import range

# Standard library:
from collections import OrderedDict
from fractions import Fraction

# 3rd party:
import numpy as np

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber, as_number
from sgspec.twodist.exceptions import (
    BadParams,
    ReducibleMinpoly,
    UnsupportedDegree,
    )
from sgspec.twodist.matrix import ExactMatrix, psd_ldlt, rank_exact
from sgspec.twodist.polynomial import (
    IntPolynomial,
    char_poly,
    irreducibility_probe,
    minimal_polynomial,
    power_sums,
    roots_above,
    )
from sgspec.twodist.reports import number_to_json, poly_to_json

__all__ = [
    'SpectralQuery',
    'TopComparison',
    'compare_top_eigenvalue',
    'matrix_polynomial',
    'multiplicity',
    'signed_char_poly',
    'spectral_report',
    'spectrum_float',
    'tail_check',
    'trace_identities',
    ]

SHORT_VERDICTS = {
    'LESS': 'LT',
    'EQUAL': 'EQ',
    'GREATER': 'GT',
    }


class SpectralQuery(tuple):
    """
    (minpoly, value, interval): the queried eigenvalue by its irreducible
    minimal polynomial; value is the exact AlgebraicNumber if the degree is
    at most 2, interval an isolating rational interval (lo, hi] otherwise

    >>> q = SpectralQuery.of(AlgebraicNumber.sqrt(3))
    >>> q.minpoly, q.degree
    (<IntPolynomial x^2 - 3>, 2)
    >>> q = SpectralQuery.from_minpoly([-8, -1, 1], (3, 4))
    >>> q.value
    <AlgebraicNumber 1/2+1/2*sqrt(33)>
    >>> q = SpectralQuery.from_minpoly([-2, 0, 0, 1], (1, 2))
    >>> q.value is None, q.degree
    (True, 3)
    >>> SpectralQuery.from_minpoly([0, -1, 1], (0, 2))
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.ReducibleMinpoly: x^2 - x is reducible (factor x)!
    >>> SpectralQuery.from_minpoly([-2, 0, 0, 1], (2, 3))
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadParams: (2, 3] isolates 0 root(s) of x^3 - 2; interval must isolate exactly one!
    """

    @classmethod
    def of(cls, value):
        if isinstance(value, SpectralQuery):
            return value
        value = as_number(value)
        return tuple.__new__(cls, (minimal_polynomial(value), value, None))

    @classmethod
    def from_minpoly(cls, coefficients, interval):
        poly = IntPolynomial(coefficients)
        if poly.leading < 0:
            poly = -poly
        if poly.degree < 1:
            raise BadParams('Non-constant polynomial expected!')
        probe = irreducibility_probe(poly)
        if probe.verdict == 'REDUCIBLE':
            raise ReducibleMinpoly('%s is reducible (factor %s)!'
                                   % (poly, probe.factor))
        lo, hi = [Fraction(x) for x in interval]
        count = roots_above(poly, lo) - roots_above(poly, hi)
        if count != 1:
            raise BadParams('(%s, %s] isolates %d root(s) of %s;'
                            ' interval must isolate exactly one!'
                            % (lo, hi, count, poly))
        value = None
        if poly.degree == 1:
            value = as_number(Fraction(-poly[0], poly[1]))
        elif poly.degree == 2:
            c, b, a = poly
            disc = AlgebraicNumber.sqrt(b * b - 4 * a * c)
            for root in ((-b + disc) / (2 * a), (-b - disc) / (2 * a)):
                if lo < root <= hi:
                    value = root
                    break
        return tuple.__new__(cls, (poly, value, (lo, hi)))

    def __getnewargs__(self):
        return (tuple(self),)

    @property
    def minpoly(self):
        return self[0]

    @property
    def value(self):
        return self[1]

    @property
    def interval(self):
        return self[2]

    @property
    def degree(self):
        return self[0].degree

    def require_value(self):
        if self[1] is None:
            raise UnsupportedDegree('Ordered arithmetic is supported for'
                                    ' degree <= 2 only; found degree %d!'
                                    % (self.degree,))
        return self[1]

    def __repr__(self):
        if self[1] is not None:
            return '<SpectralQuery %s>' % (self[1],)
        lo, hi = self[2]
        return '<SpectralQuery root of %s in (%s, %s]>' % (self[0], lo, hi)


def matrix_polynomial(poly, rows):
    """
    p(A) for an integer matrix A, by Horner's scheme

    >>> matrix_polynomial(IntPolynomial([-1, 0, 1]), [[0, 1], [1, 0]])
    [[0, 0], [0, 0]]
    """
    n = len(rows)
    sparse = [[(k, x) for k, x in enumerate(row) if x] for row in rows]
    res = [[0] * n for i in range(n)]
    for c in reversed(poly):
        prod = []
        for i in range(n):
            row = [0] * n
            for k, x in sparse[i]:
                rk = res[k]
                for j in range(n):
                    if rk[j]:
                        row[j] += x * rk[j]
            prod.append(row)
        if c:
            for i in range(n):
                prod[i][i] += c
        res = prod
    return res


def multiplicity(g, query):
    """
    The exact multiplicity of the queried eigenvalue

    Every conjugate of an eigenvalue of a symmetric integer matrix is an
    eigenvalue of equal multiplicity, so the kernel of p(A) has dimension
    deg(p) * mult.

    >>> from sgspec.twodist.graphs import SignedGraph
    >>> multiplicity(SignedGraph(5), 0)
    5
    >>> multiplicity(SignedGraph(2, [(0, 1, 1)]), AlgebraicNumber.sqrt(2))
    0
    """
    query = SpectralQuery.of(query)
    poly = query.minpoly
    n = g.n
    if not n:
        return 0
    kernel = n - rank_exact(ExactMatrix(matrix_polynomial(poly,
                                                          g.adjacency_rows())))
    return kernel // poly.degree


class TopComparison(tuple):
    """
    (verdict, certificate): 'LESS', 'EQUAL' or 'GREATER' for the comparison
    of the largest eigenvalue with lambda; the certificate is the
    PsdCertificate of lambda*I - A
    """

    @property
    def verdict(self):
        return self[0]

    @property
    def certificate(self):
        return self[1]

    @property
    def short(self):
        return SHORT_VERDICTS[self[0]]

    def __repr__(self):
        return '<TopComparison %s>' % (self[0],)


def shifted_matrix(g, lam):
    """
    lambda*I - A
    """
    rows = g.adjacency_rows()
    n = g.n
    return ExactMatrix([[lam if i == j else -rows[i][j]
                         for j in range(n)]
                        for i in range(n)])


def compare_top_eigenvalue(g, lam):
    """
    Compare the largest eigenvalue of g with lambda, exactly

    lambda*I - A is PSD iff lambda_1 <= lambda; then the number of zero
    pivots of its LDL^T factorization is the multiplicity of lambda.

    >>> from sgspec.twodist.graphs import SignedGraph
    >>> star = SignedGraph(5, [(0, v, 1) for v in range(1, 5)])
    >>> res = compare_top_eigenvalue(star, AlgebraicNumber.sqrt(3))
    >>> res
    <TopComparison GREATER>
    >>> shifted = shifted_matrix(star, AlgebraicNumber.sqrt(3))
    >>> shifted.quadratic_form(res.certificate.witness) < 0
    True
    >>> compare_top_eigenvalue(star, 2)
    <TopComparison EQUAL>
    >>> compare_top_eigenvalue(star, 3)
    <TopComparison LESS>
    """
    if isinstance(lam, SpectralQuery):
        lam = lam.require_value()
    lam = as_number(lam)
    if lam.is_rational:
        lam = lam.a
    cert = psd_ldlt(shifted_matrix(g, lam))
    if not cert.is_psd:
        return TopComparison(('GREATER', cert))
    if any(not d for d in cert.pivots):
        return TopComparison(('EQUAL', cert))
    return TopComparison(('LESS', cert))


def signed_char_poly(g):
    return char_poly(g.adjacency())


def tail_check(g, k, lam):
    """
    Is lambda_k(g) <= lambda?

    >>> from sgspec.twodist.graphs import SignedGraph
    >>> tail_check(SignedGraph(3), 1, 0)
    True
    >>> tail_check(SignedGraph(2, [(0, 1, 1)]), 1, 0)
    False
    """
    if not 1 <= k <= g.n:
        raise BadParams('Index k must be in 1..%d; found %r!' % (g.n, k))
    if isinstance(lam, SpectralQuery):
        lam = lam.require_value()
    return roots_above(signed_char_poly(g), lam) <= k - 1


def spectrum_float(g):
    """
    The eigenvalues in descending order (floating point, cross-checks only)

    >>> from sgspec.twodist.graphs import SignedGraph
    >>> spectrum_float(SignedGraph(2))
    [0.0, 0.0]
    >>> [round(x, 6) for x in spectrum_float(SignedGraph(2, [(0, 1, -1)]))]
    [1.0, -1.0]
    """
    if not g.n:
        return []
    values = np.linalg.eigvalsh(np.array(g.adjacency_rows(), dtype=float))
    return [float(x) + 0.0 for x in values[::-1]]


def triangle_sign_sum(g):
    """
    The sum of the sign products over all triangles
    """
    rows = g.adjacency_rows()
    n = g.n
    total = 0
    for u, v, s in g.edges:
        for w in range(v + 1, n):
            if rows[u][w] and rows[v][w]:
                total += s * rows[u][w] * rows[v][w]
    return total


def trace_identities(g):
    """
    The power sums of the eigenvalues (from the characteristic polynomial)
    next to their combinatorial counterparts

    >>> from sgspec.twodist.graphs import SignedGraph
    >>> res = trace_identities(SignedGraph(3, [(0, 1, 1), (0, 2, -1), (1, 2, -1)]))
    >>> res['power_sums'], res['expected'], res['holds']
    ([0, 6, 6], [0, 6, 6], True)
    """
    sums = power_sums(signed_char_poly(g), 3)
    expected = [0, sum(g.degrees()), 6 * triangle_sign_sum(g)]
    res = OrderedDict()
    res['power_sums'] = sums
    res['expected'] = expected
    res['holds'] = sums == expected
    return res


def spectral_report(g, query):
    """
    The report fragment {"lambda", "minpoly", "mult", "cmp_top"}

    >>> from sgspec.twodist.graphs import SignedGraph
    >>> from sgspec.twodist.reports import dumps
    >>> dumps(spectral_report(SignedGraph(2, [(0, 1, -1)]), 1))
    '{"lambda":"1","minpoly":[-1,1],"mult":1,"cmp_top":"EQ"}'
    """
    query = SpectralQuery.of(query)
    res = OrderedDict()
    if query.value is not None:
        res['lambda'] = number_to_json(query.value)
    else:
        res['lambda'] = None
    res['minpoly'] = poly_to_json(query.minpoly)
    res['mult'] = multiplicity(g, query)
    if query.value is not None:
        res['cmp_top'] = compare_top_eigenvalue(g, query.value).short
    return res


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
