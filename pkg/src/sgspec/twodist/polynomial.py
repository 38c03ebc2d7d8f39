# -*- coding: utf-8
"""
sgspec.twodist.polynomial: integer polynomials, characteristic polynomials,
Sturm root counting and an irreducibility probe

Coefficients are stored constant term first (this is also how polynomials
are serialized in reports).

>>> f = IntPolynomial([-3, 0, 1])
>>> f
<IntPolynomial x^2 - 3>
>>> f.degree
2
>>> f(2)
1
>>> roots_above(f, 1)
1
>>> roots_above(f, -2)
2
"""

# Python compatibility:
from __future__ import absolute_import

from six import integer_types
from six.moves import range

# Standard library:
import math
from fractions import Fraction
from itertools import combinations

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber, as_number
from sgspec.twodist.exceptions import NonIntegerEntries
from sgspec.twodist.matrix import ExactMatrix

__all__ = [
    'IntPolynomial',
    'ProbeResult',
    'char_poly',
    'irreducibility_probe',
    'minimal_polynomial',
    'power_sums',
    'real_root_count',
    'roots_above',
    'sturm_chain',
    ]

PROBE_PRIMES = (2, 3, 5, 7, 11, 13)
PATTERN_PRIMES = (17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
SEARCH_LIMIT = 200000


def _trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _sign_of(value):
    if isinstance(value, AlgebraicNumber):
        return value.sign()
    return (value > 0) - (value < 0)


class IntPolynomial(tuple):
    """
    An immutable polynomial with integer coefficients

    >>> p = IntPolynomial([0, 6, 8, -6, -8, 0, 1, 0])
    >>> p
    <IntPolynomial x^6 - 8x^4 - 6x^3 + 8x^2 + 6x>
    >>> p.degree, p.leading, p.is_monic
    (6, 1, True)
    >>> p.derivative()
    <IntPolynomial 6x^5 - 32x^3 - 18x^2 + 16x + 6>
    >>> IntPolynomial([-1, 1]) * IntPolynomial([1, 1])
    <IntPolynomial x^2 - 1>
    >>> IntPolynomial([])
    <IntPolynomial 0>
    >>> IntPolynomial([Fraction(1, 2)])
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.NonIntegerEntries: Integer coefficients expected; found Fraction(1, 2)!
    """

    def __new__(cls, coefficients):
        coeffs = []
        for c in coefficients:
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            if not isinstance(c, integer_types):
                raise NonIntegerEntries('Integer coefficients expected;'
                                        ' found %(c)r!' % locals())
            coeffs.append(int(c))
        return tuple.__new__(cls, _trim(coeffs))

    def __getnewargs__(self):
        return (tuple(self),)

    @property
    def degree(self):
        """
        The degree; -1 for the zero polynomial
        """
        return len(self) - 1

    @property
    def leading(self):
        if not self:
            return 0
        return self[-1]

    @property
    def is_monic(self):
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self)][1:])

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self), len(other))
        a = list(self) + [0] * (n - len(self))
        b = list(other) + [0] * (n - len(other))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return IntPolynomial([-c for c in self])

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, integer_types):
            return IntPolynomial([c * other for c in self])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self or not other:
            return IntPolynomial([])
        res = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            if a:
                for j, b in enumerate(other):
                    res[i + j] += a * b
        return IntPolynomial(res)

    __rmul__ = __mul__

    def __str__(self):
        if not self:
            return '0'
        terms = []
        for i in range(len(self) - 1, -1, -1):
            c = self[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = '%d' % mag
            else:
                body = '' if mag == 1 else '%d' % mag
                body += 'x' if i == 1 else 'x^%d' % i
            if not terms:
                terms.append(('-' if c < 0 else '') + body)
            else:
                terms.append(('- ' if c < 0 else '+ ') + body)
        return ' '.join(terms)

    def __repr__(self):
        return '<IntPolynomial %s>' % (self,)


def minimal_polynomial(value):
    """
    The primitive integer minimal polynomial of a rational or quadratic value

    >>> minimal_polynomial(AlgebraicNumber.sqrt(2))
    <IntPolynomial x^2 - 2>
    """
    return IntPolynomial(as_number(value).minpoly_coefficients())


# ---------------------------------- [ rational polynomial helpers ... [
def _fractions(poly):
    return [Fraction(c) for c in poly]


def _fdivmod(a, b):
    """
    Division with remainder of Fraction coefficient lists (b non-zero)

    >>> q, r = _fdivmod(_fractions([-1, 0, 1]), _fractions([1, 1]))
    >>> q, r
    ([Fraction(-1, 1), Fraction(1, 1)], [])

    Integer coefficients are converted first:

    >>> _fdivmod([1, 0, 0, 0, 7], [3, 1])
    ([Fraction(-189, 1), Fraction(63, 1), Fraction(-21, 1), Fraction(7, 1)], [Fraction(568, 1)])
    """
    a = _trim(_fractions(a))
    b = _fractions(b)
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        coef = a[-1] / lb
        shift = len(a) - 1 - db
        q[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] -= coef * bc
        a.pop()
        _trim(a)
    return (q, a)


def _primitive(c):
    """
    Scale a Fraction list by a positive factor to coprime integers

    >>> _primitive([Fraction(-2, 3), Fraction(4, 3)])
    <IntPolynomial 2x - 1>
    """
    c = _trim(list(c))
    if not c:
        return IntPolynomial([])
    lcm = 1
    for x in c:
        den = Fraction(x).denominator
        lcm = lcm * den // math.gcd(lcm, den)
    ints = [int(Fraction(x) * lcm) for x in c]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return IntPolynomial([x // g for x in ints])


def _gcd(f, g):
    """
    The gcd over Q, as a primitive integer polynomial with positive leading
    coefficient

    >>> _gcd(IntPolynomial([-1, 0, 1]), IntPolynomial([2, 2]))
    <IntPolynomial x + 1>
    """
    a = _fractions(f)
    b = _fractions(g)
    while _trim(b):
        q, r = _fdivmod(a, b)
        a, b = b, _fractions(_primitive(r))
    res = _primitive(a)
    if res.leading < 0:
        res = -res
    return res


def _exact_quotient(f, g):
    q, r = _fdivmod(_fractions(f), _fractions(g))
    assert not r, 'exact division expected'
    return _primitive(q)
# ---------------------------------- ] ... rational polynomial helpers ]


def char_poly(mat):
    """
    det(xI - A) of a square integer matrix, by Faddeev-LeVerrier

    The divisions by k are exact for integer matrices.

    >>> char_poly(ExactMatrix([[0, 1], [1, 0]]))
    <IntPolynomial x^2 - 1>
    >>> char_poly(ExactMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]]))
    <IntPolynomial x^3 - 3x - 2>
    >>> char_poly(ExactMatrix([[Fraction(1, 2)]]))
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.NonIntegerEntries: Integer matrix expected!
    """
    if not isinstance(mat, ExactMatrix):
        mat = ExactMatrix(mat)
    if not mat.is_square:
        raise ValueError('Square matrix expected; found %dx%d!'
                         % (mat.rows, mat.cols))
    a = mat.integer_rows()
    n = len(a)
    sparse = [[(k, x) for k, x in enumerate(row) if x] for row in a]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    am = None
    for k in range(1, n + 1):
        if k == 1:
            m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            m = am
            c = coeffs[n - k + 1]
            if c:
                for i in range(n):
                    m[i][i] += c
        am = []
        for i in range(n):
            row = [0] * n
            for kk, x in sparse[i]:
                mrow = m[kk]
                for j in range(n):
                    v = mrow[j]
                    if v:
                        row[j] += x * v
            am.append(row)
        trace = sum(am[i][i] for i in range(n))
        coeffs[n - k] = -trace // k
    return IntPolynomial(coeffs)


def power_sums(poly, count):
    """
    The power sums p_1..p_count of the roots of a monic polynomial
    (Newton's identities)

    >>> power_sums(IntPolynomial([-2, -3, 0, 1]), 3)
    [0, 6, 6]
    """
    n = poly.degree
    if not poly.is_monic:
        raise ValueError('Monic polynomial expected; found %s!' % (poly,))
    # x^n + e[1] x^(n-1) + ... + e[n]
    e = [poly[n - i] if i <= n else 0 for i in range(count + 1)]
    sums = []
    for k in range(1, count + 1):
        acc = k * e[k]
        for i in range(1, k):
            acc += e[i] * sums[k - i - 1]
        sums.append(-acc)
    return sums


# ---------------------------------------------- [ Sturm chains ... [
def sturm_chain(poly):
    """
    The Sturm chain of a polynomial; each member is scaled by a positive
    factor to a primitive integer polynomial, which keeps all signs intact

    >>> sturm_chain(IntPolynomial([-3, 0, 1]))
    [<IntPolynomial x^2 - 3>, <IntPolynomial x>, <IntPolynomial 1>]
    """
    chain = [poly, _primitive(_fractions(poly.derivative()))]
    if not chain[1]:
        return chain[:1]
    while True:
        q, r = _fdivmod(_fractions(chain[-2]), _fractions(chain[-1]))
        if not r:
            break
        chain.append(_primitive([-x for x in r]))
    return chain


def _variations(signs):
    count = 0
    prev = 0
    for s in signs:
        if not s:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain, x):
    return _variations([_sign_of(p(x)) for p in chain])


def _variations_at_infinity(chain, negative=False):
    signs = []
    for p in chain:
        s = _sign_of(p.leading)
        if negative and p.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def _distinct_above(squarefree, threshold):
    if squarefree.degree < 1:
        return 0
    chain = sturm_chain(squarefree)
    # zeros at the threshold are skipped; this counts roots > threshold
    return (_variations_at(chain, threshold)
            - _variations_at_infinity(chain))


def _distinct_real(squarefree):
    if squarefree.degree < 1:
        return 0
    chain = sturm_chain(squarefree)
    return (_variations_at_infinity(chain, negative=True)
            - _variations_at_infinity(chain))


def _multiplicity_layers(poly):
    """
    Generate the squarefree parts of g_0 = poly, g_(k+1) = gcd(g_k, g_k');
    the roots of the k-th part are the roots of poly with multiplicity > k
    """
    g = poly
    while g.degree > 0:
        h = _gcd(g, g.derivative())
        yield _exact_quotient(g, h)
        g = h


def roots_above(poly, threshold):
    """
    The number of real roots strictly greater than threshold, counted with
    multiplicity; the threshold may be rational or quadratic

    >>> r3 = AlgebraicNumber.sqrt(3)
    >>> cp = IntPolynomial([9, 0, -6, 0, 1])   # (x^2 - 3)^2
    >>> roots_above(cp, 0)
    2
    >>> roots_above(cp, r3)
    0
    >>> roots_above(cp, r3 - Fraction(1, 1000))
    2
    >>> roots_above(IntPolynomial([-2, -3, 0, 1]), Fraction(19, 10))
    1
    """
    threshold = as_number(threshold)
    if threshold.is_rational:
        threshold = threshold.a
    return sum(_distinct_above(part, threshold)
               for part in _multiplicity_layers(poly))


def real_root_count(poly):
    """
    The number of real roots, counted with multiplicity

    >>> real_root_count(IntPolynomial([1, 0, 1]))
    0
    >>> real_root_count(IntPolynomial([0, 0, 0, 1]))
    3
    """
    return sum(_distinct_real(part) for part in _multiplicity_layers(poly))
# ---------------------------------------------- ] ... Sturm chains ]


# ------------------------------------------ [ polynomials mod p ... [
def _mod(c, p):
    return _trim([x % p for x in c])


def _divmod_p(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        coef = a[-1] * inv % p
        shift = len(a) - 1 - db
        q[shift] = coef
        if coef:
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - coef * bc) % p
        a.pop()
        _trim(a)
    return (_trim(q), a)


def _gcd_p(a, b, p):
    a = list(a)
    b = list(b)
    while b:
        a, b = b, _divmod_p(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _mulmod_p(a, b, f, p):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    return _divmod_p(_trim(res), f, p)[1]


def _powmod_p(base, e, f, p):
    res = [1]
    while e:
        if e & 1:
            res = _mulmod_p(res, base, f, p)
        base = _mulmod_p(base, base, f, p)
        e >>= 1
    return res


def _sub_p(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def factor_degrees_mod_p(poly, p):
    """
    The degrees of the irreducible factors of poly modulo p
    (distinct-degree factorization), or None if p divides the leading
    coefficient or poly is not squarefree modulo p

    >>> factor_degrees_mod_p(IntPolynomial([-3, 0, 1]), 5)
    [2]
    >>> factor_degrees_mod_p(IntPolynomial([-1, 0, 1]), 5)
    [1, 1]
    >>> factor_degrees_mod_p(IntPolynomial([-3, 0, 1]), 3) is None
    True
    """
    f = _mod(poly, p)
    if len(f) != len(poly):
        return None
    fd = _mod(poly.derivative(), p)
    if not fd or len(_gcd_p(f, fd, p)) > 1:
        return None
    inv = pow(f[-1], p - 2, p)
    f = [x * inv % p for x in f]
    degrees = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod_p(h, p, f, p)
        g = _gcd_p(f, _sub_p(h, x, p), p)
        gdeg = len(g) - 1
        if gdeg > 0:
            degrees.extend([d] * (gdeg // d))
            f = _divmod_p(f, g, p)[0]
            h = _divmod_p(h, f, p)[1]
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def _subset_sums(degrees):
    sums = set([0])
    for d in degrees:
        sums |= set(s + d for s in sums)
    return sums
# ------------------------------------------ ] ... polynomials mod p ]


class ProbeResult(tuple):
    """
    (verdict, certificate) as returned by irreducibility_probe;
    the certificate of a REDUCIBLE verdict is a proper factor
    """

    @property
    def verdict(self):
        return self[0]

    @property
    def certificate(self):
        return self[1]

    @property
    def factor(self):
        if self[0] == 'REDUCIBLE':
            return self[1]
        return None

    def __repr__(self):
        if self[0] == 'REDUCIBLE':
            return '<ProbeResult REDUCIBLE factor=%s>' % (self[1],)
        elif self[0] == 'IRREDUCIBLE':
            return '<ProbeResult IRREDUCIBLE %s>' % (self[1],)
        return '<ProbeResult UNKNOWN>'


def _root_bound(poly):
    # Fujiwara: every complex root has modulus <= 2 max |a_(n-k)/a_n|^(1/k)
    n = poly.degree
    lead = abs(poly.leading)
    best = 0.0
    for k in range(1, n + 1):
        c = abs(poly[n - k])
        if c:
            try:
                best = max(best, (c / float(lead)) ** (1.0 / k))
            except OverflowError:
                return None
    return int(math.ceil(2 * best)) + 1


def _rational_root(poly, bound):
    if poly[0] == 0:
        return IntPolynomial([0, 1])
    c0 = abs(poly[0])
    lead = abs(poly.leading)
    budget = SEARCH_LIMIT
    for q in range(1, lead + 1):
        if lead % q:
            continue
        top = bound * q
        budget -= 2 * top
        if budget < 0:
            return None
        for num in range(1, top + 1):
            if c0 % num or math.gcd(num, q) != 1:
                continue
            for p in (num, -num):
                # q x - p divides poly iff poly(p/q) == 0
                if not poly(Fraction(p, q)):
                    return IntPolynomial([-p, q])
    return None


def _divides(poly, factor):
    q, r = _fdivmod(_fractions(poly), _fractions(factor))
    return not r


def _low_degree_factor(poly, bound):
    """
    Search monic integer factors of degree 2 and 3 whose roots respect the
    root bound; None if nothing was found or the search is too large
    """
    n = poly.degree
    if not poly.is_monic or n < 4:
        return None
    c0 = abs(poly[0])
    for k in (2, 3):
        if 2 * k > n:
            break
        # coefficients of a degree k factor: |e_i| <= binomial(k, i) R^i
        limits = [math.comb(k, i) * bound ** i for i in range(1, k + 1)]
        consts = [c for c in range(1, limits[-1] + 1) if c0 % c == 0]
        ranges = limits[:-1]
        size = len(consts) * 2
        for r in ranges:
            size *= 2 * r + 1
        if size > SEARCH_LIMIT:
            continue
        mids = [range(-r, r + 1) for r in ranges]
        for c in consts:
            for const in (c, -c):
                if k == 2:
                    for b in mids[0]:
                        cand = IntPolynomial([const, b, 1])
                        if _divides(poly, cand):
                            return cand
                else:
                    for b in mids[1]:
                        for a in mids[0]:
                            cand = IntPolynomial([const, b, a, 1])
                            if _divides(poly, cand):
                                return cand
    return None


def irreducibility_probe(poly):
    """
    Try to decide irreducibility over Q of a monic integer polynomial

    IRREDUCIBLE comes with a certificate: the polynomial is irreducible
    modulo some prime, or the factor degrees possible modulo several primes
    only add up to 0 or the full degree.  REDUCIBLE comes with a factor (a
    rational root, a repeated factor, or a monic factor of degree 2 or 3).

    >>> irreducibility_probe(IntPolynomial([0, 6, 8, -6, -8, 0, 1]))
    <ProbeResult REDUCIBLE factor=x>
    >>> irreducibility_probe(IntPolynomial([-3, 0, 1]))
    <ProbeResult IRREDUCIBLE {'prime': 5}>
    >>> irreducibility_probe(IntPolynomial([4, 0, -5, 0, 1]))  # (x^2-1)(x^2-4)
    <ProbeResult REDUCIBLE factor=x - 2>
    >>> irreducibility_probe(IntPolynomial([1, 0, -3, 0, 1]))  # (x^2-x-1)(x^2+x-1)
    <ProbeResult REDUCIBLE factor=x^2 - x - 1>
    """
    n = poly.degree
    if n < 1:
        return ProbeResult(('UNKNOWN', None))
    if n == 1:
        return ProbeResult(('IRREDUCIBLE', {'linear': True}))
    bound = _root_bound(poly)
    if bound is not None:
        root = _rational_root(poly, bound)
        if root is not None:
            return ProbeResult(('REDUCIBLE', root))
    repeated = _gcd(poly, poly.derivative())
    if repeated.degree > 0:
        return ProbeResult(('REDUCIBLE', repeated))
    patterns = {}
    possible = None
    for p in PROBE_PRIMES + PATTERN_PRIMES:
        degrees = factor_degrees_mod_p(poly, p)
        if degrees is None:
            continue
        if degrees == [n]:
            return ProbeResult(('IRREDUCIBLE', {'prime': p}))
        patterns[p] = degrees
        sums = _subset_sums(degrees)
        possible = sums if possible is None else possible & sums
        if possible == set([0, n]):
            return ProbeResult(('IRREDUCIBLE', {'degree_patterns': patterns}))
    if bound is not None:
        factor = _low_degree_factor(poly, bound)
        if factor is not None:
            return ProbeResult(('REDUCIBLE', factor))
    return ProbeResult(('UNKNOWN', None))


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
