# -*- coding: utf-8
"""
sgspec.twodist.codes: spherical {alpha, beta}-codes and signed graphs

A code of N unit vectors with inner products in {alpha, beta} is described
by its associated graph G (edges mark the beta pairs); its Gram matrix is

    M = (1 - alpha) I - (alpha - beta) A_G + alpha J
      = (alpha - beta) (lambda I - A_G + mu J),

and the code exists in R^d iff M is positive semidefinite of rank <= d.

>>> params = CodeParameters(Fraction(2, 5), Fraction(-1, 5))
>>> derived = derive_params(params)
>>> derived.lam, derived.mu, derived.p, derived.q
(<AlgebraicNumber 1>, <AlgebraicNumber 2/3>, 3, Fraction(3, 2))
>>> from sgspec.twodist.graphs import SignedGraph, Partition
>>> k3 = SignedGraph(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)])
>>> code = build_code(k3, Partition([[0], [1], [2]]), params, 20)
>>> code.N, code.rank
(51, 19)
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
from sgspec.twodist import PROJECTNAME
from sgspec.twodist.algebra import AlgebraicNumber, as_number
from sgspec.twodist.exceptions import (
    AmbiguousProduct,
    BadParams,
    DimensionTooSmall,
    InvalidColoring,
    NotTopEigenvalue,
    NotUnit,
    NumericFailure,
    VerificationFailed,
    )
from sgspec.twodist.graphs import (
    Graph,
    Partition,
    disjoint_copies,
    overlay_multipartite,
    valid_coloring,
    )
from sgspec.twodist.matrix import ExactMatrix, psd_ldlt, rank_exact
from sgspec.twodist.reports import number_to_json
from sgspec.twodist.spectral import compare_top_eigenvalue, multiplicity

# Logging / Debugging:
import logging

__all__ = [
    'CodeInstance',
    'CodeParameters',
    'DerivedParameters',
    'associated_graph',
    'build_code',
    'check_realizable',
    'derive_params',
    'gram_matrix',
    'predicted_asymptotics',
    'realize_vectors',
    ]

logger = logging.getLogger(PROJECTNAME + ': codes')

EIGENVALUE_CUTOFF = 1e-12
GRAM_TOLERANCE = 1e-8
DEFAULT_TOLERANCE = 1e-6


class CodeParameters(tuple):
    """
    (alpha, beta) with -1 <= beta < alpha < 1

    >>> CodeParameters(Fraction(1, 3), Fraction(-1, 3))
    <CodeParameters alpha=1/3 beta=-1/3>
    >>> CodeParameters(0, 0)
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadParams: -1 <= beta < alpha < 1 expected; found alpha=0, beta=0!
    """

    def __new__(cls, alpha, beta):
        alpha = as_number(alpha)
        beta = as_number(beta)
        if not (-1 <= beta < alpha < 1):
            raise BadParams('-1 <= beta < alpha < 1 expected;'
                            ' found alpha=%s, beta=%s!' % (alpha, beta))
        return tuple.__new__(cls, (alpha, beta))

    def __getnewargs__(self):
        return tuple(self)

    @property
    def alpha(self):
        return self[0]

    @property
    def beta(self):
        return self[1]

    def __repr__(self):
        return '<CodeParameters alpha=%s beta=%s>' % self


class DerivedParameters(tuple):
    """
    (lam, mu, p, q); p and q are None unless beta < 0 <= alpha
    """

    @property
    def lam(self):
        return self[0]

    @property
    def mu(self):
        return self[1]

    @property
    def p(self):
        return self[2]

    @property
    def q(self):
        return self[3]

    def as_dict(self):
        res = OrderedDict()
        res['lambda'] = number_to_json(self[0])
        res['mu'] = number_to_json(self[1])
        res['p'] = self[2]
        res['q'] = (number_to_json(self[3])
                    if self[3] is not None else None)
        return res


def derive_params(params):
    """
    lambda = (1 - alpha)/(alpha - beta), mu = alpha/(alpha - beta),
    p = floor(-alpha/beta) + 1 and q = max(1, p/2)

    >>> r3 = AlgebraicNumber.sqrt(3)
    >>> derived = derive_params(CodeParameters((6*r3 - 4)/23, -(3*r3 - 2)/23))
    >>> derived.lam, derived.p
    (<AlgebraicNumber sqrt(3)>, 3)
    >>> derive_params(CodeParameters(Fraction(1, 3), Fraction(-1, 3))).p
    2
    >>> derive_params(CodeParameters(Fraction(1, 2), Fraction(1, 4))).p is None
    True
    """
    if not isinstance(params, CodeParameters):
        params = CodeParameters(*params)
    alpha, beta = params
    gap = alpha - beta
    lam = (1 - alpha) / gap
    mu = alpha / gap
    p = q = None
    if beta < 0 <= alpha:
        p = (-alpha / beta).floor() + 1
        q = max(Fraction(1), Fraction(p, 2))
    return DerivedParameters((lam, mu, p, q))


def gram_matrix(g, params):
    """
    The Gram matrix of the code with associated graph g: 1 on the diagonal,
    beta on the edges, alpha elsewhere

    >>> gram = gram_matrix(Graph(2, [(0, 1)]),
    ...                    CodeParameters(Fraction(2, 5), Fraction(-1, 5)))
    >>> gram
    <ExactMatrix 2x2 over Q>
    >>> gram[0]
    (1, Fraction(-1, 5))
    """
    alpha, beta = params
    n = g.n
    rows = [[alpha] * n for i in range(n)]
    for i in range(n):
        rows[i][i] = 1
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = beta
    return ExactMatrix(rows)


class Realizability(tuple):
    """
    (verdict, rank, certificate): 'YES' or 'NO'; the rank is None if the
    Gram matrix is not PSD, whose certificate then holds a witness vector
    """

    @property
    def verdict(self):
        return self[0]

    @property
    def rank(self):
        return self[1]

    @property
    def certificate(self):
        return self[2]

    def __repr__(self):
        return '<Realizability %s rank=%s>' % (self[0], self[1])


def check_realizable(g, params, d):
    """
    Is there a spherical code in R^d with associated graph g?

    >>> k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    >>> planar = CodeParameters(0, Fraction(-1, 2))
    >>> check_realizable(k3, planar, 2)
    <Realizability YES rank=2>
    >>> check_realizable(k3, planar, 1)
    <Realizability NO rank=2>
    >>> check_realizable(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), planar, 3)
    <Realizability NO rank=None>
    """
    gram = gram_matrix(g, params)
    cert = psd_ldlt(gram)
    if not cert.is_psd:
        return Realizability(('NO', None, cert))
    rank = rank_exact(gram)
    return Realizability(('YES' if rank <= d else 'NO', rank, cert))


class CodeInstance(tuple):
    """
    (params, d, graph, gram, rank, certificate, ell, witness_order, mult):
    a code built from ell copies of a witness
    """

    def __getnewargs__(self):
        return (tuple(self),)

    @property
    def params(self):
        return self[0]

    @property
    def d(self):
        return self[1]

    @property
    def graph(self):
        return self[2]

    @property
    def gram(self):
        return self[3]

    @property
    def rank(self):
        return self[4]

    @property
    def certificate(self):
        return self[5]

    @property
    def ell(self):
        return self[6]

    @property
    def N(self):
        return self[2].n

    def as_dict(self, formula=None):
        res = OrderedDict()
        res['N'] = self.N
        res['d'] = self[1]
        res['alpha'] = number_to_json(self[0].alpha)
        res['beta'] = number_to_json(self[0].beta)
        res['rank'] = self[4]
        res['psd'] = 'certified' if self[5].is_psd else 'failed'
        res['ell'] = self[6]
        res['witness_order'] = self[7]
        res['mult'] = self[8]
        if formula is not None:
            res['formula'] = formula
        return res

    def __repr__(self):
        return '<CodeInstance N=%d d=%d rank=%d>' % (self.N, self[1],
                                                     self[4])


def build_code(witness, coloring, params, d):
    """
    The code of ell disjoint copies of a witness signed graph, with the
    complete multipartite graph of the coloring overlaid: N = ell * |G|,
    ell = floor((d - p)/(|G| - mult(lambda, G)))

    >>> from sgspec.twodist.graphs import SignedGraph
    >>> k2 = SignedGraph(2, [(0, 1, -1)])
    >>> equiangular = CodeParameters(Fraction(1, 3), Fraction(-1, 3))
    >>> build_code(k2, Partition([[0], [1]]), equiangular, 10)
    <CodeInstance N=16 d=10 rank=9>
    >>> build_code(k2, Partition([[0], [1]]), equiangular, 2)
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.DimensionTooSmall: d=2 yields no copy of the witness (ell=0)!
    """
    if not isinstance(params, CodeParameters):
        params = CodeParameters(*params)
    derived = derive_params(params)
    lam, p = derived.lam, derived.p
    if p is None:
        raise BadParams('beta < 0 <= alpha expected!')
    if not isinstance(coloring, Partition):
        coloring = Partition(coloring, n=witness.n)
    if not valid_coloring(witness, coloring):
        raise InvalidColoring('Not a valid coloring of the signed graph!')
    t = coloring.t
    if t > p:
        raise InvalidColoring('The coloring has %(t)d parts; at most'
                              ' p=%(p)d are allowed!' % locals())
    if compare_top_eigenvalue(witness, lam).verdict != 'EQUAL':
        raise NotTopEigenvalue('lambda=%s is not the largest eigenvalue'
                               ' of the witness!' % (lam,))
    n = witness.n
    mult = multiplicity(witness, lam)
    ell = (d - p) // (n - mult)
    if ell < 1:
        raise DimensionTooSmall('d=%(d)d yields no copy of the witness'
                                ' (ell=%(ell)d)!' % locals())
    copies = disjoint_copies(witness, ell)
    # all copies share the t colors
    parts = Partition([[i * n + v for i in range(ell) for v in part]
                       for part in coloring.parts], n=n * ell)
    graph = overlay_multipartite(copies, parts)
    gram = gram_matrix(graph, params)
    cert = psd_ldlt(gram)
    if not cert.is_psd:
        raise VerificationFailed('The Gram matrix of the code is not'
                                 ' positive semidefinite!')
    rank = rank_exact(gram)
    if rank > d:
        raise VerificationFailed('The Gram matrix has rank %(rank)d > d=%(d)d!'
                                 % locals())
    logger.info('code of %d vectors in dimension %d (rank %d, %d copies)',
                graph.n, d, rank, ell)
    return CodeInstance((params, d, graph, gram, rank, cert, ell, n, mult))


def realize_vectors(code, tol=GRAM_TOLERANCE):
    """
    Unit vectors in R^d with the certified Gram matrix (floating point)

    >>> planar = CodeParameters(0, Fraction(-1, 2))
    >>> k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    >>> vectors = realize_vectors(_instance(k3, planar, 2))
    >>> vectors.shape
    (3, 2)
    >>> [round(float(x), 6) for x in vectors.dot(vectors.T)[0]]
    [1.0, -0.5, -0.5]
    """
    gram, d = code.gram, code.d
    matrix = np.array([[float(x) for x in row] for row in gram])
    values, vectors = np.linalg.eigh(matrix)
    keep = values > EIGENVALUE_CUTOFF * max(1.0, float(np.abs(values).max()))
    if keep.sum() > d:
        raise NumericFailure('The Gram matrix has %d numerically positive'
                             ' eigenvalues; d=%d!' % (keep.sum(), d))
    res = vectors[:, keep] * np.sqrt(values[keep])
    if res.shape[1] < d:
        res = np.hstack([res, np.zeros((res.shape[0], d - res.shape[1]))])
    deviation = float(np.abs(res.dot(res.T) - matrix).max()) if len(res) else 0.0
    if deviation > tol:
        raise NumericFailure('Realization deviates from the Gram matrix'
                             ' by %g!' % deviation)
    return res


def _instance(g, params, d):
    """
    A CodeInstance for a given associated graph (certified realizable)
    """
    check = check_realizable(g, params, d)
    if check.verdict != 'YES':
        raise VerificationFailed('The graph is not realizable in R^%d!' % d)
    return CodeInstance((params, d, g, gram_matrix(g, params), check.rank,
                         check.certificate, 1, g.n, None))


def associated_graph(vectors, params, tol=DEFAULT_TOLERANCE):
    """
    The graph of the beta pairs of a code

    >>> planar = CodeParameters(0, Fraction(-1, 2))
    >>> angles = np.array([0, 2, 4]) * np.pi / 3
    >>> mercedes = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    >>> associated_graph(mercedes, planar)
    <Graph n=3 edges=[(0, 1), (0, 2), (1, 2)]>
    >>> associated_graph(np.eye(3), CodeParameters(0, Fraction(-1, 2)))
    <Graph n=3 edges=[]>
    >>> associated_graph(2 * np.eye(2), planar)
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.NotUnit: Vector 0 has norm 2 (tolerance 1e-06)!
    """
    vectors = np.asarray(vectors, dtype=float)
    alpha, beta = float(params[0]), float(params[1])
    if abs(alpha - beta) <= 2 * tol:
        raise AmbiguousProduct('alpha and beta are closer than twice the'
                               ' tolerance!')
    norms = np.linalg.norm(vectors, axis=1)
    for i, norm in enumerate(norms):
        if abs(norm - 1) > tol:
            raise NotUnit('Vector %d has norm %g (tolerance %g)!'
                          % (i, norm, tol))
    products = vectors.dot(vectors.T)
    n = len(vectors)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            x = products[i, j]
            if abs(x - beta) <= tol:
                edges.append((i, j))
            elif abs(x - alpha) > tol:
                raise AmbiguousProduct('<v_%d, v_%d> = %g is neither alpha'
                                       ' nor beta!' % (i, j, x))
    return Graph(n, edges)


# ------------------------------------------------ [ formulas ... [
def _linear(coefficient):
    """
    >>> _linear(Fraction(7, 4)), _linear(3), _linear(1)
    ('7d/4', '3d', 'd')
    """
    c = as_number(coefficient)
    if not c.is_rational:
        return '(%s)d' % (c,)
    c = c.a
    if c == 1:
        return 'd'
    if c.denominator == 1:
        return '%dd' % c.numerator
    return '%dd/%d' % (c.numerator, c.denominator)


def _is_algebraic_integer(lam):
    return as_number(lam).minpoly_coefficients()[-1] == 1


def predicted_asymptotics(params, k_report=None, kp_report=None,
                          n_max=6):
    """
    The asymptotic formula for the largest code size N(d), by case:

    (a) p <= 2: k(lambda) d/(k(lambda) - 1) + O(1), or d + o(d) if no graph
        has largest eigenvalue lambda;
    (b) lambda = 1: pd + O(1);
    (c) lambda = sqrt(3), p = 3: 7d/4 + O(1);
    (d) lambda in {sqrt(2), sqrt(3)}, p >= lambda**2 + 1: 2d + O(1);

    otherwise the bracket between the lower bound of the best known k_p
    witness and the upper bounds.  k(lambda) is taken from k_report, or
    searched up to n_max vertices.

    >>> res = predicted_asymptotics(CodeParameters(Fraction(2, 5), Fraction(-1, 5)))
    >>> res['case'], res['formula']
    ('b', '3d+O(1)')
    >>> predicted_asymptotics(CodeParameters(Fraction(1, 3), Fraction(-1, 3)))['formula']
    '2d+O(1)'
    >>> r3 = AlgebraicNumber.sqrt(3)
    >>> predicted_asymptotics(CodeParameters((6*r3 - 4)/23, -(3*r3 - 2)/23))['formula']
    '7d/4+O(1)'
    """
    # Local imports:
    from sgspec.twodist.search import ratio_lower_bound, spectral_radius_order

    if not isinstance(params, CodeParameters):
        params = CodeParameters(*params)
    derived = derive_params(params)
    lam, p = derived.lam, derived.p
    res = OrderedDict()
    res['lambda'] = number_to_json(lam)
    res['p'] = p
    if p is None:
        raise BadParams('beta < 0 <= alpha expected!')
    r2, r3 = AlgebraicNumber.sqrt(2), AlgebraicNumber.sqrt(3)

    def k_value():
        report = k_report
        if report is None:
            if not _is_algebraic_integer(lam):
                return None
            report = spectral_radius_order(lam, n_max)
        res['k'] = report.value
        return report.value

    if p <= 2:
        res['case'] = 'a'
        k = k_value()
        if k is None:
            res['formula'] = 'd+o(d)'
            res['conclusive'] = not _is_algebraic_integer(lam)
        else:
            res['formula'] = _linear(Fraction(k, k - 1)) + '+O(1)'
    elif lam == 1:
        res['case'] = 'b'
        res['formula'] = _linear(p) + '+O(1)'
    elif lam == r3 and p == 3:
        res['case'] = 'c'
        res['formula'] = _linear(Fraction(7, 4)) + '+O(1)'
    elif lam in (r2, r3) and p >= lam * lam + 1:
        res['case'] = 'd'
        res['formula'] = _linear(2) + '+O(1)'
    else:
        res['case'] = 'bracket'
        k = k_value()
        bounds = OrderedDict()
        if kp_report is not None and kp_report.value is not None:
            kp = as_number(kp_report.value)
            bounds['lower'] = _linear(kp / (kp - 1)) + '+O(1)'
        uppers = []
        if k is not None:
            uppers.append(derived.q * k / Fraction(k - 1))
            lower = ratio_lower_bound(lam, p, k)
            if lower is not None:
                bounds['ratio_lower'] = number_to_json(lower)
        degree = as_number(lam).degree
        if degree >= 2:
            uppers.append(Fraction(degree, degree - 1))
        if uppers:
            bounds['upper'] = _linear(min(uppers, key=float)) + '+O(1)'
        bounds['signed_mult_upper'] = 'N <= d + M(lambda, N) + O(1)'
        res['bounds'] = bounds
        res['formula'] = None
    return res
# ------------------------------------------------ ] ... formulas ]


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
