# -*- coding: utf-8
"""
sgspec.twodist.constructions: the gallery of named graphs and their pinned
facts

Every construction carries a list of exact facts (spectral values with
multiplicities, chromatic numbers, matrix identities); verify_named checks
them all.

>>> c = build_named('complete_negative', 3)
>>> c.graph
<SignedGraph n=3 edges=[(0, 1, -1), (0, 2, -1), (1, 2, -1)]>
>>> verify_named('complete_negative', 3)['status']
'PASS'
>>> build_named('family_G', 3).graph.n
18
>>> build_named('dodecahedron')
Traceback (most recent call last):
  ...
sgspec.twodist.exceptions.UnknownName: Unknown construction 'dodecahedron'!
>>> build_named('signed_hypercube', 5)
Traceback (most recent call last):
  ...
sgspec.twodist.exceptions.BadParams: signed_hypercube: n must be one of (2, 3, 4); found 5!
"""

# Python compatibility:
from __future__ import absolute_import

from six import integer_types
from six.moves import range

# Standard library:
from collections import OrderedDict

# 3rd party:
import networkx as nx

# Local imports:
from sgspec.twodist import PROJECTNAME
from sgspec.twodist.algebra import AlgebraicNumber, as_number
from sgspec.twodist.canonical import automorphism_count, canonical_form
from sgspec.twodist.exceptions import (
    BadParams,
    UnknownName,
    VerificationFailed,
    )
from sgspec.twodist.graphs import (
    Chi,
    Graph,
    Partition,
    SignedGraph,
    all_negative,
    all_positive,
    chromatic_number,
    valid_coloring,
    )
from sgspec.twodist.polynomial import IntPolynomial, irreducibility_probe
from sgspec.twodist.reports import dumps, number_to_json, poly_to_json
from sgspec.twodist.spectral import (
    compare_top_eigenvalue,
    matrix_polynomial,
    multiplicity,
    signed_char_poly,
    )

# Logging / Debugging:
import logging

__all__ = [
    'NamedConstruction',
    'asymmetric_graphs',
    'build_named',
    'gallery_names',
    'hypercube_squares',
    'verify_named',
    ]

logger = logging.getLogger(PROJECTNAME + ': gallery')

SQRT33 = AlgebraicNumber.sqrt(33)
K5_TOP = (1 + SQRT33) / 2


class NamedConstruction(tuple):
    """
    (name, params, graph, pinned): the graph is a SignedGraph or a plain
    Graph; pinned is a list of (kind, expected) facts
    """

    def __getnewargs__(self):
        return (tuple(self),)

    @property
    def name(self):
        return self[0]

    @property
    def params(self):
        return self[1]

    @property
    def graph(self):
        return self[2]

    @property
    def pinned(self):
        return self[3]

    @property
    def signed(self):
        """
        the graph as a signed graph (plain graphs: all edges positive)
        """
        g = self[2]
        if isinstance(g, SignedGraph):
            return g
        return all_positive(g)

    @property
    def colorable(self):
        """
        the signed graph whose chromatic number is pinned; for plain graphs
        the all-negative signing, i.e. the ordinary chromatic number
        """
        g = self[2]
        if isinstance(g, SignedGraph):
            return g
        return all_negative(g)

    def __repr__(self):
        params = ', '.join(str(x) for x in self[1])
        return '<NamedConstruction %s(%s) n=%d>' % (self[0], params,
                                                    self[2].n)


# ----------------------------------------------- [ registry ... [
_builders = OrderedDict()


def _register(name, *params):
    """
    params: (parameter name, validator) pairs; a validator returns an error
    text or None
    """
    def decorate(func):
        _builders[name] = (func, params)
        return func
    return decorate


def _at_least(low):
    def check(value):
        if value < low:
            return 'must be at least %d' % low
    return check


def _one_of(*allowed):
    def check(value):
        if value not in allowed:
            return 'must be one of %s' % (allowed,)
    return check


def gallery_names():
    return list(_builders)


def _inspect_params(name, params):
    try:
        func, spec = _builders[name]
    except KeyError:
        raise UnknownName('Unknown construction %(name)r!' % locals())
    if len(params) != len(spec):
        raise BadParams('%s takes %d parameter(s); found %d!'
                        % (name, len(spec), len(params)))
    res = []
    for value, (pname, check) in zip(params, spec):
        if not isinstance(value, integer_types):
            raise BadParams('%s: integer %s expected; found %r!'
                            % (name, pname, value))
        problem = check(value)
        if problem:
            raise BadParams('%s: %s %s; found %r!'
                            % (name, pname, problem, value))
        res.append(int(value))
    return func, tuple(res)


def build_named(name, *params):
    """
    Build the named construction

    >>> build_named('signed_hypercube', 2).graph
    <SignedGraph n=4 edges=[(0, 1, 1), (0, 2, -1), (1, 3, -1), (2, 3, -1)]>
    >>> build_named('star')
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadParams: star takes 1 parameter(s); found 0!
    """
    func, params = _inspect_params(name, params)
    graph, pinned = func(*params)
    return NamedConstruction((name, params, graph, pinned))
# ----------------------------------------------- ] ... registry ]


# ------------------------------------------------- [ builders ... [
def _complete_edges(vertices):
    vertices = list(vertices)
    return [(u, v)
            for i, u in enumerate(vertices)
            for v in vertices[i + 1:]]


@_register('complete_negative', ('p', _at_least(1)))
def complete_negative(p):
    graph = all_negative(Graph(p, _complete_edges(range(p))))
    pinned = [('order', p),
              ('chi', p),
              ]
    if p >= 2:
        pinned.append(('top', (1, p - 1)))
    return graph, pinned


def _k5_edges(offset=0):
    """
    K5 on offset..offset+4; the triangle on the first three is positive
    """
    edges = []
    for u, v in _complete_edges(range(offset, offset + 5)):
        edges.append((u, v, 1 if v < offset + 3 else -1))
    return edges


@_register('k5_pm')
def k5_pm():
    graph = SignedGraph(5, _k5_edges())
    pinned = [('order', 5),
              ('spectrum', [(K5_TOP, 1), (1 - K5_TOP, 1),
                            (1, 1), (-1, 2)]),
              ('top', (K5_TOP, 1)),
              ('chi', 3),
              ]
    return graph, pinned


# vertex x + 2y + 4z sits at cube corner (x, y, z)
HYPERCUBE_2 = [(0, 1, 1), (0, 2, -1), (1, 3, -1), (2, 3, -1)]
HYPERCUBE_3 = [(0, 1, 1), (2, 6, 1), (5, 7, 1),
               (0, 2, -1), (0, 4, -1), (1, 3, -1), (1, 5, -1), (2, 3, -1),
               (3, 7, -1), (4, 5, -1), (4, 6, -1), (6, 7, -1)]
HYPERCUBE_CHI = {2: 3, 3: 4}


def cube_edges(n):
    return [(v, v | (1 << i))
            for v in range(1 << n)
            for i in range(n)
            if not v & (1 << i)]


def hypercube_squares(n):
    """
    The 4-cycles of the n-cube, each as its four edges

    >>> hypercube_squares(2)
    [((0, 1), (0, 2), (1, 3), (2, 3))]
    >>> len(hypercube_squares(4))
    24
    """
    res = []
    for i in range(n):
        for j in range(i + 1, n):
            bi, bj = 1 << i, 1 << j
            for v in range(1 << n):
                if v & bi or v & bj:
                    continue
                res.append(((v, v | bi), (v, v | bj),
                            (v | bi, v | bi | bj), (v | bj, v | bi | bj)))
    return res


def positive_per_square(g, n):
    """
    the number of positive edges in every square of the signed n-cube g
    """
    positive = set(g.positive_edges)
    return [sum(1 for e in square if e in positive)
            for square in hypercube_squares(n)]


def _one_positive_signings(n):
    """
    Signings of the n-cube with exactly one positive edge per square, in
    lexicographic order of the positive edge sets
    """
    squares = hypercube_squares(n)
    where = {}
    for k, square in enumerate(squares):
        for e in square:
            where.setdefault(e, []).append(k)
    covered = [False] * len(squares)
    chosen = []

    def search():
        try:
            k = covered.index(False)
        except ValueError:
            yield sorted(chosen)
            return
        for e in sorted(squares[k]):
            if any(covered[j] for j in where[e]):
                continue
            for j in where[e]:
                covered[j] = True
            chosen.append(e)
            for found in search():
                yield found
            chosen.pop()
            for j in where[e]:
                covered[j] = False

    for positive in search():
        positive = set(positive)
        yield SignedGraph._make(1 << n, tuple(
            (u, v, 1 if (u, v) in positive else -1)
            for u, v in sorted(cube_edges(n))))


def _search_hypercube(n):
    for g in _one_positive_signings(n):
        if chromatic_number(g).is_finite:
            return g
    raise VerificationFailed('No signing of the %d-cube with one positive'
                             ' edge per square and finite chromatic number!'
                             % n)


@_register('signed_hypercube', ('n', _one_of(2, 3, 4)))
def signed_hypercube(n):
    if n == 2:
        graph = SignedGraph(4, HYPERCUBE_2)
    elif n == 3:
        graph = SignedGraph(8, HYPERCUBE_3)
    else:
        graph = _search_hypercube(n)
    root = AlgebraicNumber.sqrt(n)
    half = 1 << (n - 1)
    pinned = [('order', 1 << n),
              ('square', n),
              ('one_positive_per_square', n),
              ('spectrum', [(root, half), (-root, half)]),
              ('chi', HYPERCUBE_CHI.get(n, 'finite')),
              ]
    return graph, pinned


# h3_hat leaves out corner (1, 1, 1)
H3_HAT = [(0, 1, 1), (2, 6, 1),
          (0, 2, -1), (0, 4, -1), (1, 3, -1), (1, 5, -1), (2, 3, -1),
          (4, 5, -1), (4, 6, -1)]


@_register('h3_hat')
def h3_hat():
    graph = SignedGraph(7, H3_HAT)
    pinned = [('order', 7),
              ('top', (AlgebraicNumber.sqrt(3), 3)),
              ('chi', 3),
              ]
    return graph, pinned


@_register('family_G', ('n', _at_least(3)))
def family_G(n):
    """
    A positive n-cycle v_0 .. v_{n-1}; copy i of k5_pm occupies
    n+5i .. n+5i+4; v_i is joined positively to n+5i+3 and negatively to
    n+5i+4, the two vertices outside the positive triangle
    """
    edges = [(i, (i + 1) % n, 1) for i in range(n)]
    for i in range(n):
        base = n + 5 * i
        edges.extend(_k5_edges(base))
        edges.append((i, base + 3, 1))
        edges.append((i, base + 4, -1))
    graph = SignedGraph(6 * n, [(min(u, v), max(u, v), s)
                                for u, v, s in edges])
    pinned = [('order', 6 * n),
              ('edge_count', 13 * n),
              ('max_degree', 5),
              ('top', (K5_TOP, n)),
              ('chi', 3),
              ]
    return graph, pinned


@_register('family_H', ('n', _at_least(3)))
def family_H(n):
    """
    An n-cycle v_0 .. v_{n-1}; copy i of K_{3,3} occupies n+6i .. n+6i+5
    (sides of three); v_i is joined to the adjacent n+6i and n+6i+3
    """
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        base = n + 6 * i
        edges.extend((base + a, base + 3 + b)
                     for a in range(3) for b in range(3))
        edges.append((i, base))
        edges.append((i, base + 3))
    graph = Graph(7 * n, [(min(u, v), max(u, v)) for u, v in edges])
    pinned = [('order', 7 * n),
              ('max_degree', 4),
              ('smallest', (-3, n)),
              ('chi', 3),
              ]
    return graph, pinned


def _gf9_multiply(x, y):
    # x = a + b*i with i*i = -1 over GF(3), encoded as a + 3b
    a, b = x % 3, x // 3
    c, d = y % 3, y // 3
    return (a * c - b * d) % 3 + 3 * ((a * d + b * c) % 3)


def _gf9_subtract(x, y):
    return (x % 3 - y % 3) % 3 + 3 * ((x // 3 - y // 3) % 3)


@_register('paley9')
def paley9():
    squares = set(_gf9_multiply(x, x) for x in range(1, 9))
    edges = [(u, v) for u, v in _complete_edges(range(9))
             if _gf9_subtract(u, v) in squares]
    graph = Graph(9, edges)
    pinned = [('order', 9),
              ('max_degree', 4),
              ('spectrum', [(4, 1), (1, 4), (-2, 4)]),
              ('smallest', (-2, 4)),
              ('chi', 3),
              ]
    return graph, pinned


def _folded_cube_edges():
    # 4-bit words, adjacent when they differ in one bit or in all four
    return [(u, v) for u, v in _complete_edges(range(16))
            if bin(u ^ v).count('1') in (1, 4)]


@_register('clebsch')
def clebsch():
    """
    The 10-regular Clebsch graph: the complement of the folded 5-cube
    """
    folded = set(_folded_cube_edges())
    graph = Graph(16, [e for e in _complete_edges(range(16))
                       if e not in folded])
    pinned = [('order', 16),
              ('max_degree', 10),
              ('spectrum', [(10, 1), (2, 5), (-2, 10)]),
              ('smallest', (-2, 10)),
              ('chi', 8),
              ]
    return graph, pinned


@_register('clebsch5')
def clebsch5():
    """
    The 5-regular Clebsch graph (folded 5-cube)
    """
    graph = Graph(16, _folded_cube_edges())
    pinned = [('order', 16),
              ('max_degree', 5),
              ('spectrum', [(5, 1), (1, 10), (-3, 5)]),
              ('smallest', (-3, 5)),
              ('chi', 4),
              ]
    return graph, pinned


@_register('star', ('k', _at_least(1)))
def star(k):
    graph = Graph(k + 1, [(0, v) for v in range(1, k + 1)])
    pinned = [('order', k + 1),
              ('top', (AlgebraicNumber.sqrt(k), 1)),
              ]
    return graph, pinned


@_register('complete', ('k', _at_least(2)))
def complete(k):
    graph = Graph(k, _complete_edges(range(k)))
    pinned = [('order', k),
              ('spectrum', [(k - 1, 1), (-1, k - 1)]),
              ('top', (k - 1, 1)),
              ]
    return graph, pinned


@_register('path', ('k', _at_least(1)))
def path(k):
    graph = Graph(k, [(v, v + 1) for v in range(k - 1)])
    pinned = [('order', k),
              ('chi', 2 if k > 1 else 1),
              ]
    if k == 3:
        pinned.append(('top', (AlgebraicNumber.sqrt(2), 1)))
    return graph, pinned


# drawn with a lower row 0, 2, 4, 5, upper row 1, 3
REDUCIBLE6 = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]


@_register('reducible6')
def reducible6():
    graph = Graph(6, REDUCIBLE6)
    pinned = [('order', 6),
              ('automorphisms', 1),
              ('charpoly', [0, 6, 8, -6, -8, 0, 1]),
              ('probe', 'REDUCIBLE'),
              ]
    return graph, pinned


_asymmetric = []


def asymmetric_graphs():
    """
    The asymmetric graphs on 6 vertices, in the order of the graph atlas

    >>> len(asymmetric_graphs())
    8
    """
    if not _asymmetric:
        for atlas_graph in nx.graph_atlas_g():
            if atlas_graph.number_of_nodes() != 6:
                continue
            graph = Graph(6, [(min(u, v), max(u, v))
                              for u, v in atlas_graph.edges()])
            if automorphism_count(all_positive(graph)) == 1:
                _asymmetric.append(graph)
    return list(_asymmetric)


@_register('asymmetric6', ('i', _one_of(*range(1, 9))))
def asymmetric6(i):
    graph = asymmetric_graphs()[i - 1]
    target = canonical_form(all_positive(Graph(6, REDUCIBLE6)))
    reducible = canonical_form(all_positive(graph)) == target
    pinned = [('order', 6),
              ('automorphisms', 1),
              ('probe', 'REDUCIBLE' if reducible else 'IRREDUCIBLE'),
              ]
    return graph, pinned


# an 8-vertex signed graph with a valid 3-coloring
COLORING8 = [(0, 1, 1), (2, 4, 1), (3, 4, 1), (5, 6, 1), (5, 7, 1),
                (6, 7, 1),
                (0, 2, -1), (0, 3, -1), (1, 5, -1), (1, 6, -1), (3, 7, -1),
                (4, 5, -1)]
COLORING8_PARTS = [[0, 1], [2, 3, 4], [5, 6, 7]]


@_register('coloring8')
def coloring8():
    graph = SignedGraph(8, COLORING8)
    pinned = [('order', 8),
              ('coloring', COLORING8_PARTS),
              ('chi', 3),
              ]
    return graph, pinned
# ------------------------------------------------- ] ... builders ]


# ---------------------------------------------------- [ facts ... [
def _observe_order(c, expected):
    return c.graph.n


def _observe_edge_count(c, expected):
    return len(c.graph.edges)


def _observe_max_degree(c, expected):
    return max(c.graph.degrees() or [0])


def _observe_chi(c, expected):
    outcome = chromatic_number(c.colorable)
    if expected == 'finite':
        return 'finite' if outcome.is_finite else 'infinite'
    if not outcome.is_finite:
        return 'infinite'
    return outcome.chi


def _observe_top(c, expected):
    value, mult = expected
    cmp = compare_top_eigenvalue(c.signed, value)
    return (value, multiplicity(c.signed, value)
            if cmp.verdict == 'EQUAL' else cmp.verdict)


def _observe_smallest(c, expected):
    value, mult = expected
    g = c.signed
    negated = SignedGraph._make(g.n, tuple((u, v, -s)
                                           for u, v, s in g.edges))
    cmp = compare_top_eigenvalue(negated, -as_number(value))
    return (value, multiplicity(g, value)
            if cmp.verdict == 'EQUAL' else cmp.verdict)


def _observe_spectrum(c, expected):
    g = c.signed
    res = [(value, multiplicity(g, value)) for value, mult in expected]
    if sum(mult for value, mult in res) != g.n:
        res.append(('rest', g.n - sum(mult for value, mult in res)))
    return res


def _observe_square(c, expected):
    rows = matrix_polynomial(IntPolynomial([-expected, 0, 1]),
                             c.signed.adjacency_rows())
    if any(x for row in rows for x in row):
        return 'A^2 != %dI' % expected
    return expected


def _observe_positive_per_square(c, expected):
    counts = set(positive_per_square(c.signed, expected))
    if counts == set([1]):
        return expected
    return sorted(counts)


def _observe_charpoly(c, expected):
    return poly_to_json(signed_char_poly(c.signed))


def _observe_probe(c, expected):
    return irreducibility_probe(signed_char_poly(c.signed)).verdict


def _observe_automorphisms(c, expected):
    return automorphism_count(c.signed)


def _observe_coloring(c, expected):
    if valid_coloring(c.signed, Partition(expected, n=c.graph.n)):
        return expected
    return 'invalid'


_observers = {
    'order': _observe_order,
    'edge_count': _observe_edge_count,
    'max_degree': _observe_max_degree,
    'chi': _observe_chi,
    'top': _observe_top,
    'smallest': _observe_smallest,
    'spectrum': _observe_spectrum,
    'square': _observe_square,
    'one_positive_per_square': _observe_positive_per_square,
    'charpoly': _observe_charpoly,
    'probe': _observe_probe,
    'automorphisms': _observe_automorphisms,
    'coloring': _observe_coloring,
    }


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(x) for x in value]
    if isinstance(value, AlgebraicNumber):
        return number_to_json(value)
    if isinstance(value, Chi):
        return value.value
    return value


def _same(expected, observed):
    if isinstance(expected, (list, tuple)):
        if not isinstance(observed, (list, tuple)):
            return False
        return (len(expected) == len(observed)
                and all(_same(e, o) for e, o in zip(expected, observed)))
    if isinstance(expected, integer_types + (AlgebraicNumber,)) \
            and isinstance(observed, integer_types + (AlgebraicNumber,)):
        return as_number(expected) == as_number(observed)
    return expected == observed
# ---------------------------------------------------- ] ... facts ]


def verify_named(name, *params, **kw):
    """
    Build the named construction and check all pinned facts exactly

    Returns an OrderedDict report; a violated fact raises VerificationFailed
    unless strict=False is given (then the report has status 'FAIL').

    >>> report = verify_named('h3_hat')
    >>> report['status'], [fact['fact'] for fact in report['facts']]
    ('PASS', ['order', 'top', 'chi'])
    >>> dumps(report['facts'][1]['observed'])
    '[{"a":"0","b":"1","m":3},3]'
    """
    strict = kw.pop('strict', True)
    if kw:
        raise TypeError('Found unsupported option(s)! (%r)'
                        % (sorted(kw)[0],
                           ))
    c = build_named(name, *params)
    res = OrderedDict()
    res['name'] = name
    res['params'] = list(c.params)
    res['n'] = c.graph.n
    res['facts'] = facts = []
    status = 'PASS'
    for kind, expected in c.pinned:
        observed = _observers[kind](c, expected)
        ok = _same(expected, observed)
        facts.append(OrderedDict([
            ('fact', kind),
            ('expected', _jsonable(expected)),
            ('observed', _jsonable(observed)),
            ('ok', ok),
            ]))
        if not ok:
            status = 'FAIL'
            logger.error('%r: %s expected %r, found %r', c, kind,
                         expected, observed)
            if strict:
                raise VerificationFailed('%s%r: %s expected %s, found %s!'
                                         % (name, c.params, kind,
                                            _jsonable(expected),
                                            _jsonable(observed)))
            break
    res['status'] = status
    logger.info('%r: %s', c, status)
    return res


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
