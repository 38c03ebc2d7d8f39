# -*- coding: utf-8
"""
sgspec.twodist.search: the optimizing searches over enumerated signed graphs

spectral_radius_order -- k(lambda), the fewest vertices of a graph with
                         largest eigenvalue lambda
kp_search             -- the least |G|/mult(lambda, G) over signed graphs
                         with chromatic number <= p and lambda_1 = lambda
compute_M             -- the largest multiplicity of lambda under the tail
                         condition lambda_(p+1) <= lambda and a forbidden
                         family
verify_mult_bound     -- mult(lambda, G) <= c*|G| for all small G with
                         chromatic number <= p

>>> report = spectral_radius_order(2, 5)
>>> report.value, report.witnesses
(3, [<SignedGraph n=3 edges=[(0, 1, 1), (0, 2, 1), (1, 2, 1)]>])
>>> kp_search(1, 3, 5).value
Fraction(3, 2)
"""

# Python compatibility:
from __future__ import absolute_import

from six.moves import range

# Standard library:
from collections import OrderedDict
from fractions import Fraction
from itertools import combinations, product

# 3rd party:
import networkx as nx

# Local imports:
from sgspec.twodist import PROJECTNAME
from sgspec.twodist.algebra import AlgebraicNumber, as_number
from sgspec.twodist.canonical import canonical_form
from sgspec.twodist.enumeration import (
    Collector,
    ForbiddenFamily,
    enumerate_signed,
    )
from sgspec.twodist.exceptions import BadParams, LimitExceeded
from sgspec.twodist.graphs import (
    Graph,
    SignedGraph,
    all_positive,
    chi_at_most,
    )
from sgspec.twodist.reports import number_to_json
from sgspec.twodist.sgjson import graph_to_obj
from sgspec.twodist.spectral import compare_top_eigenvalue, multiplicity

# Logging / Debugging:
import logging

__all__ = [
    'SearchReport',
    'compute_M',
    'cubic_graphs',
    'forbidden_family',
    'inspect_search_specs',
    'kp_search',
    'ratio_lower_bound',
    'spectral_radius_order',
    'sqrt3_boundary_reduction',
    'verify_mult_bound',
    ]

logger = logging.getLogger(PROJECTNAME + ': search')

FORBIDDEN_MAX_H = 6
CUBIC_MAX_N = 8


def inspect_search_specs(kw):
    """
    Helper: named options of the searches, passed on to enumerate_signed

    >>> kw = {'jobs': 2}
    >>> inspect_search_specs(kw)
    >>> sorted(kw.items())
    [('deadline', None), ('jobs', 2), ('limit', 10), ('prune', True), ('shard_depth', 4), ('witness_limit', 5)]
    >>> inspect_search_specs({'max_n': 3})
    Traceback (most recent call last):
      ...
    TypeError: Found unsupported option(s)! ('max_n')
    """
    kw.setdefault('jobs', 1)
    kw.setdefault('shard_depth', 4)
    kw.setdefault('deadline', None)
    kw.setdefault('limit', 10)
    kw.setdefault('witness_limit', 5)
    kw.setdefault('prune', True)
    invalid = set(kw) - set(['jobs', 'shard_depth', 'deadline', 'limit',
                             'witness_limit', 'prune'])
    if invalid:
        raise TypeError('Found unsupported option(s)! (%r)'
                        % (sorted(invalid)[0],
                           ))


def _enumeration_options(kw):
    return dict((key, kw[key])
                for key in ('jobs', 'shard_depth', 'deadline', 'limit',
                            'prune'))


# ------------------------------------------------ [ reports ... [
class SearchReport(object):
    """
    The outcome of a search: the best value, witnesses (least canonical
    forms first), the enumeration counters and bound cross-checks
    """

    def __init__(self, mode, value=None, witnesses=(), counters=None,
                 bounds=None, status=None, details=None):
        self.mode = mode
        self.value = value
        self.witnesses = list(witnesses)
        self.counters = counters
        self.bounds = bounds if bounds is not None else OrderedDict()
        self.status = status
        self.details = details if details is not None else OrderedDict()

    @property
    def passed(self):
        return self.status != 'FAIL'

    def as_dict(self):
        res = OrderedDict()
        res['mode'] = self.mode
        res['status'] = self.status
        res['value'] = (number_to_json(self.value)
                        if self.value is not None else None)
        res['witnesses'] = [graph_to_obj(g) for g in self.witnesses]
        if self.counters is not None:
            counters = self.counters.as_dict()
            res['enumerated'] = counters['enumerated']
            res['pruned'] = counters['pruned']
            res['per_order'] = counters['per_order']
        res['bounds'] = self.bounds
        res['details'] = self.details
        return res

    def __repr__(self):
        return '<SearchReport %s %s value=%s>' % (self.mode, self.status,
                                                  self.value)


def _keep_least(pairs, limit):
    """
    the `limit` (form, graph) pairs with the least forms, without duplicates
    """
    res = []
    last = None
    for form, g in sorted(pairs, key=lambda pair: pair[0]):
        if form != last:
            res.append((form, g))
            last = form
        if len(res) >= limit:
            break
    return res


def ratio_lower_bound(lam, p, k):
    """
    The lower bound p*k/(p*k - 2*lambda) for k_p(lambda), given k = k(lambda)

    >>> ratio_lower_bound(2, 3, 3)
    Fraction(9, 5)
    >>> ratio_lower_bound(2, 4, 3)
    Fraction(3, 2)
    """
    lam = as_number(lam)
    denom = p * k - 2 * lam
    if p < 2 or not denom > 0:
        return None
    res = (p * k) / denom
    if res.is_rational:
        return res.a
    return res
# ------------------------------------------------ ] ... reports ]


# --------------------------------------------- [ collectors ... [
class _BestCollector(Collector):
    """
    Keeps the least (or greatest) score and the witnesses attaining it
    """
    greatest = False

    def __init__(self, lam, witness_limit=5):
        self.lam = lam
        self.witness_limit = witness_limit
        self.best = None
        self.witnesses = []

    def score(self, candidate):
        raise NotImplementedError

    def visit(self, candidate):
        value = self.score(candidate)
        if value is None:
            return
        self._offer(value, [(candidate.form, candidate.graph)])

    def _offer(self, value, pairs):
        if self.best is None or (value > self.best if self.greatest
                                 else value < self.best):
            self.best = value
            self.witnesses = _keep_least(pairs, self.witness_limit)
        elif value == self.best:
            self.witnesses = _keep_least(self.witnesses + pairs,
                                         self.witness_limit)

    def merge(self, other):
        if other.best is not None:
            self._offer(other.best, other.witnesses)

    def fresh(self):
        return type(self)(self.lam, self.witness_limit)

    def witness_graphs(self):
        return [g for form, g in self.witnesses]


class _OrderCollector(_BestCollector):
    """the fewest vertices of a graph with lambda_1 = lambda"""

    def score(self, candidate):
        if candidate.top_multiplicity():
            return candidate.graph.n
        return None


class _RatioCollector(_BestCollector):
    """the least n/mult over graphs with lambda_1 = lambda"""

    def score(self, candidate):
        mult = candidate.top_multiplicity()
        if mult:
            return Fraction(candidate.graph.n, mult)
        return None


class _MultiplicityCollector(_BestCollector):
    """the greatest multiplicity of lambda"""
    greatest = True

    def score(self, candidate):
        return multiplicity(candidate.graph, self.lam)


class _BoundCollector(Collector):
    """
    Counterexamples to mult(lambda, G) <= bound * |G|
    """

    def __init__(self, lam, bound, witness_limit=5):
        self.lam = lam
        self.bound = bound
        self.witness_limit = witness_limit
        self.violations = []
        self.violating = {}
        self.checked = {}

    def visit(self, candidate):
        g = candidate.graph
        self.checked[g.n] = self.checked.get(g.n, 0) + 1
        if multiplicity(g, self.lam) > self.bound * g.n:
            self.violating[g.n] = self.violating.get(g.n, 0) + 1
            self.violations = _keep_least(
                self.violations + [(candidate.form, g)], self.witness_limit)

    def merge(self, other):
        self.violations = _keep_least(self.violations + other.violations,
                                      self.witness_limit)
        for mine, theirs in ((self.violating, other.violating),
                             (self.checked, other.checked)):
            for n, cnt in theirs.items():
                mine[n] = mine.get(n, 0) + cnt

    def fresh(self):
        return _BoundCollector(self.lam, self.bound, self.witness_limit)


class _FamilyCollector(Collector):
    """graphs whose largest eigenvalue exceeds lambda"""

    def __init__(self, lam):
        self.lam = lam
        self.members = []

    def visit(self, candidate):
        g = candidate.graph
        if compare_top_eigenvalue(g, self.lam).verdict == 'GREATER':
            self.members.append((candidate.form, g))

    def merge(self, other):
        self.members.extend(other.members)

    def fresh(self):
        return _FamilyCollector(self.lam)
# --------------------------------------------- ] ... collectors ]


def forbidden_family(lam, h, p=None, **kw):
    """
    All signed graphs on at most h vertices with largest eigenvalue greater
    than lambda, up to isomorphism

    With p given and h >= floor(lambda**2) + 2, the family carries the
    degree cap (p - 1) * floor(lambda**2).

    >>> r3 = AlgebraicNumber.sqrt(3)
    >>> fam = forbidden_family(r3, 3)
    >>> sorted(sorted(s for u, v, s in g.edges) for g in fam.members)
    [[-1, -1, 1], [1, 1, 1]]
    >>> forbidden_family(r3, 2).members
    ()
    >>> forbidden_family(r3, 5, p=3).degree_cap
    6
    """
    inspect_search_specs(kw)
    lam = as_number(lam)
    if h > FORBIDDEN_MAX_H:
        raise LimitExceeded('Forbidden families are computed for up to'
                            ' %d vertices; found h=%r!'
                            % (FORBIDDEN_MAX_H, h))
    collector = _FamilyCollector(lam)
    options = _enumeration_options(kw)
    options['prune'] = True
    enumerate_signed(h, collector, **options)
    cap = None
    square = (lam * lam).floor()
    if p is not None and h >= square + 2:
        cap = (p - 1) * square
    logger.info('forbidden family at lambda=%s, h=%d: %d members',
                lam, h, len(collector.members))
    return ForbiddenFamily(lam, h, [g for form, g in collector.members], cap)


def spectral_radius_order(lam, n_max, **kw):
    """
    k(lambda): the fewest vertices of a (plain) graph with largest
    eigenvalue exactly lambda

    >>> report = spectral_radius_order(AlgebraicNumber.sqrt(3), 5)
    >>> report.value, [sorted(g.degrees()) for g in report.witnesses]
    (4, [[1, 1, 1, 3]])
    >>> spectral_radius_order(AlgebraicNumber.sqrt(5), 3).status
    'NOT_FOUND'
    """
    inspect_search_specs(kw)
    lam = as_number(lam)
    if not lam > 0:
        raise BadParams('lambda must be positive; found %s!' % (lam,))
    collector = _OrderCollector(lam, kw['witness_limit'])
    counters = enumerate_signed(n_max, collector, signs=(1,), top=lam,
                                **_enumeration_options(kw))
    report = SearchReport('K_ORDER', counters=counters)
    report.details['lambda'] = number_to_json(lam)
    report.details['n_max'] = n_max
    if collector.best is None:
        report.status = 'NOT_FOUND'
        report.details['conclusion'] = 'k(lambda) > %d' % n_max
    else:
        report.status = 'FOUND'
        report.value = collector.best
        report.witnesses = collector.witness_graphs()
    return report


def kp_search(lam, p, n_max, **kw):
    """
    The least |G|/mult(lambda, G) over the signed graphs on at most n_max
    vertices with chromatic number <= p and largest eigenvalue lambda

    >>> report = kp_search(AlgebraicNumber.sqrt(2), 3, 4)
    >>> report.value, [(g.n, len(g.positive_edges), len(g.negative_edges))
    ...                  for g in report.witnesses]
    (Fraction(2, 1), [(4, 1, 3)])
    """
    inspect_search_specs(kw)
    lam = as_number(lam)
    if p < 1:
        raise BadParams('p must be positive; found %r!' % (p,))
    collector = _RatioCollector(lam, kw['witness_limit'])
    counters = enumerate_signed(n_max, collector, top=lam, chi_max=p,
                                **_enumeration_options(kw))
    report = SearchReport('KP_RATIO', counters=counters)
    report.details['lambda'] = number_to_json(lam)
    report.details['p'] = p
    report.details['n_max'] = n_max
    report.details['note'] = 'minimum over the enumerated range'
    if collector.best is None:
        report.status = 'NOT_FOUND'
    else:
        report.status = 'FOUND'
        report.value = collector.best
        report.witnesses = collector.witness_graphs()
    order = spectral_radius_order(lam, n_max, **kw)
    if order.value is not None:
        bound = ratio_lower_bound(lam, p, order.value)
        report.bounds['k'] = order.value
        if bound is not None:
            report.bounds['ratio_lower'] = number_to_json(bound)
            if report.value is not None:
                report.bounds['ratio_lower_holds'] = bool(report.value >= bound)
    return report


def compute_M(lam, p, N, family, **kw):
    """
    The largest multiplicity of lambda over the signed graphs on at most N
    vertices with chromatic number <= p, lambda_(p+1) <= lambda and no
    induced member of family

    >>> compute_M(1, 2, 4, None).value
    2
    """
    inspect_search_specs(kw)
    lam = as_number(lam)
    if N > 8:
        raise LimitExceeded('compute_M supports N <= 8; found %r!' % (N,))
    collector = _MultiplicityCollector(lam, kw['witness_limit'])
    options = _enumeration_options(kw)
    counters = enumerate_signed(N, collector, chi_max=p, tail=(p + 1, lam),
                                forbidden=family, **options)
    report = SearchReport('M_VALUE', counters=counters, status='FOUND')
    report.value = collector.best or 0
    if collector.best:
        report.witnesses = collector.witness_graphs()
    report.details['lambda'] = number_to_json(lam)
    report.details['p'] = p
    report.details['N'] = N
    if family is not None:
        report.details['family'] = OrderedDict([
            ('h', family.h),
            ('members', len(family.members)),
            ('degree_cap', family.degree_cap),
            ])
    order = spectral_radius_order(lam, min(N, 6), **kw) if lam > 0 else None
    if order is not None and order.value is not None:
        k = order.value
        q = max(Fraction(1), Fraction(p, 2))
        # M <= (1 - (k - 1)/(q k)) N + O(1)
        report.bounds['slope'] = number_to_json(1 - Fraction(k - 1) / (q * k))
    return report


# --------------------------------------- [ bound verification ... [
def verify_mult_bound(lam, p, n_max, bound, connected=True, long=False,
                      **kw):
    """
    Check mult(lambda, G) <= bound * |G| for all signed graphs on at most
    n_max vertices with chromatic number <= p

    A linear bound holds for a graph iff it holds for its components, so by
    default only connected graphs are enumerated.  For lambda = sqrt(3) and
    bound 3/7, orders above 6 are covered by the A**2 = 3I reduction (see
    sqrt3_boundary_reduction) unless long=True.

    >>> verify_mult_bound(AlgebraicNumber.sqrt(3), 3, 1, 0).status
    'PASS'
    >>> report = verify_mult_bound(1, 2, 3, Fraction(1, 3))
    >>> report.status, len(report.witnesses)
    ('FAIL', 2)
    >>> report.details['readings']['chi_and_forbidden_family']
    'FAIL'
    """
    inspect_search_specs(kw)
    lam = as_number(lam)
    bound = Fraction(bound)
    r3 = AlgebraicNumber.sqrt(3)
    reducible = lam == r3 and bound == Fraction(3, 7)
    enum_max = n_max
    if reducible and n_max > 6 and not long:
        enum_max = 6
    collector = _BoundCollector(lam, bound, kw['witness_limit'])
    counters = enumerate_signed(enum_max, collector, chi_max=p,
                                connected=connected,
                                **_enumeration_options(kw))
    report = SearchReport('BOUND_VERIFY', counters=counters)
    report.value = bound
    report.details['lambda'] = number_to_json(lam)
    report.details['p'] = p
    report.details['n_max'] = n_max
    report.details['reading'] = ('all signed graphs with chi <= %d%s'
                                 % (p, '; connected components suffice'
                                    if connected else ''))
    report.details['enumerated_up_to'] = enum_max
    report.details['checked'] = OrderedDict(
        (str(n), collector.checked[n]) for n in sorted(collector.checked))
    failed = bool(collector.violating)
    report.details['violating'] = OrderedDict(
        (str(n), collector.violating[n]) for n in sorted(collector.violating))
    report.witnesses = [g for form, g in collector.violations]
    reduction_failed = False
    if reducible and n_max >= 4:
        orders = [n for n in (4, 6, 8) if n <= n_max]
        reduction = sqrt3_boundary_reduction(orders, p)
        report.details['reduction'] = reduction
        agree = OrderedDict()
        for n in orders:
            if n <= enum_max:
                agree[str(n)] = (bool(collector.violating.get(n))
                                 == bool(reduction[str(n)]['violations']))
        report.details['methods_agree'] = agree
        reduction_failed = any(reduction[str(n)]['violations']
                               for n in orders)
    report.status = 'FAIL' if failed or reduction_failed else 'PASS'
    # second reading: no induced subgraph on at most floor(lambda**2) + 2
    # vertices with largest eigenvalue above lambda
    h = min((lam * lam).floor() + 2, FORBIDDEN_MAX_H, enum_max)
    family = forbidden_family(lam, h, p=p, **kw)
    restricted = _BoundCollector(lam, bound, kw['witness_limit'])
    enumerate_signed(enum_max, restricted, chi_max=p, connected=connected,
                     forbidden=family, **_enumeration_options(kw))
    report.details['forbidden_h'] = h
    report.details['readings'] = OrderedDict([
        ('chi_only', report.status),
        ('chi_and_forbidden_family',
         'FAIL' if restricted.violating or reduction_failed else 'PASS'),
        ])
    logger.info('mult bound %s at lambda=%s, p=%d, n<=%d: %s',
                bound, lam, p, n_max, report.status)
    return report


def cubic_graphs(n, connected=True):
    """
    The cubic graphs on n vertices, up to isomorphism

    >>> [len(cubic_graphs(n)) for n in (4, 6, 8)]
    [1, 2, 5]
    >>> cubic_graphs(5)
    []
    """
    if n > CUBIC_MAX_N:
        raise LimitExceeded('Cubic graphs are generated for up to %d'
                            ' vertices; found %r!' % (CUBIC_MAX_N, n))
    if n % 2 or n < 4:
        return []
    found = {}
    degree = [0] * n
    edges = []

    def extend():
        free = [v for v in range(n) if degree[v] < 3]
        if not free:
            g = Graph(n, edges)
            if connected and not nx.is_connected(g.to_networkx()):
                return
            form = canonical_form(all_positive(g))
            found.setdefault(form, g)
            return
        v = free[0]
        need = 3 - degree[v]
        adjacent = set(w for e in edges for w in e if v in e)
        options = [w for w in free[1:] if w not in adjacent]
        for chosen in combinations(options, need):
            for w in chosen:
                edges.append((v, w))
                degree[v] += 1
                degree[w] += 1
            extend()
            for w in chosen:
                edges.pop()
                degree[v] -= 1
                degree[w] -= 1

    extend()
    return [found[form] for form in sorted(found)]


def _squares_to_3i(rows, n):
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            rv = rows[v]
            if sum(ru[w] * rv[w] for w in range(n)):
                return False
    return True


def sqrt3_boundary_reduction(orders=(4, 6, 8), p=3):
    """
    Test all signings of the connected cubic graphs of the given orders for
    A**2 = 3I together with chromatic number <= p

    For n <= 8, mult(sqrt(3)) > 3n/7 forces an even n and
    mult(sqrt(3)) = mult(-sqrt(3)) = n/2, i.e. A**2 = 3I; a disconnected
    solution would have a connected one of smaller order.

    >>> res = sqrt3_boundary_reduction([4])
    >>> res['4']['graphs'], res['4']['signings'], res['4']['violations']
    (1, 64, [])
    """
    res = OrderedDict()
    for n in orders:
        graphs = cubic_graphs(n)
        signings = 0
        squares = 0
        violations = []
        for g in graphs:
            for signs in product((1, -1), repeat=len(g.edges)):
                signings += 1
                sg = SignedGraph._make(n, tuple(
                    (u, v, s) for (u, v), s in zip(g.edges, signs)))
                if not _squares_to_3i(sg.adjacency_rows(), n):
                    continue
                squares += 1
                if chi_at_most(sg, p):
                    violations.append(graph_to_obj(sg))
        res[str(n)] = OrderedDict([
            ('graphs', len(graphs)),
            ('signings', signings),
            ('square_3i', squares),
            ('violations', violations),
            ])
        logger.info('order %d: %d cubic graphs, %d signings with A^2 = 3I,'
                    ' %d violations', n, len(graphs), squares,
                    len(violations))
    return res
# --------------------------------------- ] ... bound verification ]


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
