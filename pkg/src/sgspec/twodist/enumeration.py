# -*- coding: utf-8
"""
sgspec.twodist.enumeration: isomorph-free generation of signed graphs

Graphs are grown one vertex at a time (canonical augmentation): a child,
made from a parent by adding vertex n with some sign pattern, is kept iff
deleting the new vertex yields its canonical parent.  The canonical parent
of a graph C is the least (by canonical form) of the graphs C - v, over the
vertices v with the least (positive degree, negative degree) key.  Every
isomorphism class is thus generated from exactly one parent class; children
of one parent are deduplicated by their canonical forms.

All constraints but connectivity are hereditary (closed under taking
induced subgraphs), so a child violating one is pruned with its whole
subtree.

>>> counters = enumerate_signed(3)
>>> counters.per_order
{1: 1, 2: 3, 3: 10}
>>> enumerate_signed(3, chi_max=2).per_order
{1: 1, 2: 3, 3: 8}
>>> enumerate_signed(4, signs=(1,)).per_order
{1: 1, 2: 2, 3: 4, 4: 11}
"""

# Python compatibility:
from __future__ import absolute_import

from six.moves import range

# Standard library:
import time
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product

# 3rd party:
import networkx as nx

# Local imports:
from sgspec.twodist import PROJECTNAME
from sgspec.twodist.algebra import as_number
from sgspec.twodist.canonical import canonical_form
from sgspec.twodist.exceptions import LimitExceeded
from sgspec.twodist.graphs import (
    SignedGraph,
    chi_at_most,
    induced_subgraph,
    underlying,
    )
from sgspec.twodist.matrix import LdlFactor
from sgspec.twodist.spectral import compare_top_eigenvalue, tail_check

# Logging / Debugging:
import logging

__all__ = [
    'Candidate',
    'Collector',
    'EnumerationCounters',
    'ForbiddenFamily',
    'enumerate_signed',
    'inspect_enumeration_specs',
    ]

logger = logging.getLogger(PROJECTNAME + ': enumeration')

HARD_LIMIT = 10
DEADLINE_CHECK_INTERVAL = 256


class ForbiddenFamily(tuple):
    """
    (lambda, h, members, degree_cap): isomorphism class representatives of
    the signed graphs on at most h vertices with largest eigenvalue greater
    than lambda

    >>> tri = SignedGraph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])
    >>> fam = ForbiddenFamily(2, 3, [tri])
    >>> fam.h, len(fam.members), fam.degree_cap
    (3, 1, None)
    >>> fam.contains(SignedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]))
    True
    """

    def __new__(cls, lam, h, members, degree_cap=None):
        members = tuple(sorted(members, key=canonical_form))
        self = tuple.__new__(cls, (as_number(lam), h, members, degree_cap))
        forms = {}
        sizes = {}
        for g in members:
            forms.setdefault(g.n, set()).add(canonical_form(g))
            sizes.setdefault(g.n, set()).add(len(g.edges))
        self._forms = dict((k, frozenset(v)) for k, v in forms.items())
        self._edge_counts = dict((k, frozenset(v)) for k, v in sizes.items())
        return self

    def __getnewargs__(self):
        return tuple(self)

    @property
    def lam(self):
        return self[0]

    @property
    def h(self):
        return self[1]

    @property
    def members(self):
        return self[2]

    @property
    def degree_cap(self):
        return self[3]

    @property
    def orders(self):
        return sorted(self._forms)

    def contains(self, g):
        """
        Is g (up to isomorphism) a member?
        """
        forms = self._forms.get(g.n)
        return bool(forms) and canonical_form(g) in forms

    def occurs_in(self, g, through=None):
        """
        Does g contain a member as an induced subgraph?  With through=v,
        only subgraphs containing vertex v are inspected.
        """
        n = g.n
        for size in self.orders:
            if size > n:
                break
            forms = self._forms[size]
            counts = self._edge_counts[size]
            if through is None:
                subsets = combinations(range(n), size)
            else:
                others = [v for v in range(n) if v != through]
                subsets = (rest + (through,)
                           for rest in combinations(others, size - 1))
            for subset in subsets:
                sub = induced_subgraph(g, subset)
                if len(sub.edges) in counts and canonical_form(sub) in forms:
                    return True
        return False

    def __repr__(self):
        return ('<ForbiddenFamily lambda=%s h=%d members=%d>'
                % (self[0], self[1], len(self[2])))


class Candidate(object):
    """
    A generated graph: the SignedGraph, its canonical form and (if a bound
    for the largest eigenvalue is in force) the LDL^T factor of
    lambda*I - A
    """
    __slots__ = ('graph', 'form', 'factor')

    def __init__(self, graph, form, factor=None):
        self.graph = graph
        self.form = form
        self.factor = factor

    def __getstate__(self):
        return (self.graph, self.form, self.factor)

    def __setstate__(self, state):
        self.graph, self.form, self.factor = state

    def top_multiplicity(self):
        """
        The multiplicity of lambda, given lambda_1 <= lambda: the number of
        zero pivots of the factor
        """
        return sum(1 for d in self.factor.pivots if not d)

    def __repr__(self):
        return '<Candidate %r>' % (self.graph,)


class Collector(object):
    """
    Base class of enumeration visitors

    Collectors are sent to worker processes and merged afterwards, so they
    must be picklable, and merge() must be associative and commutative.
    """

    def visit(self, candidate):
        raise NotImplementedError

    def merge(self, other):
        raise NotImplementedError

    def fresh(self):
        """
        An empty collector with the same parameters
        """
        raise NotImplementedError


class _CallbackCollector(Collector):

    def __init__(self, callback):
        self.callback = callback

    def visit(self, candidate):
        self.callback(candidate)

    def merge(self, other):
        pass

    def fresh(self):
        return self


class EnumerationCounters(object):
    """
    per_order: the number of visited classes per vertex count;
    generated: classes generated (including those filtered out at visit
    time); pruned: children rejected by a hereditary constraint
    """

    def __init__(self):
        self.per_order = {}
        self.generated = 0
        self.pruned = 0

    @property
    def visited(self):
        return sum(self.per_order.values())

    def merge(self, other):
        for n, cnt in other.per_order.items():
            self.per_order[n] = self.per_order.get(n, 0) + cnt
        self.generated += other.generated
        self.pruned += other.pruned
        return self

    def as_dict(self):
        res = OrderedDict()
        res['per_order'] = OrderedDict((str(n), self.per_order[n])
                                       for n in sorted(self.per_order))
        res['enumerated'] = self.visited
        res['generated'] = self.generated
        res['pruned'] = self.pruned
        return res

    def __repr__(self):
        return ('<EnumerationCounters visited=%d generated=%d pruned=%d>'
                % (self.visited, self.generated, self.pruned))


def inspect_enumeration_specs(kw):
    """
    Helper: check the named options of enumerate_signed and fill in the
    defaults

    >>> kw = {'chi_max': 3}
    >>> inspect_enumeration_specs(kw)
    >>> sorted(kw.items())                    # doctest: +NORMALIZE_WHITESPACE
    [('chi_max', 3), ('connected', False), ('deadline', None),
     ('degree_cap', None), ('forbidden', None), ('jobs', 1),
     ('limit', 10), ('prune', True), ('shard_depth', 4),
     ('signs', (1, -1)), ('tail', None), ('top', None)]
    >>> inspect_enumeration_specs({'colours': 3})
    Traceback (most recent call last):
      ...
    TypeError: Found unsupported option(s)! ('colours')
    >>> inspect_enumeration_specs({'limit': 11})
    Traceback (most recent call last):
      ...
    ValueError: The enumeration limit can't exceed 10 vertices!
    """
    kw.setdefault('connected', False)
    kw.setdefault('chi_max', None)
    kw.setdefault('forbidden', None)
    kw.setdefault('degree_cap', None)
    kw.setdefault('top', None)
    kw.setdefault('tail', None)
    kw.setdefault('signs', (1, -1))
    kw.setdefault('prune', True)
    kw.setdefault('jobs', 1)
    kw.setdefault('shard_depth', 4)
    kw.setdefault('deadline', None)
    kw.setdefault('limit', HARD_LIMIT)
    valid_options = set(['connected', 'chi_max', 'forbidden', 'degree_cap',
                         'top', 'tail', 'signs', 'prune', 'jobs',
                         'shard_depth', 'deadline', 'limit'])
    invalid = set(kw) - valid_options
    if invalid:
        raise TypeError('Found unsupported option(s)! (%r)'
                        % (sorted(invalid)[0],
                           ))
    if kw['limit'] > HARD_LIMIT:
        raise ValueError("The enumeration limit can't exceed %d vertices!"
                         % HARD_LIMIT)
    signs = tuple(kw['signs'])
    if not signs or set(signs) - set([1, -1]):
        raise ValueError('signs must be a non-empty selection of (1, -1);'
                         ' found %r!' % (signs,))
    kw['signs'] = signs
    if kw['top'] is not None:
        kw['top'] = as_number(kw['top'])
        top = kw['top']
        if top.is_rational:
            kw['top'] = top.a
    if kw['tail'] is not None:
        k, lam = kw['tail']
        kw['tail'] = (int(k), as_number(lam))


class _Engine(object):
    """
    The constraints, the generation step and the depth-first exploration
    """

    def __init__(self, n_max, kw):
        self.n_max = n_max
        self.connected = kw['connected']
        self.chi_max = kw['chi_max']
        self.forbidden = kw['forbidden']
        self.top = kw['top']
        self.tail = kw['tail']
        self.signs = kw['signs']
        self.prune = kw['prune']
        self.deadline = kw['deadline']
        cap = kw['degree_cap']
        if self.forbidden is not None and self.forbidden.degree_cap is not None:
            fcap = self.forbidden.degree_cap
            cap = fcap if cap is None else min(cap, fcap)
        if self.top is not None and self.signs == (1,) and self.top >= 0:
            # in a plain graph, a vertex of degree D forces lambda_1 >= sqrt(D)
            tcap = int(as_number(self.top * self.top).floor())
            cap = tcap if cap is None else min(cap, tcap)
        self.degree_cap = cap
        self.counters = EnumerationCounters()
        self._ticks = 0

    def __getstate__(self):
        state = dict(self.__dict__)
        state['counters'] = EnumerationCounters()
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)

    # ----------------------------------------- [ constraints ... [
    def _tick(self):
        self._ticks += 1
        if (self.deadline is not None
                and not self._ticks % DEADLINE_CHECK_INTERVAL
                and time.time() > self.deadline):
            raise LimitExceeded('Wall clock limit exceeded during'
                                ' enumeration!')

    def _late_checks(self, g, new_vertex):
        """
        The more expensive hereditary checks of a canonical child
        """
        if self.chi_max is not None and not chi_at_most(g, self.chi_max):
            return False
        if (self.forbidden is not None
                and self.forbidden.occurs_in(g, through=new_vertex)):
            return False
        if self.tail is not None:
            k, lam = self.tail
            if k <= g.n and not tail_check(g, k, lam):
                return False
        return True

    def _full_checks(self, candidate):
        """
        All hereditary checks on a complete graph (for prune=False)
        """
        g = candidate.graph
        if self.degree_cap is not None and g.max_degree > self.degree_cap:
            return False
        if self.top is not None:
            cmp = compare_top_eigenvalue(g, self.top)
            if cmp.verdict == 'GREATER':
                return False
            candidate.factor = cmp.certificate.factor
        if self.chi_max is not None and not chi_at_most(g, self.chi_max):
            return False
        if self.forbidden is not None and self.forbidden.occurs_in(g):
            return False
        if self.tail is not None:
            k, lam = self.tail
            if k <= g.n and not tail_check(g, k, lam):
                return False
        return True

    def accepts(self, candidate):
        if not self.prune and not self._full_checks(candidate):
            return False
        if self.connected and candidate.graph.n > 1:
            return nx.is_connected(underlying(candidate.graph).to_networkx())
        return True
    # ----------------------------------------- ] ... constraints ]

    def root(self):
        g = SignedGraph._make(1, ())
        factor = None
        if self.top is not None and self.prune:
            factor = LdlFactor().bordered([], self.top)
            if factor is None:
                return None
        return Candidate(g, canonical_form(g), factor)

    def children(self, node):
        g = node.graph
        n = g.n
        pos = [0] * n
        neg = [0] * n
        for u, v, s in g.edges:
            if s > 0:
                pos[u] += 1
                pos[v] += 1
            else:
                neg[u] += 1
                neg[v] += 1
        cap = self.degree_cap if self.prune else None
        top = self.top if self.prune else None
        kmax = n if cap is None else min(n, cap)
        seen = set()
        for k in range(kmax + 1):
            for support in combinations(range(n), k):
                if cap is not None and any(pos[v] + neg[v] >= cap
                                           for v in support):
                    self.counters.pruned += 1
                    continue
                for signs in product(self.signs, repeat=k):
                    self._tick()
                    factor = None
                    if top is not None:
                        column = [0] * n
                        for v, s in zip(support, signs):
                            column[v] = -s
                        factor = node.factor.bordered(column, top)
                        if factor is None:
                            self.counters.pruned += 1
                            continue
                    new_edges = tuple((v, n, s)
                                      for v, s in zip(support, signs))
                    if not self._is_canonical(g, node.form, pos, neg,
                                              support, signs):
                        continue
                    child = SignedGraph._make(n + 1,
                                              tuple(sorted(g.edges
                                                           + new_edges)))
                    form = canonical_form(child)
                    if form in seen:
                        continue
                    seen.add(form)
                    if self.prune and not self._late_checks(child, n):
                        self.counters.pruned += 1
                        continue
                    yield Candidate(child, form, factor)

    def _is_canonical(self, g, parent_form, pos, neg, support, signs):
        n = g.n
        cpos = list(pos) + [0]
        cneg = list(neg) + [0]
        for v, s in zip(support, signs):
            if s > 0:
                cpos[v] += 1
                cpos[n] += 1
            else:
                cneg[v] += 1
                cneg[n] += 1
        keys = list(zip(cpos, cneg))
        least = min(keys)
        if keys[n] != least:
            return False
        rivals = [v for v in range(n) if keys[v] == least]
        if not rivals:
            return True
        child = SignedGraph._make(n + 1, tuple(sorted(
            g.edges + tuple((v, n, s) for v, s in zip(support, signs)))))
        everything = list(range(n + 1))
        for v in rivals:
            rest = everything[:v] + everything[v + 1:]
            if canonical_form(induced_subgraph(child, rest)) < parent_form:
                return False
        return True

    def explore(self, node, collector):
        """
        Visit node and its subtree, depth first
        """
        self.counters.generated += 1
        if self.accepts(node):
            n = node.graph.n
            self.counters.per_order[n] = self.counters.per_order.get(n, 0) + 1
            collector.visit(node)
        if node.graph.n < self.n_max:
            for child in self.children(node):
                self.explore(child, collector)


def _explore_shard(engine, root, collector):
    engine.explore(root, collector)
    return (collector, engine.counters)


def enumerate_signed(n_max, visitor=None, **kw):
    """
    Visit one representative of every isomorphism class of signed graphs on
    1..n_max vertices which satisfies the constraints:

    connected -- only connected graphs are visited
    chi_max -- chromatic number at most chi_max
    forbidden -- no induced member of this ForbiddenFamily
    degree_cap -- maximum degree
    top -- largest eigenvalue at most top
    tail -- a pair (k, lambda): lambda_k <= lambda
    signs -- the allowed edge signs; (1,) enumerates plain graphs

    With prune=False, the constraints are checked at visit time only.
    jobs > 1 splits the generation tree at shard_depth vertices and explores
    the shards in worker processes; the visitor must be a Collector then.

    Returns the EnumerationCounters.

    >>> forms = []
    >>> counters = enumerate_signed(2, lambda c: forms.append(c.graph))
    >>> forms                                 # doctest: +NORMALIZE_WHITESPACE
    [<SignedGraph n=1 edges=[]>, <SignedGraph n=2 edges=[]>,
     <SignedGraph n=2 edges=[(0, 1, 1)]>, <SignedGraph n=2 edges=[(0, 1, -1)]>]
    >>> enumerate_signed(11)
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.LimitExceeded: Enumeration up to 11 vertices exceeds the limit of 10!
    """
    inspect_enumeration_specs(kw)
    limit = kw['limit']
    if n_max > limit:
        raise LimitExceeded('Enumeration up to %(n_max)d vertices exceeds'
                            ' the limit of %(limit)d!' % locals())
    if visitor is None:
        visitor = _CallbackCollector(lambda candidate: None)
    elif not isinstance(visitor, Collector):
        visitor = _CallbackCollector(visitor)
    engine = _Engine(n_max, kw)
    root = engine.root()
    if root is None or n_max < 1:
        return engine.counters
    jobs = kw['jobs']
    depth = kw['shard_depth']
    if jobs <= 1 or n_max <= depth or isinstance(visitor, _CallbackCollector):
        engine.explore(root, visitor)
        _log_counters(engine.counters)
        return engine.counters

    # breadth first down to the shard depth, in this process:
    shards = []
    level = [root]
    while level:
        following = []
        for node in level:
            if node.graph.n == depth:
                shards.append(node)
                continue
            engine.counters.generated += 1
            if engine.accepts(node):
                n = node.graph.n
                engine.counters.per_order[n] = (
                    engine.counters.per_order.get(n, 0) + 1)
                visitor.visit(node)
            following.extend(engine.children(node))
        level = following
    logger.info('%d shards at %d vertices, %d worker processes',
                len(shards), depth, jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_explore_shard, engine, shard, visitor.fresh())
                   for shard in shards]
        for i, future in enumerate(futures):
            collector, counters = future.result()
            visitor.merge(collector)
            engine.counters.merge(counters)
            logger.debug('shard %d of %d done', i + 1, len(shards))
    _log_counters(engine.counters)
    return engine.counters


def _log_counters(counters):
    for n in sorted(counters.per_order):
        logger.info('%d vertices: %d classes', n, counters.per_order[n])
    logger.debug('generated %d, pruned %d', counters.generated,
                 counters.pruned)


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
