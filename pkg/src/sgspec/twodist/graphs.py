# -*- coding: utf-8
"""
sgspec.twodist.graphs: signed and plain graphs, valid colorings and the
structural transformations used by the constructions

A signed graph is an immutable (n, edges) tuple; every edge is a triple
(u, v, sign) with u < v and sign in (1, -1), the edges sorted:

>>> g = build_signed_graph(3, [(1, 0, -1), (0, 2, -1), (1, 2, -1)])
>>> g
<SignedGraph n=3 edges=[(0, 1, -1), (0, 2, -1), (1, 2, -1)]>
>>> g.n, len(g.edges)
(3, 3)
>>> chromatic_number(g).chi
3
>>> build_signed_graph(3, [(0, 1, 1), (0, 1, -1)])
Traceback (most recent call last):
  ...
sgspec.twodist.exceptions.DuplicateEdge: Duplicate edge (0, 1)!
>>> build_signed_graph(2, [(1, 1, 1)])
Traceback (most recent call last):
  ...
sgspec.twodist.exceptions.LoopEdge: Loop at vertex 1!
>>> build_signed_graph(2, [(0, 2, 1)])
Traceback (most recent call last):
  ...
sgspec.twodist.exceptions.IndexOutOfRange: Edge (0, 2) exceeds 2 vertices!
"""

# Python compatibility:
from __future__ import absolute_import

from six import integer_types
from six.moves import range

# Standard library:
from enum import Enum

# 3rd party:
import networkx as nx

# Local imports:
from sgspec.twodist.exceptions import (
    BadFormat,
    BadParams,
    DuplicateEdge,
    IndexOutOfRange,
    InvalidColoring,
    LoopEdge,
    )
from sgspec.twodist.matrix import ExactMatrix

__all__ = [
    'Chi',
    'ColoringOutcome',
    'Graph',
    'Partition',
    'SignedGraph',
    'all_negative',
    'build_signed_graph',
    'chi_at_most',
    'chromatic_number',
    'disjoint_copies',
    'induced_subgraph',
    'overlay_multipartite',
    'relabel',
    'signed_from_matrix',
    'split_by_partition',
    'switch',
    'underlying',
    'valid_coloring',
    ]


def _check_vertex_count(n):
    if not isinstance(n, integer_types) or n < 0:
        raise BadParams('Vertex count must be a non-negative integer;'
                        ' found %(n)r!' % locals())
    return int(n)


def _check_pair(u, v, n):
    if not (isinstance(u, integer_types) and isinstance(v, integer_types)):
        raise BadFormat('Integer vertex indexes expected; found (%(u)r, %(v)r)!'
                        % locals())
    if u == v:
        raise LoopEdge('Loop at vertex %(u)d!' % locals())
    if u > v:
        u, v = v, u
    if u < 0 or v >= n:
        raise IndexOutOfRange('Edge (%(u)d, %(v)d) exceeds %(n)d vertices!'
                              % locals())
    return (int(u), int(v))


class SignedGraph(tuple):
    """
    A signed graph (n, edges)

    >>> g = SignedGraph(4, [(0, 1, 1), (1, 2, -1), (2, 3, -1), (0, 3, -1)])
    >>> g.positive_edges
    [(0, 1)]
    >>> g.negative_edges
    [(0, 3), (1, 2), (2, 3)]
    >>> g.degrees()
    [2, 2, 2, 2]
    >>> g.adjacency_rows()[0]
    [0, 1, 0, -1]
    >>> g.sign(3, 0), g.sign(0, 2)
    (-1, 0)
    """

    def __new__(cls, n, edges=()):
        n = _check_vertex_count(n)
        seen = set()
        checked = []
        for edge in edges:
            try:
                u, v, s = edge
            except (TypeError, ValueError):
                raise BadFormat('Edge (u, v, sign) expected; found %(edge)r!'
                                % locals())
            u, v = _check_pair(u, v, n)
            if s not in (1, -1):
                raise BadFormat('Edge sign must be 1 or -1; found %(s)r!'
                                % locals())
            if (u, v) in seen:
                raise DuplicateEdge('Duplicate edge (%(u)d, %(v)d)!'
                                    % locals())
            seen.add((u, v))
            checked.append((u, v, int(s)))
        return tuple.__new__(cls, (n, tuple(sorted(checked))))

    @classmethod
    def _make(cls, n, edges):
        # for already validated, sorted edge tuples
        return tuple.__new__(cls, (n, edges))

    def __getnewargs__(self):
        return tuple(self)

    @property
    def n(self):
        return self[0]

    @property
    def edges(self):
        return self[1]

    @property
    def positive_edges(self):
        return [(u, v) for u, v, s in self[1] if s > 0]

    @property
    def negative_edges(self):
        return [(u, v) for u, v, s in self[1] if s < 0]

    def sign(self, u, v):
        """
        1, -1 or 0 (no edge)
        """
        if u > v:
            u, v = v, u
        for a, b, s in self[1]:
            if a == u and b == v:
                return s
        return 0

    def adjacency_rows(self):
        n = self[0]
        rows = [[0] * n for i in range(n)]
        for u, v, s in self[1]:
            rows[u][v] = s
            rows[v][u] = s
        return rows

    def adjacency(self):
        return ExactMatrix(self.adjacency_rows())

    def degrees(self):
        deg = [0] * self[0]
        for u, v, s in self[1]:
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def max_degree(self):
        return max(self.degrees() or [0])

    def neighbours(self, vertex):
        res = []
        for u, v, s in self[1]:
            if u == vertex:
                res.append(v)
            elif v == vertex:
                res.append(u)
        return sorted(res)

    def __repr__(self):
        return '<SignedGraph n=%d edges=%s>' % (self[0], list(self[1]))


class Graph(tuple):
    """
    A simple undirected graph (n, edges), edges sorted (u, v) pairs, u < v

    >>> Graph(3, [(2, 0), (0, 1)])
    <Graph n=3 edges=[(0, 1), (0, 2)]>
    >>> Graph(3, [(0, 1)]).complement()
    <Graph n=3 edges=[(0, 2), (1, 2)]>
    """

    def __new__(cls, n, edges=()):
        n = _check_vertex_count(n)
        seen = set()
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise BadFormat('Edge (u, v) expected; found %(edge)r!'
                                % locals())
            pair = _check_pair(u, v, n)
            if pair in seen:
                raise DuplicateEdge('Duplicate edge (%d, %d)!' % pair)
            seen.add(pair)
        return tuple.__new__(cls, (n, tuple(sorted(seen))))

    def __getnewargs__(self):
        return tuple(self)

    @property
    def n(self):
        return self[0]

    @property
    def edges(self):
        return self[1]

    def adjacency_rows(self):
        n = self[0]
        rows = [[0] * n for i in range(n)]
        for u, v in self[1]:
            rows[u][v] = rows[v][u] = 1
        return rows

    def adjacency(self):
        return ExactMatrix(self.adjacency_rows())

    def degrees(self):
        deg = [0] * self[0]
        for u, v in self[1]:
            deg[u] += 1
            deg[v] += 1
        return deg

    def complement(self):
        n = self[0]
        present = set(self[1])
        return Graph(n, [(u, v)
                         for u in range(n)
                         for v in range(u + 1, n)
                         if (u, v) not in present])

    def to_networkx(self):
        res = nx.Graph()
        res.add_nodes_from(range(self[0]))
        res.add_edges_from(self[1])
        return res

    def __repr__(self):
        return '<Graph n=%d edges=%s>' % (self[0], list(self[1]))


class Partition(tuple):
    """
    Disjoint non-empty vertex sets; stored sorted, ordered by smallest vertex

    >>> p = Partition([[3, 1], [0], [2]], n=4)
    >>> p
    <Partition [(0,), (1, 3), (2,)]>
    >>> p.t
    3
    >>> p.part_of()
    [0, 1, 2, 1]
    >>> Partition([[0, 1], [1]])
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadParams: Vertex 1 occurs in two parts!
    >>> Partition([[0]], n=2)
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadParams: The parts don't cover 2 vertices!
    """

    def __new__(cls, parts, n=None):
        seen = set()
        clean = []
        for part in parts:
            part = tuple(sorted(part))
            if not part:
                raise BadParams('Empty part!')
            for v in part:
                if v in seen:
                    raise BadParams('Vertex %(v)r occurs in two parts!'
                                    % locals())
                seen.add(v)
            clean.append(part)
        if n is not None and seen != set(range(n)):
            raise BadParams("The parts don't cover %(n)d vertices!"
                            % locals())
        clean.sort()
        return tuple.__new__(cls, clean)

    @property
    def parts(self):
        return list(self)

    @property
    def t(self):
        return len(self)

    @property
    def n(self):
        return sum(len(part) for part in self)

    def part_of(self):
        """
        the part index of each vertex
        """
        res = [None] * self.n
        for i, part in enumerate(self):
            for v in part:
                res[v] = i
        return res

    def __repr__(self):
        return '<Partition %s>' % (list(self),)


class Chi(Enum):
    INFINITE = 'infinite'


class ColoringOutcome(tuple):
    """
    (chi, certificate): a Partition with chi parts if chi is finite,
    else the witness (u, v, positive path from u to v) of a negative edge
    inside a positive component
    """

    @property
    def chi(self):
        return self[0]

    @property
    def is_finite(self):
        return self[0] is not Chi.INFINITE

    @property
    def partition(self):
        if self.is_finite:
            return self[1]
        return None

    @property
    def witness(self):
        if self.is_finite:
            return None
        return self[1]

    def __repr__(self):
        if self.is_finite:
            return '<ColoringOutcome chi=%d %s>' % (self[0], list(self[1]))
        u, v, path = self[1]
        return ('<ColoringOutcome chi=infinite: negative edge %d-%d,'
                ' positive path %s>' % (u, v, list(path)))


def build_signed_graph(n, edges):
    return SignedGraph(n, edges)


# ---------------------------------------------- [ colorings ... [
def _positive_components(g):
    """
    The positive components as a list of sorted vertex lists (ordered by
    smallest vertex), the component index of each vertex, and the
    positive-edge networkx graph
    """
    pos = nx.Graph()
    pos.add_nodes_from(range(g.n))
    pos.add_edges_from(g.positive_edges)
    comps = sorted(sorted(c) for c in nx.connected_components(pos))
    index = [None] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            index[v] = i
    return comps, index, pos


class _Colorer(object):
    """
    DSatur branch and bound for the exact chromatic number

    With first_below=k, stop at the first coloring using at most k-1
    colors.
    """

    def __init__(self, nbrs, first_below=None):
        self.nbrs = nbrs
        self.count = len(nbrs)
        self.colors = [-1] * self.count
        self.best = None
        self.best_k = self.count + 1 if first_below is None else first_below
        self.first = first_below is not None
        self.lower = _clique_bound(nbrs)

    def run(self):
        if self.count:
            self._search(0, 0)
        else:
            self.best = []
        return self.best

    def _pick(self):
        best = None
        best_key = None
        colors = self.colors
        for v in range(self.count):
            if colors[v] >= 0:
                continue
            sat = set(colors[w] for w in self.nbrs[v] if colors[w] >= 0)
            key = (len(sat), len(self.nbrs[v]), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def _search(self, done, used):
        if done == self.count:
            self.best = list(self.colors)
            self.best_k = used
            return self.first or used <= self.lower
        v = self._pick()
        forbidden = set(self.colors[w] for w in self.nbrs[v])
        for c in range(used + 1):
            # best_k may have dropped in an earlier branch
            if max(used, c + 1) >= self.best_k:
                break
            if c in forbidden:
                continue
            self.colors[v] = c
            if self._search(done + 1, max(used, c + 1)):
                return True
            self.colors[v] = -1
        return False


def _clique_bound(nbrs):
    """
    the size of a greedily grown clique
    """
    best = 1 if nbrs else 0
    order = sorted(range(len(nbrs)), key=lambda v: -len(nbrs[v]))
    for start in order:
        clique = [start]
        for v in order:
            if v != start and all(v in nbrs[w] for w in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def _quotient(g):
    comps, index, pos = _positive_components(g)
    nbrs = [set() for comp in comps]
    for u, v in g.negative_edges:
        cu, cv = index[u], index[v]
        if cu == cv:
            path = nx.shortest_path(pos, u, v)
            return comps, index, None, (u, v, tuple(path))
        nbrs[cu].add(cv)
        nbrs[cv].add(cu)
    return comps, index, nbrs, None


def chromatic_number(g):
    """
    The least t for which g has a valid t-coloring (Chi.INFINITE if none)

    Positive components are monochromatic, so we contract them and color
    the quotient whose edges are the negative edges.

    >>> tri = lambda *signs: SignedGraph(3, zip([0, 0, 1], [1, 2, 2], signs))
    >>> chromatic_number(tri(1, -1, -1))
    <ColoringOutcome chi=2 [(0, 1), (2,)]>
    >>> chromatic_number(tri(1, 1, -1))
    <ColoringOutcome chi=infinite: negative edge 1-2, positive path [1, 0, 2]>
    >>> chromatic_number(tri(1, 1, 1)).chi
    1
    >>> chromatic_number(SignedGraph(0)).chi
    0
    """
    comps, index, nbrs, witness = _quotient(g)
    if witness is not None:
        return ColoringOutcome((Chi.INFINITE, witness))
    colors = _Colorer(nbrs).run()
    t = max(colors) + 1 if colors else 0
    parts = [[] for i in range(t)]
    for v in range(g.n):
        parts[colors[index[v]]].append(v)
    return ColoringOutcome((t, Partition(parts, n=g.n)))


def chi_at_most(g, p):
    """
    Is chi(g) <= p?  (cheaper than chromatic_number)

    >>> chi_at_most(SignedGraph(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)]), 2)
    False
    >>> chi_at_most(SignedGraph(2, [(0, 1, 1)]), 1)
    True
    """
    comps, index, nbrs, witness = _quotient(g)
    if witness is not None:
        return False
    if len(comps) <= p:
        return True
    return _Colorer(nbrs, first_below=p + 1).run() is not None


def valid_coloring(g, parts):
    """
    Does every positive edge lie within a part and every negative edge
    cross parts?

    >>> g = SignedGraph(3, [(0, 1, 1), (1, 2, -1)])
    >>> valid_coloring(g, Partition([[0, 1], [2]]))
    True
    >>> valid_coloring(g, Partition([[0], [1, 2]]))
    False
    """
    if not isinstance(parts, Partition):
        parts = Partition(parts)
    if parts.n != g.n:
        return False
    try:
        where = parts.part_of()
    except IndexError:
        return False
    for u, v, s in g.edges:
        if (where[u] == where[v]) != (s > 0):
            return False
    return True
# ---------------------------------------------- ] ... colorings ]


# ------------------------------------------ [ transformations ... [
def induced_subgraph(g, subset):
    """
    The subgraph induced on subset, relabeled 0..|subset|-1 in increasing
    vertex order, with the original signs

    >>> k3 = SignedGraph(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)])
    >>> induced_subgraph(k3, [2, 0])
    <SignedGraph n=2 edges=[(0, 1, -1)]>
    >>> induced_subgraph(k3, [3])
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.IndexOutOfRange: Vertex 3 exceeds 3 vertices!
    """
    n = g.n
    order = sorted(set(subset))
    for v in order:
        if not 0 <= v < n:
            raise IndexOutOfRange('Vertex %(v)r exceeds %(n)d vertices!'
                                  % locals())
    new = dict((v, i) for i, v in enumerate(order))
    edges = tuple((new[u], new[v], s)
                  for u, v, s in g.edges
                  if u in new and v in new)
    return SignedGraph._make(len(order), edges)


def disjoint_copies(g, ell):
    """
    ell disjoint copies of g; copy i occupies vertices i*n .. i*n+n-1

    >>> disjoint_copies(SignedGraph(2, [(0, 1, -1)]), 2)
    <SignedGraph n=4 edges=[(0, 1, -1), (2, 3, -1)]>
    """
    if not isinstance(ell, integer_types) or ell < 1:
        raise BadParams('Positive number of copies expected; found %(ell)r!'
                        % locals())
    n = g.n
    edges = tuple((u + i * n, v + i * n, s)
                  for i in range(ell)
                  for u, v, s in g.edges)
    return SignedGraph._make(n * ell, edges)


def overlay_multipartite(g, parts):
    """
    The plain graph with adjacency A + J', where J' is the adjacency matrix
    of the complete multipartite graph on parts

    >>> k3 = SignedGraph(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)])
    >>> overlay_multipartite(k3, Partition([[0], [1], [2]]))
    <Graph n=3 edges=[]>
    >>> overlay_multipartite(SignedGraph(2, [(0, 1, 1)]), Partition([[0, 1]]))
    <Graph n=2 edges=[(0, 1)]>
    >>> overlay_multipartite(SignedGraph(2, [(0, 1, 1)]), Partition([[0], [1]]))
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.InvalidColoring: Not a valid coloring of the signed graph!
    """
    if not isinstance(parts, Partition):
        parts = Partition(parts)
    if not valid_coloring(g, parts):
        raise InvalidColoring('Not a valid coloring of the signed graph!')
    n = g.n
    where = parts.part_of()
    signs = dict(((u, v), s) for u, v, s in g.edges)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            entry = signs.get((u, v), 0) + (where[u] != where[v])
            if entry:
                edges.append((u, v))
    return Graph(n, edges)


def split_by_partition(graph, parts):
    """
    The signed graph with A = A_G - J': +1 for edges inside parts,
    -1 for non-edges across parts

    >>> split_by_partition(Graph(3), Partition([[0], [1], [2]]))
    <SignedGraph n=3 edges=[(0, 1, -1), (0, 2, -1), (1, 2, -1)]>
    >>> k22 = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    >>> split_by_partition(k22, Partition([[0, 1], [2, 3]]))
    <SignedGraph n=4 edges=[]>
    """
    if not isinstance(parts, Partition):
        parts = Partition(parts, n=graph.n)
    n = graph.n
    where = parts.part_of()
    present = set(graph.edges)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if where[u] == where[v]:
                if (u, v) in present:
                    edges.append((u, v, 1))
            elif (u, v) not in present:
                edges.append((u, v, -1))
    return SignedGraph._make(n, tuple(edges))


def switch(g, subset):
    """
    Negate every edge between subset and its complement

    >>> switch(SignedGraph(3, [(0, 1, 1), (1, 2, 1)]), [0])
    <SignedGraph n=3 edges=[(0, 1, -1), (1, 2, 1)]>
    """
    side = set(subset)
    return SignedGraph._make(g.n, tuple(
        (u, v, -s if (u in side) != (v in side) else s)
        for u, v, s in g.edges))


def underlying(g):
    """
    >>> underlying(SignedGraph(3, [(0, 1, 1), (1, 2, -1)]))
    <Graph n=3 edges=[(0, 1), (1, 2)]>
    """
    return Graph(g.n, [(u, v) for u, v, s in g.edges])


def all_negative(graph):
    """
    >>> all_negative(Graph(2, [(0, 1)]))
    <SignedGraph n=2 edges=[(0, 1, -1)]>
    """
    return SignedGraph._make(graph.n,
                             tuple((u, v, -1) for u, v in graph.edges))


def all_positive(graph):
    return SignedGraph._make(graph.n,
                             tuple((u, v, 1) for u, v in graph.edges))


def relabel(g, perm):
    """
    Move vertex v to perm[v]

    >>> relabel(SignedGraph(3, [(0, 1, 1), (1, 2, -1)]), [2, 1, 0])
    <SignedGraph n=3 edges=[(0, 1, -1), (1, 2, 1)]>
    """
    if sorted(perm) != list(range(g.n)):
        raise BadParams('A permutation of range(%d) expected!' % g.n)
    edges = []
    for u, v, s in g.edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        edges.append((a, b, s))
    return SignedGraph._make(g.n, tuple(sorted(edges)))


def signed_from_matrix(rows):
    """
    A signed graph from a symmetric {-1, 0, 1} matrix with zero diagonal

    >>> signed_from_matrix([[0, -1], [-1, 0]])
    <SignedGraph n=2 edges=[(0, 1, -1)]>
    >>> signed_from_matrix([[0, 1], [0, 0]])
    Traceback (most recent call last):
      ...
    sgspec.twodist.exceptions.BadFormat: Symmetric matrix with zero diagonal expected!
    """
    rows = [list(row) for row in rows]
    n = len(rows)
    edges = []
    for u in range(n):
        if len(rows[u]) != n or rows[u][u]:
            raise BadFormat('Symmetric matrix with zero diagonal expected!')
        for v in range(u + 1, n):
            if rows[u][v] != rows[v][u]:
                raise BadFormat('Symmetric matrix with zero diagonal'
                                ' expected!')
            if rows[u][v]:
                edges.append((u, v, rows[u][v]))
    return SignedGraph(n, edges)
# ------------------------------------------ ] ... transformations ]


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
