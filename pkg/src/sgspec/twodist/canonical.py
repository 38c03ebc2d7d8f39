# -*- coding: utf-8
"""
sgspec.twodist.canonical: isomorphism-class keys of signed graphs

Two signed graphs are isomorphic if a vertex bijection maps edges to edges
of the same sign.  We reduce this to colored graph isomorphism: vertex v of
the signed graph becomes v (layer 0) and v+n (layer 1), joined by an edge;
positive edges are drawn in layer 0, negative edges in layer 1.  nauty's
certificate of that layered graph, prefixed with n, is the key.

>>> from sgspec.twodist.graphs import SignedGraph
>>> pos = SignedGraph(2, [(0, 1, 1)])
>>> neg = SignedGraph(2, [(0, 1, -1)])
>>> canonical_form(pos) == canonical_form(neg)
False
>>> path1 = SignedGraph(3, [(0, 1, 1), (1, 2, -1)])
>>> path2 = SignedGraph(3, [(0, 2, -1), (1, 2, 1)])
>>> canonical_form(path1) == canonical_form(path2)
True
>>> is_isomorphic(path1, path2)
True
"""

# Python compatibility:
from __future__ import absolute_import

from six.moves import range

# 3rd party:
import pynauty

# Local imports:
from sgspec.twodist.graphs import SignedGraph, relabel

__all__ = [
    'automorphism_count',
    'canonical_form',
    'canonical_relabel',
    'is_isomorphic',
    ]


def layered_graph(g):
    n = g.n
    adjacency = dict((v, [v + n]) for v in range(n))
    for u, v, s in g.edges:
        if s > 0:
            adjacency[u].append(v)
        else:
            adjacency.setdefault(u + n, []).append(v + n)
    return pynauty.Graph(2 * n,
                         directed=False,
                         adjacency_dict=adjacency,
                         vertex_coloring=[set(range(n)),
                                          set(range(n, 2 * n))])


def canonical_form(g):
    """
    A byte string which is equal for two signed graphs iff they are
    isomorphic

    >>> canonical_form(SignedGraph(0))
    b'\\x00\\x00'
    """
    n = g.n
    head = n.to_bytes(2, 'big')
    if not n:
        return head
    return head + pynauty.certificate(layered_graph(g))


def is_isomorphic(g, h):
    return g.n == h.n and canonical_form(g) == canonical_form(h)


def automorphism_count(g):
    """
    The order of the group of sign-preserving automorphisms

    >>> automorphism_count(SignedGraph(3, [(0, 1, -1), (0, 2, -1), (1, 2, -1)]))
    6
    >>> automorphism_count(SignedGraph(3, [(0, 1, 1), (0, 2, -1), (1, 2, -1)]))
    2
    """
    if g.n <= 1:
        return 1
    gens, size1, size2, orbits, numorbits = pynauty.autgrp(layered_graph(g))
    return int(round(size1 * 10 ** size2))


def canonical_relabel(g):
    """
    The canonically labeled representative of the isomorphism class of g

    >>> path1 = SignedGraph(3, [(0, 1, 1), (1, 2, -1)])
    >>> path2 = SignedGraph(3, [(0, 2, -1), (1, 2, 1)])
    >>> canonical_relabel(path1) == canonical_relabel(path2)
    True
    """
    n = g.n
    if n <= 1:
        return g
    lab = pynauty.canon_label(layered_graph(g))
    perm = [None] * n
    position = 0
    for old in lab:
        if old < n:
            perm[old] = position
            position += 1
    return relabel(g, perm)


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
