# -*- coding: utf-8
"""
sgspec.twodist.sgjson: the SG-JSON graph format and the vecjson vector format

>>> from sgspec.twodist.graphs import SignedGraph, Graph
>>> text = dumps(SignedGraph(3, [(0, 1, -1), (1, 2, 1)]))
>>> text
'{"format":"sgjson/1","kind":"signed","n":3,"edges":[[0,1,-1],[1,2,1]]}'
>>> loads(text)
<SignedGraph n=3 edges=[(0, 1, -1), (1, 2, 1)]>
>>> dumps(Graph(2, [(0, 1)]))
'{"format":"sgjson/1","kind":"plain","n":2,"edges":[[0,1]]}'
>>> loads('{"format":"sgjson/2","n":1,"edges":[]}')
Traceback (most recent call last):
  ...
sgspec.twodist.exceptions.BadFormat: Unsupported format 'sgjson/2'!
"""

# Python compatibility:
from __future__ import absolute_import

from six import string_types

# Standard library:
import json
from collections import OrderedDict

# Local imports:
from sgspec.twodist.exceptions import BadFormat
from sgspec.twodist.graphs import Graph, SignedGraph

__all__ = [
    'dumps',
    'graph_from_obj',
    'graph_to_obj',
    'loads',
    'read_graph',
    'read_vectors',
    'vectors_to_text',
    'write_graph',
    'write_vectors',
    ]

GRAPH_FORMAT = 'sgjson/1'
VECTOR_FORMAT = 'vecjson/1'
SEPARATORS = (',', ':')


def graph_to_obj(g):
    res = OrderedDict()
    res['format'] = GRAPH_FORMAT
    if isinstance(g, SignedGraph):
        res['kind'] = 'signed'
        res['n'] = g.n
        res['edges'] = [[u, v, s] for u, v, s in g.edges]
    elif isinstance(g, Graph):
        res['kind'] = 'plain'
        res['n'] = g.n
        res['edges'] = [[u, v] for u, v in g.edges]
    else:
        raise TypeError('SignedGraph or Graph expected; found %r!' % (g,))
    return res


def graph_from_obj(obj):
    if not isinstance(obj, dict):
        raise BadFormat('JSON object expected!')
    fmt = obj.get('format')
    if fmt != GRAPH_FORMAT:
        raise BadFormat('Unsupported format %(fmt)r!' % locals())
    kind = obj.get('kind', 'signed')
    n = obj.get('n')
    edges = obj.get('edges')
    if not isinstance(n, int) or not isinstance(edges, list):
        raise BadFormat('Integer "n" and list "edges" expected!')
    if kind == 'signed':
        return SignedGraph(n, [tuple(e) for e in edges])
    elif kind == 'plain':
        return Graph(n, [tuple(e) for e in edges])
    raise BadFormat('Unknown kind %(kind)r!' % locals())


def dumps(g):
    return json.dumps(graph_to_obj(g), separators=SEPARATORS)


def loads(text):
    try:
        obj = json.loads(text)
    except ValueError as e:
        raise BadFormat('Invalid JSON: %s' % (e,))
    return graph_from_obj(obj)


def read_graph(path):
    with open(path, 'rb') as fo:
        return loads(fo.read().decode('utf-8'))


def write_graph(g, path):
    with open(path, 'wb') as fo:
        fo.write(dumps(g).encode('utf-8'))


# ----------------------------------------------- [ vectors ... [
def vectors_to_text(vectors, d):
    """
    >>> vectors_to_text([[1.0, 0.0], [0.0, 1.0]], 2)
    '{"format":"vecjson/1","d":2,"vectors":[[1.0,0.0],[0.0,1.0]]}'
    """
    res = OrderedDict()
    res['format'] = VECTOR_FORMAT
    res['d'] = int(d)
    res['vectors'] = [[float(x) for x in row] for row in vectors]
    return json.dumps(res, separators=SEPARATORS)


def vectors_from_text(text):
    """
    Return (d, vectors)

    >>> vectors_from_text('{"format":"vecjson/1","d":1,"vectors":[[1.0]]}')
    (1, [[1.0]])
    """
    try:
        obj = json.loads(text)
    except ValueError as e:
        raise BadFormat('Invalid JSON: %s' % (e,))
    if not isinstance(obj, dict) or obj.get('format') != VECTOR_FORMAT:
        raise BadFormat('vecjson/1 object expected!')
    d = obj.get('d')
    vectors = obj.get('vectors')
    if not isinstance(d, int) or not isinstance(vectors, list):
        raise BadFormat('Integer "d" and list "vectors" expected!')
    for row in vectors:
        if not isinstance(row, list) or len(row) != d:
            raise BadFormat('Every vector must have %(d)d coordinates!'
                            % locals())
    return (d, vectors)


def read_vectors(path):
    with open(path, 'rb') as fo:
        return vectors_from_text(fo.read().decode('utf-8'))


def write_vectors(vectors, d, path):
    if isinstance(path, string_types):
        with open(path, 'wb') as fo:
            fo.write(vectors_to_text(vectors, d).encode('utf-8'))
    else:
        path.write(vectors_to_text(vectors, d))
# ----------------------------------------------- ] ... vectors ]


if __name__ == '__main__':
    # Standard library:
    import doctest
    doctest.testmod()
