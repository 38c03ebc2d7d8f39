# -*- coding: utf-8
"""
Tests for sgspec.twodist.graphs and sgspec.twodist.canonical
"""

# Python compatibility:
from __future__ import absolute_import

# Standard library:
from unittest import TestCase, main

# Local imports:
from sgspec.twodist.canonical import canonical_form, is_isomorphic
from sgspec.twodist.exceptions import (
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    )
from sgspec.twodist.graphs import (
    Partition,
    SignedGraph,
    _Colorer,
    chi_at_most,
    chromatic_number,
    induced_subgraph,
    relabel,
    switch,
    valid_coloring,
    )


def triangle(*signs):
    return SignedGraph(3, list(zip([0, 0, 1], [1, 2, 2], signs)))


class TestSignedGraph(TestCase):

    def test_edges_are_normalized(self):
        g = SignedGraph(3, [(2, 0, -1), (1, 0, 1)])
        self.assertEqual(g.edges, ((0, 1, 1), (0, 2, -1)))

    def test_duplicate_edge(self):
        with self.assertRaises(DuplicateEdge):
            SignedGraph(3, [(0, 1, 1), (1, 0, -1)])

    def test_loop(self):
        with self.assertRaises(LoopEdge):
            SignedGraph(3, [(1, 1, 1)])

    def test_index_out_of_range(self):
        with self.assertRaises(IndexOutOfRange):
            SignedGraph(2, [(0, 2, 1)])

    def test_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            SignedGraph(2, [(0, 0, 1)])


class TestChromaticNumber(TestCase):

    def test_all_positive_triangle(self):
        self.assertEqual(chromatic_number(triangle(1, 1, 1)).chi, 1)

    def test_one_positive_edge(self):
        self.assertEqual(chromatic_number(triangle(1, -1, -1)).chi, 2)

    def test_all_negative_triangle(self):
        self.assertEqual(chromatic_number(triangle(-1, -1, -1)).chi, 3)

    def test_unbalanced_positive_component(self):
        outcome = chromatic_number(triangle(1, 1, -1))
        self.assertFalse(outcome.is_finite)
        self.assertIsNone(outcome.partition)
        u, v, path = outcome.witness
        self.assertEqual((u, v), (1, 2))
        self.assertEqual(set(path), set([0, 1, 2]))

    def test_partition_is_valid(self):
        g = SignedGraph(5, [(0, 1, 1), (1, 2, -1), (2, 3, -1), (3, 4, 1),
                            (0, 4, -1)])
        outcome = chromatic_number(g)
        self.assertTrue(valid_coloring(g, outcome.partition))
        self.assertEqual(outcome.partition.t, outcome.chi)

    def test_chi_at_most(self):
        g = triangle(-1, -1, -1)
        self.assertFalse(chi_at_most(g, 2))
        self.assertTrue(chi_at_most(g, 3))

    def test_empty_graph(self):
        self.assertEqual(chromatic_number(SignedGraph(0)).chi, 0)

    def test_invalid_coloring(self):
        g = triangle(1, -1, -1)
        self.assertFalse(valid_coloring(g, Partition([[0], [1], [2]])))
        self.assertTrue(valid_coloring(g, Partition([[0, 1], [2]])))

    def test_no_branch_reaches_the_best_count(self):
        entries = []

        class RecordingColorer(_Colorer):
            def _search(self, done, used):
                entries.append((used, self.best_k))
                return _Colorer._search(self, done, used)

        cycle = [[1, 4], [0, 2], [1, 3], [2, 4], [3, 0]]
        colors = RecordingColorer([set(n) for n in cycle]).run()
        self.assertEqual(max(colors) + 1, 3)
        self.assertTrue(entries)
        self.assertEqual([(used, k) for used, k in entries if used >= k], [])

    def test_negative_odd_cycle(self):
        cycle = SignedGraph(5, [(i, (i + 1) % 5, -1) for i in range(5)])
        self.assertEqual(chromatic_number(cycle).chi, 3)


class TestIsomorphism(TestCase):

    def test_relabel_keeps_the_class(self):
        g = SignedGraph(4, [(0, 1, 1), (1, 2, -1), (2, 3, -1)])
        h = relabel(g, [3, 1, 0, 2])
        self.assertTrue(is_isomorphic(g, h))
        self.assertEqual(canonical_form(g), canonical_form(h))

    def test_signs_matter(self):
        self.assertFalse(is_isomorphic(triangle(1, 1, 1),
                                       triangle(-1, -1, -1)))

    def test_switching_is_no_isomorphism(self):
        g = triangle(1, 1, 1)
        self.assertFalse(is_isomorphic(g, switch(g, [0])))

    def test_induced_subgraph(self):
        g = SignedGraph(4, [(0, 1, 1), (1, 2, -1), (2, 3, -1), (0, 3, 1)])
        sub = induced_subgraph(g, [1, 2, 3])
        self.assertEqual(sub.n, 3)
        self.assertEqual(sub.edges, ((0, 1, -1), (1, 2, -1)))


if __name__ == '__main__':
    main()
