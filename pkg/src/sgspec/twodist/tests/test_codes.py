# -*- coding: utf-8
"""
End-to-end tests: witness graph -> certified code -> vectors -> graph
"""

# Python compatibility:
from __future__ import absolute_import

# Standard library:
from fractions import Fraction
from unittest import TestCase, main

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber
from sgspec.twodist.codes import (
    CodeParameters,
    associated_graph,
    build_code,
    check_realizable,
    gram_matrix,
    predicted_asymptotics,
    realize_vectors,
    )
from sgspec.twodist.constructions import build_named
from sgspec.twodist.exceptions import (
    DimensionTooSmall,
    InvalidColoring,
    NotTopEigenvalue,
    )
from sgspec.twodist.graphs import Graph, Partition, chromatic_number
from sgspec.twodist.matrix import rank_exact

R3 = AlgebraicNumber.sqrt(3)
THIRDS = CodeParameters(Fraction(2, 5), Fraction(-1, 5))
SQRT3 = CodeParameters((6 * R3 - 4) / 23, -(3 * R3 - 2) / 23)


def coloring(g):
    return chromatic_number(g).partition


class TestBuildCode(TestCase):

    def test_negative_triangle(self):
        k3 = build_named('complete_negative', 3).graph
        code = build_code(k3, coloring(k3), THIRDS, 20)
        self.assertEqual(code.N, 51)
        self.assertTrue(code.rank <= 20)
        self.assertTrue(code.certificate.is_psd)
        self.assertEqual(check_realizable(code.graph, THIRDS, 20).verdict,
                         'YES')

    def test_size_formula(self):
        k3 = build_named('complete_negative', 3).graph
        for d in (5, 8, 13, 20):
            code = build_code(k3, coloring(k3), THIRDS, d)
            # |G| * floor((d - p)/(|G| - mult))
            self.assertEqual(code.N, 3 * (d - 3))

    def test_sqrt3_witness(self):
        hat = build_named('h3_hat').graph
        code = build_code(hat, coloring(hat), SQRT3, 43)
        self.assertEqual(code.N, 70)
        self.assertTrue(code.rank <= 43)

    def test_round_trip(self):
        k3 = build_named('complete_negative', 3).graph
        code = build_code(k3, coloring(k3), THIRDS, 20)
        vectors = realize_vectors(code)
        self.assertEqual(vectors.shape, (51, 20))
        graph = associated_graph(vectors, THIRDS, 1e-6)
        self.assertEqual(graph.edges, code.graph.edges)

    def test_not_top_eigenvalue(self):
        k3 = build_named('complete_negative', 3).graph
        with self.assertRaises(NotTopEigenvalue):
            build_code(k3, coloring(k3), SQRT3, 43)

    def test_too_small(self):
        k3 = build_named('complete_negative', 3).graph
        with self.assertRaises(DimensionTooSmall):
            build_code(k3, coloring(k3), THIRDS, 3)

    def test_coloring_with_too_many_parts(self):
        k2 = build_named('complete_negative', 2).graph
        equiangular = CodeParameters(Fraction(1, 3), Fraction(-1, 3))
        with self.assertRaises(InvalidColoring):
            build_code(k2, Partition([[0, 1]]), equiangular, 10)

    def test_rational_alpha_with_quadratic_beta(self):
        mixed = CodeParameters(0, -R3 / 3)
        edge = Graph(3, [(1, 2)])
        res = check_realizable(edge, mixed, 3)
        self.assertEqual((res.verdict, res.rank), ('YES', 3))
        self.assertEqual(check_realizable(edge, mixed, 2).verdict, 'NO')
        self.assertEqual(rank_exact(gram_matrix(edge, mixed)), 3)


class TestAsymptotics(TestCase):

    def test_cases(self):
        self.assertEqual(predicted_asymptotics(THIRDS)['formula'],
                         '3d+O(1)')
        self.assertEqual(predicted_asymptotics(SQRT3)['case'], 'c')
        res = predicted_asymptotics(
            CodeParameters(Fraction(1, 3), Fraction(-1, 3)))
        self.assertEqual((res['case'], res['formula']), ('a', '2d+O(1)'))


if __name__ == '__main__':
    main()
