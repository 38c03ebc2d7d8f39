# -*- coding: utf-8
"""
Property suites for the exact spectral queries (randomized, fixed seeds)
"""

# Python compatibility:
from __future__ import absolute_import

from six.moves import range

# Standard library:
from unittest import TestCase, main

# 3rd party:
import numpy as np

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber, as_number
from sgspec.twodist.graphs import (
    SignedGraph,
    all_positive,
    chi_at_most,
    induced_subgraph,
    switch,
    underlying,
    )
from sgspec.twodist.polynomial import roots_above
from sgspec.twodist.spectral import (
    compare_top_eigenvalue,
    multiplicity,
    signed_char_poly,
    spectrum_float,
    tail_check,
    trace_identities,
    )

R2 = AlgebraicNumber.sqrt(2)
R3 = AlgebraicNumber.sqrt(3)
EIGENVALUES = [as_number(0), as_number(1), as_number(-1), as_number(2),
               R2, R3, (1 + AlgebraicNumber.sqrt(33)) / 2]


def random_graphs(seed, count, n_max=7):
    rng = np.random.RandomState(seed)
    for i in range(count):
        n = int(rng.randint(1, n_max + 1))
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                s = int(rng.randint(3)) - 1
                if s:
                    edges.append((u, v, s))
        yield SignedGraph(n, edges), rng


class TestTraces(TestCase):

    def test_trace_identities(self):
        for g, rng in random_graphs(11, 300):
            res = trace_identities(g)
            self.assertTrue(res['holds'], (g, res))
            self.assertEqual(res['power_sums'][0], 0)


class TestSwitching(TestCase):

    def test_char_poly_is_switching_invariant(self):
        for g, rng in random_graphs(12, 200):
            subset = [v for v in range(g.n) if rng.randint(2)]
            self.assertEqual(signed_char_poly(switch(g, subset)),
                             signed_char_poly(g))

    def test_two_colorable_is_isospectral_with_underlying(self):
        seen = 0
        for g, rng in random_graphs(13, 300):
            if not chi_at_most(g, 2):
                continue
            seen += 1
            self.assertEqual(signed_char_poly(g),
                             signed_char_poly(all_positive(underlying(g))))
        self.assertTrue(seen > 10)


class TestMultiplicity(TestCase):

    def test_multiplicity_times_degree(self):
        for g, rng in random_graphs(14, 150):
            for lam in EIGENVALUES:
                self.assertTrue(multiplicity(g, lam) * lam.degree <= g.n)

    def test_vertex_deletion_interlacing(self):
        for g, rng in random_graphs(15, 120):
            if g.n < 2:
                continue
            v = int(rng.randint(g.n))
            rest = induced_subgraph(g, [w for w in range(g.n) if w != v])
            for lam in EIGENVALUES:
                self.assertTrue(abs(multiplicity(g, lam)
                                    - multiplicity(rest, lam)) <= 1)

    def test_exact_and_float_agree(self):
        for g, rng in random_graphs(16, 150, n_max=10):
            values = spectrum_float(g)
            for lam in EIGENVALUES:
                x = float(lam)
                close = sum(1 for y in values if abs(y - x) < 1e-6)
                self.assertEqual(close, multiplicity(g, lam), (g, lam))

    def test_top_comparison_and_float_agree(self):
        for g, rng in random_graphs(17, 150):
            top = max(spectrum_float(g))
            for lam in EIGENVALUES:
                verdict = compare_top_eigenvalue(g, lam).verdict
                x = float(lam)
                if verdict == 'EQUAL':
                    self.assertTrue(abs(top - x) < 1e-6)
                elif verdict == 'LESS':
                    self.assertTrue(top < x - 1e-6)
                else:
                    self.assertTrue(top > x + 1e-6)

    def test_roots_above_and_float_agree(self):
        for g, rng in random_graphs(18, 200, n_max=9):
            values = spectrum_float(g)
            poly = signed_char_poly(g)
            for lam in EIGENVALUES:
                x = float(lam)
                above = sum(1 for y in values if y > x + 1e-6)
                self.assertEqual(roots_above(poly, lam), above, (g, lam))

    def test_tail_check_and_float_agree(self):
        for g, rng in random_graphs(19, 200, n_max=9):
            values = spectrum_float(g)
            k = int(rng.randint(1, g.n + 1))
            for lam in EIGENVALUES:
                self.assertEqual(tail_check(g, k, lam),
                                 values[k - 1] <= float(lam) + 1e-6,
                                 (g, k, lam))

    def test_tail_with_repeated_eigenvalue(self):
        # spectrum 2.249.., 1, 1, 0, -1.14.., -3.10..
        g = SignedGraph(6, [(0, 1, 1), (0, 3, 1), (0, 5, -1), (1, 3, 1),
                            (1, 4, -1), (1, 5, 1), (3, 4, 1), (3, 5, -1),
                            (4, 5, 1)])
        self.assertEqual(roots_above(signed_char_poly(g), 0), 3)
        self.assertEqual(roots_above(signed_char_poly(g), 1), 1)
        self.assertFalse(tail_check(g, 3, 0))
        self.assertTrue(tail_check(g, 4, 0))


class TestKnownSpectra(TestCase):

    def test_negative_complete_graph(self):
        for p in range(2, 7):
            k = SignedGraph(p, [(u, v, -1) for u in range(p)
                                for v in range(u + 1, p)])
            self.assertEqual(multiplicity(k, 1), p - 1)
            self.assertEqual(compare_top_eigenvalue(k, 1).verdict, 'EQUAL')

    def test_star(self):
        star = SignedGraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
        self.assertEqual(compare_top_eigenvalue(star, R3).verdict, 'EQUAL')
        self.assertEqual(multiplicity(star, R3), 1)
        self.assertEqual(multiplicity(star, 0), 2)


if __name__ == '__main__':
    main()
