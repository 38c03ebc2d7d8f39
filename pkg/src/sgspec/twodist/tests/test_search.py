# -*- coding: utf-8
"""
Tests for the enumeration and the searches built on it
"""

# Python compatibility:
from __future__ import absolute_import

# Standard library:
from fractions import Fraction
from unittest import TestCase, main

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber
from sgspec.twodist.canonical import is_isomorphic
from sgspec.twodist.constructions import build_named
from sgspec.twodist.enumeration import enumerate_signed
from sgspec.twodist.exceptions import LimitExceeded
from sgspec.twodist.reports import dumps
from sgspec.twodist.search import (
    compute_M,
    cubic_graphs,
    forbidden_family,
    kp_search,
    ratio_lower_bound,
    spectral_radius_order,
    verify_mult_bound,
    )

R2 = AlgebraicNumber.sqrt(2)
R3 = AlgebraicNumber.sqrt(3)


class TestEnumeration(TestCase):

    def test_class_counts(self):
        # signed graphs up to isomorphism: 1, 3, 10 on 1, 2, 3 vertices
        self.assertEqual(enumerate_signed(3).per_order, {1: 1, 2: 3, 3: 10})

    def test_plain_graph_counts(self):
        counters = enumerate_signed(5, signs=(1,))
        self.assertEqual(counters.per_order,
                         {1: 1, 2: 2, 3: 4, 4: 11, 5: 34})

    def test_visited_graphs_are_pairwise_non_isomorphic(self):
        graphs = []
        enumerate_signed(4, lambda candidate: graphs.append(candidate.graph))
        fours = [g for g in graphs if g.n == 4]
        for i, g in enumerate(fours):
            for h in fours[i + 1:]:
                self.assertFalse(is_isomorphic(g, h))

    def test_limit(self):
        with self.assertRaises(LimitExceeded):
            enumerate_signed(6, limit=5)

    def test_deadline(self):
        with self.assertRaises(LimitExceeded):
            enumerate_signed(6, deadline=0)


class TestSpectralRadiusOrder(TestCase):

    def test_small_values(self):
        for lam, k in ((1, 2), (2, 3), (R2, 3), (R3, 4)):
            self.assertEqual(spectral_radius_order(lam, 5).value, k)

    def test_path_witness(self):
        report = spectral_radius_order(R2, 5)
        path = build_named('path', 3).signed
        self.assertTrue(any(is_isomorphic(g, path)
                            for g in report.witnesses))

    def test_not_found(self):
        report = spectral_radius_order(AlgebraicNumber.sqrt(5), 3)
        self.assertEqual(report.status, 'NOT_FOUND')
        self.assertIsNone(report.value)


class TestKpSearch(TestCase):

    def test_lambda_one(self):
        report = kp_search(1, 3, 5)
        self.assertEqual(report.value, Fraction(3, 2))
        self.assertTrue(report.bounds['ratio_lower_holds'])

    def test_sqrt2_square(self):
        report = kp_search(R2, 3, 4)
        self.assertEqual(report.value, Fraction(2))
        square = build_named('signed_hypercube', 2).graph
        self.assertTrue(any(is_isomorphic(g, square)
                            for g in report.witnesses))

    def test_jobs_do_not_change_the_report(self):
        single = kp_search(1, 3, 5, jobs=1, shard_depth=3)
        parallel = kp_search(1, 3, 5, jobs=2, shard_depth=3)
        self.assertEqual(dumps(single.as_dict()), dumps(parallel.as_dict()))

    def test_ratio_lower_bound(self):
        self.assertEqual(ratio_lower_bound(2, 3, 3), Fraction(9, 5))
        self.assertEqual(ratio_lower_bound(2, 4, 3), Fraction(3, 2))
        self.assertIsNone(ratio_lower_bound(2, 1, 3))


class TestForbiddenFamily(TestCase):

    def test_triangles(self):
        fam = forbidden_family(R3, 3)
        signs = sorted(sorted(s for u, v, s in g.edges) for g in fam.members)
        self.assertEqual(signs, [[-1, -1, 1], [1, 1, 1]])

    def test_degree_cap(self):
        self.assertEqual(forbidden_family(R3, 5, p=3).degree_cap, 6)
        self.assertIsNone(forbidden_family(R3, 3, p=3).degree_cap)


class TestBoundVerification(TestCase):

    def test_cubic_graph_counts(self):
        self.assertEqual([len(cubic_graphs(n)) for n in (4, 6, 8)],
                         [1, 2, 5])

    def test_sqrt3_small(self):
        report = verify_mult_bound(R3, 3, 5, Fraction(3, 7))
        self.assertEqual(report.status, 'PASS')
        self.assertEqual(report.details['methods_agree'], {'4': True})

    def test_counterexample(self):
        report = verify_mult_bound(1, 2, 3, Fraction(1, 3))
        self.assertEqual(report.status, 'FAIL')
        self.assertTrue(report.witnesses)

    def test_both_readings_are_computed(self):
        report = verify_mult_bound(1, 2, 3, Fraction(1, 3))
        self.assertEqual(report.details['readings'],
                         {'chi_only': 'FAIL',
                          'chi_and_forbidden_family': 'FAIL'})
        self.assertEqual(report.details['forbidden_h'], 3)
        report = verify_mult_bound(R3, 3, 5, Fraction(3, 7))
        self.assertEqual(report.details['readings'],
                         {'chi_only': 'PASS',
                          'chi_and_forbidden_family': 'PASS'})


class TestMultiplicityValue(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.family = forbidden_family(R3, 5, p=3)

    def test_small_orders(self):
        self.assertEqual([compute_M(R3, 3, N, self.family).value
                          for N in (3, 4)], [0, 1])

    def test_sqrt3_bound(self):
        for N in (5, 6):
            self.assertTrue(compute_M(R3, 3, N, self.family).value
                            <= 3 * N // 7, N)

    def test_sqrt3_at_seven(self):
        report = compute_M(R3, 3, 7, self.family)
        self.assertEqual(report.value, 3)
        self.assertTrue(report.witnesses)


if __name__ == '__main__':
    main()
