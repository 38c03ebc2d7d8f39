# -*- coding: utf-8
"""
Tests for the gallery of named constructions
"""

# Python compatibility:
from __future__ import absolute_import

# Standard library:
from unittest import TestCase, main

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber
from sgspec.twodist.constructions import (
    asymmetric_graphs,
    build_named,
    gallery_names,
    verify_named,
    )
from sgspec.twodist.exceptions import BadParams, UnknownName
from sgspec.twodist.graphs import chromatic_number
from sgspec.twodist.polynomial import irreducibility_probe
from sgspec.twodist.spectral import (
    compare_top_eigenvalue,
    multiplicity,
    signed_char_poly,
    )


class TestGallery(TestCase):

    def test_complete_negative(self):
        for p in range(2, 7):
            self.assertEqual(verify_named('complete_negative', p)['status'],
                             'PASS')

    def test_signed_hypercubes(self):
        for n in (2, 3, 4):
            report = verify_named('signed_hypercube', n)
            self.assertEqual(report['status'], 'PASS')
            self.assertEqual(report['n'], 2 ** n)

    def test_h3_hat(self):
        report = verify_named('h3_hat')
        self.assertEqual([fact['observed'] for fact in report['facts']
                          if fact['fact'] == 'chi'], [3])

    def test_families(self):
        for n in (3, 4):
            report = verify_named('family_G', n)
            self.assertEqual((report['status'], report['n']), ('PASS', 6 * n))
            self.assertEqual(verify_named('family_H', n)['status'], 'PASS')

    def test_family_G_cycle_attachments(self):
        g = build_named('family_G', 3).graph
        for i in range(3):
            base = 3 + 5 * i
            self.assertEqual([g.sign(i, base + j) for j in range(5)],
                             [0, 0, 0, 1, -1])
        top = (1 + AlgebraicNumber.sqrt(33)) / 2
        self.assertEqual(compare_top_eigenvalue(g, top).verdict, 'EQUAL')
        self.assertEqual(multiplicity(g, top), 3)

    def test_paley_and_clebsch(self):
        for name in ('paley9', 'clebsch', 'clebsch5', 'k5_pm'):
            self.assertEqual(verify_named(name)['status'], 'PASS', name)

    def test_clebsch_chromatic_numbers(self):
        self.assertEqual(
            chromatic_number(build_named('clebsch').colorable).chi, 8)
        self.assertEqual(
            chromatic_number(build_named('clebsch5').colorable).chi, 4)

    def test_unknown_name(self):
        with self.assertRaises(UnknownName):
            build_named('petersen')

    def test_bad_params(self):
        with self.assertRaises(BadParams):
            build_named('signed_hypercube', 5)
        with self.assertRaises(BadParams):
            build_named('complete_negative', 0)

    def test_names(self):
        names = gallery_names()
        self.assertIn('reducible6', names)
        self.assertIn('coloring8', names)


class TestAsymmetricGraphs(TestCase):

    def test_char_poly(self):
        g = build_named('reducible6').signed
        self.assertEqual(list(signed_char_poly(g)),
                         [0, 6, 8, -6, -8, 0, 1])

    def test_only_one_graph_is_reducible(self):
        verdicts = [irreducibility_probe(signed_char_poly(
                        build_named('asymmetric6', i).signed)).verdict
                    for i in range(1, 9)]
        self.assertEqual(len(asymmetric_graphs()), 8)
        self.assertEqual(verdicts.count('REDUCIBLE'), 1)
        self.assertEqual(verdicts.count('IRREDUCIBLE'), 7)


if __name__ == '__main__':
    main()
