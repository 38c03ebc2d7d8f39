# -*- coding: utf-8
"""
Tests for the settings layer and the number grammar
"""

# Python compatibility:
from __future__ import absolute_import

from six import StringIO

# Standard library:
from fractions import Fraction
from unittest import TestCase, main

# Local imports:
from sgspec.twodist.algebra import AlgebraicNumber
from sgspec.twodist.convert import parse_configuration
from sgspec.twodist.exceptions import BadFormat, UnsupportedDegree
from sgspec.twodist.lambdaspec import (
    parse_lambda_spec,
    parse_number,
    parse_rational,
    )
from sgspec.twodist.parse import generate_statements
from sgspec.twodist.settings import load_settings

SETTINGS_TEXT = """\
# a comment of its own
search.max_n = 6   # trailing comment
search = {jobs: 2,
          witness_limit: 1,
          }
limits.wall_clock = unlimited; codes.tolerance = 1e-9
"""


class TestParseConfiguration(TestCase):

    def test_statements(self):
        statements = list(generate_statements(text=SETTINGS_TEXT))
        self.assertEqual(len(statements), 4)
        self.assertTrue(all(stmt.is_assignment for stmt in statements))

    def test_values(self):
        config = parse_configuration(SETTINGS_TEXT)
        self.assertEqual(config['search'],
                         {'max_n': 6, 'jobs': 2, 'witness_limit': 1})
        self.assertIsNone(config['limits']['wall_clock'])
        self.assertEqual(config['codes']['tolerance'], 1e-9)

    def test_file(self):
        config = parse_configuration(file=StringIO(SETTINGS_TEXT))
        self.assertEqual(config['search']['max_n'], 6)

    def test_unknown_key(self):
        with self.assertRaises(ValueError):
            parse_configuration('search.colours = 3')

    def test_bad_value(self):
        with self.assertRaises(ValueError):
            parse_configuration('search.jobs = 0')
        with self.assertRaises(ValueError):
            parse_configuration('search.jobs = yes')

    def test_unbalanced_braces(self):
        with self.assertRaises(ValueError):
            parse_configuration('search = {jobs: 2')


class TestLoadSettings(TestCase):

    def test_layers(self):
        settings = load_settings(file=StringIO('search.max_n = 5'),
                                 text='search.max_n = 6',
                                 environ={'SGSPEC_JOBS': '3'},
                                 **{'search.witness_limit': 2})
        self.assertEqual(settings.get('search.max_n'), 6)
        self.assertEqual(settings.get('search.jobs'), 3)
        self.assertEqual(settings.get('search.witness_limit'), 2)
        self.assertEqual(settings.get('limits.arena_mib'), 4096)

    def test_environment_is_checked(self):
        with self.assertRaises(ValueError):
            load_settings(environ={'SGSPEC_JOBS': 'many'})

    def test_search_options(self):
        settings = load_settings(environ={})
        self.assertEqual(settings.search_options(),
                         {'jobs': 1, 'shard_depth': 4, 'witness_limit': 5})

    def test_deadline(self):
        settings = load_settings(environ={},
                                 **{'limits.wall_clock': 5})
        self.assertEqual(settings.deadline(start=10), 15)
        settings = load_settings(text='limits.wall_clock = unlimited',
                                 environ={})
        self.assertIsNone(settings.deadline())


class TestNumbers(TestCase):

    def test_rationals(self):
        self.assertEqual(parse_rational('6/4'), Fraction(3, 2))
        self.assertEqual(parse_rational('-0.25'), Fraction(-1, 4))

    def test_quadratic(self):
        self.assertEqual(parse_number('(1+sqrt(33))/2'),
                         (1 + AlgebraicNumber.sqrt(33)) / 2)
        self.assertEqual(parse_number('sqrt(8)'),
                         2 * AlgebraicNumber.sqrt(2))

    def test_mixed_fields(self):
        with self.assertRaises(UnsupportedDegree):
            parse_number('sqrt(2) * sqrt(3)')

    def test_garbage(self):
        with self.assertRaises(BadFormat):
            parse_number('2 +')
        with self.assertRaises(BadFormat):
            parse_number('(2')

    def test_lambda_specs(self):
        query = parse_lambda_spec('sqrt(3)')
        self.assertEqual(query.value, AlgebraicNumber.sqrt(3))
        query = parse_lambda_spec('minpoly:[-2,0,0,1]:interval:[1,2]')
        self.assertIsNone(query.value)
        self.assertEqual(query.degree, 3)
        self.assertEqual(query.interval, (1, 2))


if __name__ == '__main__':
    main()
