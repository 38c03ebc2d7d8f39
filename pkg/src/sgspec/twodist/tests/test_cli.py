# -*- coding: utf-8
"""
Tests for the sgspec command: exit status and JSON output
"""

# Python compatibility:
from __future__ import absolute_import

from six import StringIO

# Standard library:
import json
import os
import shutil
import sys
import tempfile
from unittest import TestCase, main

# Local imports:
from sgspec.twodist.cli import main as sgspec_main


class CommandTestCase(TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def path(self, name, content=None):
        res = os.path.join(self.tmpdir, name)
        if content is not None:
            with open(res, 'w') as fo:
                fo.write(content)
        return res

    def run_command(self, *argv):
        """
        Return (exit status, list of decoded stdout lines)
        """
        saved_out, saved_err = sys.stdout, sys.stderr
        sys.stdout, sys.stderr = StringIO(), StringIO()
        try:
            status = sgspec_main(list(argv))
            out = sys.stdout.getvalue()
        finally:
            sys.stdout, sys.stderr = saved_out, saved_err
        return status, [json.loads(line) for line in out.splitlines()]


class TestAnalyze(CommandTestCase):

    def test_triangle(self):
        fn = self.path('tri.json', '{"format":"sgjson/1","n":3,'
                                   '"edges":[[0,1,-1],[0,2,-1],[1,2,-1]]}')
        status, out = self.run_command('analyze', fn, '--lambda', '1')
        self.assertEqual(status, 0)
        res = out[0]
        self.assertEqual(res['chi'], 3)
        self.assertEqual(res['charpoly'], [2, -3, 0, 1])
        self.assertEqual(res['spectral']['mult'], 2)
        self.assertEqual(res['spectral']['cmp_top'], 'EQ')

    def test_missing_file(self):
        status, out = self.run_command('analyze',
                                       self.path('missing.json'))
        self.assertEqual(status, 2)
        self.assertEqual(out[0]['error'], 'FILE_ERROR')

    def test_bad_file(self):
        fn = self.path('bad.json', '{"n": 3}')
        status, out = self.run_command('analyze', fn)
        self.assertEqual(status, 2)
        self.assertEqual(out[0]['error'], 'BAD_FORMAT')

    def test_loop(self):
        fn = self.path('loop.json', '{"format":"sgjson/1","n":2,'
                                    '"edges":[[1,1,1]]}')
        status, out = self.run_command('analyze', fn)
        self.assertEqual((status, out[0]['error']), (2, 'LOOP'))


class TestUsage(CommandTestCase):

    def test_no_command(self):
        status, out = self.run_command()
        self.assertEqual((status, out), (2, []))

    def test_unknown_option(self):
        status, out = self.run_command('gallery', '--colour')
        self.assertEqual(status, 2)

    def test_bad_lambda(self):
        status, out = self.run_command('search', 'k', '--lambda', 'cbrt(2)')
        self.assertEqual((status, out[0]['error']), (2, 'BAD_FORMAT'))

    def test_limit(self):
        status, out = self.run_command('search', 'k', '--lambda', '1',
                                       '--max-n', '9')
        self.assertEqual((status, out[0]['error']), (3, 'LIMIT_EXCEEDED'))

    def test_unknown_claim(self):
        status, out = self.run_command('verify', 'kp-42')
        self.assertEqual((status, out[0]['error']), (2, 'UNKNOWN_NAME'))


class TestGallery(CommandTestCase):

    def test_verify(self):
        status, out = self.run_command('gallery', 'complete_negative', '4',
                                       '--verify')
        self.assertEqual((status, out[0]['status']), (0, 'PASS'))

    def test_build(self):
        status, out = self.run_command('gallery', 'signed_hypercube', '2')
        self.assertEqual(status, 0)
        self.assertEqual(out[0]['graph']['n'], 4)


class TestSearchAndVerify(CommandTestCase):

    def test_k(self):
        status, out = self.run_command('search', 'k', '--lambda', 'sqrt(2)',
                                       '--max-n', '5')
        self.assertEqual((status, out[0]['value']), (0, '3'))

    def test_failed_bound(self):
        status, out = self.run_command('search', 'bound', '--lambda', '1',
                                       '-p', '2', '--max-n', '3',
                                       '--bound', '1/3')
        self.assertEqual((status, out[0]['status']), (1, 'FAIL'))

    def test_claim_and_replay(self):
        status, out = self.run_command('verify', 'kp-one')
        self.assertEqual((status, out[0]['status']), (0, 'PASS'))
        fn = self.path('report.json', json.dumps(out[0]))
        status, replayed = self.run_command('verify', '--replay', fn)
        self.assertEqual((status, replayed[0]['status']), (0, 'PASS'))
        self.assertTrue(replayed[0]['replayed'] > 0)

    def test_reports_are_deterministic(self):
        first = self.run_command('search', 'kp', '--lambda', '1', '-p', '3',
                                 '--max-n', '5')
        second = self.run_command('search', 'kp', '--lambda', '1', '-p', '3',
                                  '--max-n', '5', '--jobs', '2')
        self.assertEqual(first, second)


class TestCode(CommandTestCase):

    def test_params(self):
        status, out = self.run_command('code', 'params', '--alpha', '2/5',
                                       '--beta', '-1/5')
        self.assertEqual(status, 0)
        self.assertEqual((out[0]['lambda'], out[0]['p'], out[0]['formula']),
                         ('1', 3, '3d+O(1)'))

    def test_build_and_check(self):
        fn = self.path('vectors.json')
        status, out = self.run_command('code', 'build', '--alpha', '2/5',
                                       '--beta', '-1/5', '-d', '20',
                                       '--gallery', 'complete_negative',
                                       '--param', '3', '--vectors', fn)
        self.assertEqual(status, 0)
        self.assertEqual((out[0]['N'], out[0]['psd']), (51, 'certified'))
        status, out = self.run_command('code', 'check', '--alpha', '2/5',
                                       '--beta', '-1/5', '--vectors', fn)
        self.assertEqual(status, 0)
        self.assertEqual((out[0]['N'], out[0]['verdict']), (51, 'YES'))

    def test_dimension_too_small(self):
        status, out = self.run_command('code', 'build', '--alpha', '2/5',
                                       '--beta', '-1/5', '-d', '3',
                                       '--gallery', 'complete_negative',
                                       '--param', '3')
        self.assertEqual((status, out[0]['error']),
                         (2, 'DIMENSION_TOO_SMALL'))


if __name__ == '__main__':
    main()
