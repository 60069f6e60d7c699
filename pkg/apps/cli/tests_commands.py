"""
Tests for the computation management commands.
"""

import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from malcev.cli import main

SAMPLES = Path(settings.BASE_DIR) / 'samples'


def ring(name):
    return str(SAMPLES / 'rings' / f'{name}.json')


def space(name):
    return str(SAMPLES / 'spaces' / f'{name}.json')


def group(name):
    return str(SAMPLES / 'groups' / f'{name}.json')


class CommandTestCase(SimpleTestCase):

    def run_command(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def run_json(self, *args, **options):
        return json.loads(self.run_command(*args, **options))

    def run_failing(self, *args, **options):
        """Returns the exit code and the diagnostic document."""
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command(*args, stdout=out, **options)
        return caught.exception.returncode, json.loads(out.getvalue())


def nonzero(document):
    return {row['n']: row['dim'] for row in document['homotopy'] if row['dim']}


class HomotopyCommandTestCase(CommandTestCase):
    """Test cases for the homotopy command."""

    def test_sphere(self):
        """Test S^2 up to degree 8."""
        document = self.run_json('homotopy', ring('s2'), '--max-degree', '8')
        self.assertEqual(nonzero(document), {2: 1, 3: 1})

    def test_cp2(self):
        """Test CP^2 up to degree 7 with its weights."""
        document = self.run_json('homotopy', ring('cp2'), '--max-degree', '7')
        self.assertEqual(nonzero(document), {2: 1, 5: 1})
        self.assertIn({'n': 5, 'weight': 6, 'dim': 1}, document['weights'])

    def test_csv(self):
        """Test the table as CSV."""
        lines = self.run_command('homotopy', ring('s2'), '--max-degree', '4', '--format', 'csv').splitlines()
        self.assertEqual(lines[0], 'n,dim,weights,stable')
        self.assertTrue(lines[2].startswith('2,1,2:1,'))

    def test_output_file(self):
        """Test --out writes the same document."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'table.json'
            self.run_command('homotopy', ring('s2'), '--max-degree', '4', '--out', str(path))
            written = json.loads(path.read_text(encoding='utf-8'))
        self.assertEqual(written, self.run_json('homotopy', ring('s2'), '--max-degree', '4'))

    def test_not_commutative(self):
        """Test an invalid ring exits 2 with its diagnostic."""
        code, document = self.run_failing('homotopy', ring('malformed'))
        self.assertEqual(code, 2)
        self.assertEqual(document['error']['code'], 'not_graded_commutative')

    def test_missing_file(self):
        """Test an unreadable ring file exits 2."""
        code, document = self.run_failing('homotopy', ring('missing'))
        self.assertEqual(code, 2)
        self.assertEqual(document['error']['type'], 'ParseError')

    def test_not_utf8(self):
        """Test a ring file that is not UTF-8 exits 2."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'ring.json'
            path.write_bytes(b'\xff\xfe')
            code, document = self.run_failing('homotopy', str(path))
        self.assertEqual(code, 2)
        self.assertEqual(document['error']['type'], 'ParseError')

    def test_basis_guard(self):
        """Test the basis guard exits 3."""
        with override_settings(MALCEV={**settings.MALCEV, 'BASIS_GUARD': 10}):
            code, document = self.run_failing('homotopy', ring('genus2'), '--max-degree', '5', '--max-weight', '4')
        self.assertEqual(code, 3)
        self.assertEqual(document['error']['code'], 'truncation_too_large')

    def test_small_window(self):
        """Test N below 2 is rejected."""
        code, _ = self.run_failing('homotopy', ring('s2'), '--max-degree', '1')
        self.assertEqual(code, 2)


class AdamsCommandTestCase(CommandTestCase):
    """Test cases for the adams command."""

    def test_csv(self):
        """Test the CSV page lists only nonzero E^1 entries."""
        lines = self.run_command(
            'adams', ring('s2'), '--max-degree', '4', '--max-weight', '2', '--format', 'csv',
        ).splitlines()
        self.assertEqual(lines[0], 'p,q,E1,E2')
        self.assertTrue(all(int(line.split(',')[2]) > 0 for line in lines[1:]))


class SpaceCommandTestCase(CommandTestCase):
    """Test cases for the space command."""

    def test_torus(self):
        """Test cohomology of the torus."""
        document = self.run_json('space', space('torus'))
        self.assertEqual(document['betti'], [1, 2, 1])

    def test_not_formal(self):
        """Test homotopy is withheld without --formal."""
        document = self.run_json('space', space('circle'))
        self.assertIn('note', document)
        self.assertNotIn('homotopy', document)

    def test_formal(self):
        """Test S^2 asserted formal."""
        document = self.run_json('space', space('s2'), '--formal', '--max-degree', '5')
        self.assertEqual(nonzero(document['homotopy']), {2: 1, 3: 1})

    def test_projective_plane(self):
        """Test RP^2 relative to Z2."""
        document = self.run_json(
            'space', space('rp2'), '--group', group('z2'), '--monodromy', 'nontrivial',
            '--formal', '--max-degree', '4', '--max-weight', '4',
        )
        rows = {row['n']: row for row in document['homotopy']['homotopy']}
        self.assertEqual(rows[2]['isotypic'], {'sign': 1})
        self.assertEqual(rows[3]['isotypic'], {'trivial': 1})
        self.assertEqual(document['equivariant']['monodromy'], {'a': '1'})

    def test_inline_monodromy(self):
        """Test an inline JSON edge labelling."""
        document = self.run_json('space', space('rp2'), '--group', group('z2'), '--monodromy', '{"a": "1"}')
        self.assertEqual(document['equivariant']['betti'], [1, 0, 1])

    def test_monodromy_without_group(self):
        """Test --monodromy needs --group."""
        code, _ = self.run_failing('space', space('circle'), '--monodromy', 'nontrivial')
        self.assertEqual(code, 2)

    def test_not_surjective(self):
        """Test a trivial monodromy onto Z2 exits 2."""
        code, document = self.run_failing('space', space('circle'), '--group', group('z2'), '--monodromy', 'trivial')
        self.assertEqual(code, 2)
        self.assertEqual(document['error']['code'], 'not_surjective_monodromy')


class TorsorsCommandTestCase(CommandTestCase):
    """Test cases for the torsors command."""

    def test_circle(self):
        """Test the circle with S3 coefficients has three torsors."""
        document = self.run_json('torsors', space('circle'), group('s3'))
        self.assertEqual(document['orbits'], 3)
        self.assertTrue(document['matches_hom_orbits'])

    def test_torus(self):
        """Test the torus with Z2 coefficients has four torsors."""
        document = self.run_json('torsors', space('torus'), group('z2'))
        self.assertEqual(document['orbits'], 4)

    def test_point(self):
        """Test the point has one torsor."""
        document = self.run_json('torsors', space('point'), group('s3'), '--functors')
        self.assertEqual(document['orbits'], 1)
        self.assertTrue(document['functors']['bijective'])

    def test_budget(self):
        """Test an exhausted enumeration budget exits 3."""
        code, document = self.run_failing('torsors', space('torus'), group('s3'), '--budget', '5')
        self.assertEqual(code, 3)
        self.assertEqual(document['error']['code'], 'enumeration_budget_exceeded')


class MCVerifyCommandTestCase(CommandTestCase):
    """Test cases for the mc_verify command."""

    def test_clean_run(self):
        """Test a small seeded run passes and echoes the seed."""
        document = self.run_json('mc_verify', '--seed', '5', '--instances', '4', '--max-weight', '2')
        self.assertTrue(document['ok'])
        self.assertEqual(document['seed'], 5)

    def test_reproducible(self):
        """Test identical seeds give identical output."""
        args = ('mc_verify', '--seed', '2', '--instances', '2', '--max-weight', '2')
        self.assertEqual(self.run_command(*args), self.run_command(*args))

    def test_sign_fault(self):
        """Test an injected fault exits 4 with a counterexample."""
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command(
                'mc_verify', '--seed', '5', '--instances', '2', '--max-weight', '2', '--fault', 'sign',
                stdout=out,
            )
        self.assertEqual(caught.exception.returncode, 4)
        self.assertIsNotNone(json.loads(out.getvalue())['minimal_counterexample'])

    def test_abelian_only(self):
        """Test the abelian mode report."""
        document = self.run_json('mc_verify', '--seed', '0', '--abelian-only')
        self.assertEqual(document['instances'], 0)
        self.assertEqual(len(document['abelian']), 3)

    def test_seed_required(self):
        """Test the seed is mandatory."""
        with self.assertRaises(CommandError):
            call_command('mc_verify', stdout=StringIO())


class ModelCommandsTestCase(CommandTestCase):
    """Test cases for minimal_model and ce_check."""

    def test_minimal_model(self):
        """Test the acyclic pair is eliminated."""
        document = self.run_json('minimal_model', ring('s2_plus_acyclic'), '--max-degree', '5', '--max-weight', '5')
        self.assertEqual([g['label'] for g in document['generators']], ['x'])
        self.assertEqual(len(document['eliminated']), 1)

    def test_ce_check(self):
        """Test the round trip of S^2."""
        document = self.run_json('ce_check', ring('s2'), '--max-degree', '8', '--max-weight', '8')
        self.assertTrue(document['ok'])


class ConsoleScriptTestCase(SimpleTestCase):
    """Test cases for the malcev console script."""

    def test_hyphenated_subcommand(self):
        """Test mc-verify runs the mc_verify command."""
        with redirect_stdout(StringIO()) as out:
            self.assertEqual(main(['mc-verify', '--seed', '0', '--abelian-only']), 0)
        self.assertTrue(json.loads(out.getvalue())['ok'])

    def test_exit_code(self):
        """Test a domain error becomes the process exit code."""
        with redirect_stdout(StringIO()), redirect_stderr(StringIO()):
            with self.assertRaises(SystemExit) as caught:
                main(['homotopy', ring('malformed')])
        self.assertEqual(caught.exception.code, 2)

    def test_unknown_subcommand(self):
        """Test an unknown subcommand is refused."""
        with redirect_stderr(StringIO()) as err:
            self.assertEqual(main(['shell']), 2)
        self.assertIn('mc-verify', err.getvalue())
