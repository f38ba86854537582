import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase



class ParamsCommandTests(SimpleTestCase):

    def call(self, *args):
        out = StringIO()
        call_command('params', *args, stdout=out)
        return out.getvalue()


    def test_full_code_text(self):
        """params for q = 5, m = 2 on the full set."""
        self.assertEqual(self.call('--q', '5', '--m', '2', '--set', 'full'), "n=20 k=3 d=12\n")


    def test_orbit_code_json(self):
        """JSON output carries the brute-force and predicted parameters."""
        payload = json.loads(self.call('--q', '5', '--m', '3', '--set', 'orbit', '--format', 'json'))
        self.assertEqual((payload['n'], payload['k'], payload['d']), (10, 4, 4))
        self.assertEqual(payload['predicted'], {'n': 10, 'k': 4, 'd': 4})
        self.assertEqual(payload['kind'], 'orbit')


    def test_output_independent_of_jobs(self):
        """--jobs does not change a single byte of the output."""
        args = ('--q', '7', '--m', '3', '--format', 'json')
        self.assertEqual(self.call(*args, '--jobs', '1'), self.call(*args, '--jobs', '3'))


    def test_degenerate_code_is_usage_error(self):
        """m = q is rejected with status 2."""
        with self.assertRaises(CommandError) as context:
            self.call('--q', '3', '--m', '3')
        self.assertEqual(context.exception.returncode, 2)


    def test_sweep_cap(self):
        """Sweeps above MAX_SWEEP abort before running and report the estimate."""
        with self.settings(SYMCODE={'JOBS': 1, 'MAX_Q': 9, 'MAX_M': 4, 'MAX_SWEEP': 1000, 'CHUNK_SIZE': 4096}):
            with self.assertRaises(CommandError) as context:
                self.call('--q', '5', '--m', '2')
            self.assertEqual(context.exception.returncode, 2)
            self.assertIn("--force", str(context.exception))
            self.assertEqual(self.call('--q', '5', '--m', '2', '--force'), "n=20 k=3 d=12\n")



class GenmatCommandTests(SimpleTestCase):

    def call(self, *args):
        out = StringIO()
        call_command('genmat', *args, stdout=out)
        return out.getvalue()


    def test_orbit_matrix_text(self):
        """The orbit matrix for q = 5, m = 3 in the text format."""
        output = self.call('--q', '5', '--m', '3', '--set', 'orbit')
        self.assertEqual(output.splitlines(), [
            "# q=5 m=3 set=orbit order=lex",
            "1 1 1 1 1 1 1 1 1 1",
            "3 4 0 0 1 2 1 2 3 4",
            "2 3 4 1 3 2 1 4 4 1",
            "0 0 0 0 0 0 1 3 2 4",
        ])


    def test_json_matrix(self):
        """JSON output is {q, m, kind, rows, field}."""
        payload = json.loads(self.call('--q', '3', '--m', '2', '--format', 'json'))
        self.assertEqual(list(payload), ['q', 'm', 'kind', 'rows', 'field'])
        self.assertEqual(len(payload['rows']), 3)
        self.assertEqual(payload['rows'][0], [1] * 6)


    def test_csv_matrix(self):
        """CSV output has one header line and one line per row."""
        lines = self.call('--q', '4', '--m', '2', '--set', 'orbit', '--format', 'csv').splitlines()
        self.assertEqual(lines[0], "c1,c2,c3,c4,c5,c6")
        self.assertEqual(len(lines), 4)


    def test_extension_field_header(self):
        """Extension fields print their modulus before the matrix."""
        lines = self.call('--q', '4', '--m', '2', '--set', 'orbit').splitlines()
        self.assertEqual(lines[0], "# field p=2 e=2 modulus=1,1,1")
        self.assertEqual(lines[1], "# q=4 m=2 set=orbit order=lex")


    def test_missing_m(self):
        """--m is required."""
        with self.assertRaises(CommandError) as context:
            self.call('--q', '5')
        self.assertIn("--m", str(context.exception))


    def test_both_field_options(self):
        """--q and --p together are a usage error."""
        with self.assertRaises(CommandError) as context:
            self.call('--q', '5', '--p', '5', '--m', '2')
        self.assertEqual(context.exception.returncode, 2)


    def test_reducible_modulus(self):
        """A reducible modulus is reported under --modulus."""
        with self.assertRaises(CommandError) as context:
            self.call('--p', '2', '--e', '2', '--modulus', '1,0,1', '--m', '2')
        self.assertIn("--modulus", str(context.exception))


    def test_sweep_cap(self):
        """Point sets above MAX_SWEEP are not listed unless forced."""
        with self.settings(SYMCODE={'JOBS': 1, 'MAX_Q': 9, 'MAX_M': 4, 'MAX_SWEEP': 10, 'CHUNK_SIZE': 4096}):
            with self.assertRaises(CommandError) as context:
                self.call('--q', '7', '--m', '4')
            self.assertEqual(context.exception.returncode, 2)
            self.assertIn("--force", str(context.exception))
            lines = self.call('--q', '7', '--m', '4', '--force').splitlines()
        self.assertEqual(len(lines), 6)
        self.assertEqual(len(lines[1].split()), 840)
