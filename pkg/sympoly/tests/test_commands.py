import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase



class ZeroesCommandTests(SimpleTestCase):

    def call(self, *args, **options):
        out = StringIO()
        call_command('zeroes', *args, stdout=out, **options)
        return out.getvalue()


    def test_type_two_summary(self):
        """3 + x_1 x_2 over F_5 prints its count, both bounds and its type."""
        output = self.call('--q', '5', '--m', '2', '--coeffs', '3,0,1')
        self.assertEqual(output, "count=4 bound4=8 bound5=5 type=II\n")


    def test_type_one_summary_names_root(self):
        """Type I polynomials also print their root."""
        output = self.call('--q', '5', '--m', '2', '--coeffs', '0,0,1')
        self.assertEqual(output, "count=8 bound4=8 bound5=5 type=I root=0\n")


    def test_list_zeroes(self):
        """--list appends one zero tuple per line."""
        output = self.call('--q', '5', '--m', '2', '--coeffs', '4,0,1', '--list')
        self.assertEqual(output.splitlines()[1:], ["2 3", "3 2"])


    def test_json_output(self):
        """JSON output carries the field, the subset and the classification."""
        output = self.call('--q', '5', '--m', '2', '--coeffs', '1,1,1', '--format', 'json')
        payload = json.loads(output)
        self.assertEqual(payload['field'], {'p': 5, 'e': 1, 'modulus': [0, 1]})
        self.assertEqual(payload['subset'], [0, 1, 2, 3, 4])
        self.assertEqual(payload['classification'], {'type': 'I', 'alpha': 1, 'root': 4})
        self.assertEqual((payload['m'], payload['coeffs']), (2, [1, 1, 1]))
        self.assertEqual(payload['count'], 8)


    def test_extension_field_header(self):
        """Runs over an extension field start with the modulus header."""
        output = self.call('--p', '3', '--e', '2', '--m', '2', '--coeffs', '0,0,1')
        header, summary = output.splitlines()
        self.assertEqual(header, "# field p=3 e=2 modulus=1,0,1")
        self.assertTrue(summary.startswith("count=16 "))


    def test_subset_option(self):
        """--subset restricts the coordinates."""
        output = self.call('--q', '5', '--m', '2', '--coeffs', '0,0,1', '--subset', '1,2,3', '--format', 'csv')
        self.assertEqual(output.splitlines(), ["count,bound4,bound5,type,root", "0,4,3,I,0"])


    def test_wrong_coefficient_count_is_usage_error(self):
        """A coefficient vector of the wrong length exits with status 2 and names --coeffs."""
        with self.assertRaises(CommandError) as context:
            self.call('--q', '5', '--m', '2', '--coeffs', '3,0')
        self.assertEqual(context.exception.returncode, 2)
        self.assertIn("--coeffs", str(context.exception))


    def test_invalid_field_is_usage_error(self):
        """q = 6 is rejected under --q."""
        with self.assertRaises(CommandError) as context:
            self.call('--q', '6', '--m', '2', '--coeffs', '0,0,1')
        self.assertEqual(context.exception.returncode, 2)
        self.assertIn("--q", str(context.exception))


    def test_sweep_cap(self):
        """Counting over more tuples than MAX_SWEEP allows exits with status 2 unless forced."""
        with self.settings(SYMCODE={'JOBS': 1, 'MAX_Q': 9, 'MAX_M': 4, 'MAX_SWEEP': 10, 'CHUNK_SIZE': 4096}):
            with self.assertRaises(CommandError) as context:
                self.call('--q', '7', '--m', '4', '--coeffs', '0,0,0,0,1')
            self.assertEqual(context.exception.returncode, 2)
            self.assertIn("--force", str(context.exception))
            output = self.call('--q', '7', '--m', '4', '--coeffs', '0,0,0,0,1', '--force')
        self.assertTrue(output.startswith("count=480 "))
