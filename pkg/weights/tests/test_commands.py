import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase



def call(name, *args):
    out = StringIO()
    call_command(name, *args, stdout=out)
    return out.getvalue()



class WeightDistCommandTests(SimpleTestCase):

    def test_text(self):
        """weight_dist for q = 5, m = 2 prints one line per weight."""
        self.assertEqual(call('weight_dist', '--q', '5', '--m', '2').splitlines(), [
            "w=0 count=1",
            "w=12 count=20",
            "w=16 count=60",
            "w=18 count=40",
            "w=20 count=4",
        ])


    def test_csv(self):
        lines = call('weight_dist', '--q', '4', '--m', '2', '--format', 'csv').splitlines()
        self.assertEqual(lines[0], "w,count")
        self.assertEqual(lines[1:], ["0,1", "6,12", "8,9", "10,36", "12,6"])


    def test_json_keys(self):
        payload = json.loads(call('weight_dist', '--q', '5', '--m', '3', '--set', 'orbit', '--format', 'json'))
        self.assertEqual(payload['spectrum']['4'], 20)
        self.assertEqual((payload['n'], payload['k']), (10, 4))



class GhwCommandTests(SimpleTestCase):

    def test_vector(self):
        """ghw prints d_1 ... d_k on one line."""
        self.assertEqual(call('ghw', '--q', '5', '--m', '3', '--set', 'orbit'), "4 7 9 10\n")


    def test_witnesses(self):
        lines = call('ghw', '--q', '5', '--m', '2', '--witnesses').splitlines()
        self.assertEqual(lines[0], "12 18 20")
        self.assertEqual([line.split()[0] for line in lines[1:]], ["r=1", "r=2", "r=3"])
        self.assertEqual(lines[3].count(';'), 2)


    def test_json_without_witnesses(self):
        payload = json.loads(call('ghw', '--q', '5', '--m', '2', '--format', 'json'))
        self.assertEqual(payload['ghw'], [12, 18, 20])
        self.assertNotIn('witnesses', payload)



class SpectraCommandTests(SimpleTestCase):

    def test_single_r(self):
        self.assertEqual(
            call('spectra', '--q', '5', '--m', '2', '--r', '2'),
            "r=2 w=18 count=10\nr=2 w=20 count=21\n",
        )


    def test_every_r(self):
        """Without --r the spectra run from r = 0 to k."""
        lines = call('spectra', '--q', '5', '--m', '2').splitlines()
        self.assertEqual(lines[0], "r=0 w=0 count=1")
        self.assertEqual(lines[-1], "r=3 w=20 count=1")


    def test_r_too_large(self):
        with self.assertRaises(CommandError) as context:
            call('spectra', '--q', '5', '--m', '2', '--r', '5')
        self.assertEqual(context.exception.returncode, 2)
        self.assertIn("--r", str(context.exception))



class ExtendCommandTests(SimpleTestCase):

    def test_q7_over_f49(self):
        lines = call('extend', '--q', '7', '--m', '2', '--s', '2').splitlines()
        self.assertEqual(lines[0], "# Q=49")
        self.assertEqual(lines[1], "w=0 count=1")
        self.assertIn("w=30 count=336", lines)


    def test_json(self):
        payload = json.loads(call('extend', '--q', '5', '--m', '2', '--s', '1', '--format', 'json'))
        self.assertEqual((payload['Q'], payload['s']), (5, 1))
        self.assertEqual(payload['spectrum'], {'0': 1, '12': 20, '16': 60, '18': 40, '20': 4})


    def test_s_required(self):
        with self.assertRaises(CommandError):
            call('extend', '--q', '5', '--m', '2')
