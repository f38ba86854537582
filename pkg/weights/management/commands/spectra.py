from core.commands import SymcodeCommand
from core.serializers import SpectraConfigSerializer
from weights.services import spectra_payload



class Command(SymcodeCommand):
    help = "Higher weight spectra A_w^(r): r-dimensional subcodes counted by support weight."
    serializer_class = SpectraConfigSerializer

    def add_command_arguments(self, parser):
        parser.add_argument('--r', type=int, help="Subcode dimension (default: every r = 0..k).")

    def compute(self, config):
        return spectra_payload(config)

    def rows(self, payload):
        return [
            [r, w, count]
            for r, spectrum in payload['spectra'].items()
            for w, count in spectrum.items()
        ]

    def text_lines(self, payload):
        return [f"r={r} w={w} count={count}" for r, w, count in self.rows(payload)]

    def csv_table(self, payload):
        return ['r', 'w', 'count'], self.rows(payload)
