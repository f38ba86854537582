from core.commands import SymcodeCommand
from core.output import histogram_lines
from core.serializers import ExtendConfigSerializer
from weights.services import extension_payload



class Command(SymcodeCommand):
    help = "Weight distribution of the code extended to F_Q with Q = q^s, from its higher weight spectra."
    serializer_class = ExtendConfigSerializer

    def add_command_arguments(self, parser):
        parser.add_argument('--s', type=int, required=True, help="Extension degree s of F_Q over F_q.")

    def compute(self, config):
        return extension_payload(config)

    def text_lines(self, payload):
        return [f"# Q={payload['Q']}", *histogram_lines(payload['spectrum'])]

    def csv_table(self, payload):
        return ['w', 'count'], [[w, count] for w, count in payload['spectrum'].items()]
