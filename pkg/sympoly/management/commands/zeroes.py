from core.commands import SymcodeCommand
from core.serializers import ZeroesConfigSerializer
from sympoly.services import zeroes_payload



class Command(SymcodeCommand):
    help = "Count the distinguished zeroes of a_0 + a_1 sigma^1 + ... + a_m sigma^m over a subset S."
    serializer_class = ZeroesConfigSerializer

    def add_command_arguments(self, parser):
        parser.add_argument('--coeffs', required=True, help="Coefficients a_0,...,a_m as canonical indices.")
        parser.add_argument('--subset', help="Subset S as canonical indices (default: the whole field).")
        parser.add_argument('--list', dest='list_zeroes', action='store_true', help="Also print the zero tuples.")

    def compute(self, config):
        return zeroes_payload(config)

    def text_lines(self, payload):
        classification = payload['classification']
        summary = (
            f"count={payload['count']} bound4={payload['bound4']} "
            f"bound5={payload['bound5']} type={classification['type']}"
        )
        if classification['root'] is not None:
            summary += f" root={classification['root']}"
        zeroes = [' '.join(str(x) for x in point) for point in payload.get('zeroes', [])]
        return [summary, *zeroes]

    def csv_table(self, payload):
        if 'zeroes' in payload:
            header = [f"x{i + 1}" for i in range(payload['m'])]
            return header, payload['zeroes']
        classification = payload['classification']
        header = ['count', 'bound4', 'bound5', 'type', 'root']
        row = [payload['count'], payload['bound4'], payload['bound5'], classification['type'], classification['root']]
        return header, [row]
