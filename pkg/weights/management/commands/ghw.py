from core.commands import SymcodeCommand
from core.serializers import GhwConfigSerializer
from weights.services import ghw_payload



def basis_text(basis):
    return ';'.join(','.join(str(x) for x in row) for row in basis)



class Command(SymcodeCommand):
    help = "Generalized Hamming weights d_1 < ... < d_k by sweeping every subcode."
    serializer_class = GhwConfigSerializer

    def add_command_arguments(self, parser):
        parser.add_argument('--witnesses', action='store_true', help="Print a minimizing message basis for each r.")

    def compute(self, config):
        return ghw_payload(config)

    def text_lines(self, payload):
        lines = [' '.join(str(d) for d in payload['ghw'])]
        for r, basis in enumerate(payload.get('witnesses', []), start=1):
            lines.append(f"r={r} basis={basis_text(basis)}")
        return lines

    def csv_table(self, payload):
        witnesses = payload.get('witnesses')
        if witnesses is None:
            return ['r', 'd'], [[r, d] for r, d in enumerate(payload['ghw'], start=1)]
        rows = [[r, d, basis_text(basis)] for r, (d, basis) in enumerate(zip(payload['ghw'], witnesses), start=1)]
        return ['r', 'd', 'basis'], rows
