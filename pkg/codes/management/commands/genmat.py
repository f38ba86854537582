from core.commands import SymcodeCommand
from codes.services import genmat_payload



class Command(SymcodeCommand):
    help = "Print the generator matrix: row i is sigma^i at every evaluation point, points in lexicographic order."

    def compute(self, config):
        return genmat_payload(config)

    def text_lines(self, payload):
        header = f"# q={payload['q']} m={payload['m']} set={payload['kind']} order=lex"
        return [header, *(' '.join(str(x) for x in row) for row in payload['rows'])]

    def csv_table(self, payload):
        header = [f"c{j + 1}" for j in range(len(payload['rows'][0]))]
        return header, payload['rows']
