from core.commands import SymcodeCommand
from core.output import histogram_lines
from weights.services import weight_distribution_payload



class Command(SymcodeCommand):
    help = "Exact weight distribution A_w of the code, from every message."

    def compute(self, config):
        return weight_distribution_payload(config)

    def text_lines(self, payload):
        return histogram_lines(payload['spectrum'])

    def csv_table(self, payload):
        return ['w', 'count'], [[w, count] for w, count in payload['spectrum'].items()]
