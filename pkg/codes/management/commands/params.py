from core.commands import SymcodeCommand
from codes.services import params_payload



class Command(SymcodeCommand):
    help = "Length, dimension and minimum distance of the code, by sweeping every message."

    def compute(self, config):
        return params_payload(config)

    def text_lines(self, payload):
        return [f"n={payload['n']} k={payload['k']} d={payload['d']}"]

    def csv_table(self, payload):
        return ['n', 'k', 'd'], [[payload['n'], payload['k'], payload['d']]]
