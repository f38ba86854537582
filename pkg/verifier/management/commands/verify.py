from django.core.management.base import CommandError

from core.commands import CHECK_FAILURE, SymcodeCommand
from core.output import compact, params_text
from core.serializers import VerifyConfigSerializer
from verifier.services import verify_payload



def words(*parts):
    return ' '.join(part for part in parts if part)



class Command(SymcodeCommand):
    help = "Check every closed form against brute force; exits with status 1 when a check fails."
    serializer_class = VerifyConfigSerializer

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--suite', choices=['zeroes', 'tables', 'codes', 'spectra', 'example', 'all'],
            help="Suite to run (default all). --m selects the cases of the zeroes and codes suites; the others have a fixed m.",
        )

    def compute(self, config):
        return verify_payload(config)

    def text_lines(self, payload):
        lines = []
        for check in payload['checks']:
            counterexample = check['counterexample']
            lines.append(words(
                check['status'].upper(),
                check['claim'],
                params_text(check['params']),
                f"predicted={compact(check['predicted'])}",
                f"computed={compact(check['computed'])}",
                counterexample is not None and f"counterexample={compact(counterexample)}",
            ))
        for skip in payload['skipped']:
            lines.append(words('SKIP', skip['claim'], params_text(skip['params']), skip['reason']))
        lines.append(params_text(payload['summary']))
        return lines

    def csv_table(self, payload):
        header = ['status', 'claim', 'params', 'predicted', 'computed', 'counterexample']
        rows = [
            [
                check['status'], check['claim'], params_text(check['params']),
                compact(check['predicted']), compact(check['computed']),
                '' if check['counterexample'] is None else compact(check['counterexample']),
            ]
            for check in payload['checks']
        ]
        rows.extend(['skip', skip['claim'], params_text(skip['params']), '', '', skip['reason']] for skip in payload['skipped'])
        return header, rows

    def after_output(self, payload, config):
        if not payload['passed']:
            raise CommandError(f"{payload['summary']['failed']} check(s) failed.", returncode=CHECK_FAILURE)
