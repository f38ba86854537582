import logging

from django.conf import settings
from django.core.exceptions import ValidationError as DjangoValidationError
from django.core.management.base import BaseCommand, CommandError

from .exceptions import InfeasibleSweepError, SymcodeError
from .output import field_header, render_csv, render_json, render_text
from .serializers import RunConfigSerializer, flag_name


logger = logging.getLogger(__name__)

USAGE_ERROR = 2
CHECK_FAILURE = 1



def format_errors(errors):
    """
    Flatten serializer errors into '--flag: message' lines.
    """
    lines = []
    for dest, messages in errors.items():
        if not isinstance(messages, (list, tuple)):
            messages = [messages]
        prefix = '' if dest == 'non_field_errors' else f"{flag_name(dest)}: "
        lines.extend(f"{prefix}{message}" for message in messages)
    return '\n'.join(lines)



class SymcodeCommand(BaseCommand):
    """
    Base class of the symcode commands: shared field options, validation through a
    RunConfig serializer, and rendering of the computed payload as text, JSON or CSV.
    """
    serializer_class = RunConfigSerializer

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, help="Field order q = p^e.")
        parser.add_argument('--p', type=int, help="Field characteristic (alternative to --q).")
        parser.add_argument('--e', type=int, help="Extension degree, used with --p (default 1).")
        parser.add_argument('--modulus', help="Monic irreducible modulus as c0,...,ce.")
        parser.add_argument('--m', type=int, help="Number of variables.")
        parser.add_argument('--set', dest='set_kind', choices=['full', 'orbit'], help="Evaluation set (default full).")
        parser.add_argument('--format', dest='output_format', choices=['text', 'json', 'csv'], help="Output format (default text).")
        parser.add_argument('--jobs', type=int, help=f"Worker processes (default {settings.SYMCODE['JOBS']}).")
        parser.add_argument('--force', action='store_true', help="Run sweeps above the configured caps.")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def load_config(self, options):
        """
        Validate the parsed options; usage errors exit with status 2.
        """
        fields = self.serializer_class().fields
        data = {name: options[name] for name in fields if options.get(name) is not None}
        serializer = self.serializer_class(data=data)
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors), returncode=USAGE_ERROR)
        return serializer.save()

    def handle(self, *args, **options):
        config = self.load_config(options)
        try:
            payload = self.compute(config)
        except InfeasibleSweepError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        except DjangoValidationError as exc:
            raise CommandError(format_errors(exc.message_dict), returncode=USAGE_ERROR)
        except SymcodeError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)

        self.stdout.write(self.render(payload, config), ending='')
        self.after_output(payload, config)

    def compute(self, config):
        raise NotImplementedError

    def render(self, payload, config):
        if config.output_format == 'json':
            return render_json(payload)
        if config.output_format == 'csv':
            return render_csv(*self.csv_table(payload))
        return render_text(field_header(config.field) + self.text_lines(payload))

    def text_lines(self, payload):
        raise NotImplementedError

    def csv_table(self, payload):
        raise NotImplementedError

    def after_output(self, payload, config):
        pass
