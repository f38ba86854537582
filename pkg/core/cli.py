import os
import sys

import django
from django.core.management import execute_from_command_line, get_commands


# Verbs spelled differently from their command modules
VERB_ALIASES = {'weight-dist': 'weight_dist'}

# Handled by Django itself rather than by a command module
BUILTIN_VERBS = ('help', 'version')


def run(argv=None):
    """
    Run one symcode command (params, genmat, zeroes, weight-dist, ghw, spectra, extend, verify)
    and return its exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
    """
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    argv = list(sys.argv[1:] if argv is None else argv)
    django.setup()
    from .commands import USAGE_ERROR

    if argv and not argv[0].startswith('-'):
        argv[0] = VERB_ALIASES.get(argv[0], argv[0])
        if argv[0] not in BUILTIN_VERBS and argv[0] not in get_commands():
            sys.stderr.write(f"Unknown command: {argv[0]!r}. Type 'symcode help' for usage.\n")
            return USAGE_ERROR

    try:
        execute_from_command_line(['symcode', *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
