"""
Console entry point: ``malcev <subcommand> ...`` runs the management
command of the same name, with hyphens in the subcommand allowed.
"""

import os
import sys

SUBCOMMANDS = {
    'homotopy': 'homotopy',
    'space': 'space',
    'adams': 'adams',
    'torsors': 'torsors',
    'mc-verify': 'mc_verify',
    'minimal-model': 'minimal_model',
    'ce-check': 'ce_check',
}


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'malcev.settings.base')
    from django.core.management import execute_from_command_line

    if argv and argv[0] in SUBCOMMANDS:
        argv[0] = SUBCOMMANDS[argv[0]]
    elif argv and argv[0] not in ('help', '--help', '-h'):
        sys.stderr.write(f"Unknown subcommand {argv[0]!r}. Choose from: {', '.join(SUBCOMMANDS)}\n")
        return 2
    execute_from_command_line(['malcev', *argv])
    return 0


if __name__ == '__main__':
    sys.exit(main())
