"""
Shared plumbing for the computation commands: window flags, output
documents and the mapping of domain errors to exit codes.
"""

import csv
import io
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import EXIT_PROPERTY_FAILURE, MalcevError, ParseError, error_payload, jsonable
from apps.lie.generators import Truncation
from apps.rings.loader import read_json

logger = logging.getLogger(__name__)

MONODROMY_KEYWORDS = ('trivial', 'nontrivial')


def render_json(document):
    return json.dumps(jsonable(document), indent=2, ensure_ascii=False) + '\n'


def render_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def parse_monodromy_option(value):
    """'trivial', 'nontrivial', an inline JSON object or a JSON file of edge labels."""
    if value is None or value in MONODROMY_KEYWORDS:
        return value
    if value.lstrip().startswith('{'):
        try:
            document = json.loads(value)
        except json.JSONDecodeError as exc:
            raise ParseError(f'Invalid monodromy JSON: {exc.msg}', witness=[value])
    else:
        document = read_json(value)
    if not isinstance(document, dict):
        raise ParseError('Monodromy must map edges to group elements.', witness=[value])
    return {str(edge): str(element) for edge, element in document.items()}


class MalcevCommand(BaseCommand):
    """
    Base command: subclasses implement ``compute`` and may implement
    ``csv_table`` to support ``--format csv``.
    """
    window = True
    formats = ('json',)

    def add_arguments(self, parser):
        if self.window:
            parser.add_argument(
                '--max-degree',
                type=int,
                default=settings.MALCEV['MAX_DEGREE'],
                help=f"Highest homotopy degree N (default: {settings.MALCEV['MAX_DEGREE']})"
            )
            parser.add_argument(
                '--max-weight',
                type=int,
                default=settings.MALCEV['MAX_WEIGHT'],
                help=f"Highest bracket weight L (default: {settings.MALCEV['MAX_WEIGHT']})"
            )
        parser.add_argument(
            '--out',
            type=str,
            help='Write the document to this file instead of stdout'
        )
        parser.add_argument(
            '--format',
            choices=['json', 'csv'],
            default='json',
            help='Output format (default: json)'
        )

    def truncation(self, options):
        if options['max_degree'] < 2:
            raise ParseError('--max-degree must be at least 2.', witness={'max_degree': options['max_degree']})
        return Truncation(options['max_degree'], options['max_weight'])

    def compute(self, options):
        raise NotImplementedError

    def csv_table(self, document):
        raise NotImplementedError

    def failed(self, document):
        """Whether a successfully built document reports a property failure."""
        return False

    def handle(self, *args, **options):
        try:
            if options['format'] not in self.formats:
                raise ParseError(f"--format {options['format']} is not supported by this command.")
            document = self.compute(options)
        except MalcevError as exc:
            logger.warning('%s failed: %s', self.__module__.rsplit('.', 1)[-1], exc.detail)
            self.stdout.write(render_json(error_payload(exc)), ending='')
            raise CommandError(str(exc.detail), returncode=exc.exit_code)

        if options['format'] == 'csv':
            text = render_csv(*self.csv_table(document))
        else:
            text = render_json(document)
        if options['out']:
            Path(options['out']).write_text(text, encoding='utf-8')
            self.stdout.write(self.style.SUCCESS(f"Wrote {options['out']}"))
        else:
            self.stdout.write(text, ending='')

        if self.failed(document):
            raise CommandError('Property check failed.', returncode=EXIT_PROPERTY_FAILURE)
