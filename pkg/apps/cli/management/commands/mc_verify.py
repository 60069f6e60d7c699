"""
Seeded property run for the normalization of Maurer-Cartan elements and
gauges.
"""

from apps.cli.base import MalcevCommand
from apps.doldkan.verification import FAULTS, verify_transport


class Command(MalcevCommand):
    help = 'Check that normalization preserves Maurer-Cartan elements and commutes with gauges'
    window = False

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, required=True, help='Seed for the random instances')
        parser.add_argument(
            '--instances',
            type=int,
            default=100,
            help='Number of random instances (default: 100)'
        )
        parser.add_argument(
            '--max-weight',
            type=int,
            default=3,
            help='Weight truncation of the coefficient Lie algebra (default: 3)'
        )
        parser.add_argument(
            '--abelian-only',
            action='store_true',
            help='Only compare the simplicial and dg solution counts for abelian coefficients'
        )
        parser.add_argument('--fault', choices=[f for f in FAULTS if f], help='Inject a fault')
        super().add_arguments(parser)

    def compute(self, options):
        report = verify_transport(
            seed=options['seed'],
            instances=options['instances'],
            max_weight=options['max_weight'],
            fault=options['fault'],
            abelian_only=options['abelian_only'],
        )
        return report.document()

    def failed(self, document):
        return not document['ok']
