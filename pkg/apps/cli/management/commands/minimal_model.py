"""
Minimal model of a ring's free chain Lie model.
"""

from apps.cli.base import MalcevCommand
from apps.quillen.construction import build_Gbar
from apps.quillen.minimal import minimal_model
from apps.rings.loader import load_ring_file


class Command(MalcevCommand):
    help = 'Generators and differential of the minimal free chain Lie model of a ring'

    def add_arguments(self, parser):
        parser.add_argument('ring', type=str, help='Ring document (JSON)')
        super().add_arguments(parser)

    def compute(self, options):
        t = self.truncation(options)
        return minimal_model(build_Gbar(load_ring_file(options['ring']), t), t).document()
