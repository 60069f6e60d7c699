"""
Weight reports for homotopy tables.

Weights are positive: a class dual to H^i has weight i, and a bracket
word has the sum of its letters' weights, which is homological degree
plus bracket length.
"""

import logging
from dataclasses import dataclass, field

from apps.core.exceptions import PropertyCheckFailed

from .homotopy import WeightedTable

logger = logging.getLogger(__name__)


@dataclass
class WeightRow:
    n: int
    weight: int
    dim: int
    isotypic: dict = field(default_factory=dict)

    def document(self):
        document = {'n': self.n, 'weight': self.weight, 'dim': self.dim}
        if self.isotypic:
            document['isotypic'] = self.isotypic
        return document


@dataclass
class WeightReport:
    name: str
    weight_graded: bool
    rows: list

    def weights(self, n):
        return {row.weight: row.dim for row in self.rows if row.n == n}

    def document(self):
        return {
            'name': self.name,
            'weight_graded': self.weight_graded,
            'weights': [row.document() for row in self.rows],
        }


def weight_decomposition(tbl, simply_connected=False):
    """
    One row per (n, weight) with nonzero dimension. With
    ``simply_connected`` every weight of the n-th group must lie in
    [n, 2(n - 1)].
    """
    weighted = tbl if isinstance(tbl, WeightedTable) else None
    table = weighted.table if weighted else tbl
    rows = []
    for entry in table.entries:
        for weight, dim in sorted(entry.weights.items()):
            if not dim:
                continue
            if simply_connected and not entry.n <= weight <= 2 * (entry.n - 1):
                raise PropertyCheckFailed(
                    f'Weight {weight} is outside [{entry.n}, {2 * (entry.n - 1)}].',
                    witness={'n': entry.n, 'weight': weight},
                )
            isotypic = weighted.components(entry.n, weight) if weighted else {}
            if isotypic and sum(isotypic.values()) != dim:
                raise PropertyCheckFailed(
                    'Weight block is not a sum of isotypic components.',
                    witness={'n': entry.n, 'weight': weight},
                )
            rows.append(WeightRow(entry.n, weight, dim, isotypic))
    logger.debug('Weight report for %s: %d rows', table.name, len(rows))
    return WeightReport(table.name, table.homogeneous, rows)
