"""
Generating spaces and truncation windows for free graded Lie algebras.
"""

from dataclasses import dataclass

from apps.core.exceptions import DegreeMismatch, ParseError, UnknownBasisLabel


@dataclass(frozen=True)
class Truncation:
    """
    Window of a computation: homological degree at most ``max_degree`` and
    bracket length (lower central series weight) at most ``max_weight``.
    """
    max_degree: int
    max_weight: int

    def __post_init__(self):
        if self.max_degree < 0 or self.max_weight < 1:
            raise ParseError(
                'Truncation requires max_degree >= 0 and max_weight >= 1.',
                witness={'max_degree': self.max_degree, 'max_weight': self.max_weight},
            )

    def contains(self, degree, weight):
        return degree <= self.max_degree and weight <= self.max_weight


class GradedGenerators:
    """
    Ordered generator labels with non-negative homological degrees.

    Generators are sorted by degree, then label; letters of words are
    positions in this order.
    """

    def __init__(self, pairs):
        pairs = sorted(((str(label), int(degree)) for label, degree in pairs), key=lambda p: (p[1], p[0]))
        labels = [label for label, _ in pairs]
        if len(set(labels)) != len(labels):
            raise ParseError('Generator labels must be distinct.', witness=labels)
        for label, degree in pairs:
            if degree < 0:
                raise DegreeMismatch(f'Generator {label!r} has negative degree.', witness=[label, degree])
        self.labels = labels
        self.degrees = [degree for _, degree in pairs]
        self._index = {label: i for i, label in enumerate(labels)}

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(zip(self.labels, self.degrees))

    def __eq__(self, other):
        return isinstance(other, GradedGenerators) and list(self) == list(other)

    def __repr__(self):
        return 'GradedGenerators(%s)' % ', '.join(f'{l}:{d}' for l, d in self)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownBasisLabel(f'Unknown generator {label!r}.', witness=[label])

    def degree(self, label):
        return self.degrees[self.index(label)]

    @property
    def min_degree(self):
        return min(self.degrees) if self.degrees else 0

    def word_degree(self, word):
        return sum(self.degrees[i] for i in word)

    def spell(self, word):
        return [self.labels[i] for i in word]
