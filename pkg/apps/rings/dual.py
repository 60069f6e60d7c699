"""
Dual coalgebra data of the reduced part of a ring.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .ring import koszul


@dataclass
class CoLieData:
    """
    One generator per reduced basis element of positive degree, in
    homological degree one less. ``coproduct[c]`` maps ordered pairs
    ``(a, b)`` to the coefficient (-1)^|a| * lambda where c appears in a*b
    with coefficient lambda. ``linear[c]`` maps ``k`` to the coefficient of
    c in d(k).
    """
    generators: list
    cohomological_degrees: dict
    coproduct: dict = field(default_factory=dict)
    linear: dict = field(default_factory=dict)

    def degree(self, label):
        return self.cohomological_degrees[label] - 1


def dualize_reduced(ring):
    reduced = ring.reduced_indices(min_degree=1)
    labels = [ring.labels[i] for i in reduced]
    degrees = {ring.labels[i]: ring.degrees[i] for i in reduced}
    coproduct = {label: {} for label in labels}
    linear = {label: {} for label in labels}
    reduced_set = set(reduced)

    for (i, j), value in ring.products.items():
        if i not in reduced_set or j not in reduced_set:
            continue
        sign = koszul(ring.degrees[i], 1)
        for k, coeff in value.items():
            if k in reduced_set:
                coproduct[ring.labels[k]][(ring.labels[i], ring.labels[j])] = sign * coeff

    for i, value in ring.differential.items():
        if i not in reduced_set:
            continue
        for k, coeff in value.items():
            if k in reduced_set:
                linear[ring.labels[k]][ring.labels[i]] = Fraction(coeff)

    return CoLieData(
        generators=[(label, degrees[label] - 1) for label in labels],
        cohomological_degrees=degrees,
        coproduct={k: v for k, v in coproduct.items() if v},
        linear={k: v for k, v in linear.items() if v},
    )


def retranspose(data):
    """Recover the reduced product table ``(a, b) -> {c: lambda}``."""
    table = {}
    for c, pairs in data.coproduct.items():
        for (a, b), coeff in pairs.items():
            sign = koszul(data.cohomological_degrees[a], 1)
            table.setdefault((a, b), {})[c] = sign * coeff
    return table
