"""
Seeded property runs for the transport of Maurer-Cartan elements and
gauges through the Dold-Kan normalization.

Every instance is a constant coefficient algebra h, free on X, Y in degree
0 and truncated by weight, over one of a few small dg rings. The MC element
is completed by mc_solve from the image of a fixed weight-1 seed under a
random endomorphism of h; the gauge is a random element of A^0 (x) h. The
same elements are also pushed into Q[B(Z/2)] (x) h along its base point, so
the transport is exercised on a non-constant simplicial Lie algebra.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from django.conf import settings

from apps.core.exceptions import MalcevError, ParseError, PropertyCheckFailed
from apps.lie.algebra import FreeLieAlgebra
from apps.lie.derivations import LieMap
from apps.lie.generators import Truncation
from apps.linear.complexes import CHAIN, ChainComplexQ
from apps.linear.vectors import add_into, scale
from apps.mc.gauge import gauge_act, is_mc
from apps.mc.solve import mc_solve
from apps.mc.tensor import TensorDGLA
from apps.quillen.dgl import FreeDGLie
from apps.rings import catalog

from .shuffle_algebra import shuffle_algebra
from .simplicial_lie import AbelianLie, ConstantLie, NerveTensorLie
from .transport import (
    abelian_mc_dimensions,
    constant_gauge_lift,
    constant_lift,
    from_normalized,
    gauge_compatibility,
    gauge_normalize,
    mc_normalize,
    normalized_tensor,
    push_lie,
)

logger = logging.getLogger(__name__)

CHECKS = ('dg_mc', 'mc_round_trip', 'bracket', 'gauge_compatibility', 'nerve_round_trip')
FAULTS = (None, 'sign')

# Ring factory and a weight-1 seed as {ring label: {generator: coefficient}}.
FAMILIES = {
    'heisenberg': (catalog.heisenberg, {'a': {'X': 1}, 'b': {'Y': 1}}),
    'circle_model': (catalog.circle_model, {'a': {'X': 1}}),
    'torus': (catalog.torus, {'a': {'X': 1}, 'b': {'X': 2}}),
    'wedge2': (lambda: catalog.wedge_of_circles(2), {'a1': {'X': 1}, 'a2': {'Y': 1}}),
}


def coefficient_algebra(max_weight=2):
    return FreeLieAlgebra([('X', 0), ('Y', 0)], Truncation(0, max_weight))


def _lie(h, spec):
    result = {}
    for label, c in spec.items():
        add_into(result, h.generator(label), c)
    return result


def _random_combination(rng, words):
    while True:
        coefficients = [rng.randint(-2, 2) for _ in words]
        if any(coefficients):
            return {w: Fraction(c) for w, c in zip(words, coefficients) if c}


@dataclass
class Instance:
    family: str
    tensor: TensorDGLA
    omega: dict
    u: dict

    @property
    def size(self):
        return len(self.omega) + len(self.u)

    def document(self):
        return {
            'ring': self.family,
            'omega': self.tensor.render(self.omega),
            'gauge': self.tensor.render(self.u),
        }


def random_instance(rng, h, family):
    """A random MC element and gauge over the named ring."""
    factory, base = FAMILIES[family]
    ring = factory()
    tensor = TensorDGLA(ring, FreeDGLie(h, {}, name='h'))
    linear = [b for b in h.basis if b.weight == 1]
    endomorphism = LieMap(h, h, {
        'X': _random_combination(rng, linear),
        'Y': _random_combination(rng, linear),
    })
    seed = tensor.element({label: endomorphism(_lie(h, spec)) for label, spec in base.items()})
    solution = mc_solve(tensor, None, seed)
    if not solution.ok:
        raise PropertyCheckFailed(
            f'Seed over {family} is obstructed.',
            witness={'weight': solution.obstruction['weight']},
        )
    omega = solution.element
    u = tensor.element({
        ring.labels[i]: _random_combination(rng, h.basis)
        for i in ring.indices_in_degree(0)
    })
    return Instance(family, tensor, omega, u)


@dataclass
class Failure:
    check: str
    instance: Instance
    message: str

    def document(self):
        return {'check': self.check, 'message': self.message, **self.instance.document()}


@dataclass
class VerificationReport:
    seed: int
    instances: int
    max_weight: int
    fault: str = None
    checks: dict = field(default_factory=lambda: {name: 0 for name in CHECKS})
    failures: list = field(default_factory=list)
    abelian: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures and all(row['ok'] for row in self.abelian)

    def minimal_counterexample(self):
        """The failing instance with the fewest terms."""
        if not self.failures:
            return None
        return min(self.failures, key=lambda f: (f.instance.size, CHECKS.index(f.check)))

    def document(self):
        minimal = self.minimal_counterexample()
        return {
            'seed': self.seed,
            'instances': self.instances,
            'max_weight': self.max_weight,
            'fault': self.fault,
            'passed': self.checks,
            'failures': len(self.failures),
            'minimal_counterexample': minimal.document() if minimal else None,
            'abelian': self.abelian,
            'ok': self.ok,
        }


class TransportChecks:
    """Runs the checks on instances, sharing shuffle algebras per ring."""

    def __init__(self, h, fault=None):
        if fault not in FAULTS:
            raise ParseError(f'Unknown fault {fault!r}.', witness={'faults': FAULTS[1:]})
        self.h = h
        self.g = ConstantLie(h, top=2)
        self.nerve = NerveTensorLie(h, 2, top=2)
        self.fault = fault
        self._algebras = {}
        self._tensors = {}

    def algebra(self, ring):
        cached = self._algebras.get(ring.name)
        if cached is None:
            cached = self._algebras[ring.name] = shuffle_algebra(ring, top=2)
        return cached

    def tensor(self, algebra, top, g=None):
        g = g or self.g
        key = (g.name, algebra.ring.name, top)
        cached = self._tensors.get(key)
        if cached is None:
            cached = self._tensors[key] = normalized_tensor(algebra, g, top)
        return cached

    def _faulty(self, x):
        return scale(x, -1) if self.fault == 'sign' else x

    def dg_mc(self, instance):
        return bool(is_mc(instance.tensor, None, instance.omega))

    def mc_round_trip(self, instance):
        algebra = self.algebra(instance.tensor.ring)
        tensor = self.tensor(algebra, 1)
        normalized = mc_normalize(algebra, self.g, constant_lift(algebra, instance.omega, 1), tensor)
        result = self._faulty(from_normalized(normalized, tensor.dgl))
        return bool(is_mc(instance.tensor, None, result)) and result == instance.omega

    def bracket(self, instance):
        """The shuffle bracket of N(u) and N(omega) against the bracket of A (x) h."""
        algebra = self.algebra(instance.tensor.ring)
        tensor = self.tensor(algebra, 1)
        omega = mc_normalize(algebra, self.g, constant_lift(algebra, instance.omega, 1), tensor)
        u = gauge_normalize(algebra, self.g, constant_gauge_lift(algebra, instance.u, 1), tensor)
        result = self._faulty(from_normalized(tensor.bracket(u, omega), tensor.dgl))
        return result == instance.tensor.bracket(instance.u, instance.omega)

    def gauge_compatibility(self, instance):
        algebra = self.algebra(instance.tensor.ring)
        result = gauge_compatibility(
            algebra, self.g,
            constant_gauge_lift(algebra, instance.u, 2),
            constant_lift(algebra, instance.omega, 1),
        )
        moved = self._faulty(from_normalized(result, self.tensor(algebra, 2).dgl))
        return moved == gauge_act(instance.tensor, None, instance.u, instance.omega)

    def nerve_round_trip(self, instance):
        """MC transport and gauge compatibility with coefficients in Q[B(Z/2)] (x) h."""
        algebra = self.algebra(instance.tensor.ring)
        nerve = self.nerve
        eta = push_lie(constant_lift(algebra, instance.omega, 1), nerve.base_point)
        u = push_lie(constant_gauge_lift(algebra, instance.u, 2), nerve.base_point)
        tensor = self.tensor(algebra, 1, nerve)
        normalized = self._faulty(from_normalized(mc_normalize(algebra, nerve, eta, tensor), tensor.dgl))
        moved = from_normalized(gauge_compatibility(algebra, nerve, u, eta), self.tensor(algebra, 2, nerve).dgl)
        expected = gauge_act(instance.tensor, None, instance.u, instance.omega)
        return normalized == nerve.at_base_point(instance.omega) and moved == nerve.at_base_point(expected)

    def run(self, instance):
        """Names of the failed checks with their messages."""
        failed = {}
        for name in CHECKS:
            try:
                passed = getattr(self, name)(instance)
                message = '' if passed else 'Sides differ.'
            except MalcevError as exc:
                passed, message = False, str(exc.detail)
            if not passed:
                failed[name] = message
        return failed


def abelian_cases():
    """(ring, complex) pairs whose three MC dimensions must agree."""
    point_class = ChainComplexQ({0: ['v']}, degree=CHAIN)
    shifted = ChainComplexQ({1: ['v']}, degree=CHAIN)
    return [
        (catalog.sphere(2), shifted),
        (catalog.torus(), point_class),
        (catalog.circle_model(), point_class),
    ]


def abelian_report(top=2):
    rows = []
    for ring, complex_ in abelian_cases():
        algebra = shuffle_algebra(ring, top=top + 1)
        dimensions = abelian_mc_dimensions(algebra, AbelianLie(complex_, top=top + 1), top)
        rows.append({
            'ring': ring.name,
            'simplicial': dimensions[0],
            'cocycles': dimensions[1],
            'normalized_rank': dimensions[2],
            'ok': len(set(dimensions)) == 1,
        })
    return rows


def verify_transport(seed=None, instances=100, max_weight=2, fault=None, abelian=True, abelian_only=False):
    """
    Seeded run over ``instances`` random instances, cycling through the ring
    families. ``fault='sign'`` negates the transported elements so that the
    checks must fail.
    """
    seed = settings.MALCEV['DEFAULT_SEED'] if seed is None else seed
    rng = random.Random(seed)
    report = VerificationReport(seed, 0 if abelian_only else instances, max_weight, fault)
    if not abelian_only:
        h = coefficient_algebra(max_weight)
        checks = TransportChecks(h, fault)
        families = sorted(FAMILIES)
        for k in range(instances):
            instance = random_instance(rng, h, families[k % len(families)])
            failed = checks.run(instance)
            for name in CHECKS:
                if name in failed:
                    report.failures.append(Failure(name, instance, failed[name]))
                else:
                    report.checks[name] += 1
    if abelian or abelian_only:
        report.abelian = abelian_report()
    logger.info(
        'Transport verification seed=%s instances=%d failures=%d ok=%s',
        seed, report.instances, len(report.failures), report.ok,
    )
    return report
