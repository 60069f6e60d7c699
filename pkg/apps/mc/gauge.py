"""
Maurer-Cartan elements of A (x) g and the gauge action of exp(A^0-part).

The gauge action is computed twice: in the truncated envelope as
g w g^-1 - (dg) g^-1, and as the Lie series
e^(ad u) w - sum ad_u^k (du) / (k + 1)!. Both must agree.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from apps.core.exceptions import NotMC, PropertyCheckFailed
from apps.linear.vectors import add_into, scale, sub

from .bch import bch_evaluate
from .envelope import TensorEnvelope
from .tensor import TensorDGLA

logger = logging.getLogger(__name__)


@dataclass
class MCVerdict:
    ok: bool
    residual: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _tensor(a, g):
    return a if isinstance(a, TensorDGLA) else TensorDGLA(a, g)


def is_mc(a, g, omega):
    """Whether d omega + 1/2 [omega, omega] vanishes; the residual is kept."""
    tensor = _tensor(a, g)
    tensor.check_degree(omega, 1, 'Maurer-Cartan element')
    residual = tensor.mc_residual(omega)
    if residual:
        logger.debug('MC residual has %d terms', len(residual))
    return MCVerdict(not residual, residual)


def _require_mc(tensor, omega):
    verdict = is_mc(tensor, None, omega)
    if not verdict:
        raise NotMC(
            'Element does not satisfy the Maurer-Cartan equation.',
            witness=tensor.render(verdict.residual),
        )


def series_action(tensor, u, omega):
    weight = tensor.depth
    result = dict(omega)
    term = dict(omega)
    for k in range(1, weight + 1):
        term = scale(tensor.bracket(u, term), Fraction(1, k))
        if not term:
            break
        add_into(result, term)
    term = tensor.d(u)
    factorial = 1
    for k in range(weight + 1):
        factorial *= k + 1
        if not term:
            break
        add_into(result, term, Fraction(-1, factorial))
        term = tensor.bracket(u, term)
    return result


def _envelope_action(tensor, u, omega):
    envelope = TensorEnvelope(tensor.ring, tensor.algebra, tensor.dgl)
    group = envelope.exp(envelope.embed(u))
    group_inverse = envelope.exp(envelope.embed(scale(u, -1)))
    conjugate = envelope.multiply(envelope.multiply(group, envelope.embed(omega)), group_inverse)
    correction = envelope.multiply(envelope.d(group), group_inverse)
    return envelope.project(sub(conjugate, correction))


def gauge_act(a, g, u, omega):
    """Action of exp(u) on the Maurer-Cartan element ``omega``."""
    tensor = _tensor(a, g)
    tensor.check_degree(u, 0, 'gauge parameter')
    tensor.check_degree(omega, 1, 'Maurer-Cartan element')
    _require_mc(tensor, omega)

    result = series_action(tensor, u, omega)
    envelope = _envelope_action(tensor, u, omega) if tensor.is_free else result
    if envelope != result:
        raise PropertyCheckFailed(
            'Envelope and Lie series gauge actions disagree.',
            witness=tensor.render(sub(envelope, result)),
        )
    verdict = is_mc(tensor, None, result)
    if not verdict:
        raise PropertyCheckFailed(
            'Gauge action left the Maurer-Cartan set.',
            witness=tensor.render(verdict.residual),
        )
    return result


def compose(a, g, u, v):
    """Parameter of exp(u) exp(v)."""
    tensor = _tensor(a, g)
    if not tensor.is_free:
        return bch_evaluate(tensor.bracket, u, v, tensor.depth)
    envelope = TensorEnvelope(tensor.ring, tensor.algebra, tensor.dgl)
    product = envelope.multiply(envelope.exp(envelope.embed(u)), envelope.exp(envelope.embed(v)))
    return envelope.project(envelope.log(product))


def inverse(u):
    return scale(u, -1)
