import math
from dataclasses import dataclass

import torch

from ..core.spectral import SpectralField, check_same_grid
from ..steppers import Segment, StepScheme

HISTORY = 'history'
FORWARD = 'forward'


class FlowState(object):
    """Element ``(segment, endpoint)`` of a product space of the delay flow.

    With ``forward`` orientation the segment lives on ``[0, mu]`` (state of
    the discrete flow); with ``history`` orientation it lives on ``[-mu, 0]``
    (state of the continuous flow). States produced by a flow map have the
    endpoint equal to the last segment sample; for initial data the endpoint
    is an independent datum.

    Args:
        segment (Segment): Segment component.
        endpoint (SpectralField): Endpoint component.
        orientation (str): ``forward`` or ``history``. Default: ``forward``.
    """

    def __init__(self, segment, endpoint, orientation=FORWARD):
        assert orientation in (HISTORY, FORWARD), \
            f'unknown orientation {orientation}'
        check_same_grid(segment, endpoint)
        self.segment = segment
        self.endpoint = endpoint
        self.orientation = orientation

    @property
    def grid(self):
        return self.segment.grid

    @classmethod
    def zeros(cls, grid, mu, M, orientation=FORWARD):
        return cls(
            Segment.zeros(grid, mu, M), SpectralField.zeros(grid), orientation)

    def times(self):
        """Absolute sample times of the segment."""
        offsets = self.segment.offsets()
        return offsets - self.segment.mu if self.orientation == HISTORY \
            else offsets

    def equal(self, other):
        """Bitwise equality, orientation included."""
        return (self.orientation == other.orientation
                and self.segment.equal(other.segment)
                and self.endpoint.grid == other.endpoint.grid
                and torch.equal(self.endpoint.coeffs, other.endpoint.coeffs))

    def _check_orientation(self, other):
        if self.orientation != other.orientation:
            raise ValueError('cannot combine a forward state with a history '
                             'state')

    def __add__(self, other):
        self._check_orientation(other)
        return FlowState(self.segment + other.segment,
                         self.endpoint + other.endpoint, self.orientation)

    def __sub__(self, other):
        self._check_orientation(other)
        return FlowState(self.segment - other.segment,
                         self.endpoint - other.endpoint, self.orientation)

    def __mul__(self, scalar):
        return FlowState(self.segment * scalar, self.endpoint * scalar,
                         self.orientation)

    __rmul__ = __mul__

    def __repr__(self):
        return (f'{self.__class__.__name__}({self.orientation}, '
                f'segment={self.segment}, endpoint={self.endpoint})')


@dataclass(frozen=True)
class FlowParams:
    """Constants of the delayed equation.

    Args:
        nu (float): Viscosity, positive.
        mu (float): Delay, positive.
        alpha (float): Regularity exponent of the state spaces, above 1/2.
        f (SpectralField): Time-independent forcing.
        scheme (StepScheme): Time discretization of one delay interval.
    """

    nu: float
    mu: float
    alpha: float
    f: SpectralField
    scheme: StepScheme = StepScheme()

    def __post_init__(self):
        if not self.alpha > 0.5:
            raise ValueError(f'alpha must exceed 1/2, got {self.alpha}')
        if not self.nu > 0:
            raise ValueError(f'viscosity must be positive, got {self.nu}')
        if not self.mu > 0:
            raise ValueError(f'delay must be positive, got {self.mu}')

    @property
    def grid(self):
        return self.f.grid

    @property
    def M(self):
        return self.scheme.substeps

    @property
    def dt(self):
        return self.mu / self.scheme.substeps

    def replace(self, **kwargs):
        """Copy with some constants changed, e.g. ``p.replace(nu=2.)``."""
        values = dict(
            nu=self.nu,
            mu=self.mu,
            alpha=self.alpha,
            f=self.f,
            scheme=self.scheme)
        values.update(kwargs)
        return FlowParams(**values)

    def check_state(self, x):
        """Raise ``ValueError`` unless ``x`` is sampled like these params."""
        check_same_grid(x, self.f)
        if x.segment.M != self.M or x.segment.mu != self.mu:
            raise ValueError(
                f'state sampled with (mu={x.segment.mu}, M={x.segment.M}) '
                f'does not match the flow (mu={self.mu}, M={self.M})')


def state_norm(x, alpha):
    """Product-space norm of a flow state.

    ``(|segment|^2_{L2(V^{1+a})} + |endpoint|^2_a)^(1/2)``.

    The time integral is the composite trapezoid rule over the samples.
    """
    return math.sqrt(
        x.segment.l2_norm(1 + alpha)**2 + x.endpoint.norm(alpha)**2)


def state_distance(x, y, alpha):
    return state_norm(x - y, alpha)


def correspond(y):
    """Relabel a history state on ``[-mu, 0]`` as a forward state on
    ``[0, mu]``; coefficients are shared, not copied."""
    if y.orientation != HISTORY:
        raise ValueError(
            f'correspond expects a history state, got {y.orientation}')
    return FlowState(y.segment, y.endpoint, FORWARD)


def correspond_inverse(x):
    if x.orientation != FORWARD:
        raise ValueError(
            f'correspond_inverse expects a forward state, got {x.orientation}')
    return FlowState(x.segment, x.endpoint, HISTORY)
