from abc import ABCMeta, abstractmethod
from dataclasses import dataclass

import torch

from .builder import STEPPERS


@dataclass(frozen=True)
class StepScheme:
    """Time discretization of one delay interval.

    Args:
        kind (str): Registered stepper name, ``etd1`` or ``imex_euler``.
        substeps (int): Substeps ``M`` per delay interval, ``M >= 1``.
    """

    kind: str = 'etd1'
    substeps: int = 64

    def __post_init__(self):
        if self.kind not in STEPPERS:
            raise KeyError(f'{self.kind} is not a registered stepper, '
                           f'choose from {sorted(STEPPERS.module_dict)}')
        if not (isinstance(self.substeps, int) and self.substeps >= 1):
            raise ValueError(
                f'substeps must be a positive integer, got {self.substeps}')


class BaseStepper(object, metaclass=ABCMeta):
    """Propagator of ``du/dt + nu A u = r`` over one substep.

    The viscous term is handled per mode; ``r`` (forcing minus the frozen
    convection) is held constant over the substep.

    Args:
        grid (TorusGrid): Lattice of the coefficients.
        nu (float): Viscosity, positive.
        dt (float): Substep length, positive.
    """

    def __init__(self, grid, nu, dt):
        assert nu > 0, f'viscosity must be positive, got {nu}'
        assert dt > 0, f'substep must be positive, got {dt}'
        self.grid = grid
        self.nu = nu
        self.dt = dt

    @abstractmethod
    def step(self, u, rhs):
        """Advance coefficients ``u`` by one substep under forcing ``rhs``."""


@STEPPERS.register_module(name='imex_euler')
class ImexEuler(BaseStepper):
    """Implicit viscous term, explicit right-hand side:
    ``u' = (u + dt r) / (1 + dt nu |zeta|^2)``."""

    def __init__(self, *args, **kwargs):
        super(ImexEuler, self).__init__(*args, **kwargs)
        self.factor = 1. / (1. + self.dt * self.nu * self.grid.zeta_sq)

    def step(self, u, rhs):
        return (u + self.dt * rhs) * self.factor


@STEPPERS.register_module(name='etd1')
class ExponentialEuler(BaseStepper):
    """First-order exponential time differencing.

    ``u' = exp(-h) u + (1 - exp(-h)) / (nu |zeta|^2) r`` with
    ``h = dt nu |zeta|^2``. Exact when ``r`` is constant in time.
    """

    def __init__(self, *args, **kwargs):
        super(ExponentialEuler, self).__init__(*args, **kwargs)
        rate = self.nu * self.grid.zeta_sq
        self.decay = torch.exp(-self.dt * rate)
        safe_rate = rate.masked_fill(~self.grid.mask, 1.)
        self.weight = (-torch.expm1(-self.dt * safe_rate) /
                       safe_rate).masked_fill(~self.grid.mask, self.dt)

    def step(self, u, rhs):
        return self.decay * u + self.weight * rhs
