# Copyright (c) OpenMMLab. All rights reserved.
import math
from abc import ABCMeta, abstractmethod

import torch

from ..core.spectral import SpectralField, load_snapshot, random_field
from ..steppers import Segment
from .builder import FIELDS


class BaseFieldSpec(object, metaclass=ABCMeta):
    """Description of a field in an experiment config.

    Subclasses build a single field with :meth:`field`; the default segment
    repeats that field at every sample.
    """

    @abstractmethod
    def field(self, grid):
        pass

    def segment(self, grid, mu, M):
        return Segment.constant(self.field(grid), mu, M)


@FIELDS.register_module()
class Zero(BaseFieldSpec):

    def field(self, grid):
        return SpectralField.zeros(grid)

    def segment(self, grid, mu, M):
        return Segment.zeros(grid, mu, M)


@FIELDS.register_module()
class SingleMode(BaseFieldSpec):
    """Real field carried by the conjugate pair ``+-k``.

    Args:
        k (Sequence[int]): Integer wavenumber, nonzero.
        polarization (Sequence[float]): Direction, orthogonal to ``k``.
        amplitude (float): Coefficient scale at ``k``. Default: 1.
    """

    def __init__(self, k, polarization, amplitude=1.):
        self.k = tuple(int(ki) for ki in k)
        self.polarization = tuple(float(pi) for pi in polarization)
        self.amplitude = float(amplitude)
        if len(self.k) != 3 or len(self.polarization) != 3:
            raise ValueError('k and polarization must be 3-vectors')
        dot = sum(ki * pi for ki, pi in zip(self.k, self.polarization))
        if abs(dot) > 1e-12 * max(map(abs, self.polarization)):
            raise ValueError(
                f'polarization {self.polarization} is not orthogonal to '
                f'k={self.k}')

    def field(self, grid):
        return SpectralField.single_mode(grid, self.k, self.polarization,
                                         self.amplitude)


@FIELDS.register_module()
class Random(BaseFieldSpec):
    """Random field with spectrum ``|zeta|^-decay``.

    Segments combine ``temporal_modes`` random fields with cosine profiles
    ``cos(pi m t / mu)``; ``norm`` then fixes the ``L2`` in time norm.

    Args:
        seed (int): Seed of the private generator. Default: 0.
        decay (float): Spectral decay exponent. Default: 3.
        norm (float, optional): Exact ``V^s`` (or ``L2(V^s)``) norm.
        s (float): Exponent used with ``norm``. Default: 0.
        temporal_modes (int): Cosine profiles of a segment. Default: 3.
    """

    def __init__(self, seed=0, decay=3., norm=None, s=0., temporal_modes=3):
        self.seed = seed
        self.decay = decay
        self.norm = norm
        self.s = s
        self.temporal_modes = temporal_modes

    def _generator(self):
        return torch.Generator().manual_seed(self.seed)

    def field(self, grid):
        return random_field(grid, self._generator(), decay=self.decay,
                            norm=self.norm, s=self.s)

    def segment(self, grid, mu, M):
        segment = random_segment(grid, mu, M, self._generator(), self.decay,
                                 self.temporal_modes)
        if self.norm is not None:
            current = segment.l2_norm(self.s)
            if current > 0:
                segment = segment * (float(self.norm) / current)
        return segment


@FIELDS.register_module()
class Snapshot(BaseFieldSpec):
    """Field restored from a ``DNS1`` snapshot file."""

    def __init__(self, path):
        self.path = path

    def field(self, grid):
        field = load_snapshot(self.path)
        if field.grid != grid:
            raise ValueError(f'snapshot {self.path} lives on {field.grid}, '
                             f'expected {grid}')
        return field


def random_segment(grid, mu, M, generator, decay=3., temporal_modes=3):
    """Segment ``sum_m cos(pi m t / mu) F_m`` with random fields ``F_m``."""
    assert temporal_modes >= 1, 'at least one temporal mode is needed'
    t = torch.arange(M + 1, dtype=torch.float64) * (mu / M)
    coeffs = torch.zeros((M + 1, ) + grid.shape, dtype=torch.complex128)
    for m in range(temporal_modes):
        mode = random_field(grid, generator, decay=decay)
        profile = torch.cos(math.pi * m * t / mu)
        coeffs += profile.view(-1, 1, 1, 1, 1) * mode.coeffs
    return Segment(grid, mu, coeffs)
