from numbers import Number

import torch

from ..core.spectral import SpectralField, check_same_grid


class Segment(object):
    """Trajectory of fields sampled uniformly on an interval of length mu.

    Sample ``j`` sits at offset ``j * mu / M`` from the start of the
    interval, ``j = 0 .. M``. The segment itself carries no absolute time;
    whether it lives on ``[0, mu]`` or ``[-mu, 0]`` is decided by the flow
    state that owns it.

    Args:
        grid (TorusGrid): Lattice shared by all samples.
        mu (float): Interval length, positive.
        coeffs (torch.Tensor): Complex tensor of shape ``(M + 1, *grid.shape)``
            with ``M >= 1``.
    """

    def __init__(self, grid, mu, coeffs):
        if not mu > 0:
            raise ValueError(f'segment length must be positive, got {mu}')
        assert coeffs.dim() == 5 and tuple(coeffs.shape[1:]) == grid.shape, \
            f'samples of shape {tuple(coeffs.shape)} do not match {grid}'
        assert coeffs.shape[0] >= 2, 'a segment needs at least two samples'
        self.grid = grid
        self.mu = float(mu)
        self.coeffs = coeffs.to(torch.complex128)

    @classmethod
    def zeros(cls, grid, mu, M):
        return cls(grid, mu,
                   torch.zeros((M + 1, ) + grid.shape, dtype=torch.complex128))

    @classmethod
    def constant(cls, field, mu, M):
        """Segment equal to ``field`` at every sample."""
        coeffs = field.coeffs.unsqueeze(0).expand((M + 1, ) +
                                                  field.grid.shape)
        return cls(field.grid, mu, coeffs.clone())

    @classmethod
    def from_samples(cls, samples, mu):
        samples = list(samples)
        grid = check_same_grid(*samples)
        return cls(grid, mu, torch.stack([s.coeffs for s in samples]))

    @property
    def M(self):
        return self.coeffs.shape[0] - 1

    @property
    def dt(self):
        return self.mu / self.M

    def sample(self, j):
        return SpectralField(self.grid, self.coeffs[j])

    def samples(self):
        for j in range(self.M + 1):
            yield self.sample(j)

    def offsets(self):
        """Sample offsets ``j * mu / M`` from the start of the interval."""
        return torch.arange(self.M + 1, dtype=torch.float64) * self.dt

    def sample_norms(self, s):
        """``V^s`` norm of every sample, float64 tensor of length M+1."""
        weight = self.grid.weight(s)
        energy = (self.coeffs.abs()**2).sum(1)
        return (weight * energy).sum((-3, -2, -1)).sqrt()

    def trapezoid_weights(self):
        weights = torch.full((self.M + 1, ), self.dt, dtype=torch.float64)
        weights[0] = weights[-1] = 0.5 * self.dt
        return weights

    def l2_norm(self, s):
        """``L2``-in-time norm of the ``V^s`` norms, composite trapezoid."""
        squared = (self.trapezoid_weights() * self.sample_norms(s)**2).sum()
        return float(squared.sqrt())

    def is_valid(self, tol=1e-12):
        return all(sample.is_valid(tol) for sample in self.samples())

    def equal(self, other):
        """Bitwise equality of grids, lengths and samples."""
        return (self.grid == other.grid and self.mu == other.mu
                and torch.equal(self.coeffs, other.coeffs))

    def _check_compatible(self, other):
        check_same_grid(self, other)
        if self.M != other.M or self.mu != other.mu:
            raise ValueError('segments are sampled differently: '
                             f'(mu={self.mu}, M={self.M}) vs '
                             f'(mu={other.mu}, M={other.M})')

    def __add__(self, other):
        self._check_compatible(other)
        return Segment(self.grid, self.mu, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_compatible(other)
        return Segment(self.grid, self.mu, self.coeffs - other.coeffs)

    def __mul__(self, scalar):
        if not isinstance(scalar, Number) or isinstance(scalar, complex):
            return NotImplemented
        return Segment(self.grid, self.mu, self.coeffs * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return (f'{self.__class__.__name__}(grid={self.grid}, mu={self.mu}, '
                f'M={self.M})')
