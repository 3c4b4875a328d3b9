import itertools
import math
from types import MappingProxyType

import torch

from ..errors import GridMismatchError


class TorusGrid(object):
    """Fourier lattice of the periodic cube of side ``L``.

    Coefficients are stored on the centred index cube ``k_i = -N/2 ... N/2``
    (``N + 1`` entries per axis), so every retained wavenumber has its
    conjugate partner ``-k`` on the cube. The zero wavenumber occupies the
    centre entry and never carries a value.

    Args:
        L (float): Side length of the torus. Default: 2*pi, for which the
            first Stokes eigenvalue ``lambda1`` is 1.
        N (int): Modes per dimension, even and positive. Default: 16.
    """

    def __init__(self, L=2 * math.pi, N=16):
        if not L > 0:
            raise ValueError(f'torus side L must be positive, got {L}')
        if not (isinstance(N, int) and N > 0 and N % 2 == 0):
            raise ValueError(f'N must be an even positive integer, got {N}')
        self.L = float(L)
        self.N = N
        self.K = N // 2
        self.size = N + 1
        # smallest grid on which the product of two retained modes is exact
        self.padded_size = 3 * self.K + 1

        n = self.size
        k1d = torch.arange(-self.K, self.K + 1, dtype=torch.float64)
        self.k = torch.stack([
            k1d.view(n, 1, 1).expand(n, n, n),
            k1d.view(1, n, 1).expand(n, n, n),
            k1d.view(1, 1, n).expand(n, n, n)
        ]).contiguous()
        self.zeta = (2 * math.pi / self.L) * self.k
        self.zeta_sq = (self.zeta**2).sum(0)
        self.mask = self.zeta_sq > 0
        self.lambda1 = (2 * math.pi / self.L)**2
        # exponents used by the norms and the Stokes operator
        self._weights = MappingProxyType(
            {s: self._power(s) for s in (-1., -0.5, 0., 0.5, 1.)})

    @property
    def shape(self):
        """Shape of a coefficient tensor of a vector field."""
        return (3, self.size, self.size, self.size)

    @property
    def num_modes(self):
        """Number of retained (nonzero) wavenumbers."""
        return self.size**3 - 1

    def _power(self, s):
        base = self.zeta_sq.masked_fill(~self.mask, 1.)
        return base.pow(s).masked_fill(~self.mask, 0.)

    def weight(self, s):
        """Return ``|zeta|^(2s)`` on the cube, zero at ``zeta = 0``.

        The table of common exponents is built with the grid and never
        changes afterwards. Tensors from it are shared, so callers must not
        modify them in place. Other exponents are computed per call.
        """
        s = float(s)
        if s in self._weights:
            return self._weights[s]
        return self._power(s)

    def index(self, k):
        """Cube index of the integer wavenumber vector ``k``."""
        k = tuple(int(ki) for ki in k)
        if any(abs(ki) > self.K for ki in k):
            raise ValueError(f'wavenumber {k} is not retained for N={self.N}')
        return tuple(ki + self.K for ki in k)

    def wavenumbers(self):
        """Iterate retained integer wavenumbers in lexicographic order."""
        rng = range(-self.K, self.K + 1)
        for k in itertools.product(rng, rng, rng):
            if k != (0, 0, 0):
                yield k

    def __eq__(self, other):
        return (isinstance(other, TorusGrid) and self.N == other.N
                and self.L == other.L)

    def __hash__(self):
        return hash((self.L, self.N))

    def __repr__(self):
        return f'{self.__class__.__name__}(L={self.L}, N={self.N})'


def check_same_grid(*items):
    """Raise :class:`GridMismatchError` unless all items share one grid."""
    grids = [item.grid for item in items]
    for grid in grids[1:]:
        if grid != grids[0]:
            raise GridMismatchError(
                f'operands live on different grids: {grids[0]} vs {grid}')
    return grids[0]
