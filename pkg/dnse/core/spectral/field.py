from numbers import Number

import torch

from .torus import TorusGrid, check_same_grid

_SPATIAL_DIMS = (-3, -2, -1)


class SpectralField(object):
    """Divergence-free, zero-mean, real vector field on the torus.

    The field is represented by its Fourier coefficients on the centred index
    cube of ``grid``: ``u(x) = sum_k coeffs[:, k] * exp(i zeta_k . x)``. The
    coefficient tensor is treated as immutable; every operation returns a new
    field.

    Invariants (checked by :meth:`is_valid`):

    - reality: ``coeffs[:, -k] == conj(coeffs[:, k])``;
    - incompressibility: ``zeta_k . coeffs[:, k] == 0``;
    - zero mean: the ``k = 0`` entry is zero.

    Args:
        grid (TorusGrid): The lattice the coefficients live on.
        coeffs (torch.Tensor): Complex128 tensor of shape ``grid.shape``.
    """

    def __init__(self, grid, coeffs):
        assert isinstance(grid, TorusGrid), \
            f'grid should be a TorusGrid, but got {type(grid)}'
        assert tuple(coeffs.shape) == grid.shape, \
            f'coeffs of shape {tuple(coeffs.shape)} do not match {grid}'
        self.grid = grid
        self.coeffs = coeffs.to(torch.complex128)

    @classmethod
    def zeros(cls, grid):
        return cls(grid, torch.zeros(grid.shape, dtype=torch.complex128))

    @classmethod
    def single_mode(cls, grid, k, polarization, amplitude=1.):
        """Build the real field carried by the conjugate pair ``+-k``.

        ``coeffs[:, k] = amplitude * polarization`` and the partner ``-k``
        receives the complex conjugate.
        """
        pol = torch.as_tensor(polarization, dtype=torch.complex128)
        kvec = torch.as_tensor(k, dtype=torch.float64)
        if pol.shape != (3, ) or kvec.shape != (3, ):
            raise ValueError('k and polarization must be 3-vectors')
        if not bool(kvec.any()):
            raise ValueError('the zero wavenumber carries no field')
        if abs(complex((kvec.to(torch.complex128) * pol).sum())) > 1e-12 * \
                float(kvec.norm()) * float(pol.abs().max()):
            raise ValueError(
                f'polarization {tuple(pol.tolist())} is not orthogonal to '
                f'k={tuple(kvec.tolist())}')
        coeffs = torch.zeros(grid.shape, dtype=torch.complex128)
        ix = grid.index(k)
        jx = grid.index(tuple(-int(ki) for ki in k))
        coeffs[(slice(None), ) + ix] = amplitude * pol
        coeffs[(slice(None), ) + jx] = (amplitude * pol).conj()
        return cls(grid, coeffs)

    @classmethod
    def from_physical(cls, grid, values):
        """Project real samples on a uniform ``P^3`` grid onto the lattice.

        The result is symmetrized and Leray-projected, so any real periodic
        vector field is accepted.
        """
        coeffs = physical_to_coeffs(grid, values)
        return leray_project(coeffs, grid)

    def to_physical(self, size=None):
        """Real samples of the field on a uniform ``size^3`` grid.

        Defaults to the dealiasing grid ``grid.padded_size``.
        """
        return coeffs_to_physical(self.grid, self.coeffs, size)

    def symmetrize(self):
        """Return the field with the reality condition enforced exactly."""
        return SpectralField(self.grid, _symmetrize(self.grid, self.coeffs))

    def reality_defect(self):
        """Max modulus of ``coeffs[:, k] - conj(coeffs[:, -k])``."""
        flipped = self.coeffs.flip(_SPATIAL_DIMS).conj()
        return float((self.coeffs - flipped).abs().max())

    def max_divergence(self):
        """Max modulus of ``zeta . coeffs`` over the lattice."""
        return float((self.grid.zeta * self.coeffs).sum(0).abs().max())

    def is_valid(self, tol=1e-12):
        """Check the field invariants relative to the coefficient scale."""
        scale = float(self.coeffs.abs().max())
        if scale == 0:
            return True
        zeta_max = float(self.grid.zeta_sq.max().sqrt())
        centre = (slice(None), ) + (self.grid.K, ) * 3
        return (self.reality_defect() <= tol * scale
                and self.max_divergence() <= tol * scale * zeta_max
                and float(self.coeffs[centre].abs().max()) == 0)

    def is_zero(self):
        return not bool(self.coeffs.any())

    def norm(self, s=0.):
        return sobolev_norm(self, s)

    def __add__(self, other):
        check_same_grid(self, other)
        return SpectralField(self.grid, self.coeffs + other.coeffs)

    def __sub__(self, other):
        check_same_grid(self, other)
        return SpectralField(self.grid, self.coeffs - other.coeffs)

    def __neg__(self):
        return SpectralField(self.grid, -self.coeffs)

    def __mul__(self, scalar):
        if not isinstance(scalar, Number) or isinstance(scalar, complex):
            return NotImplemented
        return SpectralField(self.grid, self.coeffs * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1. / scalar)

    def __repr__(self):
        return (f'{self.__class__.__name__}(grid={self.grid}, '
                f'norm0={self.norm(0.):.6e})')


def _symmetrize(grid, coeffs):
    coeffs = 0.5 * (coeffs + coeffs.flip(_SPATIAL_DIMS).conj())
    return coeffs.masked_fill(~grid.mask, 0)


def _padded_index(grid, size):
    k1d = torch.arange(-grid.K, grid.K + 1)
    idx = torch.remainder(k1d, size)
    n = grid.size
    return idx.view(n, 1, 1), idx.view(1, n, 1), idx.view(1, 1, n)


def coeffs_to_physical(grid, coeffs, size=None):
    """Evaluate coefficients (any leading batch shape) on a ``size^3`` grid.

    ``size`` must be at least ``N + 1`` so distinct wavenumbers do not
    collide; the default is the dealiasing size ``3N/2 + 1``.
    """
    size = grid.padded_size if size is None else size
    assert size >= grid.size, \
        f'physical grid of size {size} aliases retained modes of {grid}'
    ix, iy, iz = _padded_index(grid, size)
    padded = coeffs.new_zeros(coeffs.shape[:-3] + (size, size, size))
    padded[..., ix, iy, iz] = coeffs
    return torch.fft.ifftn(padded, dim=_SPATIAL_DIMS, norm='forward').real


def physical_to_coeffs(grid, values):
    """Fourier coefficients of real samples, truncated to the lattice."""
    size = values.shape[-1]
    assert values.shape[-3:] == (size, size, size), \
        f'expected cubic samples, got shape {tuple(values.shape)}'
    assert size >= grid.size, \
        f'physical grid of size {size} aliases retained modes of {grid}'
    spectrum = torch.fft.fftn(
        values.to(torch.complex128), dim=_SPATIAL_DIMS, norm='forward')
    ix, iy, iz = _padded_index(grid, size)
    return spectrum[..., ix, iy, iz].masked_fill(~grid.mask, 0)


def sobolev_norm(u, s):
    """Homogeneous Sobolev norm ``(sum |zeta|^(2s) |u_k|^2)^(1/2)``.

    The sum runs over all retained wavenumbers, both conjugate partners
    included.

    Args:
        u (SpectralField): The field.
        s (float): Sobolev exponent, any real value.

    Returns:
        float: The norm.
    """
    weight = u.grid.weight(s)
    return float((weight * (u.coeffs.abs()**2).sum(0)).sum().sqrt())


def inner_product(u, v, s):
    """Sobolev inner product ``sum |zeta|^(2s) u_k . conj(v_k)``.

    Real by the reality symmetry of both arguments. At ``s = 0`` it equals
    the volume average ``L^-3 int u . v dx``.
    """
    check_same_grid(u, v)
    weight = u.grid.weight(s)
    pairing = (u.coeffs * v.coeffs.conj()).sum(0)
    return float((weight * pairing).sum().real)


def stokes_apply(u, p):
    """Apply the power ``A^p`` of the Stokes operator.

    ``A`` is diagonal with eigenvalue ``|zeta|^2``, so every coefficient is
    multiplied by ``|zeta|^(2p)``.
    """
    if p == 0:
        return SpectralField(u.grid, u.coeffs.clone())
    return SpectralField(u.grid, u.coeffs * u.grid.weight(p))


def leray_project(w, grid=None):
    """Helmholtz (Leray) projection onto divergence-free fields.

    Removes the component of each coefficient parallel to ``zeta``:
    ``w_k - zeta (zeta . w_k) / |zeta|^2``. The reality condition is enforced
    on the way out.

    Args:
        w (SpectralField | torch.Tensor): Field or raw coefficient tensor of
            shape ``grid.shape``.
        grid (TorusGrid, optional): Required when ``w`` is a raw tensor.

    Returns:
        SpectralField: The projected field.
    """
    if isinstance(w, SpectralField):
        grid, coeffs = w.grid, w.coeffs
    else:
        assert grid is not None, 'a grid is needed to project a raw tensor'
        coeffs = w.to(torch.complex128)
    zeta = grid.zeta
    zeta_sq = grid.zeta_sq.masked_fill(~grid.mask, 1.)
    parallel = zeta * ((zeta * coeffs).sum(0) / zeta_sq)
    return SpectralField(grid, _symmetrize(grid, coeffs - parallel))


def energy_spectrum(u):
    """Shell-summed energy ``E(m) = 1/2 sum_{round|k| = m} |u_k|^2``.

    Returns:
        torch.Tensor: float64 tensor indexed by the integer shell ``m``.
    """
    grid = u.grid
    shell = grid.k.norm(dim=0).round().long().flatten()
    energy = 0.5 * (u.coeffs.abs()**2).sum(0).flatten()
    return torch.bincount(shell, weights=energy)
