import torch

from .field import leray_project, sobolev_norm


def random_field(grid, generator, decay=3., norm=None, s=0.):
    """Draw a random divergence-free field with a power-law spectrum.

    Coefficients are complex Gaussians damped by ``|zeta|^(-decay)``, then
    symmetrized and Leray-projected.

    Args:
        grid (TorusGrid): Target lattice.
        generator (torch.Generator): Source of randomness.
        decay (float): Spectral decay exponent gamma. Default: 3.
        norm (float, optional): If given, rescale so that the ``V^s`` norm
            equals this value exactly.
        s (float): Sobolev exponent used with ``norm``. Default: 0.

    Returns:
        SpectralField: The random field.
    """
    shape = grid.shape
    real = torch.randn(shape, generator=generator, dtype=torch.float64)
    imag = torch.randn(shape, generator=generator, dtype=torch.float64)
    envelope = grid.weight(-0.5 * decay)
    field = leray_project(torch.complex(real, imag) * envelope, grid)
    if norm is not None:
        current = sobolev_norm(field, s)
        field = field * (float(norm) / current) if current > 0 else field
    return field
