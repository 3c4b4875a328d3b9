import torch

from ..spectral import check_same_grid, leray_project
from ..spectral.field import coeffs_to_physical, physical_to_coeffs


def convect_unprojected(u, v):
    """Coefficients of ``(u . grad) v`` before the Leray projection.

    ``grad v`` is formed spectrally (multiplication by ``i zeta_j``), both
    factors are evaluated on the zero-padded ``3N/2 + 1`` grid, multiplied
    and summed in physical space, and the product is truncated back to the
    lattice. On that grid the product of two retained modes is exact, so the
    result carries no aliasing error.

    Args:
        u (SpectralField): Convecting field.
        v (SpectralField): Convected field.

    Returns:
        torch.Tensor: Raw complex coefficients of shape ``grid.shape``.
    """
    grid = check_same_grid(u, v)
    u_phys = coeffs_to_physical(grid, u.coeffs)
    # grad_hat[i, j] = i zeta_j v_i
    grad_hat = 1j * grid.zeta.unsqueeze(0) * v.coeffs.unsqueeze(1)
    grad_phys = coeffs_to_physical(grid, grad_hat)
    advection = (u_phys.unsqueeze(0) * grad_phys).sum(1)
    return physical_to_coeffs(grid, advection)


def convect(u, v):
    """Bilinear operator ``B(u, v)``: Leray-projected ``(u . grad) v``.

    Args:
        u (SpectralField): Convecting field.
        v (SpectralField): Convected field.

    Returns:
        SpectralField: Divergence-free, zero-mean, real result.
    """
    grid = check_same_grid(u, v)
    if u.is_zero() or v.is_zero():
        return type(u).zeros(grid)
    result = leray_project(convect_unprojected(u, v), grid)
    assert result.is_valid(), 'convection lost the reality condition'
    return result


def trilinear(u, v, w):
    """Trilinear form ``b(u, v, w) = L^-3 sum_ij int u_j d_j v_i w_i dx``.

    Computed as the ``s = 0`` pairing of the unprojected convection with
    ``w``; for divergence-free ``w`` this equals ``(B(u, v), w)_0``.
    """
    check_same_grid(u, v, w)
    raw = convect_unprojected(u, v)
    return float((raw * w.coeffs.conj()).sum().real)
