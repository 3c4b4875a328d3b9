import torch

from ..core.spectral import check_same_grid
from ..utils import get_root_logger


def _cumulative_trapezoid(values, dt):
    increments = 0.5 * dt * (values[1:] + values[:-1])
    return torch.cat([values.new_zeros(1), increments.cumsum(0)])


def energy_bound(psi, u0_norm_sq, f_norm_sq, nu, lam, c, alpha):
    """Gronwall right side for ``|u(t)|_a^2`` at every sample time.

    ``|u0|^2 exp(-nu lam t / 2 + (c^2/nu) I(0, t))
    + (2/nu) |f|_{a-1}^2 int_0^t exp(-nu lam (t-s) / 2 + (c^2/nu) I(s, t)) ds``
    with ``I(s, t)`` the integral of ``|psi|_{1+a}^2`` over ``[s, t]``. Both
    integrals use the trapezoid rule on the sample lattice of ``psi``.

    Args:
        psi (Segment): Convecting segment.
        u0_norm_sq (float): ``|u0|_a^2``.
        f_norm_sq (float): ``|f|_{a-1}^2``.
        nu (float): Viscosity.
        lam (float): First Stokes eigenvalue.
        c (float): Trilinear constant of the triple ``(1+a, a, -a)``.
        alpha (float): Regularity exponent ``a``.

    Returns:
        torch.Tensor: float64 bound of length ``M + 1``.
    """
    t = psi.offsets()
    growth = (c**2 / nu) * _cumulative_trapezoid(
        psi.sample_norms(1 + alpha)**2, psi.dt)
    # exponent[i, j] of the kernel between sample times t_i >= t_j
    exponent = (-0.5 * nu * lam * (t[:, None] - t[None, :]) +
                growth[:, None] - growth[None, :])
    causal = torch.ones_like(exponent, dtype=torch.bool).tril()
    kernel = torch.where(causal, exponent.exp(), exponent.new_zeros(()))
    weights = kernel.new_full(kernel.shape, psi.dt)
    weights[:, 0] = 0.5 * psi.dt
    weights[torch.arange(len(t)), torch.arange(len(t))] = 0.5 * psi.dt
    forced = (kernel * weights).sum(1)
    forced[0] = 0.
    return u0_norm_sq * kernel[:, 0] + (2. / nu) * f_norm_sq * forced


def check_energy_inequality(u, psi, f, nu, c, alpha, allowance=0.05):
    """Compare a computed solution with :func:`energy_bound`.

    A violation larger than ``allowance`` is logged as a warning; it is not an
    error because ``c`` is only an estimate.

    Args:
        u (Segment): Solution of the linearized equation driven by ``psi``.
        psi (Segment): Convecting segment.
        f (SpectralField): Forcing.
        nu (float): Viscosity.
        c (float): Trilinear constant in use.
        alpha (float): Regularity exponent.
        allowance (float): Relative discretization allowance. Default: 0.05.

    Returns:
        tuple[bool, float]: Whether the bound holds everywhere, and the worst
        ratio of computed energy to the bound.
    """
    grid = check_same_grid(u, psi, f)
    energy = u.sample_norms(alpha)**2
    bound = energy_bound(psi, float(energy[0]),
                         f.norm(alpha - 1)**2, nu, grid.lambda1, c, alpha)
    positive = bound > 0
    unbounded = torch.full_like(energy, float('inf')).masked_fill(
        energy == 0, 0.)
    ratios = torch.where(positive, energy / bound.clamp_min(1e-300),
                         unbounded)
    worst = float(ratios.max()) if ratios.numel() else 0.
    holds = worst <= 1 + allowance
    if not holds:
        get_root_logger().warning(
            f'energy exceeds the Gronwall bound by a factor {worst:.4f} '
            f'(allowance {allowance}, c={c:.4e})')
    return holds, worst
