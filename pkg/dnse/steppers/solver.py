import torch

from ..core.errors import IntegrationError
from ..core.nonlinearity import convect
from ..core.spectral import SpectralField, check_same_grid, sobolev_norm
from ..utils import CsvSeriesWriter
from .builder import build_stepper
from .segment import Segment


def integrate(psi, u0, f, nu, scheme, num_steps=None, trace=None,
              trace_alpha=1.):
    """Run the first ``num_steps`` substeps of the linearized equation.

    Solves ``du/dt + nu A u + B(psi(t), u) = f`` from ``u(0) = u0`` on the
    sample lattice of ``psi``. The convecting field is frozen at the left end
    of each substep, so step ``j`` uses the stored sample ``psi_j``.

    Args:
        psi (Segment): Convecting segment, sampled with ``scheme.substeps``.
        u0 (SpectralField): Initial value.
        f (SpectralField): Time-independent forcing.
        nu (float): Viscosity, positive.
        scheme (StepScheme): Time discretization.
        num_steps (int, optional): Number of substeps, ``0 <= num_steps <=
            M``. Defaults to the whole interval.
        trace (CsvSeriesWriter, optional): Receives ``t, |u|_a, |u|_{1+a}``
            for every computed sample.
        trace_alpha (float): Exponent ``a`` of the trace norms.

    Returns:
        torch.Tensor: Coefficients of the ``num_steps + 1`` computed samples.
    """
    grid = check_same_grid(psi, u0, f)
    if not nu > 0:
        raise ValueError(f'viscosity must be positive, got {nu}')
    if psi.M != scheme.substeps:
        raise ValueError(
            f'convecting segment has {psi.M} substeps but the scheme expects '
            f'{scheme.substeps}')
    num_steps = psi.M if num_steps is None else num_steps
    assert 0 <= num_steps <= psi.M, \
        f'num_steps must lie in [0, {psi.M}], got {num_steps}'

    stepper = build_stepper(scheme, grid, nu, psi.dt)
    out = torch.empty((num_steps + 1, ) + grid.shape, dtype=torch.complex128)
    out[0] = u0.coeffs
    u = u0
    if trace is not None:
        trace.write(0., sobolev_norm(u, trace_alpha),
                    sobolev_norm(u, 1 + trace_alpha))
    for j in range(num_steps):
        rhs = f.coeffs - convect(psi.sample(j), u).coeffs
        coeffs = stepper.step(u.coeffs, rhs)
        if not bool(torch.isfinite(coeffs).all()):
            raise IntegrationError(
                'non-finite coefficients in the linearized solve', step=j)
        u = SpectralField(grid, coeffs)
        assert u.is_valid(), f'substep {j} broke the field invariants'
        out[j + 1] = coeffs
        if trace is not None:
            trace.write((j + 1) * psi.dt, sobolev_norm(u, trace_alpha),
                        sobolev_norm(u, 1 + trace_alpha))
    return out


def solve_interval(psi, u0, f, nu, scheme, trace_file=None, trace_alpha=1.):
    """Solve the linearized equation on one delay interval ``[0, mu]``.

    Args:
        psi (Segment): Frozen convecting segment on ``[0, mu]``.
        u0 (SpectralField): Initial value ``u(0)``.
        f (SpectralField): Forcing.
        nu (float): Viscosity.
        scheme (StepScheme): Time discretization, ``scheme.substeps`` must
            equal ``psi.M``.
        trace_file (str, optional): Per-substep CSV trace with columns
            ``t, norm_alpha, norm_1_plus_alpha``.
        trace_alpha (float): Exponent of the trace norms. Default: 1.

    Returns:
        Segment: The solution ``u`` sampled on the lattice of ``psi``.
    """
    if trace_file is None:
        coeffs = integrate(psi, u0, f, nu, scheme)
    else:
        with CsvSeriesWriter(trace_file,
                             ('t', 'norm_alpha', 'norm_1_plus_alpha')) as w:
            coeffs = integrate(
                psi, u0, f, nu, scheme, trace=w, trace_alpha=trace_alpha)
    return Segment(psi.grid, psi.mu, coeffs)
