import math

import torch

from ..core.spectral import SpectralField, TorusGrid
from ..utils import get_root_logger
from .schemes import StepScheme
from .segment import Segment
from .solver import solve_interval

PROBLEMS = ('heat', 'convected')


def reference_problem(problem, M, nu=1., mu=1., N=8):
    """Smooth test problem of the convergence study.

    ``u0`` is the mode ``k=(1,0,0)`` polarized along ``y`` and ``f`` the mode
    ``k=(0,1,1)`` polarized along ``x``. ``heat`` has no convection;
    ``convected`` rotates ``psi(t) = cos(2 pi t/mu) psi0 + sin(2 pi t/mu)
    psi1`` between two half-amplitude modes.

    Returns:
        tuple: ``(psi, u0, f)`` with ``psi`` sampled at ``M`` substeps.
    """
    assert problem in PROBLEMS, \
        f'problem should be one of {PROBLEMS}, got {problem}'
    grid = TorusGrid(N=N)
    u0 = SpectralField.single_mode(grid, (1, 0, 0), (0, 1, 0))
    f = SpectralField.single_mode(grid, (0, 1, 1), (1, 0, 0))
    if problem == 'heat':
        return Segment.zeros(grid, mu, M), u0, f
    psi0 = SpectralField.single_mode(grid, (0, 0, 1), (1, 0, 0), 0.5)
    psi1 = SpectralField.single_mode(grid, (0, 1, 0), (0, 0, 1), 0.5)
    phase = 2 * math.pi * torch.arange(M + 1, dtype=torch.float64) / M
    coeffs = (phase.cos().view(-1, 1, 1, 1, 1) * psi0.coeffs +
              phase.sin().view(-1, 1, 1, 1, 1) * psi1.coeffs)
    return Segment(grid, mu, coeffs), u0, f


def heat_endpoint(u0, f, nu, mu):
    """Exact endpoint of ``du/dt + nu A u = f`` after time ``mu``."""
    rate = nu * u0.grid.zeta_sq
    decay = torch.exp(-mu * rate)
    safe_rate = rate.masked_fill(~u0.grid.mask, 1.)
    gain = (-torch.expm1(-mu * safe_rate) / safe_rate).masked_fill(
        ~u0.grid.mask, 0.)
    return SpectralField(u0.grid, decay * u0.coeffs + gain * f.coeffs)


def convergence_order(scheme,
                      refinements=4,
                      base_substeps=32,
                      problem='convected',
                      nu=1.,
                      mu=1.):
    """Observed temporal order of a stepper.

    The test problem is solved with ``base_substeps * 2**i`` substeps for
    ``i < refinements``. For ``heat`` the endpoint errors against the exact
    solution are used, for ``convected`` the differences of successive
    endpoints; the order is ``log2`` of the ratio at the finest pair.

    Args:
        scheme (StepScheme | str): Scheme or stepper name. Only the kind is
            used; the substep counts come from the refinement ladder.
        refinements (int): Number of solves, at least 3.
        base_substeps (int): Coarsest substep count. Default: 32.
        problem (str): ``heat`` or ``convected``. Default: ``convected``.
        nu (float): Viscosity. Default: 1.
        mu (float): Interval length. Default: 1.

    Returns:
        float: Observed order, ``inf`` when the finest error is at roundoff
        level (an exact integrator).
    """
    if refinements < 3:
        raise ValueError(
            f'at least 3 refinements are needed, got {refinements}')
    kind = scheme.kind if isinstance(scheme, StepScheme) else scheme
    endpoints = []
    for i in range(refinements):
        M = base_substeps * 2**i
        psi, u0, f = reference_problem(problem, M, nu=nu, mu=mu)
        u = solve_interval(psi, u0, f, nu, StepScheme(kind, M))
        endpoints.append(u.sample(M))

    if problem == 'heat':
        exact = heat_endpoint(u0, f, nu, mu)
        errors = [(e - exact).norm(0) for e in endpoints]
    else:
        errors = [(a - b).norm(0) for a, b in zip(endpoints, endpoints[1:])]
    scale = max(endpoints[-1].norm(0), 1.)
    if errors[-1] <= 1e-13 * scale:
        order = math.inf
    else:
        order = math.log2(errors[-2] / errors[-1])
    get_root_logger().info(
        f'{kind} on the {problem} problem: errors ' +
        ', '.join(f'{e:.3e}' for e in errors) + f', order {order:.3f}')
    return order
