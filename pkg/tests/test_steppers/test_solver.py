import math
import os.path as osp
import tempfile

import pytest
import torch

from dnse.core import IntegrationError
from dnse.core.spectral import SpectralField, TorusGrid, random_field
from dnse.fields import random_segment
from dnse.steppers import (Segment, StepScheme, heat_endpoint, integrate,
                           reference_problem, solve_interval)


def _random_psi(grid, mu, M, seed=0, scale=0.3):
    generator = torch.Generator().manual_seed(seed)
    return random_segment(grid, mu, M, generator) * scale


def test_step_scheme():
    scheme = StepScheme()
    assert scheme.kind == 'etd1' and scheme.substeps == 64
    assert StepScheme('imex_euler', 8).substeps == 8
    with pytest.raises(KeyError):
        StepScheme('rk4', 8)
    with pytest.raises(ValueError):
        StepScheme('etd1', 0)


def test_segment():
    grid = TorusGrid(N=4)
    u = SpectralField.single_mode(grid, (1, 0, 0), (0, 1, 0))
    seg = Segment.constant(u, 0.1, 8)
    assert seg.M == 8
    assert seg.dt == pytest.approx(0.0125)
    assert seg.l2_norm(1.) == pytest.approx(math.sqrt(0.1 * 2))
    assert float(seg.offsets()[-1]) == pytest.approx(0.1)
    assert float(seg.trapezoid_weights().sum()) == pytest.approx(0.1)
    assert seg.is_valid()
    assert (seg - seg).equal(Segment.zeros(grid, 0.1, 8))
    assert (2. * seg).l2_norm(1.) == pytest.approx(2 * seg.l2_norm(1.))
    with pytest.raises(ValueError):
        seg + Segment.zeros(grid, 0.1, 4)
    with pytest.raises(ValueError):
        Segment.zeros(grid, 0., 4)


@pytest.mark.parametrize('kind', ['etd1', 'imex_euler'])
def test_solve_interval_zero(kind):
    grid = TorusGrid(N=8)
    psi = _random_psi(grid, 0.1, 8)
    zero = SpectralField.zeros(grid)
    u = solve_interval(psi, zero, zero, 1., StepScheme(kind, 8))
    assert u.M == 8
    assert u.equal(Segment.zeros(grid, 0.1, 8))


def test_heat_decay_oracle():
    grid = TorusGrid(N=8)
    u0 = SpectralField.single_mode(grid, (1, 0, 0), (0, 1, 0))
    zero = SpectralField.zeros(grid)
    psi = Segment.zeros(grid, 1., 64)
    exact = math.exp(-1.) * u0.norm(1.)

    u = solve_interval(psi, u0, zero, 1., StepScheme('etd1', 64))
    assert u.sample(64).norm(1.) == pytest.approx(exact, rel=1e-12)

    u = solve_interval(psi, u0, zero, 1., StepScheme('imex_euler', 64))
    error = abs(u.sample(64).norm(1.) - exact) / exact
    assert 0 < error <= 1. / 64


def test_forced_oracle():
    grid = TorusGrid(N=8)
    f = SpectralField.single_mode(grid, (0, 0, 1), (1, 0, 0))
    zero = SpectralField.zeros(grid)
    psi = Segment.zeros(grid, 0.5, 16)
    u = solve_interval(psi, zero, f, 1., StepScheme('etd1', 16))
    expected = f * (1 - math.exp(-0.5))
    assert torch.allclose(u.sample(16).coeffs, expected.coeffs, atol=1e-14)

    psi, u0, f = reference_problem('heat', 16, nu=2., mu=0.3)
    u = solve_interval(psi, u0, f, 2., StepScheme('etd1', 16))
    exact = heat_endpoint(u0, f, 2., 0.3)
    assert (u.sample(16) - exact).norm(0) <= 1e-12 * exact.norm(0)


def test_integrate_prefix_and_checks():
    grid = TorusGrid(N=8)
    psi = _random_psi(grid, 0.1, 8, seed=1)
    generator = torch.Generator().manual_seed(2)
    u0 = random_field(grid, generator)
    f = random_field(grid, generator)
    scheme = StepScheme('etd1', 8)
    full = integrate(psi, u0, f, 1., scheme)
    assert full.shape == (9, ) + grid.shape
    assert torch.equal(full[0], u0.coeffs)
    assert torch.equal(integrate(psi, u0, f, 1., scheme, num_steps=5),
                       full[:6])
    assert torch.equal(
        integrate(psi, u0, f, 1., scheme, num_steps=0), full[:1])
    assert Segment(grid, 0.1, full).is_valid()

    with pytest.raises(ValueError):
        integrate(psi, u0, f, 0., scheme)
    with pytest.raises(ValueError):
        integrate(psi, u0, f, 1., StepScheme('etd1', 4))

    broken = SpectralField.single_mode(grid, (1, 0, 0), (0, 1, 0)) * math.inf
    with pytest.raises(IntegrationError) as excinfo:
        integrate(Segment.zeros(grid, 0.1, 8), broken, f, 1., scheme)
    assert excinfo.value.step == 0


def test_superposition():
    grid = TorusGrid(N=8)
    psi = _random_psi(grid, 0.1, 8, seed=3)
    generator = torch.Generator().manual_seed(4)
    a = random_field(grid, generator)
    b = random_field(grid, generator)
    zero = SpectralField.zeros(grid)
    scheme = StepScheme('etd1', 8)
    ua = solve_interval(psi, a, zero, 1., scheme)
    ub = solve_interval(psi, b, zero, 1., scheme)
    uab = solve_interval(psi, a + b, zero, 1., scheme)
    assert torch.allclose(uab.coeffs, ua.coeffs + ub.coeffs, rtol=1e-10,
                          atol=1e-14)


def test_trace_file():
    grid = TorusGrid(N=4)
    psi, u0, f = reference_problem('convected', 4, mu=0.1, N=4)
    with tempfile.TemporaryDirectory() as tmpdir:
        trace_file = osp.join(tmpdir, 'trace.csv')
        u = solve_interval(
            psi, u0, f, 1., StepScheme('etd1', 4), trace_file=trace_file)
        with open(trace_file) as fh:
            lines = fh.read().splitlines()
    assert u.grid == grid
    assert lines[0] == 't,norm_alpha,norm_1_plus_alpha'
    assert len(lines) == 6
    assert float(lines[-1].split(',')[1]) == u.sample(4).norm(1.)
