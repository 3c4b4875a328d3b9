import os.path as osp
import tempfile

import mmcv
import pytest
import torch

from dnse.core import DomainError, GridMismatchError
from dnse.core.nonlinearity import (ExponentTriple, condition_triples,
                                    convect, convect_unprojected,
                                    estimate_trilinear_constant, trilinear)
from dnse.core.nonlinearity import trilinear_constant
from dnse.core.spectral import SpectralField, TorusGrid, random_field
from dnse.utils import CsvSeriesWriter


def _random_fields(num, N=8, seed=0):
    grid = TorusGrid(N=N)
    generator = torch.Generator().manual_seed(seed)
    return [random_field(grid, generator, decay=1.5) for _ in range(num)]


def test_convect_zero():
    u, v = _random_fields(2)
    zero = SpectralField.zeros(u.grid)
    assert convect(zero, v).is_zero()
    assert convect(u, zero).is_zero()


def test_convect_single_modes():
    grid = TorusGrid(N=8)
    a, b = 0.7, 1.3
    u = SpectralField.single_mode(grid, (1, 0, 0), (0, 1, 0), a)
    v = SpectralField.single_mode(grid, (0, 1, 0), (1, 0, 0), b)
    # (u . grad) v is carried by k = (1, +-1, 0) and the partners
    expected = torch.zeros(grid.shape, dtype=torch.complex128)
    plus = 1j * a * b * torch.tensor([0.5, -0.5, 0.], dtype=torch.complex128)
    minus = -1j * a * b * torch.tensor([0.5, 0.5, 0.],
                                       dtype=torch.complex128)
    expected[(slice(None), ) + grid.index((1, 1, 0))] = plus
    expected[(slice(None), ) + grid.index((-1, -1, 0))] = plus.conj()
    expected[(slice(None), ) + grid.index((1, -1, 0))] = minus
    expected[(slice(None), ) + grid.index((-1, 1, 0))] = minus.conj()
    result = convect(u, v)
    assert result.is_valid()
    assert torch.allclose(result.coeffs, expected, atol=1e-13)

    # a mode advected along itself produces nothing
    assert convect(u, u).norm(0) < 1e-14


def test_trilinear_identities():
    u, v, w = _random_fields(3, seed=1)
    scale = u.norm(1) * v.norm(1) * w.norm(1)
    assert abs(trilinear(u, v, w) + trilinear(u, w, v)) <= 1e-10 * scale
    assert abs(trilinear(u, v, v)) <= 1e-10 * u.norm(1) * v.norm(1)**2
    # the projection does not change the pairing with divergence-free w
    projected = float((convect(u, v).coeffs * w.coeffs.conj()).sum().real)
    assert projected == pytest.approx(trilinear(u, v, w), abs=1e-10 * scale)
    zero = SpectralField.zeros(u.grid)
    assert trilinear(zero, zero, zero) == 0


def test_convect_bilinear():
    u1, u2, v = _random_fields(3, seed=2)
    lhs = convect(2. * u1 + u2, v)
    rhs = 2. * convect(u1, v) + convect(u2, v)
    assert torch.allclose(lhs.coeffs, rhs.coeffs, rtol=1e-12, atol=1e-13)
    lhs = convect(v, 3. * u1 - u2)
    rhs = 3. * convect(v, u1) - convect(v, u2)
    assert torch.allclose(lhs.coeffs, rhs.coeffs, rtol=1e-12, atol=1e-13)


def test_convect_output():
    u, v = _random_fields(2, seed=3)
    b = convect(u, v)
    assert b.is_valid()
    assert b.reality_defect() == 0
    raw = convect_unprojected(u, v)
    assert raw.shape == u.grid.shape
    with pytest.raises(GridMismatchError):
        convect(u, SpectralField.zeros(TorusGrid(N=4)))


def test_exponent_triples():
    triples = condition_triples(1.)
    assert triples['ball'].as_tuple() == (2., 1., -1.)
    assert triples['contraction'].as_tuple() == (2., 0., 0.)
    assert all(t.is_admissible for t in triples.values())
    assert ExponentTriple(0.5, 0.5, 0.5).is_admissible
    assert not ExponentTriple(1., 1., -1.5).is_admissible
    assert not ExponentTriple(0.5, 0.5, 0.).is_admissible


def test_estimate_trilinear_constant():
    grid = TorusGrid(N=4)
    triple = ExponentTriple(2., 1., -1.)
    assert estimate_trilinear_constant(triple, 0).c == 0

    with pytest.raises(DomainError):
        estimate_trilinear_constant(ExponentTriple(0., 0., 0.), 10)
    with pytest.raises(ValueError):
        estimate_trilinear_constant(triple, -1)

    first = estimate_trilinear_constant(triple, 12, seed=3, grid=grid)
    second = estimate_trilinear_constant(triple, 12, seed=3, grid=grid)
    assert first.c == second.c
    assert first.samples == 12
    assert first.c > 0

    with tempfile.TemporaryDirectory() as tmpdir:
        log_file = osp.join(tmpdir, 'samples.csv')
        logged = estimate_trilinear_constant(
            triple, 12, seed=3, grid=grid, log_file=log_file)
        with open(log_file) as f:
            lines = f.read().splitlines()
    assert lines[0] == 'sample,ratio,running_max'
    assert len(lines) == 13
    ratios = [float(line.split(',')[1]) for line in lines[1:]]
    assert max(ratios) == logged.c
    assert float(lines[-1].split(',')[2]) == logged.c


@pytest.mark.parametrize('refine_fraction', [0., 1.])
def test_estimate_refine_fraction_limits(refine_fraction):
    grid = TorusGrid(N=4)
    triple = ExponentTriple(2., 1., -1.)
    # a fully refined budget still starts from one drawn pair
    out = estimate_trilinear_constant(
        triple, 3, grid=grid, refine_fraction=refine_fraction)
    assert out.samples == 3 and out.c > 0
    with pytest.raises(ValueError, match='refine_fraction'):
        estimate_trilinear_constant(triple, 3, refine_fraction=1.5)


def test_estimate_progress_bar(monkeypatch):
    bars = []

    class CountingBar(object):

        def __init__(self, task_num):
            self.task_num = task_num
            self.completed = 0
            bars.append(self)

        def update(self):
            self.completed += 1

    monkeypatch.setattr(mmcv, 'ProgressBar', CountingBar)
    grid = TorusGrid(N=4)
    triple = ExponentTriple(2., 1., -1.)
    shown = estimate_trilinear_constant(
        triple, 4, seed=1, grid=grid, show_progress=True)
    assert [(b.task_num, b.completed) for b in bars] == [(4, 4)]
    assert shown.c == estimate_trilinear_constant(
        triple, 4, seed=1, grid=grid).c


def test_estimate_log_closed_on_error(monkeypatch):
    closed = []
    close = CsvSeriesWriter.close

    def record_close(self):
        closed.append(self.filepath)
        close(self)

    def failing_ratio(u, v, triple):
        raise FloatingPointError('non-finite ratio')

    monkeypatch.setattr(CsvSeriesWriter, 'close', record_close)
    monkeypatch.setattr(trilinear_constant, '_ratio', failing_ratio)
    with tempfile.TemporaryDirectory() as tmpdir:
        log_file = osp.join(tmpdir, 'samples.csv')
        with pytest.raises(FloatingPointError):
            estimate_trilinear_constant(
                ExponentTriple(2., 1., -1.), 4, grid=TorusGrid(N=4),
                log_file=log_file)
        assert closed == [log_file]
