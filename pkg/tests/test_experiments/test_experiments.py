import math
import os.path as osp
import tempfile

import mmcv
import pytest
import torch

from dnse.apis import parse_config
from dnse.core.spectral import load_snapshot
from dnse.experiments import (EXPERIMENTS, ExperimentContext,
                              build_experiment, experiment_options)

BASE = """\
grid = dict(N=4)
params = dict(nu={nu}, mu={mu}, M={M})
trilinear = dict(c={c})
tolerances = dict(fixpoint=1e-10, max_iter=200)
"""

# |f|_0 = 1
FORCING = ("forcing = dict(type='SingleMode', k=(1, 0, 0), "
           'polarization=(0, 1, 0), amplitude=0.7071067811865476)\n')

RANDOM_INITIAL = """\
initial = dict(
    segment=dict(type='Random', seed=1, norm=0.3, s=2.),
    endpoint=dict(type='Random', seed=2, norm=0.3, s=1.))
"""


def _run(tmpdir, experiment, nu=1., mu=0.1, M=8, c=1., extra=''):
    text = BASE.format(nu=nu, mu=mu, M=M, c=c) + extra + \
        f'experiment = {experiment!r}\n'
    cfg = parse_config(text)
    ctx = ExperimentContext(cfg, tmpdir)
    return build_experiment(cfg.experiment).run(ctx)


def _lines(tmpdir, name):
    with open(osp.join(tmpdir, name)) as fh:
        return fh.read().splitlines()


def test_registry():
    for name in ('simulate', 'check', 'contract', 'fixpoint', 'estimate-c',
                 'regularity'):
        assert name in EXPERIMENTS
    assert experiment_options('simulate') == dict(
        intervals=4, energy_check=True)
    assert experiment_options('fixpoint')['stokes_tolerance'] == 0.05
    with pytest.raises(KeyError):
        experiment_options('train')


def test_context():
    text = BASE.format(nu=1., mu=0.1, M=8, c=None).replace(
        'dict(c=None)', 'dict(c=None, budget=4, seed=0)')
    cfg = parse_config(text + FORCING + "experiment = 'simulate'\n"
                       'save_snapshots = True\n')
    with tempfile.TemporaryDirectory() as tmpdir:
        ctx = ExperimentContext(cfg, tmpdir)
        assert ctx.grid.N == 4 and ctx.params.M == 8
        assert ctx.params.f.norm(0.) == pytest.approx(1.)
        assert ctx.initial.orientation == 'history'
        assert ctx.initial.segment.M == 8

        c = ctx.trilinear_constant('ball')
        assert c > 0 and ctx.trilinear_constant('ball') == c
        assert torch.equal(
            torch.rand(3, generator=ctx.generator(1)),
            torch.rand(3, generator=ctx.generator(1)))

        filepath = ctx.save_field(ctx.params.f, 'f.dns')
        assert torch.equal(load_snapshot(filepath).coeffs,
                           ctx.params.f.coeffs)


def test_simulate():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir,
            dict(type='simulate', intervals=2),
            extra=FORCING + RANDOM_INITIAL)
        assert criteria['finite']['passed']
        assert not criteria['energy_inequality']['asserted']
        assert results['final_time'] == pytest.approx(0.2)
        assert math.isfinite(results['energy_ratio'])
        assert len(_lines(tmpdir, 'trajectory.csv')) == 1 + 1 + 2 * 8
        assert _lines(tmpdir, 'spectrum.csv')[0] == 'shell,energy'


def test_check():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir,
            dict(type='check', trials=2, continuous_trials=1),
            nu=100.,
            M=32,
            extra=FORCING)
        assert results['R'] == pytest.approx(10**-1.15)
        assert results['cond1'] and results['cond2']
        assert results['contraction']['e_nu']['holds']
        for name in ('radius_found', 'discrete_invariance',
                     'continuous_invariance'):
            assert criteria[name]['passed'], name
        assert results['discrete']['escapes'] == 0
        lines = _lines(tmpdir, 'ball_trials.csv')
        assert lines[0] == 'kind,trial,segment_ratio,endpoint_ratio'
        assert len(lines) == 1 + 2 + 1


def test_check_scan():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir,
            dict(type='check', scan=True, trials=1, continuous_trials=1),
            nu=1.,
            M=32,
            extra=FORCING)
        assert results['nu'] == 16.
        assert results['scan_doublings'] == 4
        assert criteria['radius_found']['passed']
        assert criteria['discrete_invariance']['passed']


def test_check_without_radius():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir, dict(type='check', trials=1), nu=1., extra=FORCING)
        assert results['R'] is None
        assert not criteria['radius_found']['passed']
        assert criteria['radius_found']['asserted']


def test_contract():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir,
            dict(
                type='contract',
                scan=False,
                pairs=1,
                iterations=4,
                viscosity_factors=(1, 2)),
            nu=100.,
            extra=FORCING)
        assert criteria['radius_found']['passed']
        assert criteria['passes_half']['asserted']
        assert criteria['passes_half']['passed']
        assert criteria['factor_nonincreasing']['passed']
        assert len(results['fitted_factors']) == 1
        assert len(results['scaled_factors']) == 2
        assert math.isfinite(results['lipschitz'])
        lines = _lines(tmpdir, 'distances.csv')
        assert lines[0] == 'pair,nu,n,distance'
        # one pair plus two viscosities, five iterates each
        assert len(lines) == 1 + 3 * 5


def test_fixpoint():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir,
            dict(type='fixpoint', start_radius=0.1, stokes_check=True),
            nu=4.,
            mu=1.,
            extra=FORCING)
        for name in ('converged_0', 'converged_1', 'residual_0',
                     'residual_1', 'unique_limit', 'continuous_fixed',
                     'stokes_steady_state'):
            assert criteria[name]['passed'], name
        assert criteria['stokes_steady_state']['asserted']
        assert results['stokes_relative_error'] < 1e-6
        assert results['spread'] <= 1e-9
        rows = _lines(tmpdir, 'fixpoint_1.csv')
        assert rows[0] == 'n,endpoint_norm,segment_norm,state_norm'
        assert len(rows) == results['iterations'][1] + 2


def test_fixpoint_unforced():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir, dict(type='fixpoint', start_radius=0.1), nu=4., mu=1.)
        assert criteria['unique_limit']['passed']
        assert 'stokes_steady_state' not in criteria
        assert results['limit_endpoint_norm'] < 1e-9


def test_estimate_c():
    with tempfile.TemporaryDirectory() as tmpdir:
        text = BASE.format(nu=1., mu=0.1, M=8, c=None).replace(
            'dict(c=None)', 'dict(c=None, budget=6, seed=0, safety=2.)') + \
            "experiment = dict(type='estimate-c', validation=4)\n"
        cfg = parse_config(text)
        ctx = ExperimentContext(cfg, tmpdir)
        results, criteria = build_experiment(cfg.experiment).run(ctx)
        assert set(criteria) == {'ball_validated', 'contraction_validated'}
        assert results['ball']['triple'] == [2., 1., -1.]
        assert results['contraction']['triple'] == [2., 0., 0.]
        for which in ('ball', 'contraction'):
            assert results[which]['safe'] == pytest.approx(
                2 * results[which]['estimate'])
            assert results[which]['estimate'] > 0
            lines = _lines(tmpdir, f'trilinear_{which}.csv')
            assert lines[0] == 'sample,ratio,running_max'


def test_regularity():
    with tempfile.TemporaryDirectory() as tmpdir:
        results, criteria = _run(
            tmpdir,
            dict(type='regularity', intervals=2),
            extra=FORCING + RANDOM_INITIAL)
        assert criteria['finite']['passed']
        assert not criteria['smoothing_bound']['asserted']
        assert results['epsilon'] == pytest.approx(0.025)
        assert results['holder_max'] > 0
        lines = _lines(tmpdir, 'regularity.csv')
        assert lines[0] == ('t,norm_alpha,norm_1_plus_alpha,'
                            'norm_2_plus_alpha')
        assert len(lines) == 1 + 2 * 8 + 1


class CountingBar(object):
    bars = []

    def __init__(self, task_num):
        self.task_num = task_num
        self.completed = 0
        self.bars.append(self)

    def update(self):
        self.completed += 1


def test_progress_bars(monkeypatch):
    monkeypatch.setattr(mmcv, 'ProgressBar', CountingBar)
    monkeypatch.setattr(CountingBar, 'bars', [])
    with tempfile.TemporaryDirectory() as tmpdir:
        _run(
            tmpdir,
            dict(type='check', trials=2, continuous_trials=1),
            nu=100.,
            M=32,
            extra=FORCING)
    assert [(b.task_num, b.completed) for b in CountingBar.bars] == \
        [(2, 2), (1, 1)]

    monkeypatch.setattr(CountingBar, 'bars', [])
    with tempfile.TemporaryDirectory() as tmpdir:
        text = BASE.format(nu=1., mu=0.1, M=8, c=None).replace(
            'dict(c=None)', 'dict(c=None, budget=3, seed=0)') + \
            "experiment = dict(type='estimate-c', validation=1)\n"
        cfg = parse_config(text)
        build_experiment(cfg.experiment).run(ExperimentContext(cfg, tmpdir))
    # one bar per triple
    assert [(b.task_num, b.completed) for b in CountingBar.bars] == \
        [(3, 3), (3, 3)]

    monkeypatch.setattr(CountingBar, 'bars', [])
    with tempfile.TemporaryDirectory() as tmpdir:
        _run(
            tmpdir,
            dict(
                type='check',
                trials=1,
                continuous_trials=1,
                show_progress=False),
            nu=100.,
            M=32,
            extra=FORCING)
    assert CountingBar.bars == []
