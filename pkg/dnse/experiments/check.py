from ..attractor import (BallSpec, ball_invariance_trial, check_cond1,
                         check_cond2, check_contraction_conditions,
                         continuous_invariance_trial, find_radius,
                         long_time_invariance_trial, rho_radius,
                         scan_viscosity)
from ..utils import CsvSeriesWriter, get_root_logger
from .base import BaseExperiment
from .builder import EXPERIMENTS


def select_ball(ctx, scan, search_budget, max_doublings, reading):
    """Choose the viscosity and the invariant ball.

    With ``scan`` the viscosity is doubled from ``params.nu`` until every
    condition holds; otherwise the configured viscosity is used as is.

    Returns:
        tuple: ``(params, BallSpec | None, dict)`` where the dict describes
        the conditions at the chosen viscosity.
    """
    p = ctx.params
    lam = ctx.grid.lambda1
    f_norm = p.f.norm(p.alpha - 1)
    c_ball = ctx.trilinear_constant('ball')
    c_contraction = ctx.trilinear_constant('contraction')
    info = dict(c_ball=c_ball, c_contraction=c_contraction, f_norm=f_norm)
    if scan:
        found = scan_viscosity(
            p.nu,
            lam,
            p.mu,
            c_ball,
            f_norm,
            c_contraction=c_contraction,
            search_budget=search_budget,
            max_doublings=max_doublings,
            reading=reading)
        if found is None:
            info.update(nu=None, R=None)
            return p, None, info
        p = p.replace(nu=found.nu)
        info.update(scan_doublings=found.doublings)
    R = find_radius(p.nu, lam, p.mu, c_ball, f_norm, search_budget)
    rho = rho_radius(p.nu, lam, p.mu, f_norm)
    info.update(nu=p.nu, R=R, rho=rho)
    if R is None:
        return p, None, info
    c_max = max(c_ball, c_contraction)
    info.update(
        cond1=check_cond1(p.nu, lam, p.mu, c_ball, R),
        cond2=check_cond2(p.nu, lam, p.mu, c_ball, R, f_norm),
        contraction={
            name: check_contraction_conditions(p.nu, lam, p.mu, c_max, R,
                                               rho, reading=name)
            for name in ('e_nu', 'e_nu_sq')
        })
    return p, BallSpec(R, rho, c_ball, lam), info


@EXPERIMENTS.register_module(name='check')
class Check(BaseExperiment):
    """Evaluate the invariant-ball conditions and test them by sampling.

    Writes ``ball_trials.csv`` with columns ``kind, trial, segment_ratio,
    endpoint_ratio``.

    Args:
        scan (bool): Double the viscosity until the conditions hold.
            Default: False.
        trials (int): Boundary states for the discrete map. Default: 20.
        continuous_trials (int): Histories for the continuous flow.
            Default: 10.
        long_time_intervals (int): Delay intervals of the long-time trial,
            0 to skip it. Default: 0.
        search_budget (int): Radii tried by the radius search.
        max_doublings (int): Cap of the viscosity scan.
        reading (str): Exponent reading of the contraction conditions.
        show_progress (bool): Show an ``mmcv.ProgressBar`` per trial set.
            Default: True.
    """

    def __init__(self,
                 scan=False,
                 trials=20,
                 continuous_trials=10,
                 long_time_intervals=0,
                 search_budget=241,
                 max_doublings=20,
                 reading='e_nu',
                 show_progress=True):
        super(Check, self).__init__()
        self.scan = scan
        self.trials = trials
        self.continuous_trials = continuous_trials
        self.long_time_intervals = long_time_intervals
        self.search_budget = search_budget
        self.max_doublings = max_doublings
        self.reading = reading
        self.show_progress = show_progress

    def run(self, ctx):
        p, ball, info = select_ball(ctx, self.scan, self.search_budget,
                                    self.max_doublings, self.reading)
        self.results.update(info)
        if not self.criterion('radius_found', ball is not None):
            return self.results, self.criteria

        get_root_logger().info(
            f'invariant ball at nu={p.nu:.6g}: R={ball.R:.6g}, '
            f'rho={ball.rho:.6g}, cond1={info["cond1"]}, '
            f'cond2={info["cond2"]}')
        reports = dict(
            discrete=ball_invariance_trial(
                ball,
                p,
                self.trials,
                seed=ctx.seed,
                show_progress=self.show_progress),
            continuous=continuous_invariance_trial(
                ball,
                p,
                self.continuous_trials,
                seed=ctx.seed + 1,
                show_progress=self.show_progress))
        if self.long_time_intervals > 0:
            reports['long_time'] = long_time_invariance_trial(
                ball,
                p,
                self.continuous_trials,
                seed=ctx.seed + 2,
                intervals=self.long_time_intervals,
                show_progress=self.show_progress)

        with CsvSeriesWriter(
                ctx.path('ball_trials.csv'),
            ('kind', 'trial', 'segment_ratio', 'endpoint_ratio')) as writer:
            for kind, report in reports.items():
                for i, row in enumerate(report.per_trial):
                    writer.write(kind, i, row['segment_ratio'],
                                 row['endpoint_ratio'])
        for kind, report in reports.items():
            self.results[kind] = dict(
                trials=report.trials,
                escapes=report.escapes,
                max_segment_ratio=report.max_segment_ratio,
                max_endpoint_ratio=report.max_endpoint_ratio,
                segment_limit=report.segment_limit)
            if report.max_bound_ratio is not None:
                self.results[kind]['max_bound_ratio'] = report.max_bound_ratio
            # boundary histories of B(R; rho) may leave it for small t
            self.criterion(
                f'{kind}_invariance',
                report.passed,
                asserted=kind != 'long_time')
        return self.results, self.criteria
