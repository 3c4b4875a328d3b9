from ..attractor import (continuous_attractor, find_attractor,
                         stokes_steady_state)
from ..fields import random_ball_state
from ..flows import TrajectoryRecorder, correspond, state_distance
from .base import BaseExperiment
from .builder import EXPERIMENTS


@EXPERIMENTS.register_module(name='fixpoint')
class Fixpoint(BaseExperiment):
    """Locate the single-point attractor of ``U`` from two starts.

    The first start is the configured initial state, the second a random
    state of norm ``start_radius``. Each run writes ``fixpoint_<i>.csv``
    with the columns of the trajectory recorder.

    Args:
        start_radius (float): Segment and endpoint norm of the random start.
            Default: 1.
        stokes_check (bool): Assert that the limit endpoint is within
            ``stokes_tolerance`` of the steady Stokes flow. Default: False.
        stokes_tolerance (float): Relative tolerance. Default: 0.05.
    """

    def __init__(self,
                 start_radius=1.,
                 stokes_check=False,
                 stokes_tolerance=0.05):
        super(Fixpoint, self).__init__()
        self.start_radius = start_radius
        self.stokes_check = stokes_check
        self.stokes_tolerance = stokes_tolerance

    def run(self, ctx):
        p = ctx.params
        tol = ctx.tolerances.fixpoint
        max_iter = ctx.tolerances.max_iter
        starts = [
            correspond(ctx.initial),
            random_ball_state(ctx.grid, p.mu, p.M, self.start_radius,
                              self.start_radius, p.alpha, ctx.generator())
        ]
        runs = []
        for i, x0 in enumerate(starts):
            with TrajectoryRecorder(
                    ctx.path(f'fixpoint_{i}.csv'), alpha=p.alpha) as rec:
                runs.append(find_attractor(x0, p, tol, max_iter, rec))

        limit = runs[0].state
        spread = state_distance(runs[0].state, runs[1].state, p.alpha)
        y, continuous_residual = continuous_attractor(runs[0], p)
        ctx.save_field(limit.endpoint, 'attractor_endpoint.dns')
        self.results.update(
            iterations=[r.iterations for r in runs],
            residuals=[r.residual for r in runs],
            spread=spread,
            continuous_residual=continuous_residual,
            limit_endpoint_norm=limit.endpoint.norm(p.alpha),
            limit_segment_norm=limit.segment.l2_norm(1 + p.alpha))
        for i, r in enumerate(runs):
            self.criterion(f'converged_{i}', r.converged)
            self.criterion(f'residual_{i}', r.residual <= 2 * tol)
        self.criterion('unique_limit', spread <= 10 * tol)
        self.criterion('continuous_fixed', continuous_residual <= 2 * tol)

        stokes = stokes_steady_state(p.f, p.nu)
        scale = stokes.norm(p.alpha)
        if scale > 0:
            error = (limit.endpoint - stokes).norm(p.alpha) / scale
            self.results['stokes_relative_error'] = error
            self.criterion(
                'stokes_steady_state',
                error <= self.stokes_tolerance,
                asserted=self.stokes_check)
        return self.results, self.criteria
