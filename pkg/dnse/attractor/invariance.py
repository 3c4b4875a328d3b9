import math
from dataclasses import dataclass, field

import mmcv
import torch

from ..fields import random_ball_state
from ..flows import HISTORY, continuous_orbit, discrete_step
from ..utils import get_root_logger
from .conditions import continuous_endpoint_bound


def _ratio(value, radius):
    if radius > 0:
        return value / radius
    return 0. if value == 0 else math.inf


@dataclass
class InvarianceReport:
    """Containment statistics of a ball-invariance experiment.

    A state is inside when ``segment_norm <= segment_limit * R`` and
    ``endpoint_norm <= rho``; the ratios below are taken against ``R`` and
    ``rho``.

    Attributes:
        trials (int): Number of initial states.
        escapes (int): Trials that left the target ball at least once.
        max_segment_ratio (float): Largest ``segment_norm / R``.
        max_endpoint_ratio (float): Largest ``endpoint_norm / rho``.
        segment_limit (float): Allowed segment ratio.
        checks (int): Number of states compared with the ball.
        max_bound_ratio (float, optional): Largest ``|u(t)|_a^2`` over the
            endpoint bound at the same time, for continuous trials.
    """

    trials: int
    escapes: int = 0
    max_segment_ratio: float = 0.
    max_endpoint_ratio: float = 0.
    segment_limit: float = 1.
    checks: int = 0
    max_bound_ratio: float = None
    per_trial: list = field(default_factory=list)

    @property
    def passed(self):
        return self.escapes == 0

    def update(self, segment_ratio, endpoint_ratio):
        """Fold one state into the statistics; return whether it is inside."""
        self.checks += 1
        self.max_segment_ratio = max(self.max_segment_ratio, segment_ratio)
        self.max_endpoint_ratio = max(self.max_endpoint_ratio, endpoint_ratio)
        # relative slack for roundoff at the ball boundary
        return (segment_ratio <= self.segment_limit * (1 + 1e-12)
                and endpoint_ratio <= 1 + 1e-12)


def _progress(num, show_progress):
    return mmcv.ProgressBar(num) if show_progress else None


def ball_invariance_trial(ball, p, trials=20, seed=0, show_progress=False):
    """Map random boundary states of ``B(R; rho)`` through ``U(1, .)``.

    Each output must satisfy ``|segment|^2 <= R^2 / 2`` and
    ``|endpoint| <= rho``.

    Args:
        ball (BallSpec): The ball.
        p (FlowParams): Equation constants.
        trials (int): Number of boundary states. Default: 20.
        seed (int): Seed of the state generator. Default: 0.
        show_progress (bool): Show an ``mmcv.ProgressBar``.

    Returns:
        InvarianceReport: With ``segment_limit = 1/sqrt(2)``.
    """
    generator = torch.Generator().manual_seed(seed)
    report = InvarianceReport(trials, segment_limit=1 / math.sqrt(2))
    prog_bar = _progress(trials, show_progress)
    for _ in range(trials):
        x = random_ball_state(p.grid, p.mu, p.M, ball.R, ball.rho, p.alpha,
                              generator)
        out = discrete_step(x, p)
        seg = _ratio(out.segment.l2_norm(1 + p.alpha), ball.R)
        end = _ratio(out.endpoint.norm(p.alpha), ball.rho)
        inside = report.update(seg, end)
        report.escapes += not inside
        report.per_trial.append(dict(segment_ratio=seg, endpoint_ratio=end))
        if prog_bar is not None:
            prog_bar.update()
    _log_report('discrete ball invariance', report)
    return report


def _orbit_trial(ball, p, trials, seed, radius_scale, intervals,
                 show_progress):
    generator = torch.Generator().manual_seed(seed)
    report = InvarianceReport(trials, segment_limit=1.)
    f_norm = p.f.norm(p.alpha - 1)
    bound_ratio = 0.
    prog_bar = _progress(trials, show_progress)
    for _ in range(trials):
        y = random_ball_state(
            p.grid,
            p.mu,
            p.M,
            radius_scale * ball.R,
            ball.rho,
            p.alpha,
            generator,
            orientation=HISTORY,
            consistent=True)
        escaped = False
        worst_seg = worst_end = 0.
        for t, state in continuous_orbit(intervals * p.mu, y, p):
            seg = _ratio(state.segment.l2_norm(1 + p.alpha), ball.R)
            end = _ratio(state.endpoint.norm(p.alpha), ball.rho)
            escaped |= not report.update(seg, end)
            worst_seg, worst_end = max(worst_seg, seg), max(worst_end, end)
            if t <= p.mu * (1 + 1e-12):
                bound = continuous_endpoint_bound(p.nu, p.grid.lambda1,
                                                  p.mu, ball.c, ball.R,
                                                  f_norm, t)
                bound_ratio = max(
                    bound_ratio,
                    _ratio(state.endpoint.norm(p.alpha)**2, bound))
        report.escapes += escaped
        report.per_trial.append(
            dict(segment_ratio=worst_seg, endpoint_ratio=worst_end))
        if prog_bar is not None:
            prog_bar.update()
    report.max_bound_ratio = bound_ratio
    return report


def continuous_invariance_trial(ball, p, trials=10, seed=0,
                                show_progress=False):
    """Flow histories from the boundary of ``B(R/sqrt(2); rho)`` with
    ``S(t, .)`` and check they stay in ``B(R; rho)`` at every lattice
    ``t`` in ``[0, mu]``.

    Histories end in their endpoint, as histories of solutions do. The
    largest ``|u(t)|_a^2`` over :func:`continuous_endpoint_bound` at the
    same ``t`` is reported as ``max_bound_ratio``.
    """
    report = _orbit_trial(ball, p, trials, seed, 1 / math.sqrt(2), 1,
                          show_progress)
    _log_report('continuous ball invariance', report)
    return report


def long_time_invariance_trial(ball, p, trials=10, seed=0, intervals=3,
                               show_progress=False):
    """Flow histories from the boundary of ``B(R; rho)`` over ``intervals``
    delay intervals and check they stay in ``B(R; rho)`` at every lattice
    time."""
    report = _orbit_trial(ball, p, trials, seed, 1., intervals,
                          show_progress)
    _log_report(f'long-time ball invariance ({intervals} intervals)', report)
    return report


def _log_report(name, report):
    logger = get_root_logger()
    msg = (f'{name}: {report.escapes}/{report.trials} escapes, max segment '
           f'ratio {report.max_segment_ratio:.6f} (limit '
           f'{report.segment_limit:.6f}), max endpoint ratio '
           f'{report.max_endpoint_ratio:.6f}')
    if report.passed:
        logger.info(msg)
    else:
        logger.warning(msg)
