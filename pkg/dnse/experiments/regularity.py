from ..attractor import regularity_diagnostics
from ..flows import solve_trajectory
from ..utils import CsvSeriesWriter
from .base import BaseExperiment
from .builder import EXPERIMENTS


@EXPERIMENTS.register_module(name='regularity')
class Regularity(BaseExperiment):
    """Smoothing and Holder diagnostics of the solution from the history.

    Writes ``regularity.csv`` with columns ``t, norm_alpha,
    norm_1_plus_alpha, norm_2_plus_alpha`` for every lattice time.

    Args:
        intervals (int): Delay intervals solved. Default: 2.
        epsilon_fraction (float): Window start as a fraction of ``mu``.
            Default: 0.25.
    """

    def __init__(self, intervals=2, epsilon_fraction=0.25):
        super(Regularity, self).__init__()
        assert intervals >= 1, 'regularity needs at least one interval'
        assert epsilon_fraction > 0, 'epsilon_fraction must be positive'
        self.intervals = intervals
        self.epsilon_fraction = epsilon_fraction

    def run(self, ctx):
        p = ctx.params
        traj = solve_trajectory(self.intervals, ctx.initial, p)
        c = ctx.trilinear_constant('ball')
        report = regularity_diagnostics(
            traj, p, self.epsilon_fraction * p.mu, c=c)

        norms = [traj.sample_norms(s + p.alpha) for s in (0, 1, 2)]
        with CsvSeriesWriter(
                ctx.path('regularity.csv'),
            ('t', 'norm_alpha', 'norm_1_plus_alpha',
             'norm_2_plus_alpha')) as writer:
            for j, t in enumerate(traj.times().tolist()):
                writer.write(t, *(float(n[j]) for n in norms))

        self.results.update(
            c_ball=c,
            epsilon=self.epsilon_fraction * p.mu,
            weighted_sup=report.weighted_sup,
            weighted_bound=report.weighted_bound,
            weighted_ratio=report.weighted_ratio,
            sup_norm_sq=report.sup_norm_sq,
            integral_sq=report.integral_sq,
            holder_max=report.holder_max)
        self.criterion('finite', report.finite)
        self.criterion('smoothing_bound', report.bound_holds, asserted=False)
        return self.results, self.criteria
