from ..attractor import continuity_quotients, contraction_experiment
from ..fields import random_ball_state
from ..utils import CsvSeriesWriter
from .base import BaseExperiment
from .builder import EXPERIMENTS
from .check import select_ball


class _Prefixed(object):
    """Adapter writing ``prefix + row`` into a shared CSV writer."""

    def __init__(self, writer, *prefix):
        self.writer = writer
        self.prefix = prefix

    def write(self, *values):
        self.writer.write(*self.prefix, *values)


@EXPERIMENTS.register_module(name='contract')
class Contract(BaseExperiment):
    """Measure the contraction of ``U`` on the invariant ball.

    Random pairs on the ball boundary are iterated; after the burn-in every
    squared-distance ratio must stay below 1/2. The first pair is repeated at
    ``viscosity_factors`` times the selected viscosity and the fitted factor
    must not increase. Writes ``distances.csv`` with columns ``pair, nu, n,
    distance``.

    Args:
        scan (bool): Select the viscosity by scanning. Default: True.
        pairs (int): Number of random pairs. Default: 5.
        iterations (int): Iterates per pair. Default: 12.
        burn_in (int): Iterates ignored by the ratio test. Default: 2.
        viscosity_factors (tuple[float]): Multipliers of the monotonicity
            check. Default: (1, 2, 4).
        search_budget (int): Radii tried by the radius search.
        max_doublings (int): Cap of the viscosity scan.
        reading (str): Exponent reading of the contraction conditions.
    """

    def __init__(self,
                 scan=True,
                 pairs=5,
                 iterations=12,
                 burn_in=2,
                 viscosity_factors=(1, 2, 4),
                 search_budget=241,
                 max_doublings=20,
                 reading='e_nu'):
        super(Contract, self).__init__()
        self.scan = scan
        self.pairs = pairs
        self.iterations = iterations
        self.burn_in = burn_in
        self.viscosity_factors = tuple(viscosity_factors)
        self.search_budget = search_budget
        self.max_doublings = max_doublings
        self.reading = reading

    def run(self, ctx):
        p, ball, info = select_ball(ctx, self.scan, self.search_budget,
                                    self.max_doublings, self.reading)
        self.results.update(info)
        if not self.criterion('radius_found', ball is not None):
            return self.results, self.criteria
        predicted = info['contraction'][self.reading]['holds']

        generator = ctx.generator()
        states = [(random_ball_state(ctx.grid, p.mu, p.M, ball.R, ball.rho,
                                     p.alpha, generator),
                   random_ball_state(ctx.grid, p.mu, p.M, ball.R, ball.rho,
                                     p.alpha, generator))
                  for _ in range(self.pairs)]

        factors, max_ratio, passes = [], 0., True
        with CsvSeriesWriter(ctx.path('distances.csv'),
                             ('pair', 'nu', 'n', 'distance')) as writer:
            for i, (x1, x2) in enumerate(states):
                report = contraction_experiment(
                    x1, x2, self.iterations, p, self.burn_in,
                    _Prefixed(writer, i, p.nu))
                passes &= report.passes_half
                max_ratio = max([max_ratio] + report.ratios)
                factors.append(report.fitted_factor)
            scaled = []
            x1, x2 = states[0]
            for factor in self.viscosity_factors:
                q = p.replace(nu=factor * p.nu)
                report = contraction_experiment(
                    x1, x2, self.iterations, q, self.burn_in,
                    _Prefixed(writer, 0, q.nu))
                scaled.append(report.fitted_factor)

        continuity = continuity_quotients(states[0][0], p, seed=ctx.seed)
        self.results.update(
            fitted_factors=factors,
            max_squared_ratio=max_ratio,
            viscosity_factors=list(self.viscosity_factors),
            scaled_factors=scaled,
            lipschitz=continuity.lipschitz)
        self.criterion('passes_half', passes, asserted=predicted)
        monotone = all(b <= a for a, b in zip(scaled, scaled[1:]))
        self.criterion('factor_nonincreasing', monotone, asserted=predicted)
        return self.results, self.criteria
