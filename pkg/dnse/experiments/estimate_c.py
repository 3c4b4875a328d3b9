import torch

from ..core.nonlinearity import (condition_triples, convect,
                                 estimate_trilinear_constant)
from ..core.spectral import random_field, sobolev_norm
from .base import BaseExperiment
from .builder import EXPERIMENTS


@EXPERIMENTS.register_module(name='estimate-c')
class EstimateC(BaseExperiment):
    """Estimate both trilinear constants and validate the safe values.

    Each estimate writes ``trilinear_<which>.csv`` (``sample, ratio,
    running_max``). The constant times ``trilinear.safety`` must then bound
    the ratio of every pair in a fresh validation draw.

    Args:
        validation (int): Fresh pairs per triple. Default: 100.
        decay_range (tuple[float]): Spectral decay of the validation pairs.
            Default: (0.5, 4).
        show_progress (bool): Show an ``mmcv.ProgressBar`` over the
            samples of each estimate. Default: True.
    """

    def __init__(self,
                 validation=100,
                 decay_range=(0.5, 4.),
                 show_progress=True):
        super(EstimateC, self).__init__()
        self.validation = validation
        self.decay_range = tuple(decay_range)
        self.show_progress = show_progress

    def run(self, ctx):
        tri = ctx.cfg.trilinear
        seed = ctx.seed if tri.seed is None else tri.seed
        triples = condition_triples(ctx.params.alpha)
        generator = ctx.generator(offset=7919)
        lo, hi = self.decay_range

        def draw():
            return lo + (hi - lo) * float(torch.rand(1, generator=generator))

        for which, triple in triples.items():
            estimate = estimate_trilinear_constant(
                triple,
                tri.budget,
                seed=seed,
                grid=ctx.grid,
                log_file=ctx.path(f'trilinear_{which}.csv'),
                show_progress=self.show_progress)
            c_safe = tri.safety * estimate.c
            worst, violations = 0., 0
            for _ in range(self.validation):
                u, v = (random_field(ctx.grid, generator, decay=draw())
                        for _ in range(2))
                lhs = sobolev_norm(convect(u, v), -triple.s3)
                rhs = sobolev_norm(u, triple.s1) * sobolev_norm(
                    v, triple.s2 + 1)
                if rhs > 0:
                    worst = max(worst, lhs / rhs)
                    violations += int(lhs > c_safe * rhs)
            self.results[which] = dict(
                triple=list(triple.as_tuple()),
                estimate=estimate.c,
                safe=c_safe,
                samples=estimate.samples,
                validation_max=worst,
                violations=violations)
            self.criterion(f'{which}_validated', violations == 0)
        return self.results, self.criteria
