from dataclasses import dataclass

import mmcv
import torch

from ...utils import CsvSeriesWriter, get_root_logger
from ..errors import DomainError
from ..spectral import TorusGrid, random_field, sobolev_norm
from .convection import convect


@dataclass(frozen=True)
class ExponentTriple:
    """Sobolev exponents ``(s1, s2, s3)`` of the trilinear estimate.

    The estimate reads ``|b(u, v, w)| <= c |u|_{s1} |v|_{s2+1} |w|_{s3}``.
    """

    s1: float
    s2: float
    s3: float

    @property
    def is_admissible(self):
        s = (self.s1, self.s2, self.s3)
        pairs = (s[0] + s[1], s[0] + s[2], s[1] + s[2])
        total = sum(s)
        return ((all(p >= 0 for p in pairs) and total > 1.5)
                or (all(p > 0 for p in pairs) and total >= 1.5))

    def as_tuple(self):
        return (self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class TrilinearConstant:
    """Lower-bound estimate of the sharp trilinear constant.

    Attributes:
        triple (ExponentTriple): Exponents the constant belongs to.
        c (float): Largest sampled ratio.
        samples (int): Number of samples evaluated.
    """

    triple: ExponentTriple
    c: float
    samples: int = 0


def condition_triples(alpha):
    """Exponent triples entering the invariant-ball and contraction checks.

    Returns:
        dict: ``ball`` is ``(1+a, a, -a)``; ``contraction`` is
        ``(1+a, a-1, 1-a)``.
    """
    return dict(
        ball=ExponentTriple(1 + alpha, alpha, -alpha),
        contraction=ExponentTriple(1 + alpha, alpha - 1, 1 - alpha))


def _ratio(u, v, triple):
    # sup over w of |b(u,v,w)| / |w|_{s3} is |B(u,v)|_{-s3}
    denom = sobolev_norm(u, triple.s1) * sobolev_norm(v, triple.s2 + 1)
    if denom == 0:
        return 0.
    return sobolev_norm(convect(u, v), -triple.s3) / denom


def estimate_trilinear_constant(triple,
                                budget,
                                seed=0,
                                grid=None,
                                decay_range=(0.5, 4.),
                                refine_fraction=0.5,
                                log_file=None,
                                show_progress=False):
    """Estimate the constant of the trilinear estimate from below.

    Half of the budget (by default) samples random pairs ``(u, v)`` whose
    spectra decay like ``|zeta|^-gamma`` with gamma drawn from
    ``decay_range``; the rest hill-climbs from the best pair with shrinking
    random perturbations. For each pair the test field is the maximizer
    ``w = A^(-s3) B(u, v)``, so a sample returns
    ``|B(u, v)|_{-s3} / (|u|_{s1} |v|_{s2+1})``.

    Args:
        triple (ExponentTriple): Exponents, must be admissible.
        budget (int): Number of samples. ``0`` returns ``c = 0``.
        seed (int): Seed of the private generator. Default: 0.
        grid (TorusGrid, optional): Sampling lattice.
            Default: ``L=2*pi, N=16``.
        decay_range (tuple[float]): Range of the spectral decay exponent.
        refine_fraction (float): Share of the budget spent on refinement.
            At least one sample is always random.
        log_file (str, optional): CSV with columns ``sample, ratio,
            running_max``.
        show_progress (bool): Show an ``mmcv.ProgressBar`` over the
            samples. Default: False.

    Returns:
        TrilinearConstant: The best ratio found.
    """
    if not triple.is_admissible:
        raise DomainError(
            f'exponent triple {triple.as_tuple()} is outside the admissible '
            'region of the trilinear estimate')
    if budget < 0:
        raise ValueError(f'budget must be nonnegative, got {budget}')
    if not 0 <= refine_fraction <= 1:
        raise ValueError(
            f'refine_fraction must lie in [0, 1], got {refine_fraction}')
    if budget == 0:
        return TrilinearConstant(triple, 0., 0)

    grid = TorusGrid() if grid is None else grid
    prog_bar = mmcv.ProgressBar(budget) if show_progress else None
    if log_file is None:
        best = _search(triple, budget, seed, grid, decay_range,
                       refine_fraction, None, prog_bar)
    else:
        with CsvSeriesWriter(log_file,
                             ('sample', 'ratio', 'running_max')) as writer:
            best = _search(triple, budget, seed, grid, decay_range,
                           refine_fraction, writer, prog_bar)
    get_root_logger().info(
        f'trilinear constant for {triple.as_tuple()}: c >= {best:.6e} '
        f'({budget} samples, seed {seed})')
    return TrilinearConstant(triple, best, budget)


def _search(triple, budget, seed, grid, decay_range, refine_fraction, writer,
            prog_bar):
    generator = torch.Generator().manual_seed(seed)
    # refinement starts from a drawn pair
    num_random = max(budget - int(budget * refine_fraction), 1)
    lo, hi = decay_range

    def draw_decay():
        return lo + (hi - lo) * float(torch.rand(1, generator=generator))

    def record(i, ratio):
        if writer is not None:
            writer.write(i, ratio, best)
        if prog_bar is not None:
            prog_bar.update()

    best, best_pair = 0., None
    for i in range(num_random):
        u = random_field(grid, generator, decay=draw_decay())
        v = random_field(grid, generator, decay=draw_decay())
        ratio = _ratio(u, v, triple)
        if best_pair is None or ratio > best:
            best, best_pair = ratio, (u, v)
        record(i, ratio)

    scale = 0.5
    for i in range(num_random, budget):
        u0, v0 = best_pair
        du = random_field(
            grid, generator, decay=draw_decay(),
            norm=scale * sobolev_norm(u0, triple.s1), s=triple.s1)
        dv = random_field(
            grid, generator, decay=draw_decay(),
            norm=scale * sobolev_norm(v0, triple.s2 + 1), s=triple.s2 + 1)
        u, v = u0 + du, v0 + dv
        ratio = _ratio(u, v, triple)
        if ratio > best:
            best, best_pair = ratio, (u, v)
        else:
            scale = max(0.9 * scale, 1e-3)
        record(i, ratio)
    return best
