import math
from dataclasses import dataclass, field

import numpy as np
import torch

from ..fields import random_ball_state
from ..flows import discrete_flow, discrete_step, state_distance, state_norm
from ..utils import get_root_logger

UNDERFLOW = 1e-14


@dataclass
class ContractionReport:
    """Distances between two iterated trajectories of ``U``.

    Attributes:
        distances (list[float]): ``state_norm`` distance per iterate, the
            initial pair included.
        fitted_factor (float): Least-squares geometric factor of the squared
            distances.
        passes_half (bool): All squared-distance ratios after the burn-in
            are at most 1/2.
        ratios (list[float]): Successive squared-distance ratios inside the
            fit window.
        burn_in (int): Iterates skipped before the ratios are judged.
    """

    distances: list
    fitted_factor: float
    passes_half: bool
    ratios: list = field(default_factory=list)
    burn_in: int = 2


def fit_geometric_factor(distances, burn_in=2, underflow=UNDERFLOW):
    """Fit ``d_n^2 ~ C q^n`` on the iterates past the burn-in.

    The window stops at the first distance below ``underflow``.

    Returns:
        tuple[float, list[float]]: ``q`` and the successive ratios
        ``d_{n+1}^2 / d_n^2`` inside the window.
    """
    window = []
    for n, d in enumerate(distances):
        if d < underflow:
            break
        if n >= burn_in:
            window.append((n, d))
    ratios = [(b / a)**2 for (_, a), (_, b) in zip(window, window[1:])]
    if len(window) < 2:
        return 0., ratios
    n, d = np.array(window).T
    slope = np.polyfit(n, np.log(d**2), 1)[0]
    return float(np.exp(slope)), ratios


def contraction_experiment(x1, x2, n, p, burn_in=2, recorder=None):
    """Iterate ``U`` from two states and measure how fast they merge.

    Args:
        x1, x2 (FlowState): Forward states, ideally in the invariant ball.
        n (int): Number of iterates.
        p (FlowParams): Equation constants.
        burn_in (int): Iterates ignored by the half-ratio test. Default: 2.
        recorder (CsvSeriesWriter, optional): Receives ``n, distance``.

    Returns:
        ContractionReport: The measured distances and the fitted factor.
    """
    distances = [state_distance(x1, x2, p.alpha)]
    if recorder is not None:
        recorder.write(0, distances[0])
    for k in range(n):
        x1, x2 = discrete_step(x1, p), discrete_step(x2, p)
        distances.append(state_distance(x1, x2, p.alpha))
        if recorder is not None:
            recorder.write(k + 1, distances[-1])
    factor, ratios = fit_geometric_factor(distances, burn_in)
    passes = all(r <= 0.5 for r in ratios)
    get_root_logger().info(
        f'contraction over {n} iterates: fitted factor {factor:.4e}, '
        f'max ratio {max(ratios, default=0.):.4e}, passes 1/2: {passes}')
    return ContractionReport(distances, factor, passes, ratios, burn_in)


@dataclass
class ContinuityReport:
    """Lipschitz quotients of ``U(n, .)`` around a state.

    Attributes:
        epsilons (list[float]): Perturbation sizes in ``state_norm``.
        quotients (list[float]): Output distance over input distance.
    """

    epsilons: list
    quotients: list

    @property
    def lipschitz(self):
        return max(self.quotients, default=0.)


def continuity_quotients(x, p, n=1, epsilons=(1e-1, 1e-2, 1e-3), seed=0):
    """Perturb ``x`` by shrinking random states and compare ``U(n, .)``.

    Continuity of ``U(n, .)`` shows as output distances that vanish with the
    perturbation, i.e. bounded quotients.
    """
    generator = torch.Generator().manual_seed(seed)
    direction = random_ball_state(p.grid, p.mu, p.M, 1., 1., p.alpha,
                                  generator, orientation=x.orientation)
    direction = direction * (1. / state_norm(direction, p.alpha))
    base = discrete_flow(n, x, p)
    quotients = []
    for eps in epsilons:
        moved = discrete_flow(n, x + direction * eps, p)
        quotients.append(state_distance(moved, base, p.alpha) / eps)
    finite = all(math.isfinite(q) for q in quotients)
    get_root_logger().info(
        f'continuity of U({n}, .): quotients ' +
        ', '.join(f'{q:.4e}' for q in quotients) +
        ('' if finite else ' (non-finite)'))
    return ContinuityReport(list(epsilons), quotients)
