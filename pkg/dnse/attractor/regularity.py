import math
from dataclasses import dataclass

import torch

from ..utils import get_root_logger


def _unbounded(values):
    # ratio against a zero bound
    return torch.full_like(values, math.inf).masked_fill(values == 0, 0.)


@dataclass
class RegularityReport:
    """Smoothing diagnostics of a recorded trajectory.

    Attributes:
        weighted_sup (float): ``sup t |u(t)|_{1+a}^2`` over lattice
            ``t`` in ``(0, mu]``.
        weighted_bound (float): Right side of the smoothing estimate at the
            maximizing time.
        weighted_ratio (float): ``max_t t |u(t)|_{1+a}^2 / bound(t)``.
        sup_norm_sq (float): ``sup |u(t)|_{1+a}^2`` over ``[eps, T]``.
        integral_sq (float): Trapezoid ``int_eps^T |u|_{2+a}^2``.
        holder_max (float): ``max |u(t) - u(s)|_a / (t - s)^(1/2)`` over
            lattice pairs in ``[eps, T]``.
    """

    weighted_sup: float
    weighted_bound: float
    weighted_ratio: float
    sup_norm_sq: float
    integral_sq: float
    holder_max: float

    @property
    def bound_holds(self):
        return self.weighted_ratio <= 1.

    @property
    def finite(self):
        return all(
            math.isfinite(v) for v in (self.weighted_sup, self.sup_norm_sq,
                                       self.integral_sq, self.holder_max))


def holder_quotients(traj, indices, s, exponent=0.5):
    """Matrix of ``|u_i - u_j|_s / |t_i - t_j|^exponent`` over ``indices``.

    Pairwise distances come from the Gram matrix of the weighted
    coefficients; the diagonal is zero.
    """
    weight = traj.grid.weight(s).sqrt()
    flat = (traj.coeffs[indices] * weight).reshape(len(indices), -1)
    gram = (flat @ flat.conj().T).real
    diag = gram.diagonal()
    dist = (diag[:, None] + diag[None, :] - 2 * gram).clamp_min(0).sqrt()
    t = traj.times()[indices]
    gap = (t[:, None] - t[None, :]).abs()
    gap = gap.masked_fill(gap == 0, 1.)
    return dist / gap.pow(exponent)


def regularity_diagnostics(traj, p, epsilon, c=None, T=None):
    """Report smoothing and Holder diagnostics of a forward trajectory.

    (a) ``t |u(t)|_{1+a}^2`` on ``(0, mu]`` against
    ``(|u|^2_{L2(0,mu;V^{1+a})} + t |f|_a^2 / nu) exp((c^2/nu) |phi|^2)``,
    where ``phi`` is the initial history; without ``c`` the exponent is
    ``|phi|^2`` itself. (b) ``sup |u|_{1+a}^2`` and ``int |u|_{2+a}^2`` over
    ``[epsilon, T]``. (c) the largest Holder-1/2 quotient in ``V^a`` over
    lattice pairs in ``[epsilon, T]``.

    Args:
        traj (Trajectory): Output of ``solve_trajectory``, covering at least
            one delay interval.
        p (FlowParams): Equation constants.
        epsilon (float): Start of the window, positive.
        c (float, optional): Trilinear constant of the estimate.
        T (float, optional): End of the window. Default: end of ``traj``.

    Returns:
        RegularityReport: The diagnostics. A bound violation is logged as a
        warning.
    """
    alpha = p.alpha
    times = traj.times()
    T = float(times[-1]) if T is None else T
    tiny = 1e-9 * traj.dt
    window = torch.nonzero((times >= epsilon - tiny)
                           & (times <= T + tiny)).flatten()
    if not epsilon > 0 or len(window) == 0:
        raise ValueError(f'empty diagnostic window [{epsilon}, {T}]')

    # (a)
    first = traj.interval(1)
    norms_sq = traj.sample_norms(1 + alpha)**2
    phi_sq = traj.history.l2_norm(1 + alpha)**2 \
        if traj.history is not None else 0.
    growth = phi_sq if c is None else c**2 / p.nu * phi_sq
    t = times[1:traj.M + 1]
    lhs = t * norms_sq[1:traj.M + 1]
    rhs = (first.l2_norm(1 + alpha)**2 +
           t * p.f.norm(alpha)**2 / p.nu) * math.exp(min(growth, 700.))
    ratios = torch.where(rhs > 0, lhs / rhs.clamp_min(1e-300),
                         _unbounded(lhs))
    at = int(ratios.argmax())

    # (b)
    inside = norms_sq[window]
    top_sq = traj.sample_norms(2 + alpha)[window]**2
    if len(window) > 1:
        gaps = times[window[1:]] - times[window[:-1]]
        integral = float((0.5 * gaps * (top_sq[1:] + top_sq[:-1])).sum())
    else:
        integral = 0.

    # (c)
    holder = float(holder_quotients(traj, window, alpha).max())

    report = RegularityReport(
        weighted_sup=float(lhs.max()),
        weighted_bound=float(rhs[at]),
        weighted_ratio=float(ratios[at]),
        sup_norm_sq=float(inside.max()),
        integral_sq=integral,
        holder_max=holder)
    logger = get_root_logger()
    if not report.bound_holds:
        logger.warning(
            f'smoothing estimate violated: t|u(t)|^2 reaches '
            f'{report.weighted_ratio:.4f} times its bound')
    if not report.finite:
        logger.warning('non-finite regularity diagnostics')
    return report
