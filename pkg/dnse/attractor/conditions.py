import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..utils import get_root_logger

READINGS = ('e_nu', 'e_nu_sq')


@dataclass(frozen=True)
class BallSpec:
    """Product ball ``B(R; rho)`` with the constants it was derived with.

    Attributes:
        R (float): Radius of the segment ball in ``L2(V^{1+a})``.
        rho (float): Radius of the endpoint ball in ``V^a``.
        c (float): Trilinear constant in use.
        lam (float): First Stokes eigenvalue.
    """

    R: float
    rho: float
    c: float
    lam: float

    def __post_init__(self):
        assert self.R >= 0 and self.rho >= 0, 'ball radii must be nonnegative'


def _exp(x):
    # inf instead of OverflowError for hopeless parameters
    return math.exp(x) if x < 700. else math.inf


def _check_positive(**values):
    for name, value in values.items():
        if not value > 0:
            raise ValueError(f'{name} must be positive, got {value}')


def rho_radius(nu, lam, mu, f_norm):
    """Endpoint radius of the invariant ball.

    ``rho^2 = 8/(nu^2 lam) |f|^2_{a-1} e^{nu lam mu/2}``.

    Args:
        nu (float): Viscosity.
        lam (float): First Stokes eigenvalue.
        mu (float): Delay.
        f_norm (float): ``|f|_{a-1}``, nonnegative.
    """
    _check_positive(nu=nu, lam=lam, mu=mu)
    if f_norm < 0:
        raise ValueError(f'f_norm must be nonnegative, got {f_norm}')
    if f_norm == 0:
        return 0.
    return math.sqrt(8. / (nu**2 * lam) * f_norm**2 *
                     _exp(0.5 * nu * lam * mu))


def check_cond1(nu, lam, mu, c, R):
    """``-nu lam mu / 2 + c^2 R^2 / nu < -ln 2``."""
    return -0.5 * nu * lam * mu + c**2 * R**2 / nu < -math.log(2.)


def check_cond2(nu, lam, mu, c, R, f_norm):
    """``rho^2 (2/nu + (2c^2R^2/nu^2)(e^{c^2R^2/nu} + 1/2)
    + lam mu e^{-nu lam mu/2} / 2) <= R^2 / 2``."""
    rho_sq = rho_radius(nu, lam, mu, f_norm)**2
    growth = c**2 * R**2 / nu
    bracket = (2. / nu + 2. * growth / nu * (_exp(growth) + 0.5) +
               0.5 * lam * mu * math.exp(-0.5 * nu * lam * mu))
    return rho_sq * bracket <= 0.5 * R**2


def find_radius(nu, lam, mu, c, f_norm, search_budget=241,
                radius_range=(1e-6, 1e6)):
    """Smallest radius on a logarithmic grid satisfying both ball conditions.

    Args:
        nu, lam, mu, c (float): Equation constants.
        f_norm (float): ``|f|_{a-1}``.
        search_budget (int): Number of grid radii. Default: 241.
        radius_range (tuple[float]): Smallest and largest radius.

    Returns:
        float | None: The radius, or None if no grid radius qualifies.
    """
    assert search_budget >= 1, 'search_budget must be positive'
    lo, hi = radius_range
    for R in np.logspace(math.log10(lo), math.log10(hi), search_budget):
        R = float(R)
        if check_cond1(nu, lam, mu, c, R) and \
                check_cond2(nu, lam, mu, c, R, f_norm):
            return R
    return None


def check_contraction_conditions(nu, lam, mu, c, R, rho, reading='e_nu'):
    """Smallness conditions making ``U(1, .)`` a contraction with factor 1/2.

    ``lhs1 = (2c^2R^2/nu^2 + 1) exp(-lam nu mu + 2c^2R^2/d) + 1/nu`` with
    ``d = nu`` (reading ``e_nu``) or ``d = nu^2`` (reading ``e_nu_sq``), and
    ``lhs2 = ((1/lam)(2c^2R^2/nu^2 + 1)(1 - e^{-lam nu mu}) e^{2c^2R^2/nu}
    + 1) 2c^2 rho^2 / nu^2``. Both must stay below 1/2.

    Returns:
        dict: ``lhs1``, ``lhs2``, ``holds1``, ``holds2`` and ``holds``.
    """
    if reading not in READINGS:
        raise ValueError(f'reading should be one of {READINGS}, '
                         f'got {reading}')
    _check_positive(nu=nu, lam=lam, mu=mu)
    prefactor = 2. * c**2 * R**2 / nu**2 + 1.
    denom = nu if reading == 'e_nu' else nu**2
    exponent = -lam * nu * mu + 2. * c**2 * R**2 / denom
    lhs1 = prefactor * _exp(exponent) + 1. / nu
    lhs2 = ((1. / lam) * prefactor * -math.expm1(-lam * nu * mu) *
            _exp(2. * c**2 * R**2 / nu) + 1.) * 2. * c**2 * rho**2 / nu**2
    return dict(
        lhs1=lhs1,
        lhs2=lhs2,
        holds1=lhs1 < 0.5,
        holds2=lhs2 < 0.5,
        holds=lhs1 < 0.5 and lhs2 < 0.5)


def continuous_endpoint_bound(nu, lam, mu, c, R, f_norm, t=None):
    """Bound on ``|u(t)|_a^2`` for histories in ``B(R/sqrt(2); rho)``:
    ``rho^2 e^{-nu lam t/2 + c^2R^2/(2nu)}
    + 4/(nu^2 lam) |f|^2 e^{c^2R^2/(2nu)}``.

    Args:
        t (float, optional): Time in ``[0, mu]``. Default: ``mu``.
    """
    t = mu if t is None else t
    rho_sq = rho_radius(nu, lam, mu, f_norm)**2
    half_growth = 0.5 * c**2 * R**2 / nu
    return (rho_sq * _exp(-0.5 * nu * lam * t + half_growth) +
            4. / (nu**2 * lam) * f_norm**2 * _exp(half_growth))


@dataclass
class ViscosityScan:
    """Outcome of :func:`scan_viscosity`.

    Attributes:
        nu (float): First viscosity meeting every condition.
        ball (BallSpec): Invariant ball at that viscosity.
        contraction (dict): Output of :func:`check_contraction_conditions`.
        doublings (int): Doublings from the starting viscosity.
        history (list[dict]): Per-viscosity outcome of the scan.
    """

    nu: float
    ball: BallSpec
    contraction: dict
    doublings: int
    history: list = field(default_factory=list)


def scan_viscosity(nu0,
                   lam,
                   mu,
                   c_ball,
                   f_norm,
                   c_contraction=None,
                   search_budget=241,
                   max_doublings=40,
                   reading='e_nu',
                   require_contraction=True) -> Optional[ViscosityScan]:
    """Double the viscosity until the invariant-ball conditions hold.

    ``find_radius`` uses ``c_ball``. The contraction conditions involve the
    ball triple and the contraction triple together, so they are evaluated
    with the larger of the two constants.

    Returns:
        ViscosityScan | None: None when ``max_doublings`` is exhausted.
    """
    logger = get_root_logger()
    c_contraction = c_ball if c_contraction is None else c_contraction
    c_max = max(c_ball, c_contraction)
    history = []
    nu = nu0
    for doublings in range(max_doublings + 1):
        R = find_radius(nu, lam, mu, c_ball, f_norm, search_budget)
        entry = dict(nu=nu, R=R)
        if R is not None:
            rho = rho_radius(nu, lam, mu, f_norm)
            contraction = check_contraction_conditions(
                nu, lam, mu, c_max, R, rho, reading=reading)
            entry.update(rho=rho, contraction=contraction['holds'])
            if contraction['holds'] or not require_contraction:
                history.append(entry)
                logger.info(f'viscosity scan selected nu={nu:.6g} '
                            f'(R={R:.6g}, rho={rho:.6g}) after {doublings} '
                            'doublings')
                return ViscosityScan(nu, BallSpec(R, rho, c_ball, lam),
                                     contraction, doublings, history)
        history.append(entry)
        nu *= 2.
    logger.warning(f'no viscosity in [{nu0}, {nu0 * 2**max_doublings}] '
                   'satisfies the attractor conditions')
    return None
