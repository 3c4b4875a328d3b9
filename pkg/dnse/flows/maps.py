import math

import torch

from ..core.errors import DomainError
from ..steppers import Segment, integrate, solve_interval
from .recorder import Trajectory
from .state import (FORWARD, HISTORY, FlowState, correspond,
                    correspond_inverse)


def discrete_step(x, p):
    """One application ``U(1, x)`` of the discrete flow.

    Solves the linearized equation on ``[0, mu]`` with the segment of ``x``
    as the convecting field and the endpoint of ``x`` as initial value.

    Args:
        x (FlowState): Forward state.
        p (FlowParams): Equation constants.

    Returns:
        FlowState: ``(u, u(mu))``.
    """
    if x.orientation != FORWARD:
        raise ValueError('the discrete flow acts on forward states')
    p.check_state(x)
    u = solve_interval(x.segment, x.endpoint, p.f, p.nu, p.scheme)
    return FlowState(u, u.sample(u.M), FORWARD)


def discrete_flow(n, x, p, recorder=None):
    """``n``-fold composition of :func:`discrete_step`; ``n = 0`` returns
    ``x``. Only the current state is kept, unless a recorder is given."""
    if not (isinstance(n, int) and n >= 0):
        raise ValueError(f'n must be a nonnegative integer, got {n}')
    if recorder is not None:
        recorder.record(0, x)
    for k in range(n):
        x = discrete_step(x, p)
        if recorder is not None:
            recorder.record(k + 1, x)
    return x


def lattice_index(t, p):
    """Index ``j`` of the lattice time ``t = j mu / M``.

    Raises:
        DomainError: ``t`` is negative or not on the lattice; ``nearest``
            holds the representable times around ``t``.
    """
    h = p.dt
    steps = t / h
    j = round(steps)
    if t < 0 or abs(steps - j) > 1e-9 * max(1., abs(steps)):
        below = max(math.floor(steps), 0) * h
        above = max(math.ceil(steps), 0) * h
        raise DomainError(
            f'time {t} is not on the sample lattice of spacing {h}; '
            f'nearest representable times are {below} and {above}',
            nearest=(below, above))
    return int(j)


def _window(x, partial, r):
    """State at ``r`` substeps past the start of the interval after ``x``.

    The window keeps samples ``r .. M-1`` of the segment of ``x`` and appends
    the first ``r + 1`` samples ``partial[:r + 1]`` of the next solve, whose
    start is the endpoint of ``x``.
    """
    coeffs = torch.cat([x.segment.coeffs[r:-1], partial[:r + 1]])
    segment = Segment(x.segment.grid, x.segment.mu, coeffs)
    return FlowState(segment, segment.sample(segment.M), HISTORY)


def continuous_flow(t, y, p):
    """The continuous flow ``S(t, y)`` at a lattice time ``t``.

    ``t = n mu + r mu / M`` is reached by ``n`` discrete steps on the
    corresponding forward state followed by ``r`` substeps of the next
    interval solve, so ``S(n mu, y)`` corresponds bit for bit to
    ``U(n, correspond(y))``.

    Args:
        t (float): Nonnegative multiple of ``mu / M``.
        y (FlowState): History state.
        p (FlowParams): Equation constants.

    Returns:
        FlowState: History state ``((u)_t, u(t))``.
    """
    if y.orientation != HISTORY:
        raise ValueError('the continuous flow acts on history states')
    n, r = divmod(lattice_index(t, p), p.M)
    x = discrete_flow(n, correspond(y), p)
    if r == 0:
        return correspond_inverse(x)
    p.check_state(x)
    partial = integrate(
        x.segment, x.endpoint, p.f, p.nu, p.scheme, num_steps=r)
    return _window(x, partial, r)


def continuous_orbit(t, y, p, recorder=None):
    """States ``S(s, y)`` at every lattice time ``s`` in ``(0, t]``.

    Reuses one interval solve per delay interval; every returned state is
    bit-identical to ``continuous_flow(s, y, p)``.

    Returns:
        list[tuple[float, FlowState]]: ``(s, S(s, y))`` pairs in time order.
    """
    if y.orientation != HISTORY:
        raise ValueError('the continuous flow acts on history states')
    total = lattice_index(t, p)
    x = correspond(y)
    p.check_state(x)
    orbit = []
    if recorder is not None:
        recorder.record(0., y)
    full = None
    for j in range(1, total + 1):
        r = j % p.M
        if full is None:
            # first r + 1 samples of a full solve equal the r-step solve
            full = integrate(x.segment, x.endpoint, p.f, p.nu, p.scheme)
        if r == 0:
            segment = Segment(x.grid, p.mu, full)
            x = FlowState(segment, segment.sample(p.M), FORWARD)
            state = correspond_inverse(x)
            full = None
        else:
            state = _window(x, full, r)
        orbit.append((j * p.dt, state))
        if recorder is not None:
            recorder.record(j * p.dt, state)
    return orbit


def solve_trajectory(n, y, p):
    """Concatenated method-of-steps solution on ``[0, n mu]``.

    On the ``k``-th delay interval the solution is the segment produced by
    the ``k``-th discrete step; consecutive segments share their junction
    sample.

    Args:
        n (int): Number of delay intervals.
        y (FlowState): Initial data, history or forward orientation.
        p (FlowParams): Equation constants.

    Returns:
        Trajectory: ``n M + 1`` samples plus the initial history.
    """
    if not (isinstance(n, int) and n >= 1):
        raise ValueError(f'n must be a positive integer, got {n}')
    x = correspond(y) if y.orientation == HISTORY else y
    history = x.segment
    chunks = []
    for k in range(n):
        x = discrete_step(x, p)
        chunks.append(x.segment.coeffs if k == 0 else x.segment.coeffs[1:])
    return Trajectory(x.grid, p.mu, p.M, torch.cat(chunks), history)
