from dataclasses import dataclass, field

from ..core.spectral import stokes_apply
from ..flows import (continuous_flow, correspond_inverse, discrete_step,
                     state_distance)
from ..utils import get_root_logger


@dataclass
class AttractorResult:
    """Outcome of the fixed-point iteration of ``U``.

    Attributes:
        state (FlowState): Last iterate.
        residual (float): ``state_norm(U(x) - x)`` at the last iterate.
        iterations (int): Number of steps taken.
        converged (bool): Whether the increment fell below the tolerance.
        increments (list[float]): ``state_norm`` of every increment.
    """

    state: object
    residual: float
    iterations: int
    converged: bool
    increments: list = field(default_factory=list)


def find_attractor(x0, p, tol=1e-10, max_iter=500, recorder=None):
    """Iterate ``x_{k+1} = U(1, x_k)`` until the increment drops below
    ``tol``.

    Args:
        x0 (FlowState): Forward starting state.
        p (FlowParams): Equation constants.
        tol (float): Increment tolerance in ``state_norm``.
        max_iter (int): Iteration cap.
        recorder (TrajectoryRecorder, optional): Records every iterate.

    Returns:
        AttractorResult: Non-convergence is flagged, not raised.
    """
    x = x0
    increments = []
    converged = False
    if recorder is not None:
        recorder.record(0, x)
    for k in range(max_iter):
        x_next = discrete_step(x, p)
        increments.append(state_distance(x_next, x, p.alpha))
        x = x_next
        if recorder is not None:
            recorder.record(k + 1, x)
        if increments[-1] < tol:
            converged = True
            break
    residual = state_distance(discrete_step(x, p), x, p.alpha)
    logger = get_root_logger()
    if converged:
        logger.info(f'fixed point after {len(increments)} iterations, '
                    f'residual {residual:.3e}')
    else:
        last = increments[-1] if increments else 0.
        logger.warning(f'no fixed point within {max_iter} iterations, last '
                       f'increment {last:.3e}, residual {residual:.3e}')
    return AttractorResult(x, residual, len(increments), converged,
                           increments)


def continuous_attractor(result, p):
    """Transport the fixed point of ``U`` to the continuous flow.

    Returns:
        tuple[FlowState, float]: The history state corresponding to
        ``result.state`` and its residual ``state_norm(S(mu, y) - y)``.
    """
    y = correspond_inverse(result.state)
    residual = state_distance(continuous_flow(p.mu, y, p), y, p.alpha)
    return y, residual


def stokes_steady_state(f, nu):
    """Steady Stokes flow ``A^-1 f / nu``: per mode ``f_k / (nu |zeta|^2)``."""
    return stokes_apply(f, -1) / nu
