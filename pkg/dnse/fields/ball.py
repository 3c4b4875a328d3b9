import math

from ..core.spectral import random_field
from ..flows import FORWARD, FlowState
from .specs import random_segment


def random_ball_state(grid,
                      mu,
                      M,
                      R,
                      rho,
                      alpha,
                      generator,
                      decay=None,
                      temporal_modes=3,
                      orientation=FORWARD,
                      consistent=False):
    """Random state on the boundary of the product ball ``B(R; rho)``.

    The segment has ``L2(V^{1+a})`` norm exactly ``R`` and the endpoint
    ``V^a`` norm exactly ``rho``. Spectra decay like ``|zeta|^-decay`` with
    random phases.

    With ``consistent`` the last segment sample is the endpoint itself, as
    for the history of a solution, and only the earlier samples are
    rescaled.

    Args:
        grid (TorusGrid): Lattice.
        mu (float): Segment length.
        M (int): Substeps per segment.
        R (float): Segment radius.
        rho (float): Endpoint radius.
        alpha (float): Regularity exponent ``a``.
        generator (torch.Generator): Source of randomness.
        decay (float, optional): Spectral decay. Default: ``alpha + 2``.
        temporal_modes (int): Cosine profiles of the segment. Default: 3.
        orientation (str): Orientation of the result. Default: forward.
        consistent (bool): Join the segment to the endpoint.
            Default: False.

    Returns:
        FlowState: The random state.

    Raises:
        ValueError: With ``consistent``, if the endpoint sample alone
            carries more than ``R`` in the segment norm.
    """
    decay = alpha + 2 if decay is None else decay
    segment = random_segment(grid, mu, M, generator, decay, temporal_modes)
    endpoint = random_field(grid, generator, decay=decay, norm=rho, s=alpha)
    if not consistent:
        norm = segment.l2_norm(1 + alpha)
        if norm > 0:
            segment = segment * (R / norm)
        return FlowState(segment, endpoint, orientation)

    # trapezoid weight of the last sample is dt / 2
    tail_sq = 0.5 * segment.dt * endpoint.norm(1 + alpha)**2
    if tail_sq > R**2 * (1 + 1e-12):
        raise ValueError(
            f'an endpoint of norm {rho} alone gives the segment norm '
            f'{math.sqrt(tail_sq):.6g} > R={R}; refine the time grid')
    segment.coeffs[-1] = 0
    head = segment.l2_norm(1 + alpha)
    if head > 0:
        segment = segment * (math.sqrt(max(R**2 - tail_sq, 0.)) / head)
    segment.coeffs[-1] = endpoint.coeffs
    return FlowState(segment, endpoint, orientation)
