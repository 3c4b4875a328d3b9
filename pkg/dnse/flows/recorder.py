from dataclasses import dataclass
from typing import Optional

import torch

from ..core.spectral import SpectralField, TorusGrid
from ..steppers import Segment
from ..utils import CsvSeriesWriter
from .state import state_norm


class TrajectoryRecorder(object):
    """Opt-in recorder of flow states.

    Every recorded state contributes one CSV row ``<index>, endpoint_norm,
    segment_norm, state_norm`` (endpoint in ``V^a``, segment in
    ``L2(V^{1+a})``). States are kept in memory only when ``keep_states`` is
    set.

    Args:
        csv_file (str, optional): Output CSV path.
        alpha (float): Regularity exponent ``a``. Default: 1.
        index_name (str): Name of the first column, ``n`` for iterates of the
            discrete flow and ``t`` for lattice times. Default: ``n``.
        keep_states (bool): Keep the recorded states. Default: False.
    """

    def __init__(self,
                 csv_file=None,
                 alpha=1.,
                 index_name='n',
                 keep_states=False):
        self.alpha = alpha
        self.keep_states = keep_states
        self.indices = []
        self.states = []
        self.rows = []
        self._writer = None
        if csv_file is not None:
            self._writer = CsvSeriesWriter(
                csv_file,
                (index_name, 'endpoint_norm', 'segment_norm', 'state_norm'))

    def record(self, index, state):
        row = (index, state.endpoint.norm(self.alpha),
               state.segment.l2_norm(1 + self.alpha),
               state_norm(state, self.alpha))
        self.indices.append(index)
        self.rows.append(row)
        if self.keep_states:
            self.states.append(state)
        if self._writer is not None:
            self._writer.write(*row)

    def close(self):
        if self._writer is not None:
            self._writer.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()


@dataclass
class Trajectory:
    """Method-of-steps solution ``u`` sampled on ``[0, n mu]``.

    Attributes:
        grid (TorusGrid): Lattice of the samples.
        mu (float): Delay.
        M (int): Substeps per delay interval.
        coeffs (torch.Tensor): Samples at ``t = j mu / M``, ``j = 0 .. n M``.
        history (Segment, optional): Initial history on ``[-mu, 0]``.
    """

    grid: TorusGrid
    mu: float
    M: int
    coeffs: torch.Tensor
    history: Optional[Segment] = None

    @property
    def dt(self):
        return self.mu / self.M

    @property
    def num_samples(self):
        return self.coeffs.shape[0]

    def times(self):
        return torch.arange(self.num_samples, dtype=torch.float64) * self.dt

    def sample(self, j):
        return SpectralField(self.grid, self.coeffs[j])

    def sample_norms(self, s):
        weight = self.grid.weight(s)
        energy = (self.coeffs.abs()**2).sum(1)
        return (weight * energy).sum((-3, -2, -1)).sqrt()

    def interval(self, k):
        """Solution on the ``k``-th delay interval as a segment, ``k >= 1``."""
        assert 1 <= k <= (self.num_samples - 1) // self.M, \
            f'interval {k} is not covered by the trajectory'
        start = (k - 1) * self.M
        return Segment(self.grid, self.mu,
                       self.coeffs[start:start + self.M + 1])
