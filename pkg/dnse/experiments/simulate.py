import math

from ..core.spectral import energy_spectrum
from ..flows import TrajectoryRecorder, continuous_orbit, correspond
from ..steppers import check_energy_inequality
from ..utils import CsvSeriesWriter
from .base import BaseExperiment
from .builder import EXPERIMENTS


@EXPERIMENTS.register_module(name='simulate')
class Simulate(BaseExperiment):
    """Run the continuous flow from the configured history.

    Outputs ``trajectory.csv`` (every lattice time) and ``spectrum.csv``
    (shell energies of the final value). Every delay interval is compared
    with the Gronwall energy bound; violations are warnings.

    Args:
        intervals (int): Delay intervals to simulate. Default: 4.
        energy_check (bool): Compare with the energy bound. Default: True.
    """

    def __init__(self, intervals=4, energy_check=True):
        super(Simulate, self).__init__()
        assert intervals >= 1, 'simulate needs at least one interval'
        self.intervals = intervals
        self.energy_check = energy_check

    def run(self, ctx):
        p = ctx.params
        recorder = TrajectoryRecorder(
            ctx.path('trajectory.csv'), alpha=p.alpha, index_name='t')
        with recorder:
            orbit = continuous_orbit(self.intervals * p.mu, ctx.initial, p,
                                     recorder)
        final = orbit[-1][1]

        with CsvSeriesWriter(ctx.path('spectrum.csv'),
                             ('shell', 'energy')) as writer:
            for shell, energy in enumerate(energy_spectrum(final.endpoint)):
                writer.write(shell, float(energy))
        ctx.save_field(final.endpoint, 'final_endpoint.dns')

        finite = all(math.isfinite(v) for row in recorder.rows for v in row)
        self.results.update(
            final_time=orbit[-1][0],
            final_state_norm=recorder.rows[-1][3],
            final_endpoint_norm=recorder.rows[-1][1],
            max_state_norm=max(row[3] for row in recorder.rows))
        self.criterion('finite', finite)

        if self.energy_check:
            c = ctx.trilinear_constant('ball')
            psi = correspond(ctx.initial).segment
            worst, holds = 0., True
            # discrete states sit at every multiple of M lattice steps
            for _, state in orbit[p.M - 1::p.M]:
                ok, ratio = check_energy_inequality(
                    state.segment, psi, p.f, p.nu, c, p.alpha,
                    ctx.tolerances.allowance)
                holds &= ok
                worst = max(worst, ratio)
                psi = state.segment
            self.results.update(c_ball=c, energy_ratio=worst)
            self.criterion('energy_inequality', holds, asserted=False)
        return self.results, self.criteria
