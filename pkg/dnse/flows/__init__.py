# Copyright (c) OpenMMLab. All rights reserved.
from .maps import (continuous_flow, continuous_orbit, discrete_flow,
                   discrete_step, lattice_index, solve_trajectory)
from .recorder import Trajectory, TrajectoryRecorder
from .state import (FORWARD, HISTORY, FlowParams, FlowState, correspond,
                    correspond_inverse, state_distance, state_norm)

__all__ = [
    'FORWARD', 'HISTORY', 'FlowState', 'FlowParams', 'state_norm',
    'state_distance', 'correspond', 'correspond_inverse', 'discrete_step',
    'discrete_flow', 'continuous_flow', 'continuous_orbit', 'lattice_index',
    'solve_trajectory', 'Trajectory', 'TrajectoryRecorder'
]
