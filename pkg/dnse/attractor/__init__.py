# Copyright (c) OpenMMLab. All rights reserved.
from .conditions import (BallSpec, ViscosityScan, check_cond1, check_cond2,
                         check_contraction_conditions,
                         continuous_endpoint_bound, find_radius, rho_radius,
                         scan_viscosity)
from .contraction import (ContinuityReport, ContractionReport,
                          continuity_quotients, contraction_experiment,
                          fit_geometric_factor)
from .fixpoint import (AttractorResult, continuous_attractor, find_attractor,
                       stokes_steady_state)
from .invariance import (InvarianceReport, ball_invariance_trial,
                         continuous_invariance_trial,
                         long_time_invariance_trial)
from .regularity import (RegularityReport, holder_quotients,
                         regularity_diagnostics)

__all__ = [
    'BallSpec', 'ViscosityScan', 'rho_radius', 'check_cond1', 'check_cond2',
    'find_radius', 'check_contraction_conditions',
    'continuous_endpoint_bound', 'scan_viscosity', 'InvarianceReport',
    'ball_invariance_trial', 'continuous_invariance_trial',
    'long_time_invariance_trial', 'ContractionReport',
    'contraction_experiment', 'fit_geometric_factor', 'ContinuityReport',
    'continuity_quotients', 'AttractorResult', 'find_attractor',
    'continuous_attractor', 'stokes_steady_state', 'RegularityReport',
    'regularity_diagnostics', 'holder_quotients'
]
