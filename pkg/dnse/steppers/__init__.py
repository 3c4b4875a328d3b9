# Copyright (c) OpenMMLab. All rights reserved.
from .builder import STEPPERS, build_stepper
from .convergence import convergence_order, heat_endpoint, reference_problem
from .energy import check_energy_inequality, energy_bound
from .schemes import BaseStepper, ExponentialEuler, ImexEuler, StepScheme
from .segment import Segment
from .solver import integrate, solve_interval

__all__ = [
    'STEPPERS', 'build_stepper', 'BaseStepper', 'ImexEuler',
    'ExponentialEuler', 'StepScheme', 'Segment', 'integrate',
    'solve_interval', 'convergence_order', 'reference_problem',
    'heat_endpoint', 'energy_bound', 'check_energy_inequality'
]
