# Copyright (c) OpenMMLab. All rights reserved.
from .base import BaseExperiment, ExperimentContext
from .builder import EXPERIMENTS, build_experiment, experiment_options
from .check import Check, select_ball
from .contract import Contract
from .estimate_c import EstimateC
from .fixpoint import Fixpoint
from .regularity import Regularity
from .simulate import Simulate

__all__ = [
    'EXPERIMENTS', 'build_experiment', 'experiment_options',
    'BaseExperiment', 'ExperimentContext', 'select_ball', 'Simulate',
    'Check', 'Contract', 'Fixpoint', 'EstimateC', 'Regularity'
]
