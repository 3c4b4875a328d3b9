# Copyright (c) OpenMMLab. All rights reserved.
import os.path as osp
from abc import ABCMeta, abstractmethod

import torch

from ..core.nonlinearity import condition_triples, estimate_trilinear_constant
from ..core.spectral import TorusGrid, save_snapshot
from ..fields import build_field, build_segment
from ..flows import HISTORY, FlowParams, FlowState
from ..steppers import StepScheme
from ..utils import get_root_logger


class ExperimentContext(object):
    """Objects shared by every experiment, built from a validated config.

    Attributes:
        cfg (mmcv.Config): The config.
        grid (TorusGrid): Lattice.
        params (FlowParams): Equation constants.
        initial (FlowState): Initial history ``(phi, u0)``.
        work_dir (str): Output directory.
        seed (int): Base seed.
    """

    def __init__(self, cfg, work_dir):
        self.cfg = cfg
        self.work_dir = work_dir
        self.seed = int(cfg.seed)
        self.grid = TorusGrid(cfg.grid.L, cfg.grid.N)
        params = cfg.params
        scheme = StepScheme(params.scheme, params.M)
        f = build_field(cfg.forcing, self.grid)
        self.params = FlowParams(params.nu, params.mu, params.alpha, f, scheme)
        segment = build_segment(cfg.initial.segment, self.grid, params.mu,
                                params.M)
        endpoint = build_field(cfg.initial.endpoint, self.grid)
        self.initial = FlowState(segment, endpoint, HISTORY)
        self._constants = {}

    @property
    def tolerances(self):
        return self.cfg.tolerances

    def generator(self, offset=0):
        """Private generator seeded with ``seed + offset``."""
        return torch.Generator().manual_seed((self.seed + offset) % 2**64)

    def trilinear_constant(self, which):
        """Constant used in the conditions, ``safety`` times the estimate.

        ``which`` is ``ball`` or ``contraction``. A constant fixed in the
        config as ``trilinear.c`` bypasses the estimate.
        """
        tri = self.cfg.trilinear
        if tri.c is not None:
            return float(tri.c)
        if which not in self._constants:
            triple = condition_triples(self.params.alpha)[which]
            seed = self.seed if tri.seed is None else tri.seed
            estimate = estimate_trilinear_constant(
                triple, tri.budget, seed=seed, grid=self.grid)
            self._constants[which] = tri.safety * estimate.c
        return self._constants[which]

    def path(self, name):
        return osp.join(self.work_dir, name)

    def save_field(self, field, name):
        """Write a ``DNS1`` snapshot when ``save_snapshots`` is set."""
        if not self.cfg.save_snapshots:
            return None
        filepath = self.path(name)
        save_snapshot(field, filepath)
        get_root_logger().info(f'snapshot written to {filepath}')
        return filepath


class BaseExperiment(object, metaclass=ABCMeta):
    """Base class of experiments.

    Subclasses take their options as keyword arguments and implement
    :meth:`run`, which fills ``results`` and ``criteria`` and returns them.
    A criterion is ``dict(passed=bool, asserted=bool)``; the process exits
    with a nonzero status iff an asserted criterion fails.
    """

    def __init__(self):
        self.results = dict()
        self.criteria = dict()

    def criterion(self, name, passed, asserted=True, **info):
        self.criteria[name] = dict(
            passed=bool(passed), asserted=bool(asserted), **info)
        if not passed:
            log = get_root_logger().error if asserted else \
                get_root_logger().warning
            log(f'criterion {name} failed')
        return passed

    @abstractmethod
    def run(self, ctx):
        """Run on an :class:`ExperimentContext`.

        Returns:
            tuple[dict, dict]: results and criteria.
        """
