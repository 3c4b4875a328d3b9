# Copyright (c) OpenMMLab. All rights reserved.
from mmcv.utils import Registry

STEPPERS = Registry('stepper')


def build_stepper(scheme, grid, nu, dt):
    """Build the substep propagator named by ``scheme.kind``."""
    return STEPPERS.build(dict(type=scheme.kind, grid=grid, nu=nu, dt=dt))
