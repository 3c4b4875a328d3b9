# Copyright (c) OpenMMLab. All rights reserved.
from .field import (SpectralField, energy_spectrum, inner_product,
                    leray_project, sobolev_norm, stokes_apply)
from .random import random_field
from .snapshot import load_snapshot, save_snapshot
from .torus import TorusGrid, check_same_grid

__all__ = [
    'TorusGrid', 'check_same_grid', 'SpectralField', 'sobolev_norm',
    'inner_product', 'stokes_apply', 'leray_project', 'energy_spectrum',
    'save_snapshot', 'load_snapshot', 'random_field'
]
