# Copyright (c) OpenMMLab. All rights reserved.
from .convection import convect, convect_unprojected, trilinear
from .trilinear_constant import (ExponentTriple, TrilinearConstant,
                                 condition_triples,
                                 estimate_trilinear_constant)

__all__ = [
    'convect', 'convect_unprojected', 'trilinear', 'ExponentTriple',
    'TrilinearConstant', 'condition_triples', 'estimate_trilinear_constant'
]
