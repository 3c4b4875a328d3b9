# Copyright (c) OpenMMLab. All rights reserved.
from .ball import random_ball_state
from .builder import FIELDS, build_field, build_field_spec, build_segment
from .specs import (BaseFieldSpec, Random, SingleMode, Snapshot, Zero,
                    random_segment)

__all__ = [
    'FIELDS', 'build_field', 'build_field_spec', 'build_segment',
    'BaseFieldSpec', 'Zero', 'SingleMode', 'Random', 'Snapshot',
    'random_segment', 'random_ball_state'
]
