# Copyright (c) OpenMMLab. All rights reserved.
from mmcv.utils import Registry

FIELDS = Registry('field')


def build_field_spec(cfg):
    """Build a field description such as ``dict(type='SingleMode', ...)``."""
    return FIELDS.build(cfg)


def build_field(cfg, grid):
    """Build the spectral field described by ``cfg`` on ``grid``."""
    return build_field_spec(cfg).field(grid)


def build_segment(cfg, grid, mu, M):
    """Build a segment of ``M`` substeps on an interval of length ``mu``."""
    return build_field_spec(cfg).segment(grid, mu, M)
