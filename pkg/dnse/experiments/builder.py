# Copyright (c) OpenMMLab. All rights reserved.
import inspect

from mmcv.utils import Registry

EXPERIMENTS = Registry('experiment')


def build_experiment(cfg):
    """Build an experiment from ``dict(type=name, **options)``."""
    return EXPERIMENTS.build(cfg)


def experiment_options(name):
    """Option names and defaults accepted by the experiment ``name``."""
    cls = EXPERIMENTS.get(name)
    if cls is None:
        raise KeyError(f'{name} is not a registered experiment, choose from '
                       f'{sorted(EXPERIMENTS.module_dict)}')
    params = inspect.signature(cls.__init__).parameters
    return {
        key: param.default
        for key, param in params.items() if key != 'self'
        and param.kind is inspect.Parameter.POSITIONAL_OR_KEYWORD
    }
