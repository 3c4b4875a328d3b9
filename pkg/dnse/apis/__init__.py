# Copyright (c) OpenMMLab. All rights reserved.
from .config import (DEFAULTS, REQUIRED_KEYS, config_linenos, dump_config,
                     load_config, parse_config, validate_config)
from .run import run, set_random_seed, setup_threads

__all__ = [
    'DEFAULTS', 'REQUIRED_KEYS', 'config_linenos', 'parse_config',
    'load_config', 'validate_config', 'dump_config', 'run',
    'set_random_seed', 'setup_threads'
]
