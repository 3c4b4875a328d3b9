# Copyright (c) OpenMMLab. All rights reserved.
import os

from mmcv.utils import collect_env as collect_base_env
from mmcv.utils import get_git_hash

import dnse


def collect_env():
    """Collect the information of the running environments."""
    env_info = collect_base_env()
    env_info['DNSE'] = dnse.__version__ + '+' + get_git_hash()[:7]
    env_info['DNSE_THREADS'] = os.environ.get('DNSE_THREADS', 'unset')
    return env_info


if __name__ == '__main__':
    for name, val in collect_env().items():
        print(f'{name}: {val}')
