# Copyright (c) OpenMMLab. All rights reserved.
import os
import os.path as osp
import random
import time

import mmcv
import numpy as np
import torch

from ..experiments import ExperimentContext, build_experiment
from ..utils import collect_env, get_root_logger
from ..version import __version__


def set_random_seed(seed):
    """Set random seed.

    Every experiment draws from private ``torch.Generator`` objects, the
    global generators are seeded as well so stray draws stay reproducible.

    Args:
        seed (int): Seed to be used.
    """
    random.seed(seed)
    np.random.seed(seed % 2**32)
    torch.manual_seed(seed)


def setup_threads():
    """Cap torch's intra-op threads with ``DNSE_THREADS`` when it is set."""
    threads = os.environ.get('DNSE_THREADS')
    if threads:
        torch.set_num_threads(max(1, int(threads)))
    return torch.get_num_threads()


def _manifest(cfg, timestamp, status, results=None, criteria=None):
    return dict(
        dnse_version=__version__,
        timestamp=timestamp,
        experiment=cfg.experiment['type'],
        seed=cfg.seed,
        status=status,
        config=cfg.to_dict(),
        results=results or dict(),
        criteria=criteria or dict())


def run(cfg, timestamp=None):
    """Run the experiment named by a validated config.

    The manifest ``<work_dir>/manifest.json`` is written before the
    experiment starts and rewritten with its results and criteria at the
    end.

    Args:
        cfg (mmcv.Config): Output of ``parse_config`` or ``load_config``,
            with ``work_dir`` set.
        timestamp (str, optional): Name of the log file. Default: now.

    Returns:
        int: Exit status, ``1`` iff an asserted criterion failed.
    """
    assert cfg.work_dir is not None, 'work_dir must be set'
    work_dir = osp.abspath(cfg.work_dir)
    mmcv.mkdir_or_exist(work_dir)
    with open(osp.join(work_dir, 'config.py'), 'w') as f:
        f.write(cfg.pretty_text)
    if timestamp is None:
        timestamp = time.strftime('%Y%m%d_%H%M%S', time.localtime())
    log_file = osp.join(work_dir, f'{timestamp}.log')
    logger = get_root_logger(log_file=log_file, log_level=cfg.log_level)

    env_info = '\n'.join(f'{k}: {v}' for k, v in collect_env().items())
    dash_line = '-' * 60 + '\n'
    logger.info('Environment info:\n' + dash_line + env_info + '\n' +
                dash_line)
    logger.info(f'Config:\n{cfg.pretty_text}')
    logger.info(f'Set random seed to {cfg.seed}, '
                f'{setup_threads()} torch threads')
    set_random_seed(cfg.seed)

    manifest_file = osp.join(work_dir, 'manifest.json')
    mmcv.dump(_manifest(cfg, timestamp, 'running'), manifest_file, indent=2)

    experiment = build_experiment(cfg.experiment)
    ctx = ExperimentContext(cfg, work_dir)
    results, criteria = experiment.run(ctx)

    failed = [
        name for name, c in criteria.items()
        if c['asserted'] and not c['passed']
    ]
    status = 'failed' if failed else 'passed'
    mmcv.dump(
        _manifest(cfg, timestamp, status, results, criteria),
        manifest_file,
        indent=2)
    logger.info(f'{cfg.experiment["type"]} {status}: ' + ', '.join(
        f'{name}={"ok" if c["passed"] else "FAIL"}'
        for name, c in criteria.items()))
    return 1 if failed else 0
