# Copyright (c) OpenMMLab. All rights reserved.
import argparse
import os.path as osp
import sys

from mmcv import DictAction

from dnse.apis import DEFAULTS, load_config, run
from dnse.core import ConfigError

EPILOG = f"""\
defaults (config keys not set in the file):
  grid        {DEFAULTS['grid']}
  params      {DEFAULTS['params']}
  forcing     {DEFAULTS['forcing']}
  initial     {DEFAULTS['initial']}
  tolerances  {DEFAULTS['tolerances']}
  trilinear   {DEFAULTS['trilinear']}
  seed={DEFAULTS['seed']}, log_level={DEFAULTS['log_level']}, \
save_snapshots={DEFAULTS['save_snapshots']}
  required: params.nu, experiment

experiments and their CSV outputs (in the work dir):
  simulate     trajectory.csv   t, endpoint_norm, segment_norm, state_norm
               spectrum.csv     shell, energy
  check        ball_trials.csv  kind, trial, segment_ratio, endpoint_ratio
  contract     distances.csv    pair, nu, n, distance
  fixpoint     fixpoint_<i>.csv n, endpoint_norm, segment_norm, state_norm
  estimate-c   trilinear_<which>.csv  sample, ratio, running_max
  regularity   regularity.csv   t, norm_alpha, norm_1_plus_alpha,
                                norm_2_plus_alpha
every run also writes manifest.json, config.py and a timestamped log.

environment:
  DNSE_THREADS  cap on torch intra-op threads
"""


def parse_args():
    parser = argparse.ArgumentParser(
        description='Run a delayed Navier-Stokes experiment',
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--config', required=True, help='config file path')
    parser.add_argument(
        '--experiment', help='experiment name, overrides the config')
    parser.add_argument('--seed', type=int, default=None, help='random seed')
    parser.add_argument(
        '--out', help='the dir to save logs, manifest and CSV series')
    parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file. If the value to '
        'be overwritten is a list, it should be like key="[a,b]" or key=a,b '
        'It also allows nested list/tuple values, e.g. key="[(a,b),(c,d)]" '
        'Note that the quotation marks are necessary and that no white space '
        'is allowed.')
    args = parser.parse_args()
    if args.seed is not None and not 0 <= args.seed < 2**64:
        parser.error('--seed must be an unsigned 64 bit integer')
    return args


def main():
    args = parse_args()
    options = dict(args.cfg_options or {})
    if args.experiment is not None:
        options['experiment'] = dict(_delete_=True, type=args.experiment)
    if args.seed is not None:
        options['seed'] = args.seed
    # work_dir is determined in this priority: CLI > config > filename
    if args.out is not None:
        options['work_dir'] = args.out

    try:
        cfg = load_config(args.config, options)
    except ConfigError as e:
        print(f'{args.config}: {e}', file=sys.stderr)
        return 2
    if cfg.work_dir is None:
        cfg.work_dir = osp.join('./work_dirs',
                                osp.splitext(osp.basename(args.config))[0])
    return run(cfg)


if __name__ == '__main__':
    sys.exit(main())
