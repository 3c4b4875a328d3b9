# Copyright (c) OpenMMLab. All rights reserved.
import argparse

from mmcv import DictAction

from dnse.apis import dump_config, load_config


def parse_args():
    parser = argparse.ArgumentParser(
        description='Print the whole config with defaults filled in')
    parser.add_argument('config', help='config file path')
    parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file.')
    return parser.parse_args()


def main():
    args = parse_args()
    cfg = load_config(args.config, args.cfg_options)
    print(f'Config:\n{dump_config(cfg)}')


if __name__ == '__main__':
    main()
