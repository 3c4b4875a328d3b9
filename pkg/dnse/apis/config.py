# Copyright (c) OpenMMLab. All rights reserved.
import ast
import copy

from mmcv import Config

from ..core.errors import ConfigError
from ..experiments import experiment_options
from ..fields import build_field_spec
from ..steppers import STEPPERS

# yapf:disable
DEFAULTS = dict(
    grid=dict(L=6.283185307179586, N=16),  # 2 * pi
    params=dict(nu=None, mu=0.1, alpha=1., M=64, scheme='etd1'),
    forcing=dict(type='Zero'),
    initial=dict(segment=dict(type='Zero'), endpoint=dict(type='Zero')),
    experiment=None,
    tolerances=dict(fixpoint=1e-10, max_iter=500, allowance=0.05),
    trilinear=dict(budget=200, safety=2., seed=None, c=None),
    seed=0,
    work_dir=None,
    log_level='INFO',
    save_snapshots=False)
# yapf:enable

REQUIRED_KEYS = ('params.nu', 'experiment')

# sections whose keys are fixed by DEFAULTS; the others are replaced whole
_FIXED_SECTIONS = ('grid', 'params', 'tolerances', 'trilinear', 'initial')


def _dict_key(node):
    # python 3.7 parses string keys as ast.Str, which carries ``s``
    key = node.value if hasattr(node, 'value') else getattr(node, 's', None)
    return key if isinstance(key, str) else None


def _record_lines(node, prefix, linenos):
    if isinstance(node, ast.Call) and getattr(node.func, 'id', None) == 'dict':
        items = [(kw.arg, kw.value) for kw in node.keywords if kw.arg]
    elif isinstance(node, ast.Dict):
        items = [(_dict_key(k), v) for k, v in zip(node.keys, node.values)
                 if _dict_key(k) is not None]
    else:
        return
    for name, value in items:
        key = f'{prefix}.{name}'
        linenos[key] = value.lineno
        _record_lines(value, key, linenos)


def config_linenos(text):
    """Map dotted keys to the line where they are assigned in ``text``.

    Raises:
        ConfigError: If ``text`` is not valid python.
    """
    try:
        tree = ast.parse(text)
    except SyntaxError as e:
        raise ConfigError(f'invalid syntax: {e.msg}', lineno=e.lineno)
    linenos = dict()
    for node in tree.body:
        if not isinstance(node, ast.Assign):
            continue
        for target in node.targets:
            if isinstance(target, ast.Name):
                linenos[target.id] = node.lineno
                _record_lines(node.value, target.id, linenos)
    return linenos


def _merge_defaults(user, linenos):
    merged = copy.deepcopy(DEFAULTS)
    for name, value in user.items():
        if name == '_base_':
            continue
        if name not in DEFAULTS:
            raise ConfigError(
                f'unknown key "{name}"', key=name, lineno=linenos.get(name))
        if name not in _FIXED_SECTIONS:
            merged[name] = value
            continue
        if not isinstance(value, dict):
            raise ConfigError(
                f'"{name}" must be a dict', key=name,
                lineno=linenos.get(name))
        for sub, sub_value in value.items():
            key = f'{name}.{sub}'
            if sub not in DEFAULTS[name]:
                raise ConfigError(
                    f'unknown key "{key}"', key=key,
                    lineno=linenos.get(key, linenos.get(name)))
            merged[name][sub] = sub_value
    return merged


def validate_config(cfg, linenos=None):
    """Fill defaults into ``cfg`` and check every invariant.

    Args:
        cfg (mmcv.Config | dict): Parsed config.
        linenos (dict, optional): Output of :func:`config_linenos`, used to
            put line numbers on the diagnostics.

    Returns:
        mmcv.Config: The complete config.

    Raises:
        ConfigError: Naming the offending key.
    """
    linenos = linenos or dict()
    user = cfg.to_dict() if isinstance(cfg, Config) else dict(cfg)
    merged = _merge_defaults(user, linenos)

    def fail(msg, key):
        section = key.split('.')[0]
        raise ConfigError(
            msg, key=key, lineno=linenos.get(key, linenos.get(section)))

    missing = [key for key in REQUIRED_KEYS if _lookup(merged, key) is None]
    if missing:
        raise ConfigError('missing required keys: ' + ', '.join(missing),
                          key=missing[0])

    grid, params = merged['grid'], merged['params']
    if not grid['L'] > 0:
        fail(f'L must be positive, got {grid["L"]}', 'grid.L')
    if not (isinstance(grid['N'], int) and grid['N'] >= 2
            and grid['N'] % 2 == 0):
        fail(f'N must be an even integer >= 2, got {grid["N"]}', 'grid.N')
    if not params['alpha'] > 0.5:
        fail(f'alpha must exceed 1/2, got {params["alpha"]}', 'params.alpha')
    for name in ('nu', 'mu'):
        if not params[name] > 0:
            fail(f'{name} must be positive, got {params[name]}',
                 f'params.{name}')
    if not (isinstance(params['M'], int) and params['M'] >= 1):
        fail(f'M must be an integer >= 1, got {params["M"]}', 'params.M')
    if params['scheme'] not in STEPPERS:
        fail(
            f'unknown scheme "{params["scheme"]}", choose from '
            f'{sorted(STEPPERS.module_dict)}', 'params.scheme')

    specs = dict(
        forcing=merged['forcing'],
        **{f'initial.{k}': v
           for k, v in merged['initial'].items()})
    for key, spec in specs.items():
        try:
            build_field_spec(spec)
        except (KeyError, TypeError, ValueError) as e:
            fail(f'invalid field spec: {e}', key)

    experiment = merged['experiment']
    if isinstance(experiment, str):
        experiment = dict(type=experiment)
    if not isinstance(experiment, dict) or 'type' not in experiment:
        fail('experiment must be a name or dict(type=name, ...)',
             'experiment')
    merged['experiment'] = experiment
    try:
        options = experiment_options(experiment['type'])
    except KeyError as e:
        fail(str(e.args[0]), 'experiment')
    for name in experiment:
        if name != 'type' and name not in options:
            fail(
                f'unknown option "{name}" of experiment '
                f'"{experiment["type"]}", choose from {sorted(options)}',
                f'experiment.{name}')
    if not merged['tolerances']['fixpoint'] > 0:
        fail('fixpoint tolerance must be positive', 'tolerances.fixpoint')
    return Config(merged)


def _lookup(cfg, key):
    value = cfg
    for part in key.split('.'):
        if not isinstance(value, dict):
            return None
        value = value.get(part)
    return value


def parse_config(text):
    """Parse and validate the text of a config file.

    The text is a python config as read by :class:`mmcv.Config`: sections
    are ``name = dict(key=value, ...)`` assignments. Unset keys take the
    documented defaults in :data:`DEFAULTS`.

    Raises:
        ConfigError: With the line number of the offending assignment.
    """
    if not text.strip():
        raise ConfigError('empty config, required keys: ' +
                          ', '.join(REQUIRED_KEYS))
    linenos = config_linenos(text)
    cfg = Config.fromstring(text, '.py')
    return validate_config(cfg, linenos)


def load_config(path, cfg_options=None):
    """Load a config file, resolving ``_base_`` files, and validate it.

    Args:
        path (str): Config file.
        cfg_options (dict, optional): Overrides in ``--cfg-options`` form.
    """
    cfg = Config.fromfile(path)
    if cfg_options:
        cfg.merge_from_dict(cfg_options)
    with open(path) as f:
        linenos = config_linenos(f.read())
    return validate_config(cfg, linenos)


def dump_config(cfg):
    """Canonical text of a complete config; parsing it gives ``cfg`` back."""
    return cfg.pretty_text
