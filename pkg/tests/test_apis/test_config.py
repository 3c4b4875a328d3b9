import os.path as osp
from types import SimpleNamespace

import pytest

from dnse.apis import (DEFAULTS, REQUIRED_KEYS, config_linenos, dump_config,
                       load_config, parse_config, validate_config)
from dnse.apis.config import _dict_key
from dnse.core import ConfigError

CONFIG_DIR = osp.join(osp.dirname(__file__), '../..', 'configs')

MINIMAL = """\
grid = dict(N=4)
params = dict(nu=1., mu=0.1, M=4)
experiment = dict(type='simulate', intervals=1)
trilinear = dict(c=1.)
"""


def test_parse_minimal():
    cfg = parse_config(MINIMAL)
    # unset keys take the defaults
    assert cfg.grid.L == pytest.approx(DEFAULTS['grid']['L'])
    assert cfg.params.alpha == 1. and cfg.params.scheme == 'etd1'
    assert cfg.forcing == dict(type='Zero')
    assert cfg.tolerances.fixpoint == 1e-10
    assert cfg.trilinear.c == 1. and cfg.trilinear.budget == 200
    assert cfg.experiment == dict(type='simulate', intervals=1)
    assert cfg.seed == 0 and cfg.work_dir is None

    named = parse_config(MINIMAL.replace(
        "dict(type='simulate', intervals=1)", "'check'"))
    assert named.experiment == dict(type='check')


def test_round_trip():
    cfg = parse_config(MINIMAL)
    assert parse_config(dump_config(cfg)).to_dict() == cfg.to_dict()


def test_empty_config():
    with pytest.raises(ConfigError) as excinfo:
        parse_config('\n')
    for key in REQUIRED_KEYS:
        assert key in str(excinfo.value)


def test_missing_keys():
    with pytest.raises(ConfigError, match='params.nu'):
        parse_config("experiment = 'simulate'\n")
    with pytest.raises(ConfigError, match='experiment'):
        parse_config('params = dict(nu=1.)\n')


@pytest.mark.parametrize('line,key,msg', [
    ('params = dict(nu=1., alpha=0.4)', 'params.alpha',
     'alpha must exceed 1/2'),
    ('params = dict(nu=-1.)', 'params.nu', 'nu must be positive'),
    ('params = dict(nu=1., M=0)', 'params.M', 'M must be an integer'),
    ('params = dict(nu=1., scheme="rk4")', 'params.scheme',
     'unknown scheme'),
    ('params = dict(nu=1.)\ngrid = dict(N=7)', 'grid.N', 'even integer'),
    ('params = dict(nu=1.)\ngrid = dict(L=0.)', 'grid.L',
     'L must be positive'),
])
def test_invalid_values(line, key, msg):
    text = line + "\nexperiment = 'simulate'\n"
    with pytest.raises(ConfigError, match=msg) as excinfo:
        parse_config(text)
    assert excinfo.value.key == key
    assert excinfo.value.lineno == config_linenos(text)[key]
    assert str(excinfo.value).startswith(f'line {excinfo.value.lineno}: ')


def test_unknown_keys():
    text = MINIMAL + 'params2 = dict(nu=1.)\n'
    with pytest.raises(ConfigError, match='unknown key "params2"') as e:
        parse_config(text)
    assert e.value.lineno == 5

    text = MINIMAL.replace('dict(N=4)', 'dict(N=4, Q=3)')
    with pytest.raises(ConfigError, match='unknown key "grid.Q"') as e:
        parse_config(text)
    assert e.value.lineno == 1

    text = MINIMAL.replace('intervals=1', 'intervals=1, steps=3')
    with pytest.raises(ConfigError, match='unknown option "steps"') as e:
        parse_config(text)
    assert e.value.lineno == 3

    with pytest.raises(ConfigError, match='not a registered experiment'):
        parse_config(MINIMAL.replace("type='simulate'", "type='train'"))


def test_invalid_fields():
    text = MINIMAL + (
        "forcing = dict(type='SingleMode', k=(1, 0, 0),\n"
        '               polarization=(1, 0, 0))\n')
    with pytest.raises(ConfigError, match='invalid field spec') as e:
        parse_config(text)
    assert e.value.key == 'forcing' and e.value.lineno == 5

    text = MINIMAL + "initial = dict(endpoint=dict(type='Noise'))\n"
    with pytest.raises(ConfigError, match='invalid field spec') as e:
        parse_config(text)
    assert e.value.key == 'initial.endpoint'


def test_syntax_error():
    with pytest.raises(ConfigError, match='invalid syntax') as e:
        config_linenos('grid = dict(N=4)\nparams = dict(nu=1.,, M=2)\n')
    assert e.value.lineno == 2
    with pytest.raises(ConfigError, match='line 2'):
        parse_config('grid = dict(N=4)\nparams = dict(nu=1.,, M=2)\n')


def test_config_linenos():
    linenos = config_linenos(MINIMAL)
    assert linenos['grid'] == 1 and linenos['grid.N'] == 1
    assert linenos['params.M'] == 2
    assert linenos['experiment.intervals'] == 3
    assert linenos['trilinear.c'] == 4
    assert config_linenos("a = {'b': dict(c=1)}\n")['a.b.c'] == 1
    text = "a = {\n    'b': {\n        'c': 1,\n        2: 3}}\n"
    linenos = config_linenos(text)
    assert linenos['a.b'] == 2 and linenos['a.b.c'] == 3
    assert 'a.b.2' not in linenos


def test_config_string_keys():
    # keys as python 3.7 parses them
    assert _dict_key(SimpleNamespace(s='b')) == 'b'
    assert _dict_key(SimpleNamespace(value='b')) == 'b'
    assert _dict_key(SimpleNamespace(value=2)) is None
    assert _dict_key(None) is None


def test_validate_dict():
    cfg = validate_config(dict(params=dict(nu=2.), experiment='simulate'))
    assert cfg.params.nu == 2. and cfg.params.M == DEFAULTS['params']['M']
    # the defaults themselves are never modified
    assert DEFAULTS['params']['nu'] is None


def test_load_config():
    path = osp.join(CONFIG_DIR, 'simulate/simulate_n8_zero.py')
    cfg = load_config(path)
    assert cfg.grid.N == 8
    assert cfg.params.nu == 1. and cfg.params.M == 16
    assert cfg.params.mu == 0.1
    assert cfg.experiment == dict(type='simulate', intervals=2)

    cfg = load_config(path, {'params.M': 8, 'seed': 5})
    assert cfg.params.M == 8 and cfg.seed == 5


@pytest.mark.parametrize('name', [
    'simulate/simulate_n16_nu1_random.py', 'check/check_n16_nu100.py',
    'check/check_n16_scan.py', 'contract/contract_n16_scan.py',
    'fixpoint/fixpoint_n16_nu100.py', 'fixpoint/fixpoint_n16_unforced.py',
    'estimate_c/estimate_c_n16_alpha1.py',
    'regularity/regularity_n16_forced.py'
])
def test_shipped_configs(name):
    cfg = load_config(osp.join(CONFIG_DIR, name))
    assert cfg.grid.N == 16
    assert cfg.params.nu > 0
