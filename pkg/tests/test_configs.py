import math

import pytest

from trigspline import configs
from trigspline import _examples
from trigspline.configs import ConfigError

SETTINGS = {'p1': '0',
            'p2': '1',
            'f': '-x',
            'a': '0',
            'b': '1',
            'u_a': '0',
            'u_b': '0',
            'n': '9'}


def config_text(*extra, **settings):
    settings = {**SETTINGS, **settings}
    lines = [f'{key} = {value}' for key, value in settings.items() if value is not None]
    return '\n'.join(lines + list(extra)) + '\n'


def parse(text, **environ):
    return configs.parse_config(text, environ=environ)


def test_parse_config_defaults():
    config = parse(config_text())

    assert config.family == 'even'
    assert config.r == 3
    assert config.eps_tail == 1e-10
    assert config.samples == 400
    assert config.exact is None and config.out is None
    assert config.spec.family == 'even'
    assert config.problem.f(2.0) == -2.0


@pytest.mark.parametrize('example', sorted(_examples.EXAMPLES))
def test_parse_examples(example):
    config = parse(_examples.EXAMPLES[example])

    assert config.n == 9 and config.r == 3
    assert config.exact is not None
    assert config.problem.validate() is not None


def test_parse_example1_constants():
    config = parse(_examples.EXAMPLES[1])

    assert config.constants == {'C': 0.0}
    assert config.u_b == 0.5
    assert config.p1(0.5) == 0.0
    assert config.f(0.0) == -2.0


def test_parse_example2_interval():
    config = parse(_examples.EXAMPLES[2])

    assert config.b == math.pi
    assert config.u_b == -1.0


def test_constants_chain_and_override():
    config = parse(config_text('const A = 2', 'const B = A*pi', 'const pi = 3',
                               b='pi', p2='B'))

    assert config.constants == {'A': 2.0, 'B': 2 * math.pi, 'pi': 3.0}
    assert config.b == 3.0
    assert config.p2(0.0) == 2 * math.pi


@pytest.mark.parametrize('family, expected', [('sts1', 'odd1'), ('STC', 'even'), ('odd0', 'odd0')])
def test_family_alias(family, expected):
    assert parse(config_text(family=family)).family == expected


@pytest.mark.parametrize(
    'environ, extra, expected',
    [({'TRIGSPLINE_EPS_TAIL': '1e-8'}, (), 1e-8),
     ({'TRIGSPLINE_EPS_TAIL': '1e-8'}, ('eps_tail = 1e-6',), 1e-6),
     ({}, ('eps_tail = 1e-12',), 1e-12)])
def test_eps_tail(environ, extra, expected):
    assert parse(config_text(*extra), **environ).eps_tail == expected


@pytest.mark.parametrize('value', ['0', '-1e-3', 'spam'])
def test_eps_tail_environ_invalid(value):
    with pytest.raises(ConfigError, match=r'TRIGSPLINE_EPS_TAIL must be a positive number'):
        parse(config_text(), TRIGSPLINE_EPS_TAIL=value)


@pytest.mark.parametrize(
    'text, lineno, match',
    [(config_text('spam = 1'), 9, r"line 9: unknown key 'spam'"),
     (config_text(f=None), None, r"^missing required key 'f'$"),
     (config_text(f='2 +* x'), 3, r"line 3: f: unexpected '\*' at offset 3"),
     (config_text(f='spam(x)'), 3, r"unknown function 'spam'"),
     (config_text(p1='K*x'), 1, r"line 1: p1: unbound constant\(s\) \['K'\]"),
     (config_text(a='x'), 4, r"a must not depend on x"),
     (config_text(u_b='1/0'), 7, r"u_b is not a finite number"),
     (config_text(n='nine'), 8, r"n must be an integer: 'nine'"),
     (config_text(a='1', b='0'), 5, r'interval needs a < b'),
     (config_text(family='spam'), 9, r"unknown family 'spam'"),
     (config_text(family='odd0', u_a='1'), 6, r'odd0 family needs zero boundary values'),
     (config_text(family='odd1', u_b='-1'), 7, r'odd1 family needs zero boundary values'),
     (config_text(r='2'), 9, r'collocation needs r >= 3: 2'),
     (config_text(n='3'), 8, r'even family needs n >= 4: 3'),
     (config_text(samples='1'), 9, r'samples must be at least 2'),
     (config_text('n = 11'), 9, r"duplicate key 'n'")])
def test_parse_config_invalid(text, lineno, match):
    with pytest.raises(ConfigError, match=match) as info:
        parse(text)

    assert info.value.lineno == lineno
    assert isinstance(info.value, ValueError)


def test_load_config(tmp_path):
    filepath = tmp_path / 'example3.cfg'
    filepath.write_text(config_text('family = odd0', 'exact = sin(x)/sin(1) - x',
                                    'out = ex3.csv'), encoding='utf-8')

    config = configs.load_config(filepath, environ={})

    assert config.family == 'odd0'
    assert config.out == 'ex3.csv'
    assert config.exact(0.0) == 0.0


def test_load_config_missing(tmp_path):
    with pytest.raises(OSError):
        configs.load_config(tmp_path / 'spam.cfg', environ={})
