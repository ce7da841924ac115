"""Validated run configurations for the ``solve`` workflow."""

import logging
import os
import typing

from . import basis
from . import bvp
from . import expressions
from . import series
from .formats.config import ConfigError, ConfigDocument, Config

__all__ = ['ENV_EPS_TAIL',
           'DEFAULT_FAMILY', 'DEFAULT_ORDER', 'DEFAULT_SAMPLES',
           'REQUIRED', 'OPTIONAL',
           'ConfigError',
           'RunConfig',
           'default_eps_tail',
           'parse_config', 'load_config']

ENV_EPS_TAIL = 'TRIGSPLINE_EPS_TAIL'

DEFAULT_FAMILY = 'even'

DEFAULT_ORDER = 3

DEFAULT_SAMPLES = bvp.DEFAULT_PROBES

EXPRESSION_KEYS = ('p1', 'p2', 'f', 'exact')

NUMBER_KEYS = ('a', 'b', 'u_a', 'u_b', 'eps_tail')

INTEGER_KEYS = ('r', 'n', 'm_cap', 'samples')

REQUIRED = ('p1', 'p2', 'f', 'a', 'b', 'u_a', 'u_b', 'n')

OPTIONAL = ('family', 'r', 'exact', 'eps_tail', 'm_cap', 'samples', 'out')

log = logging.getLogger(__name__)


def default_eps_tail(environ: typing.Mapping[str, str] = os.environ,
                     *, default: float = series.DEFAULT_EPS_TAIL) -> float:
    """Return the tail tolerance from ``TRIGSPLINE_EPS_TAIL`` or ``default``.

    >>> default_eps_tail({})
    1e-10

    >>> default_eps_tail({}, default=1e-6)
    1e-06

    >>> default_eps_tail({'TRIGSPLINE_EPS_TAIL': '1e-8'})
    1e-08
    """
    value = environ.get(ENV_EPS_TAIL)
    if value is None:
        return default
    try:
        result = float(value)
    except ValueError:
        result = float('nan')
    if not result > 0:
        raise ConfigError(f'{ENV_EPS_TAIL} must be a positive number: {value!r}')
    return result


class RunConfig(typing.NamedTuple):
    """Problem, basis and output settings of one ``solve`` run."""

    family: str

    r: int

    n: int

    a: float

    b: float

    u_a: float

    u_b: float

    p1: expressions.Expr

    p2: expressions.Expr

    f: expressions.Expr

    exact: typing.Optional[expressions.Expr] = None

    constants: typing.Mapping[str, float] = {}

    eps_tail: float = series.DEFAULT_EPS_TAIL

    m_cap: int = series.DEFAULT_M_CAP

    samples: int = DEFAULT_SAMPLES

    out: typing.Optional[str] = None

    @property
    def spec(self) -> basis.BasisSpec:
        return basis.make_spec(self.family, self.n, self.r,
                               eps_tail=self.eps_tail, m_cap=self.m_cap)

    @property
    def problem(self) -> bvp.BvpProblem:
        return bvp.BvpProblem(self.p1, self.p2, self.f,
                              self.a, self.b, self.u_a, self.u_b, self.exact)


def _constants(document: ConfigDocument) -> typing.Dict[str, float]:
    result = {}
    for line in document.constants:
        value = _number(line, result)
        if line.key in expressions.PREDEFINED:
            log.debug('line %d: constant %r redefines the predefined value',
                      line.lineno, line.key)
        result[line.key] = value
    return result


def _expression(line, constants) -> expressions.Expr:
    try:
        expr = expressions.parse(line.value, constants)
    except expressions.ExpressionSyntaxError as e:
        raise ConfigError(f'{line.key}: {e}', lineno=line.lineno)
    if expr.unbound:
        raise ConfigError(f'{line.key}: unbound constant(s)'
                          f' {sorted(expr.unbound)!r}', lineno=line.lineno)
    return expr


def _number(line, constants) -> float:
    expr = _expression(line, constants)
    if not expr.is_constant:
        raise ConfigError(f'{line.key} must not depend on x: {line.value!r}',
                          lineno=line.lineno)
    try:
        return expr(0.0)
    except expressions.EvaluationError:
        raise ConfigError(f'{line.key} is not a finite number: {line.value!r}',
                          lineno=line.lineno)


def _integer(line) -> int:
    try:
        return int(line.value)
    except ValueError:
        raise ConfigError(f'{line.key} must be an integer: {line.value!r}',
                          lineno=line.lineno)


def parse_config(text: str, *,
                 environ: typing.Mapping[str, str] = os.environ) -> RunConfig:
    """Parse and validate the ``key = value`` run configuration ``text``.

    Args:
        text: Configuration with ``#`` comments and ``const NAME = value`` lines.
        environ: Environment for the ``TRIGSPLINE_EPS_TAIL`` default.

    Returns:
        RunConfig: With defaults filled in.

    Raises:
        ConfigError: Naming the offending key and line number.

    Example:
        >>> cfg = parse_config('''
        ... const C = 0
        ... p1 = C/(1+x)
        ... p2 = -x/(1+x)
        ... f = (C-2-x^2*(1+x))/(1+x)^3
        ... a = 0
        ... b = 1
        ... u_a = 0
        ... u_b = 1/2
        ... n = 9
        ... ''', environ={})
        >>> cfg.family, cfg.r, cfg.n, cfg.u_b, cfg.constants, cfg.samples
        ('even', 3, 9, 0.5, {'C': 0.0}, 400)
    """
    document = Config.loads(text)

    for line in document.settings:
        if line.key not in REQUIRED + OPTIONAL:
            raise ConfigError(f'unknown key {line.key!r}', lineno=line.lineno)
    for key in REQUIRED:
        if document.get(key) is None:
            raise ConfigError(f'missing required key {key!r}')

    constants = _constants(document)
    kwargs = {'constants': constants,
              'family': DEFAULT_FAMILY,
              'r': DEFAULT_ORDER}

    for line in document.settings:
        if line.key in EXPRESSION_KEYS:
            kwargs[line.key] = _expression(line, constants)
        elif line.key in NUMBER_KEYS:
            kwargs[line.key] = _number(line, constants)
        elif line.key in INTEGER_KEYS:
            kwargs[line.key] = _integer(line)
        elif line.key == 'family':
            try:
                kwargs['family'] = basis.Family[line.value].name
            except KeyError:
                raise ConfigError(f'unknown family {line.value!r}'
                                  f' (one of {basis.Family.names()!r})',
                                  lineno=line.lineno)
        else:
            kwargs[line.key] = line.value

    if 'eps_tail' not in kwargs:
        kwargs['eps_tail'] = default_eps_tail(environ)

    return _validate(RunConfig(**kwargs), document)


def _validate(config: RunConfig, document: ConfigDocument) -> RunConfig:
    def lineno(key):
        line = document.get(key)
        return None if line is None else line.lineno

    if not config.a < config.b:
        raise ConfigError(f'interval needs a < b: {(config.a, config.b)!r}',
                          lineno=lineno('b'))
    if basis.Family[config.family].zero_boundary and (config.u_a or config.u_b):
        raise ConfigError(f'{config.family} family needs zero boundary values:'
                          f' {(config.u_a, config.u_b)!r}',
                          lineno=lineno('u_a') if config.u_a else lineno('u_b'))
    if config.samples < 2:
        raise ConfigError(f'samples must be at least 2: {config.samples!r}',
                          lineno=lineno('samples'))
    if config.r < bvp.MIN_ORDER:
        raise ConfigError(f'collocation needs r >= {bvp.MIN_ORDER:d}: {config.r!r}',
                          lineno=lineno('r'))
    if config.family == 'even' and config.n < 4:
        raise ConfigError(f'even family needs n >= 4: {config.n!r}', lineno=lineno('n'))
    try:
        config.spec
    except ValueError as e:
        raise ConfigError(str(e))
    return config


def load_config(filename, *, environ: typing.Mapping[str, str] = os.environ) -> RunConfig:
    """Read and parse the run configuration file ``filename`` (UTF-8)."""
    with open(filename, encoding=Config.encoding) as f:
        text = f.read()
    log.debug('load_config(%r)', filename)
    return parse_config(text, environ=environ)
