"""Run configuration as ``key = value`` lines with ``const NAME = value`` constants."""

import re
import typing

from .base import Format

__all__ = ['ConfigError', 'ConfigLine', 'ConfigDocument',
           'Config']

CONST = 'const'

_NAME = re.compile(r'[A-Za-z_]\w*')


class ConfigError(ValueError):
    """Invalid run configuration, with the offending line number if known."""

    def __init__(self, message: str, *, lineno: typing.Optional[int] = None) -> None:
        if lineno is not None:
            message = f'line {lineno:d}: {message}'
        super().__init__(message)
        self.lineno = lineno


class ConfigLine(typing.NamedTuple):
    """One ``key = value`` setting with its 1-based line number."""

    lineno: int

    key: str

    value: str

    const: bool = False


class ConfigDocument(typing.NamedTuple):
    """Settings and constants in file order."""

    settings: typing.Tuple[ConfigLine, ...]

    constants: typing.Tuple[ConfigLine, ...] = ()

    def get(self, key: str) -> typing.Optional[ConfigLine]:
        for line in self.settings:
            if line.key == key:
                return line
        return None


def iter_lines(file) -> typing.Iterator[ConfigLine]:
    seen = {}
    for lineno, line in enumerate(file, start=1):
        line = line.partition('#')[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        key, value = key.strip(), value.strip()
        if not sep:
            raise ConfigError(f'expected "key = value": {line!r}', lineno=lineno)

        const = False
        words = key.split()
        if len(words) == 2 and words[0] == CONST:
            const, key = True, words[1]
        if not _NAME.fullmatch(key):
            raise ConfigError(f'invalid name: {key!r}', lineno=lineno)
        if not value:
            raise ConfigError(f'missing value for {key!r}', lineno=lineno)

        if (const, key) in seen:
            raise ConfigError(f'duplicate {"constant" if const else "key"} {key!r}'
                              f' (first on line {seen[const, key]:d})', lineno=lineno)
        seen[const, key] = lineno
        yield ConfigLine(lineno, key, value, const)


def load_file(file) -> ConfigDocument:
    lines = list(iter_lines(file))
    return ConfigDocument(tuple(line for line in lines if not line.const),
                          tuple(line for line in lines if line.const))


def dump_file(file, document: ConfigDocument) -> None:
    for line in document.constants:
        print(f'{CONST} {line.key} = {line.value}', file=file)
    for line in document.settings:
        print(f'{line.key} = {line.value}', file=file)


class Config(Format):
    """Run configuration with ``#`` comments.

    >>> doc = Config.loads('const C = 1  # constant\\nn = 9\\n')
    >>> doc.constants
    (ConfigLine(lineno=1, key='C', value='1', const=True),)
    >>> doc.get('n').value
    '9'
    >>> print(Config.dumps(doc))
    const C = 1
    n = 9
    """

    suffix = '.cfg'

    aliases = ('conf', 'ini')

    dumps_rstrip = True

    loadf = staticmethod(load_file)

    dumpf = staticmethod(dump_file)
