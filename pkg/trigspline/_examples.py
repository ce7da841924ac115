"""Built-in worked examples as run configurations."""

import typing

__all__ = ['EXAMPLES', 'Variant', 'VARIANTS', 'config_text']

EXAMPLES = {
1: '''\
# u'' + C/(1+x) u' - x/(1+x) u = (C - 2 - x^2 (1+x)) / (1+x)^3
const C = 0
p1 = C/(1+x)
p2 = -x/(1+x)
f = (C-2-x^2*(1+x))/(1+x)^3
a = 0
b = 1
u_a = 0
u_b = 1/2
exact = x/(1+x)
family = even
r = 3
n = 9
''',
2: '''\
# u'' + u = cos(x) cos(2x)
p1 = 0
p2 = 1
f = cos(x)*cos(2*x)
a = 0
b = pi
u_a = 1
u_b = -1
exact = 1.0625*cos(x) - .4*sin(x) - .0625*cos(3*x) + .25*x*sin(x)
family = even
r = 3
n = 9
''',
3: '''\
# u'' + u = -x
p1 = 0
p2 = 1
f = -x
a = 0
b = 1
u_a = 0
u_b = 0
exact = sin(x)/sin(1) - x
family = odd0
r = 3
n = 9
''',
}


class Variant(typing.NamedTuple):
    """One reproduced curve family: example, label, overrides."""

    example: int

    name: str

    family: str

    r: int

    constants: typing.Tuple[typing.Tuple[str, float], ...] = ()


VARIANTS = (
    [Variant(1, f'C={c:d}', 'even', 3, (('C', float(c)),)) for c in (0, 1, 10)]
    + [Variant(2, f'r={r:d}', 'even', r) for r in (3, 4, 5)]
    + [Variant(3, f'{family} r={r:d}', family, r)
       for family in ('odd0', 'odd1') for r in (3, 4, 5)])


def config_text(variant: Variant, n: int) -> str:
    """Return the example configuration text for ``variant`` at ``n`` nodes.

    >>> text = config_text(VARIANTS[2], 11)
    >>> [line for line in text.splitlines() if line.startswith(('const', 'r =', 'n ='))]
    ['const C = 10.0', 'r = 3', 'n = 11']
    """
    overrides = {'family': variant.family, 'r': str(variant.r), 'n': str(n)}
    constants = dict(variant.constants)
    lines = []
    for line in EXAMPLES[variant.example].splitlines():
        key, sep, _ = line.partition('=')
        words = key.split()
        if sep and len(words) == 2 and words[0] == 'const' and words[1] in constants:
            line = f'const {words[1]} = {constants[words[1]]!r}'
        elif sep and key.strip() in overrides:
            line = f'{key.strip()} = {overrides[key.strip()]}'
        lines.append(line)
    return '\n'.join(lines) + '\n'
