"""Uniform node families on ``[0, pi]``."""

import functools
import math
import typing

__all__ = ['GRID_FAMILIES',
           'GridSpec', 'Grid',
           'make_grid']

GRID_FAMILIES = {'even2': 3, 'odd3': 1}
"""Grid family names mapped to their minimal node count."""


class GridSpec(typing.NamedTuple):
    """Grid family (``'even2'`` or ``'odd3'``), grid indicator and node count.

    Example:
        >>> GridSpec('even2', 0, 5)
        GridSpec(family='even2', indicator=0, n=5)
    """

    family: str

    indicator: int

    n: int

    def validate(self) -> 'GridSpec':
        """Return the spec unchanged or raise ``ValueError``."""
        try:
            minimum = GRID_FAMILIES[self.family]
        except KeyError:
            raise ValueError(f'unknown grid family: {self.family!r}')
        if self.indicator not in (0, 1):
            raise ValueError(f'grid indicator must be 0 or 1: {self.indicator!r}')
        if not isinstance(self.n, int) or self.n < minimum:
            raise ValueError(f'{self.family} grid needs n >= {minimum:d}: {self.n!r}')
        return self


class Grid(typing.NamedTuple):
    """Strictly increasing nodes of a uniform grid on ``[0, pi]``."""

    spec: GridSpec

    nodes: typing.Tuple[float, ...]

    @property
    def spacing(self) -> float:
        """Distance between consecutive nodes."""
        n, indicator = self.spec.n, self.spec.indicator
        if self.spec.family == 'even2' and indicator == 0:
            return math.pi / (n - 1)
        if self.spec.family == 'odd3' and indicator == 0:
            return math.pi / (n + 1)
        return math.pi / n


def _node_fractions(spec: GridSpec) -> typing.Iterator[typing.Tuple[int, int]]:
    """Yield ``(multiple, divisor)`` pairs with ``node = multiple * pi / divisor``."""
    n = spec.n
    for j in range(1, n + 1):
        if spec.indicator == 1:
            yield 2 * j - 1, 2 * n
        elif spec.family == 'even2':
            yield j - 1, n - 1
        else:
            yield j, n + 1


@functools.lru_cache(maxsize=128)
def make_grid(spec: GridSpec) -> Grid:
    """Return the grid nodes for ``spec``.

    Args:
        spec: Grid family, indicator and node count.

    Returns:
        Grid: Immutable grid with exactly ``spec.n`` nodes.

    Raises:
        ValueError: If ``spec.n`` is below the family minimum.

    Example:
        >>> grid = make_grid(GridSpec('even2', 0, 5))
        >>> [round(t / math.pi, 4) for t in grid.nodes]
        [0.0, 0.25, 0.5, 0.75, 1.0]

        >>> [round(t / math.pi, 4) for t in make_grid(GridSpec('odd3', 1, 3)).nodes]
        [0.1667, 0.5, 0.8333]
    """
    spec = GridSpec(*spec).validate()
    nodes = tuple(math.pi if multiple == divisor else multiple * math.pi / divisor
                  for multiple, divisor in _node_fractions(spec))
    return Grid(spec, nodes)
