"""Even and odd fundamental trigonometric splines and their derivatives."""

import functools
import math
import typing
import warnings

import numpy as np

from . import grids
from . import series
from . import tools

__all__ = ['Family', 'EvenStc', 'OddSts0', 'OddSts1',
           'BasisSpec', 'BasisMatrix',
           'make_spec',
           'basis_matrix',
           'stc', 'sts0', 'sts1']

DOMAIN_SLACK = 1e-12


class FamilyMeta(type):
    """Collect and retrieve concrete ``Family`` subclasses by name."""

    _map = {}

    def __init__(self, name, bases, dct):  # noqa: N804
        if not dct.get('__abstract__'):
            if 'name' not in dct:
                self.name = tools.snakify(name, sep='-')
            self._map[self.name] = self
            if 'aliases' in dct:
                self._map.update(dict.fromkeys(dct['aliases'], self))

    def __getitem__(self, name):  # noqa: N804
        try:
            return self._map[name.lower()]
        except (KeyError, AttributeError):
            raise KeyError(f'{self!r} unknown family: {name!r}')

    def names(self) -> typing.List[str]:  # noqa: N804
        """Return the canonical family names."""
        return sorted({f.name for f in self._map.values()})


class Family(metaclass=FamilyMeta):
    """Fundamental spline family bound to its stitching/interpolation grid."""

    __abstract__ = True

    grid_family: str

    indicator: int

    alternating: bool = False

    zero_boundary: bool

    @staticmethod
    def period(n: int) -> int:
        """Return the alias half-period ``P`` for ``n`` nodes."""
        raise NotImplementedError  # pragma: no cover

    @classmethod
    def grid(cls, n: int) -> grids.Grid:
        return grids.make_grid(grids.GridSpec(cls.grid_family, cls.indicator, n))

    @classmethod
    def frequencies(cls, n: int) -> typing.Tuple[np.ndarray, np.ndarray]:
        """Return the summed frequencies ``j`` and their weights."""
        raise NotImplementedError  # pragma: no cover

    @classmethod
    def scale(cls, n: int) -> float:
        raise NotImplementedError  # pragma: no cover

    @staticmethod
    def constant(q: int) -> float:
        """Return the frequency-zero term of the bracket."""
        return 0.0

    @staticmethod
    def sample_weights(n: int) -> np.ndarray:
        """Return the per-node weights of the interpolating sum."""
        return np.ones(n)

    @staticmethod
    def node_trig(js: np.ndarray, nodes: np.ndarray) -> np.ndarray:
        raise NotImplementedError  # pragma: no cover

    @classmethod
    def kernels(cls, params: series.SeriesParams, n: int, js, ts) -> np.ndarray:
        raise NotImplementedError  # pragma: no cover


class EvenStc(Family):
    """Paired (even) fundamental splines ``stc`` on the ``even2`` indicator-0 grid."""

    name = 'even'

    aliases = ('stc',)

    grid_family = 'even2'

    indicator = 0

    zero_boundary = False

    @staticmethod
    def period(n: int) -> int:
        return n - 1

    @classmethod
    def frequencies(cls, n: int):
        js = np.arange(1, n, dtype=float)
        weights = np.ones(n - 1)
        weights[-1] = 0.5
        return js, weights

    @classmethod
    def scale(cls, n: int) -> float:
        return 2 / (n - 1)

    @staticmethod
    def constant(q: int) -> float:
        return 0.5 if q == 0 else 0.0

    @staticmethod
    def sample_weights(n: int) -> np.ndarray:
        weights = np.ones(n)
        weights[[0, -1]] = 0.5
        return weights

    @staticmethod
    def node_trig(js, nodes):
        return np.cos(np.multiply.outer(js, nodes))

    @classmethod
    def kernels(cls, params, n, js, ts):
        return series.c_kernels(params, cls.period(n), js, ts)


class OddSts0(Family):
    """Odd fundamental splines ``sts0`` on the ``odd3`` indicator-0 grid."""

    name = 'odd0'

    aliases = ('sts0',)

    grid_family = 'odd3'

    indicator = 0

    zero_boundary = True

    @staticmethod
    def period(n: int) -> int:
        return n + 1

    @classmethod
    def frequencies(cls, n: int):
        return np.arange(1, n + 1, dtype=float), np.ones(n)

    @classmethod
    def scale(cls, n: int) -> float:
        return 2 / (n + 1)

    @staticmethod
    def node_trig(js, nodes):
        return np.sin(np.multiply.outer(js, nodes))

    @classmethod
    def kernels(cls, params, n, js, ts):
        return series.s_kernels(params, cls.period(n), js, ts,
                                alternating=cls.alternating)


class OddSts1(OddSts0):
    """Odd fundamental splines ``sts1`` on the ``odd3`` indicator-1 grid."""

    name = 'odd1'

    aliases = ('sts1',)

    indicator = 1

    alternating = True

    @staticmethod
    def period(n: int) -> int:
        return n

    @classmethod
    def frequencies(cls, n: int):
        js, weights = np.arange(1, n + 1, dtype=float), np.ones(n)
        weights[-1] = 0.5
        return js, weights

    @classmethod
    def scale(cls, n: int) -> float:
        return 2 / n


class BasisSpec(typing.NamedTuple):
    """Spline family name, node count ``n`` and series parameters.

    Example:
        >>> spec = make_spec('odd0', 9, 3)
        >>> spec.family, spec.n, spec.r, spec.period
        ('odd0', 9, 3, 10)
    """

    family: str

    n: int

    series: series.SeriesParams

    @property
    def kind(self) -> typing.Type[Family]:
        return Family[self.family]

    @property
    def r(self) -> int:
        return self.series.r

    @property
    def period(self) -> int:
        return self.kind.period(self.n)

    @property
    def grid(self) -> grids.Grid:
        return self.kind.grid(self.n)

    @property
    def nodes(self) -> np.ndarray:
        return np.array(self.grid.nodes)

    def validate(self) -> 'BasisSpec':
        """Return the spec unchanged or raise ``ValueError``."""
        try:
            kind = self.kind
        except KeyError as e:
            raise ValueError(e.args[0])
        if kind.name != self.family:
            raise ValueError(f'non-canonical family name {self.family!r}'
                             f' (use {kind.name!r})')
        self.series.validate()
        kind.grid(self.n)
        return self


def make_spec(family: str, n: int, r: int,
              *, eps_tail: float = series.DEFAULT_EPS_TAIL,
              m_cap: int = series.DEFAULT_M_CAP) -> BasisSpec:
    """Return a validated :class:`.BasisSpec` (``family`` may be an alias)."""
    try:
        kind = Family[family]
    except KeyError as e:
        raise ValueError(e.args[0])
    params = series.SeriesParams(r, 0, eps_tail, m_cap)
    return BasisSpec(kind.name, n, params).validate()


class BasisMatrix(typing.NamedTuple):
    """Basis values: rows by evaluation point, columns by node index ``k``."""

    values: np.ndarray

    q: int

    warnings: typing.Tuple[str, ...] = ()

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return self.values.shape


def basis_matrix(spec: BasisSpec, q: int, points) -> BasisMatrix:
    """Return the order-``q`` derivatives of all ``N`` fundamental splines at ``points``.

    Kernel values are computed once per ``(j, point)`` and shared across all
    columns. Results are cached and read-only.

    Example:
        >>> spec = make_spec('odd0', 4, 2)
        >>> basis_matrix(spec, 0, []).shape
        (0, 4)
    """
    points = np.asarray(points, dtype=float).reshape(-1)
    if not np.all((points >= -DOMAIN_SLACK) & (points <= math.pi + DOMAIN_SLACK)):
        raise ValueError(f'evaluation points must lie in [0, pi]: {points.tolist()!r}')

    result = _basis_matrix(spec, q, tuple(points.tolist()))
    for message in result.warnings:
        warnings.warn(message, series.TruncationWarning, stacklevel=2)
    return result


@functools.lru_cache(maxsize=256)
def _basis_matrix(spec: BasisSpec, q: int, points: typing.Tuple[float, ...]) -> BasisMatrix:
    spec = spec.validate()
    params = spec.series._replace(q=q).validate()
    kind, n = spec.kind, spec.n

    if not points:
        values = np.zeros((0, n))
        values.flags.writeable = False
        return BasisMatrix(values, q)

    js, weights = kind.frequencies(n)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always', series.TruncationWarning)
        kernels = kind.kernels(params, n, js, points)
        h = series.h_factors(params, kind.period(n), js)

    coeffs = kernels * (weights / h)[:, np.newaxis]
    values = kind.scale(n) * (kind.constant(q) + coeffs.T @ kind.node_trig(js, spec.nodes))
    values.flags.writeable = False

    messages = tuple(f'{spec.family} basis (N={n:d}, q={q:d},'
                     f' {len(points):d} points): {w.message}'
                     for w in caught if issubclass(w.category, series.TruncationWarning))
    return BasisMatrix(values, q, messages)


def _column(spec: BasisSpec, family: str, q: int, k: int, t: float) -> float:
    if spec.family != family:
        raise ValueError(f'{family} needs a {family!r} basis spec: {spec.family!r}')
    if not 1 <= k <= spec.n:
        raise ValueError(f'node index k must be in [1, {spec.n:d}]: {k!r}')
    return float(basis_matrix(spec, q, [t]).values[0, k - 1])


def stc(spec: BasisSpec, q: int, k: int, t: float) -> float:
    """Return the order-``q`` derivative of the ``k``-th even fundamental spline at ``t``.

    >>> spec = make_spec('even', 9, 3)
    >>> abs(stc(spec, 1, 4, 0.0)) < 1e-12
    True
    """
    return _column(spec, 'even', q, k, t)


def sts0(spec: BasisSpec, q: int, k: int, t: float) -> float:
    """Return the order-``q`` derivative of the ``k``-th ``sts0`` spline at ``t``."""
    return _column(spec, 'odd0', q, k, t)


def sts1(spec: BasisSpec, q: int, k: int, t: float) -> float:
    """Return the order-``q`` derivative of the ``k``-th ``sts1`` spline at ``t``."""
    return _column(spec, 'odd1', q, k, t)
