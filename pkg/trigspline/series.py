"""Convergence factor and the aliased series behind the fundamental splines.

All three spline families are assembled from the sums

    H(k)    = s(k) + sum_m [s(2mP + k) + s(2mP - k)]
    c(j, t) = s(j) j^q cos(jt + q pi/2) + sum_m [...both aliases...]
    s(j, t) = s(j) j^q sin(jt + q pi/2) + sum_m w_m [... + alias - alias ...]

with the convergence factor ``s(j) = j**-(1 + r)`` and the alias half-period
``P``. The infinite sums over ``m`` are cut at the first ``M`` whose
integral-test tail bound drops below ``eps_tail`` (capped at ``m_cap``).
"""

import logging
import math
import typing
import warnings

import numpy as np

from . import tools

__all__ = ['DEFAULT_EPS_TAIL', 'PLOT_EPS_TAIL', 'DEFAULT_M_CAP',
           'TruncationWarning',
           'SeriesParams', 'Truncation',
           'sigma1',
           'tail_bound', 'n_terms',
           'h_factors', 'c_kernels', 's_kernels',
           'h_factor', 'c_kernel', 's_kernel']

DEFAULT_EPS_TAIL = 1e-10

PLOT_EPS_TAIL = 1e-6

DEFAULT_M_CAP = 1_000_000

CHUNK_SIZE = 4_096

log = logging.getLogger(__name__)


class TruncationWarning(RuntimeWarning):
    """Summation cap reached before the tail bound fell below tolerance."""


class SeriesParams(typing.NamedTuple):
    """Spline order ``r``, derivative order ``q`` and truncation controls.

    Example:
        >>> SeriesParams(3)
        SeriesParams(r=3, q=0, eps_tail=1e-10, m_cap=1000000)
    """

    r: int

    q: int = 0

    eps_tail: float = DEFAULT_EPS_TAIL

    m_cap: int = DEFAULT_M_CAP

    def validate(self) -> 'SeriesParams':
        """Return the params unchanged or raise ``ValueError``."""
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f'spline order r must be a positive integer: {self.r!r}')
        if not isinstance(self.q, int) or not 0 <= self.q <= self.r - 1:
            raise ValueError(f'derivative order q must be in [0, {self.r - 1:d}]'
                             f' for r={self.r:d}: {self.q!r}')
        if not self.eps_tail > 0:
            raise ValueError(f'eps_tail must be positive: {self.eps_tail!r}')
        if not isinstance(self.m_cap, int) or self.m_cap < 1:
            raise ValueError(f'm_cap must be a positive integer: {self.m_cap!r}')
        return self

    @property
    def exponent(self) -> int:
        """Power of the alias frequency in each summand (``q - r - 1``)."""
        return self.q - self.r - 1


class Truncation(typing.NamedTuple):
    """Number of alias terms summed and whether the tail bound was met."""

    m: int

    converged: bool


def sigma1(r: int, j):
    """Return the convergence factor ``j ** -(1 + r)``.

    >>> sigma1(3, 2)
    0.0625

    >>> sigma1(1, 10)
    0.01
    """
    result = np.power(np.asarray(j, dtype=float), -(1 + r))
    return float(result) if result.ndim == 0 else result


def tail_bound(params: SeriesParams, p: int, m: int) -> float:
    """Return the integral-test bound on the series tail after ``m`` alias terms.

    Every summand with index above ``m`` is at most ``(2Pm - P) ** (q - r - 1)``
    in magnitude, two of them per ``m``.

    >>> tail_bound(SeriesParams(r=1), 1, 1)
    1.0
    """
    k = -params.exponent - 1
    return (p * (2 * m - 1)) ** -k / (p * k)


def n_terms(params: SeriesParams, p: int) -> Truncation:
    """Return the smallest ``M`` whose tail bound is below ``params.eps_tail``.

    >>> n_terms(SeriesParams(r=3), 8)
    Truncation(m=48, converged=True)

    >>> n_terms(SeriesParams(r=3, q=2, m_cap=1_000), 8)
    Truncation(m=1000, converged=False)
    """
    params = params.validate()
    if p < 1:
        raise ValueError(f'alias half-period must be positive: {p!r}')

    k = -params.exponent - 1
    threshold = (params.eps_tail * p * k) ** (-1 / k) / p
    estimate = (threshold + 1) / 2
    if estimate >= params.m_cap:
        m = params.m_cap
    else:
        m = max(1, math.floor(estimate))
        while m < params.m_cap and tail_bound(params, p, m) >= params.eps_tail:
            m += 1

    converged = tail_bound(params, p, m) < params.eps_tail
    log.debug('n_terms(r=%d, q=%d, P=%d, eps=%g) -> M=%d (converged=%s)',
              params.r, params.q, p, params.eps_tail, m, converged)
    return Truncation(m, converged)


def _truncate(params: SeriesParams, p: int, what: str) -> int:
    m, converged = n_terms(params, p)
    if not converged:
        bound = tail_bound(params, p, m)
        warnings.warn(f'{what} tail not converged for r={params.r:d},'
                      f' q={params.q:d}, P={p:d}: m_cap={m:d} leaves'
                      f' tail bound {bound:.3g} >= eps_tail={params.eps_tail:g}',
                      TruncationWarning, stacklevel=3)
    return m


def _chunks(m: int) -> typing.Iterator[np.ndarray]:
    for start in range(1, m + 1, CHUNK_SIZE):
        yield np.arange(start, min(start + CHUNK_SIZE, m + 1), dtype=float)


def _quarter_turns(cos, sin, q: int):
    """Return ``(cos(x + q pi/2), sin(x + q pi/2))`` from ``cos(x)``, ``sin(x)``."""
    turn = q % 4
    if turn == 0:
        return cos, sin
    elif turn == 1:
        return -sin, cos
    elif turn == 2:
        return -cos, -sin
    return sin, -cos


def h_factors(params: SeriesParams, p: int, ks) -> np.ndarray:
    """Return the normalizing sums ``H(k)`` for an array of ``1 <= k <= P``."""
    params = params._replace(q=0)
    ks = _check_indexes(ks, p)
    m = _truncate(params, p, 'H')

    e = params.exponent
    acc = tools.CompensatedSum(ks.shape)
    for ms in _chunks(m):
        base = 2 * p * ms[:, np.newaxis]
        acc.add((np.power(base + ks, e) + np.power(base - ks, e)).sum(axis=0))
    return np.power(ks, e) + acc.value


def c_kernels(params: SeriesParams, p: int, js, ts) -> np.ndarray:
    """Return the cosine kernel ``c(j, t)`` as ``(len(js), len(ts))`` array."""
    return _kernels(params, p, js, ts, odd=False, alternating=False)


def s_kernels(params: SeriesParams, p: int, js, ts,
              *, alternating: bool) -> np.ndarray:
    """Return the sine kernel ``s(j, t)`` as ``(len(js), len(ts))`` array.

    With ``alternating`` the alias pair ``m`` is weighted by ``(-1) ** m``.
    """
    return _kernels(params, p, js, ts, odd=True, alternating=alternating)


def _kernels(params, p, js, ts, *, odd: bool, alternating: bool) -> np.ndarray:
    js = _check_indexes(js, p)
    ts = np.asarray(ts, dtype=float).reshape(-1)
    m = _truncate(params, p, 's' if odd else 'c')

    q, e = params.q, params.exponent
    shape = (len(js), len(ts))

    # cos(B +- jt) and sin(B +- jt) with B = 2mPt + q pi/2 expand into sums
    # over m of B-only terms, weighted per j: one matrix product per chunk
    first, second = tools.CompensatedSum(shape), tools.CompensatedSum(shape)
    for ms in _chunks(m):
        base = 2 * p * ms[:, np.newaxis]
        w_plus = np.power(base + js, e)
        w_minus = np.power(base - js, e)
        if alternating:
            sign = np.where(ms % 2, -1.0, 1.0)[:, np.newaxis]
            w_plus, w_minus = sign * w_plus, sign * w_minus

        arg = base * ts
        cos_b, sin_b = _quarter_turns(np.cos(arg), np.sin(arg), q)
        if odd:
            first.add((w_plus - w_minus).T @ sin_b)
            second.add((w_plus + w_minus).T @ cos_b)
        else:
            first.add((w_plus + w_minus).T @ cos_b)
            second.add((w_plus - w_minus).T @ sin_b)

    jt = np.multiply.outer(js, ts)
    cos_jt, sin_jt = np.cos(jt), np.sin(jt)
    own_cos, own_sin = _quarter_turns(cos_jt, sin_jt, q)
    weight = np.power(js, e)[:, np.newaxis]
    if odd:
        return weight * own_sin + cos_jt * first.value + sin_jt * second.value
    return weight * own_cos + cos_jt * first.value - sin_jt * second.value


def _check_indexes(ks, p: int) -> np.ndarray:
    ks = np.asarray(ks, dtype=float).reshape(-1)
    if ks.size and (ks.min() < 1 or ks.max() > p or np.any(ks != np.round(ks))):
        raise ValueError(f'frequency indexes must be integers in [1, {p:d}]:'
                         f' {ks.tolist()!r}')
    return ks


def h_factor(params: SeriesParams, p: int, k: int) -> float:
    """Return ``H(k)`` for alias half-period ``p``.

    >>> h_factor(SeriesParams(r=9), 8, 1) - 1 < 2 * 9 ** -10
    True
    """
    return float(h_factors(params, p, [k])[0])


def c_kernel(params: SeriesParams, p: int, j: int, t: float) -> float:
    """Return the cosine kernel ``c(j, t)`` at order ``params.q``.

    >>> c_kernel(SeriesParams(r=3, q=1), 8, 1, 0.0) == 0
    True
    """
    return float(c_kernels(params, p, [j], [t])[0, 0])


def s_kernel(params: SeriesParams, p: int, j: int, t: float,
             alternating: bool) -> float:
    """Return the sine kernel ``s(j, t)`` at order ``params.q``.

    >>> s_kernel(SeriesParams(r=3), 4, 2, 0.0, alternating=True) == 0
    True
    """
    return float(s_kernels(params, p, [j], [t], alternating=alternating)[0, 0])
