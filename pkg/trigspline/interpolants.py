"""Spline interpolants built from node samples."""

import typing

import numpy as np

from . import basis

__all__ = ['Interpolant',
           'interp_even', 'interp_odd0', 'interp_odd1']


class Interpolant:
    """Linear combination of the fundamental splines of one family.

    Args:
        spec: Family, node count and series parameters.
        samples: Function values at the ``spec.n`` grid nodes.

    Example:
        >>> spec = basis.make_spec('odd1', 5, 3)
        >>> interp = Interpolant(spec, [1.0, 2.0, 3.0, 2.0, 1.0])
        >>> interp
        <Interpolant(family='odd1', n=5, r=3)>
        >>> [round(v, 10) for v in interp(spec.nodes).tolist()]
        [1.0, 2.0, 3.0, 2.0, 1.0]
    """

    @classmethod
    def fromfunction(cls, spec: basis.BasisSpec,
                     func: typing.Callable[[np.ndarray], np.ndarray]) -> 'Interpolant':
        """Return the interpolant of ``func`` sampled at the grid nodes of ``spec``."""
        samples = np.broadcast_to(func(spec.nodes), (spec.n,))
        return cls(spec, samples)

    def __init__(self, spec: basis.BasisSpec, samples) -> None:
        spec = spec.validate()
        samples = np.asarray(samples, dtype=float).reshape(-1)
        if len(samples) != spec.n:
            raise ValueError(f'{spec.family} interpolant needs {spec.n:d} samples:'
                             f' {len(samples):d}')
        self.spec = spec
        self.samples = samples
        self.coefficients = spec.kind.sample_weights(spec.n) * samples

    def __repr__(self) -> str:
        return (f'<{self.__class__.__name__}(family={self.spec.family!r},'
                f' n={self.spec.n:d}, r={self.spec.r:d})>')

    def __call__(self, t, q: int = 0):
        """Return the order-``q`` derivative at ``t`` (scalar or array)."""
        points = np.asarray(t, dtype=float)
        matrix = basis.basis_matrix(self.spec, q, points.reshape(-1))
        values = matrix.values @ self.coefficients
        if points.ndim == 0:
            return float(values[0])
        return values.reshape(points.shape)


def _interp(family: str, spec: basis.BasisSpec, samples, q: int, t):
    if spec.family != family:
        raise ValueError(f'interp_{family} needs a {family!r} basis spec: {spec.family!r}')
    return Interpolant(spec, samples)(t, q)


def interp_even(spec: basis.BasisSpec, samples, q: int, t):
    """Evaluate the even-family interpolant of ``samples`` (half weights at both ends).

    >>> spec = basis.make_spec('even', 5, 3)
    >>> round(interp_even(spec, [1.0] * 5, 0, 0.3), 6)
    1.0
    """
    return _interp('even', spec, samples, q, t)


def interp_odd0(spec: basis.BasisSpec, samples, q: int, t):
    """Evaluate the ``sts0`` interpolant of ``samples``."""
    return _interp('odd0', spec, samples, q, t)


def interp_odd1(spec: basis.BasisSpec, samples, q: int, t):
    """Evaluate the ``sts1`` interpolant of ``samples``."""
    return _interp('odd1', spec, samples, q, t)
