"""Collocation solution of the first boundary value problem.

Solve ``u''(x) + p1(x) u'(x) + p2(x) u(x) = f(x)`` on ``[a, b]`` with
``u(a) = u_a`` and ``u(b) = u_b`` by mapping ``[a, b]`` linearly onto
``[0, pi]`` and collocating a fundamental-spline expansion at the grid nodes.
"""

import logging
import math
import typing
import warnings

import numpy as np

from . import basis
from . import expressions
from . import linalg
from . import series

__all__ = ['MIN_ORDER', 'DEFAULT_PROBES',
           'BvpProblem', 'DomainMap', 'MappedProblem',
           'CollocationSolution', 'ErrorTable', 'ErrorReport',
           'map_problem',
           'assemble_even', 'assemble_odd', 'assemble',
           'solve', 'evaluate',
           'collocation_residuals',
           'error_report']

MIN_ORDER = 3

DEFAULT_PROBES = 400

DOMAIN_SLACK = 1e-12

log = logging.getLogger(__name__)

Function = typing.Callable[[np.ndarray], typing.Any]


def function_values(func: Function, x: np.ndarray, what: str) -> np.ndarray:
    """Return ``func(x)`` as float array of ``x.shape`` with finite values."""
    x = np.asarray(x, dtype=float)
    with np.errstate(all='ignore'):
        result = np.broadcast_to(np.asarray(func(x), dtype=float), x.shape)
    bad = ~np.isfinite(result)
    if bad.any():
        x_bad = float(x[bad][0])
        raise expressions.EvaluationError(f'non-finite {what} at x={x_bad!r}', x=x_bad)
    return np.array(result)


class BvpProblem(typing.NamedTuple):
    """Coefficients, interval, boundary values and optional exact solution.

    Coefficient callables take and return arrays (:class:`.Expr` objects do).
    """

    p1: Function

    p2: Function

    f: Function

    a: float

    b: float

    u_a: float

    u_b: float

    exact: typing.Optional[Function] = None

    def validate(self) -> 'BvpProblem':
        """Return the problem unchanged or raise ``ValueError``."""
        bounds = (self.a, self.b, self.u_a, self.u_b)
        if not all(math.isfinite(v) for v in bounds):
            raise ValueError(f'interval and boundary values must be finite: {bounds!r}')
        if not self.a < self.b:
            raise ValueError(f'interval needs a < b: {(self.a, self.b)!r}')
        return self


class DomainMap(typing.NamedTuple):
    """Linear map ``t = lam * (x - a)`` of ``[a, b]`` onto ``[0, pi]``.

    >>> m = DomainMap(0.0, 1.0)
    >>> round(m.lam / math.pi, 12), m.to_x(math.pi / 2)
    (1.0, 0.5)
    """

    a: float

    b: float

    @classmethod
    def fromproblem(cls, problem: BvpProblem) -> 'DomainMap':
        return cls(problem.a, problem.b)

    @property
    def lam(self) -> float:
        return math.pi / (self.b - self.a)

    def to_t(self, x):
        return self.lam * (np.asarray(x, dtype=float) - self.a)

    def to_x(self, t):
        result = self.a + np.asarray(t, dtype=float) / self.lam
        return float(result) if result.ndim == 0 else result

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        slack = DOMAIN_SLACK * (self.b - self.a)
        return bool(np.all((x >= self.a - slack) & (x <= self.b + slack)))


class MappedProblem(typing.NamedTuple):
    """Operator ``q2 v'' + q1 v' + q0 v = rhs`` over ``t`` in ``[0, pi]``."""

    q2: Function

    q1: Function

    q0: Function

    rhs: Function

    map: DomainMap

    def coefficients(self, ts) -> typing.Tuple[np.ndarray, ...]:
        """Return ``(q2, q1, q0, rhs)`` values at ``ts``."""
        ts = np.asarray(ts, dtype=float)
        return tuple(func(ts) for func in self[:4])


def map_problem(problem: BvpProblem, map: typing.Optional[DomainMap] = None) -> MappedProblem:
    """Return the coefficient callbacks of ``problem`` over ``t`` in ``[0, pi]``.

    With ``v(t) = u(x(t))`` the equation becomes
    ``lam**2 v'' + lam p1(x(t)) v' + p2(x(t)) v = f(x(t))``.

    >>> one = lambda x: np.ones_like(x)
    >>> mapped = map_problem(BvpProblem(one, one, one, 0, 1, 0, 0))
    >>> [round(float(v[0]), 6) for v in mapped.coefficients([0.5])]
    [9.869604, 3.141593, 1.0, 1.0]
    """
    problem = problem.validate()
    if map is None:
        map = DomainMap.fromproblem(problem)
    lam = map.lam

    def q2(ts):
        return np.full(np.shape(ts), lam ** 2)

    def q1(ts):
        return lam * function_values(problem.p1, map.to_x(np.asarray(ts, dtype=float)), 'p1')

    def q0(ts):
        return function_values(problem.p2, map.to_x(np.asarray(ts, dtype=float)), 'p2')

    def rhs(ts):
        return function_values(problem.f, map.to_x(np.asarray(ts, dtype=float)), 'f')

    return MappedProblem(q2, q1, q0, rhs, map)


def _operator_matrix(mapped: MappedProblem, spec: basis.BasisSpec, ts) -> np.ndarray:
    """Return ``A[j, k] = (q2 phi_k'' + q1 phi_k' + q0 phi_k)(ts[j])``."""
    q2, q1, q0, _ = mapped.coefficients(ts)
    result = np.zeros((len(ts), spec.n))
    for q, coeff in ((2, q2), (1, q1), (0, q0)):
        result += coeff[:, np.newaxis] * basis.basis_matrix(spec, q, ts).values
    return result


def _check_spec(spec: basis.BasisSpec, *, odd: bool) -> basis.BasisSpec:
    spec = spec.validate()
    if spec.kind.zero_boundary != odd:
        raise ValueError(f'{"odd" if odd else "even"} assembly does not accept'
                         f' the {spec.family!r} family')
    if spec.r < MIN_ORDER:
        raise ValueError(f'collocation needs spline order r >= {MIN_ORDER:d}: {spec.r!r}')
    if not odd and spec.n < 4:
        raise ValueError(f'even collocation needs n >= 4: {spec.n!r}')
    return spec


def collocation_nodes(spec: basis.BasisSpec) -> np.ndarray:
    """Return the collocation nodes in ``t`` (interior nodes for the even family)."""
    nodes = spec.nodes
    return nodes if spec.kind.zero_boundary else nodes[1:-1]


def assemble_even(problem: BvpProblem, spec: basis.BasisSpec,
                  map: typing.Optional[DomainMap] = None) -> linalg.DenseSystem:
    """Return the ``(N-2) x (N-2)`` system for the interior even coefficients.

    The known end coefficients ``alpha_1 = u_a``, ``alpha_N = u_b`` enter the
    right-hand side with their half weights.
    """
    spec = _check_spec(spec, odd=False)
    mapped = map_problem(problem, map)
    ts = collocation_nodes(spec)

    full = _operator_matrix(mapped, spec, ts)
    rhs = mapped.rhs(ts) - 0.5 * problem.u_a * full[:, 0] - 0.5 * problem.u_b * full[:, -1]
    log.debug('assemble_even(N=%d, r=%d): %d x %d system',
              spec.n, spec.r, len(ts), len(ts))
    return linalg.DenseSystem(full[:, 1:-1], rhs)


def assemble_odd(problem: BvpProblem, spec: basis.BasisSpec,
                 map: typing.Optional[DomainMap] = None) -> linalg.DenseSystem:
    """Return the ``N x N`` system collocated at all odd grid nodes."""
    spec = _check_spec(spec, odd=True)
    if problem.u_a != 0 or problem.u_b != 0:
        raise ValueError(f'{spec.family} family needs zero boundary values:'
                         f' {(problem.u_a, problem.u_b)!r}')
    mapped = map_problem(problem, map)
    ts = collocation_nodes(spec)

    log.debug('assemble_odd(%s, N=%d, r=%d): %d x %d system',
              spec.family, spec.n, spec.r, len(ts), len(ts))
    return linalg.DenseSystem(_operator_matrix(mapped, spec, ts), mapped.rhs(ts))


def assemble(problem: BvpProblem, spec: basis.BasisSpec,
             map: typing.Optional[DomainMap] = None) -> linalg.DenseSystem:
    """Dispatch to :func:`assemble_odd` or :func:`assemble_even` by family."""
    if basis.Family[spec.family].zero_boundary:
        return assemble_odd(problem, spec, map)
    return assemble_even(problem, spec, map)


class CollocationSolution(typing.NamedTuple):
    """Spline coefficients ``alpha`` of the approximate solution."""

    spec: basis.BasisSpec

    map: DomainMap

    alpha: np.ndarray

    warnings: typing.Tuple[str, ...] = ()

    residual: float = 0.0

    @property
    def coefficients(self) -> np.ndarray:
        """``alpha`` times the family sample weights."""
        return self.spec.kind.sample_weights(self.spec.n) * self.alpha

    def evaluate(self, x, q: int = 0):
        """Return the order-``q`` ``x``-derivative of the solution at ``x``."""
        points = np.asarray(x, dtype=float)
        if not self.map.contains(points):
            raise ValueError(f'evaluation points outside [{self.map.a!r}, {self.map.b!r}]:'
                             f' {points.tolist()!r}')
        ts = np.clip(self.map.to_t(points.reshape(-1)), 0, math.pi)
        values = basis.basis_matrix(self.spec, q, ts).values @ self.coefficients
        values = values * self.map.lam ** q
        if points.ndim == 0:
            return float(values[0])
        return values.reshape(points.shape)

    def __call__(self, x):
        return self.evaluate(x)


def solve(problem: BvpProblem, spec: basis.BasisSpec,
          map: typing.Optional[DomainMap] = None) -> CollocationSolution:
    """Assemble and solve the collocation system of ``problem``.

    Args:
        problem: Coefficients, interval and boundary values.
        spec: Spline family, node count and series parameters (``r >= 3``).
        map: Domain map (default: from the problem interval).

    Returns:
        CollocationSolution: With the full coefficient vector (``alpha_1 = u_a``
        and ``alpha_N = u_b`` for the even family).

    Raises:
        ValueError: If ``spec`` or ``problem`` is invalid.
        SingularMatrixError: If the collocation system is singular.
        EvaluationError: If a coefficient is not finite at a node.
    """
    problem = problem.validate()
    if map is None:
        map = DomainMap.fromproblem(problem)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always', series.TruncationWarning)
        system = assemble(problem, spec, map)
        result = linalg.lu_solve(system)

    messages = {}
    for w in caught:
        if issubclass(w.category, series.TruncationWarning):
            if str(w.message) in messages:
                continue
            messages[str(w.message)] = None
        warnings.warn_explicit(w.message, w.category, w.filename, w.lineno)

    if basis.Family[spec.family].zero_boundary:
        alpha = result.x
    else:
        alpha = np.concatenate([[problem.u_a], result.x, [problem.u_b]])
    alpha.flags.writeable = False

    log.debug('solve(%s, N=%d, r=%d): residual %.3g, %d warning(s)',
              spec.family, spec.n, spec.r, result.residual, len(messages))
    return CollocationSolution(spec, map, alpha, tuple(messages), result.residual)


def evaluate(solution: CollocationSolution, x, q: int = 0):
    """Return the order-``q`` derivative of ``solution`` at ``x`` in ``[a, b]``."""
    return solution.evaluate(x, q)


def collocation_residuals(solution: CollocationSolution, problem: BvpProblem) -> np.ndarray:
    """Return ``q2 v'' + q1 v' + q0 v - rhs`` at the collocation nodes."""
    spec = solution.spec
    mapped = map_problem(problem, solution.map)
    ts = collocation_nodes(spec)
    _, _, _, rhs = mapped.coefficients(ts)
    return _operator_matrix(mapped, spec, ts) @ solution.coefficients - rhs


class ErrorTable(typing.NamedTuple):
    """Per-probe values of the approximate and exact solutions."""

    x: np.ndarray

    u_approx: np.ndarray

    u_exact: np.ndarray

    abs_err: np.ndarray

    def iterrows(self) -> typing.Iterator[typing.Tuple[float, float, float, float]]:
        return zip(*(column.tolist() for column in self))


class ErrorReport(typing.NamedTuple):
    """Largest absolute deviation, where it occurs, and the probe table."""

    max_abs_err: float

    argmax: float

    table: ErrorTable


def error_report(solution: CollocationSolution, exact: Function,
                 n_probe: int = DEFAULT_PROBES) -> ErrorReport:
    """Compare ``solution`` with ``exact`` on ``n_probe + 1`` uniform points of ``[a, b]``.

    Raises:
        ValueError: If ``n_probe < 1``.
    """
    if n_probe < 1:
        raise ValueError(f'n_probe must be positive: {n_probe!r}')
    a, b = solution.map
    xs = np.linspace(a, b, n_probe + 1)
    xs[-1] = b
    approx = solution.evaluate(xs)
    expected = function_values(exact, xs, 'exact solution')
    errors = np.abs(approx - expected)
    index = int(errors.argmax())
    return ErrorReport(float(errors[index]), float(xs[index]),
                       ErrorTable(xs, approx, expected, errors))
