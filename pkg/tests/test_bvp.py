import math

import numpy as np
import pytest

from trigspline import basis
from trigspline import bvp
from trigspline import configs
from trigspline import expressions
from trigspline import linalg
from trigspline import _examples
from trigspline.bvp import BvpProblem, DomainMap
from trigspline.expressions import parse
from trigspline.finite_differences import finite_difference_solve

FAMILIES = ['even', 'odd0', 'odd1']


def probe(a, b, n=400):
    result = np.linspace(a, b, n + 1)
    result[-1] = b
    return result


def helmholtz(f='0', a=0.0, b=math.pi, u_a=0.0, u_b=0.0):
    """Return ``u'' - u = f`` on ``[a, b]``."""
    return BvpProblem(parse('0'), parse('-1'), parse(f), a, b, u_a, u_b)


def test_domain_map():
    m = DomainMap(2.0, 4.0)

    assert m.lam == pytest.approx(math.pi / 2)
    assert m.to_t(3.0) == pytest.approx(math.pi / 2)
    assert m.to_x(math.pi) == pytest.approx(4.0)
    assert isinstance(m.to_x(0.0), float)
    assert m.contains([2.0, 4.0]) and not m.contains(4.1)


def test_map_problem_coefficients():
    problem = BvpProblem(parse('x'), parse('2'), parse('-x'), 0.0, 1.0, 0.0, 0.0)
    ts = np.array([0.0, math.pi / 2, math.pi])

    q2, q1, q0, rhs = bvp.map_problem(problem).coefficients(ts)

    np.testing.assert_allclose(q2, math.pi ** 2)
    np.testing.assert_allclose(q1, ts)
    np.testing.assert_allclose(q0, 2.0)
    np.testing.assert_allclose(rhs, -ts / math.pi)


def test_map_problem_non_finite_coefficient():
    problem = BvpProblem(parse('0'), lambda x: 1 / x, parse('0'), 0.0, 1.0, 0.0, 0.0)
    mapped = bvp.map_problem(problem)

    with pytest.raises(expressions.EvaluationError, match=r'non-finite p2 at x=0.0'):
        mapped.q0(np.array([0.0, 1.0]))


@pytest.mark.parametrize('a, b', [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
def test_problem_invalid_interval(a, b):
    with pytest.raises(ValueError, match=r'interval'):
        helmholtz(a=a, b=b).validate()


@pytest.mark.parametrize('family, n, size', [('even', 4, 2), ('even', 9, 7),
                                             ('odd0', 9, 9), ('odd1', 5, 5)])
def test_assemble_dimensions(family, n, size):
    spec = basis.make_spec(family, n, 3)

    system = bvp.assemble(helmholtz(), spec)

    assert system.a.shape == (size, size)
    assert system.b.shape == (size,)


def test_assemble_even_zero_boundary_rhs_is_f():
    problem = helmholtz(f='x^2', a=0.0, b=1.0)
    spec = basis.make_spec('even', 9, 3)
    xs = bvp.DomainMap(0.0, 1.0).to_x(bvp.collocation_nodes(spec))

    system = bvp.assemble_even(problem, spec)

    np.testing.assert_allclose(system.b, xs ** 2, rtol=1e-15, atol=0)


def test_assemble_even_boundary_terms():
    spec = basis.make_spec('even', 7, 3)
    ts = bvp.collocation_nodes(spec)

    system = bvp.assemble_even(helmholtz(u_a=2.0, u_b=-1.0), spec)

    b2 = basis.basis_matrix(spec, 2, ts).values
    b0 = basis.basis_matrix(spec, 0, ts).values
    full = b2 - b0
    np.testing.assert_allclose(system.a, full[:, 1:-1], rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(system.b, -full[:, 0] + 0.5 * full[:, -1],
                               rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize('family, column', [('odd0', basis.sts0), ('odd1', basis.sts1)])
def test_assemble_odd_columns(family, column):
    problem = BvpProblem(parse('1+x'), parse('x'), parse('0'), 0.0, 1.0, 0.0, 0.0)
    spec = basis.make_spec(family, 5, 3)
    lam = math.pi

    system = bvp.assemble_odd(problem, spec)

    for j, t in enumerate(spec.nodes):
        x = t / lam
        for k in range(1, 6):
            expected = (lam ** 2 * column(spec, 2, k, t)
                        + lam * (1 + x) * column(spec, 1, k, t)
                        + x * column(spec, 0, k, t))
            assert system.a[j, k - 1] == pytest.approx(expected, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize(
    'family, n, r, kwargs, match',
    [('even', 9, 3, {'u_a': 1.0}, None),
     ('odd0', 9, 3, {'u_a': 1.0}, r'zero boundary values'),
     ('odd1', 9, 3, {'u_b': -1.0}, r'zero boundary values'),
     ('odd0', 9, 2, {}, r'r >= 3'),
     ('even', 3, 3, {}, r'even collocation needs n >= 4')])
def test_solve_checks(family, n, r, kwargs, match):
    spec = basis.make_spec(family, n, r)
    problem = helmholtz(**kwargs)

    if match is None:
        assert bvp.solve(problem, spec).alpha[0] == 1.0
    else:
        with pytest.raises(ValueError, match=match):
            bvp.solve(problem, spec)


def test_assemble_rejects_wrong_family():
    with pytest.raises(ValueError, match=r"odd assembly does not accept the 'even' family"):
        bvp.assemble_odd(helmholtz(), basis.make_spec('even', 9, 3))


@pytest.mark.parametrize('family', FAMILIES)
@pytest.mark.parametrize('problem', [helmholtz(), BvpProblem(parse('0'), parse('0'), parse('0'),
                                                             0.0, math.pi, 0.0, 0.0)],
                         ids=['helmholtz', 'laplace'])
def test_homogeneous_problem(family, problem):
    solution = bvp.solve(problem, basis.make_spec(family, 9, 3))

    assert np.abs(solution.alpha).max() == 0
    assert not solution.alpha.flags.writeable


@pytest.mark.parametrize('family', FAMILIES)
def test_solution_in_spline_space(rng, family):
    spec = basis.make_spec(family, 9, 3)
    alpha = rng.uniform(-1, 1, 9)
    if spec.kind.zero_boundary:
        u_a = u_b = 0.0
    else:
        u_a, u_b = alpha[0], alpha[-1]
    coefficients = spec.kind.sample_weights(9) * alpha

    def f(x):
        return (basis.basis_matrix(spec, 2, x).values
                - basis.basis_matrix(spec, 0, x).values) @ coefficients

    problem = BvpProblem(parse('0'), parse('-1'), f, 0.0, math.pi, u_a, u_b)

    solution = bvp.solve(problem, spec)

    np.testing.assert_allclose(solution.alpha, alpha, rtol=0, atol=1e-6)


def test_example1_boundary_and_residuals(example1):
    spec = basis.make_spec('even', 9, 3)

    solution = bvp.solve(example1, spec)

    assert solution.evaluate(0.0) == pytest.approx(0.0, abs=1e-10)
    assert solution.evaluate(1.0) == pytest.approx(0.5, abs=1e-10)
    assert solution.evaluate([0.0, 1.0], q=1).tolist() == pytest.approx([0, 0], abs=1e-6)

    mapped = bvp.map_problem(example1)
    rhs = mapped.rhs(bvp.collocation_nodes(spec))
    residuals = bvp.collocation_residuals(solution, example1)
    assert np.all(np.abs(residuals) <= 1e-6 * (1 + np.abs(rhs)))
    assert solution.residual <= 1e-6


@pytest.mark.parametrize('variant', _examples.VARIANTS, ids=lambda v: f'{v.example}-{v.name}')
def test_example_boundary_and_residuals(variant):
    config = configs.parse_config(_examples.config_text(variant, 9), environ={})
    problem, spec = config.problem, config.spec

    solution = bvp.solve(problem, spec)

    ends = solution.evaluate([problem.a, problem.b])
    assert abs(ends[0] - problem.u_a) <= 1e-10
    assert abs(ends[1] - problem.u_b) <= 1e-10
    if variant.family == 'even':
        slopes = solution.evaluate([problem.a, problem.b], q=1)
        assert np.all(np.abs(slopes) <= 1e-6)

    rhs = bvp.map_problem(problem).rhs(bvp.collocation_nodes(spec))
    residuals = bvp.collocation_residuals(solution, problem)
    assert np.all(np.abs(residuals) <= 1e-6 * (1 + np.abs(rhs)))


@pytest.mark.parametrize('family', ['odd0', 'odd1'])
def test_example3_odd_boundary(example3, family):
    solution = bvp.solve(example3, basis.make_spec(family, 9, 3))

    assert solution.evaluate([0.0, 1.0]).tolist() == pytest.approx([0, 0], abs=1e-12)


def test_example3_against_finite_differences(example3):
    solution = bvp.solve(example3, basis.make_spec('odd0', 17, 4))
    oracle = finite_difference_solve(example3)
    xs = probe(0.0, 1.0)

    assert np.abs(solution(xs) - oracle(xs)).max() <= 5e-3
    assert bvp.error_report(solution, example3.exact).max_abs_err <= 5e-3


def test_finite_differences_exact_on_quadratic():
    problem = BvpProblem(parse('0'), parse('0'), parse('2'), 0.0, 1.0, 0.0, 1.0)
    fd = finite_difference_solve(problem, 11)

    np.testing.assert_allclose(fd.u, fd.x ** 2, rtol=0, atol=1e-12)
    assert fd(0.55) == pytest.approx(0.5 * (0.25 + 0.36))


def test_finite_differences_too_few_points():
    with pytest.raises(ValueError, match=r'n_points must be at least 3'):
        finite_difference_solve(helmholtz(), 2)


def test_evaluate_scales_derivatives(example3):
    spec = basis.make_spec('odd1', 7, 3)
    solution = bvp.solve(example3, spec)
    x = 0.3

    row = basis.basis_matrix(spec, 1, [math.pi * x]).values[0]

    assert bvp.evaluate(solution, x, q=1) == pytest.approx(
        math.pi * float(row @ solution.coefficients), rel=1e-12)


def test_evaluate_outside_domain(example3):
    solution = bvp.solve(example3, basis.make_spec('odd0', 5, 3))

    with pytest.raises(ValueError, match=r'outside \[0.0, 1.0\]'):
        solution.evaluate(1.5)


def test_error_report_against_itself(example3):
    solution = bvp.solve(example3, basis.make_spec('odd0', 5, 3))

    report = bvp.error_report(solution, solution, n_probe=10)

    assert report.max_abs_err == 0
    assert len(report.table.x) == 11
    assert report.table.x[-1] == 1.0
    assert len(list(report.table.iterrows())) == 11


def test_error_report_invalid_probes(example3):
    solution = bvp.solve(example3, basis.make_spec('odd0', 5, 3))

    with pytest.raises(ValueError, match=r'n_probe must be positive'):
        bvp.error_report(solution, example3.exact, n_probe=0)


def test_solve_singular_system(monkeypatch, example3):
    def assemble(problem, spec, map):
        return linalg.DenseSystem(np.zeros((spec.n, spec.n)), np.ones(spec.n))

    monkeypatch.setattr(bvp, 'assemble', assemble)

    with pytest.raises(linalg.SingularMatrixError, match=r'singular 5x5 matrix'):
        bvp.solve(example3, basis.make_spec('odd0', 5, 3))
