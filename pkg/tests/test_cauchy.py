from math import gamma, pi

import numpy as np
import pytest
from numpy.testing import assert_allclose

from fracwright.cauchy import solver
from fracwright.cauchy.catalog import CatalogFunction, parse_function_spec
from fracwright.cauchy.problem import CauchyProblemSpec, GridSolution
from fracwright.cauchy.quadrature import (
    Estimate, QuadratureConfig, adaptive_gk15, gk15_panel)
from fracwright.cauchy.solver import (
    check_initial_limits, convolve, evaluate, expected_mass, grading_power,
    growth_radius, kernel_mass, residual, solution_terms, solve, source_term)
from fracwright.errors import (
    CatastrophicCancellation, GrowthViolation, InvalidParams, NonConvergence,
    UnknownFunction)
from fracwright.fundsol.kernel import FundamentalSolutionSpec
from fracwright.fundsol.profile import kernel_profile
from fracwright.oracle.rl import RLDerivativeRequest, rl_derivative_quadrature


def test_parse_gaussian():
    func = parse_function_spec('gaussian:2,0.5,1', 1.5, 2)
    assert func.name == 'gaussian'
    assert func.params == (2.0, 0.5, 1.0)
    assert str(func) == 'gaussian:2,0.5,1'
    assert_allclose(func(np.array([0.5, 1.5])), [2, 2 * np.exp(-1)])


def test_parse_time_factor():
    func = parse_function_spec('const:3|ypow:2', 1.5, 2)
    assert func.ypow == 2
    assert_allclose(func(1.0, 0.5), 0.75)
    assert_allclose(func(1.0), 3.0)


def test_parse_is_case_and_space_tolerant():
    func = parse_function_spec('  Bump:1,0,2 ', 1.5, 2)
    assert func.name == 'bump'
    assert func.breakpoints == (-2.0, 2.0)
    assert func(3.0) == 0
    assert_allclose(func(0.0), 1.0)


@pytest.mark.parametrize('text', [
    'gaussian:1,0', 'gaussian:1,0,0', 'polygauss:1,0,1', 'bump:1,0,-1',
    'one|tpow:1', 'one|ypow:-1', 'const:a'])
def test_parse_rejects(text):
    with pytest.raises(InvalidParams):
        parse_function_spec(text, 1.5, 2)


def test_parse_unknown_name():
    with pytest.raises(UnknownFunction):
        parse_function_spec('sech:1', 1.5, 2)
    with pytest.raises(UnknownFunction):
        CatalogFunction('sech')


def test_expgrow_certificate():
    with pytest.raises(GrowthViolation):
        parse_function_spec('expgrow:0.2', 1.5, 2)
    func = parse_function_spec('expgrow:0.2', 1.5, 2, check=False)
    assert func.growth_k == 0.2
    func = parse_function_spec('expgrow:0.05', 1.5, 2)
    assert_allclose(func.params, (0.05, 1.6))
    assert_allclose(func(2.0), np.exp(0.05 * 2 ** 1.6))
    assert func.breakpoints == (0.0,)


def test_polygauss_and_zero_detection():
    func = parse_function_spec('polygauss:1,0,1,0,1', 1.5, 2)
    assert_allclose(func(0.5), 0.5 * np.exp(-0.25))
    assert parse_function_spec('gaussian:0,0,1', 1.5, 2).is_zero
    assert parse_function_spec('zero', 1.5, 2).is_zero
    assert not parse_function_spec('one', 1.5, 2).is_zero


def test_gk15_panel_is_exact_for_polynomials():
    value, error = gk15_panel(lambda x: x ** 10, 0.0, 1.0)
    assert_allclose(value, 1 / 11, rtol=1e-14)
    assert error < 1e-13


@pytest.mark.parametrize('func, edges, exact', [
    (np.sin, [0, pi], 2.0),
    (np.sqrt, [0, 1], 2 / 3),
    (lambda x: np.exp(-x ** 2), [-10, 0, 10], np.sqrt(pi)),
    (lambda x: np.cos(40 * x), [0, 1], np.sin(40) / 40)])
def test_adaptive_gk15(func, edges, exact):
    result = adaptive_gk15(func, edges, 1e-12, 1e-12)
    assert not result.flagged
    assert_allclose(result.value, exact, rtol=1e-11, atol=1e-12)
    assert result.error <= max(1e-12, 1e-12 * abs(exact))


def test_adaptive_gk15_flags_at_panel_limit():
    result = adaptive_gk15(
        lambda x: np.sin(400 * x), [0, 10], 1e-14, 1e-14, max_panels=8)
    assert result.flagged
    assert result.npanel == 8


def test_adaptive_gk15_is_reproducible():
    def func(x):
        return np.abs(x - 0.3) ** 0.5

    first = adaptive_gk15(func, [0, 1], 1e-12, 1e-12)
    second = adaptive_gk15(func, [0, 1], 1e-12, 1e-12)
    assert first.value == second.value
    assert first.npanel == second.npanel


@pytest.mark.parametrize('edges', [[0], [0, 1, 1], [1, 0]])
def test_adaptive_gk15_rejects_edges(edges):
    with pytest.raises(InvalidParams):
        adaptive_gk15(np.sin, edges, 1e-10, 1e-10)


def test_estimate_arithmetic():
    a = Estimate(1.0, 0.1)
    b = Estimate(2.0, 0.2, flagged=True)
    total = a + b
    assert_allclose((total.value, total.error), (3.0, 0.3))
    assert total.flagged
    scaled = -2 * a
    assert (scaled.value, scaled.error) == (-2.0, 0.2)
    shifted = a - 0.5
    assert (shifted.value, shifted.error) == (0.5, 0.1)
    assert sum([a, a]).value == 2.0


@pytest.mark.parametrize('kwargs', [
    {'abs_tol': 0}, {'rel_tol': -1}, {'tail_tol': 1}, {'max_panels': 4},
    {'grading_points': 0}])
def test_quadrature_config_rejects(kwargs):
    with pytest.raises(InvalidParams):
        QuadratureConfig(**kwargs)


def test_quadrature_config_tail():
    assert QuadratureConfig().effective_tail_tol == 1e-12
    assert QuadratureConfig(abs_tol=1e-12).effective_tail_tol == 2.5e-13
    assert QuadratureConfig().as_dict()['max_panels'] == 2000


def test_problem_spec():
    spec = CauchyProblemSpec(1.5, 2, phi='gaussian:1,0,1')
    func, j = spec.data('phi')
    assert j == 1 and func.name == 'gaussian'
    assert spec.data('psi')[1] == 2
    assert_allclose(spec.kernel(1).b, 0.125)
    assert_allclose(spec.kernel(2).b, -0.875)
    assert spec.fingerprint == (
        'alpha=1.5;n=2;phi=gaussian:1,0,1;psi=zero;f=zero')
    other = spec.with_data(psi='one')
    assert other.psi.name == 'one' and other.phi is spec.phi


@pytest.mark.parametrize('args', [(2.0, 2), (1.0, 2), (1.5, 0), (1.5, 1.5)])
def test_problem_spec_rejects(args):
    with pytest.raises(InvalidParams):
        CauchyProblemSpec(*args)


def test_problem_spec_rejects_growth():
    with pytest.raises(GrowthViolation):
        CauchyProblemSpec(1.5, 2, f='expgrow:0.2')
    func = parse_function_spec('expgrow:0.2', 1.5, 2, check=False)
    with pytest.raises(GrowthViolation):
        CauchyProblemSpec(1.5, 2, phi=func)


def test_problem_spec_rejects_data_name():
    with pytest.raises(InvalidParams):
        CauchyProblemSpec(1.5, 2).data('f')


def test_grid_solution_shapes_and_rows():
    grid = GridSolution(
        [0, 1], [0.5, 1, 2], np.arange(6).reshape(2, 3), np.zeros((2, 3)),
        np.zeros((2, 3)), 'fp')
    rows = list(grid.rows())
    assert len(rows) == 6
    assert rows[1][:3] == (0, 1, 1)
    assert rows[3][:3] == (1, 0.5, 3)
    assert not grid.any_flagged
    with pytest.raises(InvalidParams):
        GridSolution([0], [1], np.zeros((2, 1)), np.zeros((1, 1)),
                     np.zeros((1, 1)), 'fp')


def test_zero_data_gives_zero_solution():
    grid = solve(CauchyProblemSpec(1.5, 2), [1.0, -1.0], [0.5, 0.25])
    assert np.all(grid.values == 0)
    assert not grid.any_flagged
    assert grid.x_nodes.tolist() == [-1.0, 1.0]
    assert grid.y_nodes.tolist() == [0.25, 0.5]


def test_solve_rejects_nonpositive_y():
    with pytest.raises(InvalidParams):
        solve(CauchyProblemSpec(1.5, 2), [0.0], [0.0, 1.0])
    with pytest.raises(InvalidParams):
        evaluate(CauchyProblemSpec(1.5, 2, phi='one'), 0.0, -1.0)


def test_check_initial_limits_rejects_sequence():
    spec = CauchyProblemSpec(1.5, 2, phi='one')
    with pytest.raises(InvalidParams):
        check_initial_limits(spec, 0.0, [0.1, 0.2])
    with pytest.raises(InvalidParams):
        check_initial_limits(spec, 0.0, [0.1, 0.0])


def test_growth_radius():
    assert growth_radius(0.0, 1.5, 2, 0.0, 1.0, 1e-12) is None
    near = growth_radius(0.02, 1.5, 2, 0.0, 1.0, 1e-12)
    far = growth_radius(0.02, 1.5, 2, 5.0, 1.0, 1e-12)
    assert far > near > 0
    with pytest.raises(GrowthViolation):
        growth_radius(0.09, 1.5, 2, 0.0, 2.0, 1e-12)


def test_grading_power():
    spec = CauchyProblemSpec(1.5, 2, f='one')
    kernel = spec.kernel(1)
    assert_allclose(grading_power(kernel.shifted(), 1.5), 1 / 1.5)
    assert_allclose(grading_power(kernel.shifted(1.5), 1.5), 1 / 1.5)
    with pytest.raises(InvalidParams):
        grading_power(kernel.shifted(3.0), 1.5)


def test_expected_mass():
    assert expected_mass(1, 2, 0.5) == 0
    assert_allclose(expected_mass(2, 1, 0.5), -0.5)
    assert_allclose(expected_mass(1, 1, 0.5), -1.0)


@pytest.mark.slow
@pytest.mark.parametrize('s, j', [(1, 1), (2, 1), (2, 2), (1, 2)])
def test_kernel_mass(s, j):
    result = kernel_mass(1.5, 2, s, j, 0.5)
    assert not result.flagged
    assert_allclose(result.value, expected_mass(s, j, 0.5), atol=1e-8)


@pytest.mark.slow
@pytest.mark.parametrize('data, exact', [
    ({'phi': 'one'}, lambda y: y ** 0.5 / gamma(1.5)),
    ({'psi': 'one'}, lambda y: y ** -0.5 / gamma(0.5)),
    ({'f': 'one'}, lambda y: y ** 1.5 / gamma(2.5))])
def test_constant_data_solutions(data, exact):
    spec = CauchyProblemSpec(1.5, 2, **data)
    result = evaluate(spec, 0.3, 0.5)
    assert not result.flagged
    assert_allclose(result.value, exact(0.5), rtol=1e-8)


@pytest.mark.slow
def test_even_data_give_even_solution():
    spec = CauchyProblemSpec(1.5, 2, phi='gaussian:1,0,1')
    right = evaluate(spec, 0.7, 0.5)
    left = evaluate(spec, -0.7, 0.5)
    assert left.value == right.value


@pytest.mark.slow
def test_solve_is_deterministic():
    spec = CauchyProblemSpec(1.5, 2, phi='gaussian:1,0,1', psi='bump:1,0,1')
    first = solve(spec, [-1.0, 0.0, 0.5], [0.25, 1.0])
    second = solve(spec, [0.5, -1.0, 0.0], [1.0, 0.25])
    assert np.array_equal(first.values, second.values)
    assert first.problem_fingerprint == second.problem_fingerprint


@pytest.mark.slow
@pytest.mark.parametrize('alpha', [1.3, 1.9])
def test_residual_is_small(alpha):
    spec = CauchyProblemSpec(
        alpha, 2, phi='gaussian:1,0,1', psi='gaussian:0.5,0.2,1')
    for x, y in ((0.0, 0.5), (1.0, 0.75)):
        scale = max(1.0, abs(evaluate(spec, x, y).value))
        assert abs(residual(spec, x, y)) <= 1e-4 * scale


@pytest.mark.slow
def test_initial_limit_of_phi():
    spec = CauchyProblemSpec(1.5, 2, phi='gaussian:1,0,1')
    first, _ = check_initial_limits(spec, 0.3, [1e-1, 1e-2, 1e-3])
    errors = [abs(value - np.exp(-0.09)) for value in first]
    assert errors[2] < errors[1] < errors[0]
    assert errors[2] < 1e-2


def test_grid_solution_labels():
    grid = GridSolution(
        [0, 1], [1], [[np.nan], [2.0]], [[np.nan], [0.0]],
        [['cancel'], ['ok']], 'fp')
    assert grid.flags.tolist() == [[True], [False]]
    assert [row[4] for row in grid.rows()] == ['cancel', 'ok']
    legacy = GridSolution([0], [1], [[1.0]], [[0.0]], [[True]], 'fp')
    assert list(legacy.rows())[0][4] == 'tol'


def test_solve_keeps_going_past_failed_nodes(monkeypatch):
    def evaluate(spec, x, y, cfg=None):
        if x == 0:
            raise CatastrophicCancellation('digits lost')
        if y == 1:
            raise NonConvergence('series did not settle')
        return Estimate(x + y, 1e-12)

    monkeypatch.setattr(solver, 'evaluate', evaluate)
    grid = solve(CauchyProblemSpec(1.5, 2), [0.0, 1.0], [0.5, 1.0])
    assert grid.labels.tolist() == [['cancel', 'cancel'], ['ok', 'tol']]
    assert np.isnan(grid.values[0]).all() and np.isnan(grid.values[1, 1])
    assert grid.values[1, 0] == 1.5
    assert grid.any_flagged


@pytest.mark.slow
def test_convolve_error_covers_table_error():
    shifted = FundamentalSolutionSpec(1.5, 2, 0.125).shifted()
    cfg = QuadratureConfig()
    y = 0.7
    result = convolve(shifted, CatalogFunction('one'), 0.3, y, cfg)
    profile = kernel_profile(shifted, cfg.effective_tail_tol)
    factor = y ** (shifted.b_eff + shifted.sigma)
    table = 2 * profile.tau_max * profile.max_error * factor
    assert result.error >= table * (1 - 1e-9)


@pytest.mark.slow
@pytest.mark.parametrize('data', [{'phi': 'one'}, {'f': 'one'}])
def test_residual_with_constant_data(data):
    spec = CauchyProblemSpec(1.5, 2, **data)
    assert abs(residual(spec, 0.3, 0.5)) <= 1e-6


@pytest.mark.slow
def test_residual_detects_wrong_source(monkeypatch):
    original = solver.source_term

    def flipped(*args, **kwargs):
        return -original(*args, **kwargs)

    monkeypatch.setattr(solver, 'source_term', flipped)
    spec = CauchyProblemSpec(1.5, 2, f='one')
    assert_allclose(residual(spec, 0.3, 0.5), -2.0, rtol=0, atol=1e-6)


@pytest.mark.slow
def test_residual_with_gaussian_source():
    spec = CauchyProblemSpec(
        1.5, 2, phi='gaussian:1,0,1', f='gaussian:1,0.2,1')
    for x in (0.0, 0.8):
        scale = max(1.0, abs(evaluate(spec, x, 0.5).value))
        assert abs(residual(spec, x, 0.5)) <= 1e-4 * scale


@pytest.mark.slow
def test_solution_is_linear_in_data():
    x, y = 0.4, 0.5
    parts = [
        evaluate(CauchyProblemSpec(1.5, 2, phi='gaussian:1,0,1'), x, y),
        evaluate(CauchyProblemSpec(1.5, 2, psi='bump:1,0,1'), x, y),
        evaluate(CauchyProblemSpec(1.5, 2, f='gaussian:1,0.3,1'), x, y)]
    combined = evaluate(CauchyProblemSpec(
        1.5, 2, phi='gaussian:2,0,1', psi='bump:-1,0,1',
        f='gaussian:3,0.3,1'), x, y)
    expected = 2 * parts[0].value - parts[1].value + 3 * parts[2].value
    assert_allclose(combined.value, expected, rtol=0, atol=1e-8)


@pytest.mark.slow
@pytest.mark.parametrize('x', [-0.6, 0.9])
def test_solution_is_translation_equivariant(x):
    base = CauchyProblemSpec(
        1.5, 2, phi='gaussian:1,0,1', psi='bump:1,0,1', f='gaussian:1,0,1')
    moved = CauchyProblemSpec(
        1.5, 2, phi='gaussian:1,0.5,1', psi='bump:1,0.5,1',
        f='gaussian:1,0.5,1')
    assert_allclose(evaluate(moved, x + 0.5, 0.5).value,
                    evaluate(base, x, 0.5).value, rtol=0, atol=1e-9)


@pytest.mark.slow
@pytest.mark.parametrize('order', [-0.5, 0.5])
def test_time_shift_matches_rl_quadrature(order):
    spec = CauchyProblemSpec(1.5, 2, phi='gaussian:1,0,1')
    cfg = QuadratureConfig(abs_tol=1e-12, rel_tol=1e-12)
    x, y = 0.2, 0.8

    def scaled_u(tau):
        return evaluate(spec, x, tau, cfg).value / tau ** 0.5

    req = RLDerivativeRequest(order, scaled_u, y, endpoint_power=0.5)
    shifted = solution_terms(spec, x, y, cfg, time_shift=order)
    assert_allclose(shifted.value, rl_derivative_quadrature(req), rtol=1e-6)


@pytest.mark.slow
def test_initial_limits_of_psi():
    spec = CauchyProblemSpec(1.5, 2, psi='gaussian:1,0,1')
    first, second = check_initial_limits(spec, 0.3, [1e-1, 1e-2, 1e-3])
    errors = [abs(value - np.exp(-0.09)) for value in second]
    assert errors[2] < errors[1] < errors[0]
    assert errors[2] < 1e-2
    assert abs(first[2]) < abs(first[1]) < abs(first[0])


@pytest.mark.slow
def test_source_term_error_estimate_holds():
    spec = CauchyProblemSpec(1.5, 2, f='gaussian:1,0,1')
    loose = source_term(
        spec, 0.3, 0.5, QuadratureConfig(abs_tol=1e-6, rel_tol=1e-6))
    tight = source_term(
        spec, 0.3, 0.5, QuadratureConfig(abs_tol=1e-11, rel_tol=1e-11))
    assert not loose.flagged and not tight.flagged
    assert 0 < loose.error <= 1e-5
    assert abs(loose.value - tight.value) <= loose.error + tight.error
