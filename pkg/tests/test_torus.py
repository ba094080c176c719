import itertools
import math

import numpy as np
import pytest

from nevanlinna.conditions import SamplePlan, Verdict, lebesgue_residual, nevanlinna_form_residual
from nevanlinna.errors import DimensionError, DivergenceError, DomainError, PreconditionError
from nevanlinna.measures import (
    TORUS,
    CayleyImage,
    MeasureSpec,
    cayley_pushforward,
    inverse_cayley,
    make_density,
    make_lebesgue,
    tensor,
    zero_measure,
)
from nevanlinna.quadrature import Integrand, integrate
from nevanlinna.torus import (
    evaluate_f,
    evaluate_f_derivative,
    fourier_coefficient,
    fourier_integrand,
    mixed_fourier_check,
    torus_lebesgue_check,
    torus_lebesgue_residual,
)

from conftest import lam, pi_delta0, real_fixtures, rel_close, torus_atom, torus_lam

TWO_PI = 2 * math.pi
FIX = real_fixtures()
PLAN = SamplePlan.default(2, samples=8)


def poisson_t(r=0.5, theta=1.0, weight=1.0):
    return make_density("poisson", {"r": r, "theta": theta}, weight, domain=TORUS)


def grid_t(values):
    return make_density("grid", {"values": values}, domain=TORUS)


def torus_fixtures():
    return {
        "lambda2": torus_lam(2),
        "two_lambda2": torus_lam(2, 2.0),
        "atom_atom": tensor(torus_atom(), torus_atom()),
        "poisson_lambda": tensor(poisson_t(), torus_lam()),
        **{f"push_{k}": cayley_pushforward(v) for k, v in FIX.items()},
    }


TFIX = torus_fixtures()
MIXED_VANISH = {"lambda2", "two_lambda2", "poisson_lambda", "push_lambda2", "push_pi_delta0_lambda",
                "push_lambda_pi_delta0", "push_line", "push_three_lambda2"}
LEBESGUE_MULTIPLES = {"lambda2", "two_lambda2", "push_lambda2", "push_three_lambda2"}


@pytest.mark.parametrize("nu, m, expected", [
    (torus_lam(2), (1, -1), 0.0),
    (torus_lam(2), (0, 0), TWO_PI ** 2),
    (torus_atom((0.0, 0.0)), (3, -5), 1.0),
    (torus_atom((1.0,), 2.0), (2,), 2.0 * np.exp(2j)),
    (tensor(torus_atom((math.pi,), TWO_PI), torus_lam()), (1, 0), -2 * TWO_PI ** 2 / 2),
])
def test_fourier_coefficient_values(nu, m, expected):
    assert fourier_coefficient(nu, m).value == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("m", [-3, -1, 0, 1, 2, 5])
def test_poisson_coefficient_closed_form_vs_quadrature(m):
    nu = poisson_t(0.6, 0.4, 1.5)
    exact = fourier_coefficient(nu, (m,)).value
    assert exact == pytest.approx(1.5 * TWO_PI * 0.6 ** abs(m) * np.exp(1j * m * 0.4))
    quad = integrate(nu, fourier_integrand((m,))).value
    assert exact == pytest.approx(quad, abs=1e-9)


@pytest.mark.parametrize("m", [(0,), (1,), (-3,), (7,), (8,), (13,)])
def test_grid_coefficient_vs_quadrature_1d(m):
    rng = np.random.default_rng(3)
    nu = grid_t(list(rng.uniform(0, 2, 8)))
    exact = fourier_coefficient(nu, m).value
    assert exact == pytest.approx(integrate(nu, fourier_integrand(m)).value, abs=1e-9)


def _trapezoid_coefficient(nu, m, n_pts):
    s = np.linspace(0, TWO_PI, n_pts, endpoint=False)
    S1, S2 = np.meshgrid(s, s, indexing="ij")
    pdf = nu.components[0].pdf(np.stack([S1.ravel(), S2.ravel()], axis=-1)).reshape(S1.shape)
    return np.sum(pdf * np.exp(1j * (m[0] * S1 + m[1] * S2))) * (TWO_PI / n_pts) ** 2


def test_grid_coefficient_vs_richardson_trapezoid_2d():
    rng = np.random.default_rng(5)
    nu = grid_t(rng.uniform(0, 1, (4, 4)).tolist())
    for m in [(1, -1), (2, 3), (0, 0)]:
        coarse, fine = (_trapezoid_coefficient(nu, m, k) for k in (512, 1024))
        oracle = (4 * fine - coarse) / 3
        assert fourier_coefficient(nu, m).value == pytest.approx(oracle, abs=1e-9)


@pytest.mark.parametrize("name", list(TFIX))
def test_coefficients_conjugate_symmetric(name):
    nu = TFIX[name]
    for m in [(1, -1), (2, 0), (1, 3)]:
        a = fourier_coefficient(nu, m).value
        b = fourier_coefficient(nu, tuple(-v for v in m)).value
        assert b == pytest.approx(np.conj(a), abs=1e-9)


def test_fourier_errors():
    with pytest.raises(DomainError):
        fourier_coefficient(lam(1), (1,))
    with pytest.raises(DimensionError):
        fourier_coefficient(torus_lam(2), (1,))
    with pytest.raises(DivergenceError):
        fourier_coefficient(MeasureSpec(1, TORUS, (CayleyImage(make_density("quadratic")),)), (1,))


@pytest.mark.parametrize("name", list(TFIX))
def test_mixed_fourier_check(name):
    r = mixed_fourier_check(TFIX[name], 4)
    assert r.verdict is (Verdict.HOLDS if name in MIXED_VANISH else Verdict.FAILS)


def test_mixed_check_atom_product_anchor():
    r = mixed_fourier_check(TFIX["atom_atom"], 8)
    rec = next(s for s in r.samples if s.selector == (1, -1))
    assert rec.residual == pytest.approx(1.0)
    assert r.extras["max_index"] == 8


def test_mixed_check_vacuous_in_dim_one():
    r = mixed_fourier_check(torus_atom(), 8)
    assert r.holds and r.samples == []


@pytest.mark.parametrize("n", [1, 2, 3])
def test_evaluate_f_lebesgue(n):
    rng = np.random.default_rng(n)
    for _ in range(4):
        w = 0.9 * rng.uniform(0, 1, n) * np.exp(1j * rng.uniform(0, TWO_PI, n))
        assert abs(evaluate_f(0.0, torus_lam(n), w).value - 1) < 1e-7


def test_evaluate_f_xi_and_constant():
    xi = 0.5 + 2j
    assert abs(evaluate_f(xi.imag, torus_lam(2, xi.real), [0.3, -0.2j]).value - xi) < 1e-7
    assert evaluate_f(3.0, zero_measure(2, TORUS), [0.1, 0.2]).value == pytest.approx(3j)


def test_evaluate_f_domain_errors():
    with pytest.raises(DomainError):
        evaluate_f(0.0, torus_lam(1), [1.0])
    with pytest.raises(DimensionError):
        evaluate_f_derivative(0.0, torus_lam(2), 3, [0.0, 0.0])


@pytest.mark.parametrize("name", sorted(MIXED_VANISH))
def test_real_part_nonnegative(name):
    plan = SamplePlan.default(2, 12)
    for w in plan.w:
        assert evaluate_f(0.0, TFIX[name], w).value.real >= -1e-6


def test_derivative_examples():
    assert evaluate_f_derivative(0.0, torus_atom(), 1, [0.0]).value == pytest.approx(1 / math.pi)
    for j in (1, 2):
        assert abs(evaluate_f_derivative(0.0, torus_lam(2), j, [0.3, -0.5j]).value) < 1e-7


@pytest.mark.parametrize("name", list(TFIX))
@pytest.mark.parametrize("j", [1, 2])
def test_derivative_matches_finite_difference(name, j):
    nu = TFIX[name]
    w = np.array([0.3 + 0.2j, -0.4 + 0.1j])
    h = 1e-5
    e = np.zeros(2, dtype=complex)
    e[j - 1] = h
    fd = (evaluate_f(0.0, nu, w + e).value - evaluate_f(0.0, nu, w - e).value) / (2 * h)
    exact = evaluate_f_derivative(0.0, nu, j, w).value
    assert rel_close(exact, fd, 1e-5, floor=1e-9)


@pytest.mark.parametrize("name", list(TFIX))
def test_torus_lebesgue_variants_agree(name):
    nu = TFIX[name]
    expected = Verdict.HOLDS if name in LEBESGUE_MULTIPLES else Verdict.FAILS
    for corollary in (False, True):
        if not corollary and name not in MIXED_VANISH:
            with pytest.raises(PreconditionError):
                torus_lebesgue_check(nu, PLAN, "c")
            continue
        verdicts = {v: torus_lebesgue_check(nu, PLAN, v, corollary=corollary, M=4).verdict for v in "abcd"}
        assert set(verdicts.values()) == {expected}, (corollary, verdicts)


@pytest.mark.parametrize("nu, c", [(torus_lam(2), 1.0), (torus_lam(2, 2.0), 2.0), (cayley_pushforward(lam(2, 3.0)), 3.0)])
def test_torus_fitted_constant(nu, c):
    r = torus_lebesgue_check(nu, PLAN)
    assert r.holds and r.extras["c"] == pytest.approx(c)


def test_pushed_atom_lebesgue_fails_variant_c():
    nu = TFIX["push_pi_delta0_lambda"]
    assert torus_lebesgue_check(nu, PLAN, "c").verdict is Verdict.FAILS
    # atom at s = pi of mass 2 pi times (2 pi) from the Lebesgue axis
    assert torus_lebesgue_residual(nu, variant="c", selector=(1, 0)).value == pytest.approx(-TWO_PI ** 2)


@pytest.mark.parametrize("name", list(FIX))
def test_variant_d_is_twice_the_real_pole_integral(name):
    mu = FIX[name]
    nu = cayley_pushforward(mu)
    for w in [(0.0, 0.0), (0.3 + 0.2j, -0.4 + 0.1j)]:
        z = inverse_cayley(np.asarray(w))
        for j in (1, 2):
            torus = torus_lebesgue_residual(nu, w, "d", j).value
            real = lebesgue_residual(mu, z, "c", j).value
            assert torus == pytest.approx(2 * real, abs=1e-8)


def test_cross_domain_on_non_nevanlinna_density():
    mu = tensor(make_density("gaussian", {"loc": 0.3}), make_density("cauchy", {"scale": 0.7}))
    nu = cayley_pushforward(mu)
    for m in [(1, -1), (2, -1), (-3, 2)]:
        r = nevanlinna_form_residual(mu, "d", selector=m).value
        c = fourier_coefficient(nu, m).value
        assert abs(r) > 1e-3
        assert c == pytest.approx(4 * r, rel=1e-7)


def test_theorem_form_requires_mixed_vanishing():
    with pytest.raises(PreconditionError):
        torus_lebesgue_check(TFIX["atom_atom"], PLAN)


def test_residual_selector_validation():
    with pytest.raises(DimensionError):
        torus_lebesgue_residual(torus_lam(2), variant="c", selector=(1, -1))
    with pytest.raises(DimensionError):
        torus_lebesgue_residual(torus_lam(2), [0, 0], variant="b", selector=(1, 0))
    assert abs(torus_lebesgue_residual(torus_lam(2), variant="c", selector=(1, -1), corollary=True).value) < 1e-12
