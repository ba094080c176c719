import json
import math

import numpy as np
import pytest

from nevanlinna.conditions import (
    SamplePlan,
    Verdict,
    fitted_constant,
    growth_check,
    lebesgue_check,
    lebesgue_check_dim1,
    lebesgue_check_dim2,
    lebesgue_residual,
    nevanlinna_check,
    nevanlinna_form_residual,
    nevanlinna_residual,
    refined_lebesgue_check,
    sign_vectors,
)
from nevanlinna.errors import DimensionError, DomainError, PreconditionError
from nevanlinna.measures import (
    TORUS,
    cayley_pushforward,
    convex_line_measure,
    make_density,
    make_dirac,
    make_lebesgue,
    tensor,
    zero_measure,
)
from nevanlinna.quadrature import QuadratureConfig
from nevanlinna.torus import fourier_coefficient

from conftest import NEVANLINNA_FIXTURES, delta0, lam, pi_delta0, real_fixtures

FIX = real_fixtures()
PLAN = SamplePlan.default(2, samples=8)


def gauss2():
    return tensor(make_density("gaussian"), make_density("gaussian", {"loc": 0.5, "scale": 2.0}))


def test_plan_is_seeded_and_valid():
    a, b = SamplePlan.default(3, 10, seed=4), SamplePlan.default(3, 10, seed=4)
    assert a == b
    assert a.z[0] == (1j, 1j, 1j) and a.w[0] == (0j, 0j, 0j)
    for z in a.z[1:]:
        assert all(-3 <= c.real <= 3 and 0.5 <= c.imag <= 3 for c in z)
    for w in a.w:
        assert all(abs(c) <= 0.8 for c in w)
    with pytest.raises(DomainError):
        SamplePlan(1, ((1.0 + 0j,),), ((0j,),))


@pytest.mark.parametrize("kind, count", [("mixed", 2), ("no_plus", 3), ("nonzero", 8)])
def test_sign_vector_counts(kind, count):
    assert len(list(sign_vectors(2, kind))) == count


def test_delta_product_anchor():
    res = nevanlinna_residual(FIX["delta0_delta0"], [1j, 1j])
    assert abs(res.value - 1.0) < 1e-9


def test_conjugation_modes_hand_values():
    mu = FIX["delta0_delta0"]
    # default conjugates z_l2: 1/((-i)^2 (2i)^2) = 1/4; strict conjugates z_l1: 1/((-i)^2 (i)^2) = 1
    assert nevanlinna_residual(mu, [1j, 2j]).value == pytest.approx(0.25)
    assert nevanlinna_residual(mu, [1j, 2j], strict=True).value == pytest.approx(1.0)


@pytest.mark.parametrize("mu, z, expected, tol", [
    (lam(2), [1j, 1j], 0.0, 1e-7),
    (convex_line_measure(0.5, 0.5), [1j, 2j], 0.0, 1e-6),
])
def test_nevanlinna_residual_zero(mu, z, expected, tol):
    assert abs(nevanlinna_residual(mu, z).value - expected) < tol


def test_nevanlinna_residual_needs_two_dims():
    with pytest.raises(DimensionError):
        nevanlinna_residual(lam(1), [1j])
    with pytest.raises(DimensionError):
        nevanlinna_residual(lam(2), [1j, 1j], 2, 1)


@pytest.mark.parametrize("name", list(FIX))
def test_nevanlinna_forms_agree(name):
    verdicts = {form: nevanlinna_check(FIX[name], PLAN, form).verdict for form in "abcd"}
    expected = Verdict.HOLDS if name in NEVANLINNA_FIXTURES else Verdict.FAILS
    assert set(verdicts.values()) == {expected}, verdicts


@pytest.mark.parametrize("name", list(FIX))
def test_lebesgue_variants_agree(name):
    mu = FIX[name]
    expected = Verdict.HOLDS if name in ("lambda2", "three_lambda2") else Verdict.FAILS
    for corollary in (False, True):
        if not corollary and name not in NEVANLINNA_FIXTURES:
            with pytest.raises(PreconditionError):
                lebesgue_check(mu, PLAN, "c")
            continue
        verdicts = {v: lebesgue_check(mu, PLAN, v, corollary=corollary).verdict for v in "abcd"}
        assert set(verdicts.values()) == {expected}, (corollary, verdicts)


def test_lebesgue_anchor_pi_delta_lambda():
    res = lebesgue_residual(FIX["pi_delta0_lambda"], [1j, 1j], "c", 1)
    assert abs(abs(res.value) - 2 * math.pi ** 2) < 1e-6
    assert res.value == pytest.approx(-2j * math.pi ** 2, abs=1e-6)


def test_lebesgue_residual_examples():
    assert abs(lebesgue_residual(lam(2), [1j, 2j], "c", 1).value) < 1e-7
    r = lebesgue_residual(lam(1), variant="d", selector=(1,)).value
    assert abs(r) < 1e-8
    # the same quantity through the torus: coefficient of the image at m = 1
    assert abs(fourier_coefficient(cayley_pushforward(lam(1)), (1,)).value) < 1e-8


@pytest.mark.parametrize("mu, c", [(lam(2), 1.0), (lam(2, 3.0), 3.0), (lam(3, 0.5), 0.5)])
def test_fitted_constant(mu, c):
    report = lebesgue_check(mu, SamplePlan.default(mu.dim, 4))
    assert report.holds
    assert report.extras["c"] == pytest.approx(c, rel=1e-9)
    assert fitted_constant(mu)[0] == pytest.approx(c, rel=1e-9)


def test_form_b_conjugation_symmetry():
    mu = gauss2()
    z = [0.3 + 1.2j, -0.5 + 0.7j]
    for rho in sign_vectors(2, "mixed"):
        a = nevanlinna_form_residual(mu, "b", z, rho).value
        b = nevanlinna_form_residual(mu, "b", z, tuple(-r for r in rho)).value
        assert b == pytest.approx(np.conj(a), abs=1e-10)
        assert abs(a) > 1e-3


@pytest.mark.parametrize("form", "abcd")
def test_residuals_scale_linearly(form):
    mu = gauss2()
    z = [0.3 + 1.2j, -0.5 + 0.7j]
    sel = {"a": None, "b": (-1, 1), "c": (1, 2), "d": (2, -1)}[form]
    r1 = nevanlinna_form_residual(mu, form, z, sel).value
    r3 = nevanlinna_form_residual(mu.scaled(3.0), form, z, sel).value
    assert r3 == pytest.approx(3 * r1, rel=1e-9)
    v1 = nevanlinna_check(mu, PLAN, form).verdict
    assert nevanlinna_check(mu.scaled(0.01), PLAN, form).verdict == v1 == Verdict.FAILS


def test_zero_measure_residuals_are_exactly_zero():
    mu = zero_measure(2)
    for form in "abcd":
        r = nevanlinna_check(mu, PLAN, form)
        assert r.max_abs_residual == 0.0 and r.holds
    for v in "abcd":
        assert lebesgue_check(mu, PLAN, v).max_abs_residual == 0.0


def test_dimension_one_is_vacuous():
    r = nevanlinna_check(delta0(), SamplePlan.default(1, 4))
    assert r.holds and r.samples == []


def test_growth_failure_blocks_checks():
    mu = make_density("quadratic")
    g = growth_check(mu)
    assert g.verdict is Verdict.FAILS and math.isinf(g.max_abs_residual)
    with pytest.raises(PreconditionError):
        nevanlinna_check(mu, SamplePlan.default(1, 2))
    with pytest.raises(PreconditionError):
        lebesgue_check(mu, SamplePlan.default(1, 2), corollary=True)


def test_growth_check_values():
    g = growth_check(lam(2))
    assert g.holds and g.extras["growth_integral"] == pytest.approx(math.pi ** 2)


def test_domain_errors():
    with pytest.raises(DomainError):
        nevanlinna_check(make_lebesgue(2, domain=TORUS))
    with pytest.raises(DimensionError):
        nevanlinna_check(lam(2), SamplePlan.default(3, 2))


@pytest.mark.parametrize("variant", "abcd")
def test_dim1_wrappers(variant):
    plan = SamplePlan.default(1, 6)
    assert lebesgue_check_dim1(lam(1, 2.0), plan, variant).holds
    assert lebesgue_check_dim1(pi_delta0(), plan, variant).verdict is Verdict.FAILS
    assert lebesgue_check_dim1(make_density("cauchy"), plan, variant).verdict is Verdict.FAILS


@pytest.mark.parametrize("variant", "abcd")
def test_dim2_wrappers(variant):
    assert lebesgue_check_dim2(lam(2), PLAN, variant).holds
    for name in ("pi_delta0_lambda", "lambda_pi_delta0", "line", "delta0_delta0"):
        assert lebesgue_check_dim2(FIX[name], PLAN, variant).verdict is Verdict.FAILS


def test_refined_check():
    assert refined_lebesgue_check(lam(2), PLAN).holds
    assert refined_lebesgue_check(FIX["line"], PLAN).verdict is Verdict.FAILS


def test_inconclusive_when_quadrature_fails():
    cfg = QuadratureConfig(max_subdivisions=1, initial_panels=1, abs_tol=1e-15, rel_tol=1e-15)
    r = nevanlinna_check(gauss2(), PLAN, "c", cfg=cfg)
    assert r.verdict is Verdict.INCONCLUSIVE


def test_report_serializes_deterministically():
    a = json.dumps(nevanlinna_check(FIX["delta0_delta0"], PLAN, "c").to_dict({"seed": 0}))
    b = json.dumps(nevanlinna_check(FIX["delta0_delta0"], PLAN, "c").to_dict({"seed": 0}))
    assert a == b
    doc = json.loads(a)
    assert doc["verdict"] == "Fails" and doc["condition"] == "nevanlinna.c"
    assert doc["samples"][0]["residual"] == pytest.approx([1.0, 0.0])
    assert "finite sample plan" in doc["extras"]["note"]


def test_point_masses_never_pass_in_dim_two():
    for mu in (FIX["delta0_delta0"], make_dirac([1.0, -2.0], 0.3), tensor(delta0(), make_density("gaussian"))):
        assert nevanlinna_check(mu, PLAN, "c").verdict is Verdict.FAILS
