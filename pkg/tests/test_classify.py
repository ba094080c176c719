import json
import math

import pytest

from nevanlinna.classify import (
    DEGENERATE,
    classify_measure,
    classify_product,
    classify_product_torus,
)
from nevanlinna.conditions import SamplePlan, Verdict
from nevanlinna.errors import DomainError
from nevanlinna.measures import TORUS, convex_line_measure, make_density, zero_measure

from conftest import delta0, lam, pi_delta0, torus_atom, torus_lam

H, F = Verdict.HOLDS, Verdict.FAILS
PLAN2 = SamplePlan.default(2, samples=6)
PLAN3 = SamplePlan.default(3, samples=4)

REAL_PAIRS = [
    ("lambda_pi_delta0", lam(), pi_delta0(), None, H, PLAN2),
    ("pi_delta0_lambda", pi_delta0(), lam(), None, H, PLAN2),
    ("delta0_delta0", delta0(), delta0(), None, F, PLAN2),
    ("lambda_lambda", lam(), lam(), None, H, PLAN2),
    ("permuted_pi_delta0_lambda", pi_delta0(), lam(), (2,), H, PLAN2),
    ("permuted_delta0_delta0", delta0(), delta0(), (2,), F, PLAN2),
    ("line_lambda", convex_line_measure(0.5, 0.5), lam(), None, H, PLAN3),
    ("line_delta0", convex_line_measure(0.5, 0.5), delta0(), None, F, PLAN3),
    ("permuted_line_lambda", convex_line_measure(0.5, 0.5), lam(), (1, 3), H, PLAN3),
]


@pytest.mark.parametrize("name, mu1, mu2, b1, expected, plan", REAL_PAIRS, ids=[p[0] for p in REAL_PAIRS])
def test_real_products_agree(name, mu1, mu2, b1, expected, plan):
    rec = classify_product(mu1, mu2, plan, b1)
    assert rec.agree
    assert rec.predicted is expected and rec.observed is expected
    assert rec.verdict == expected.value


def test_lambda_lambda_reports_both_constants():
    rec = classify_product(lam(), lam(), PLAN2)
    for f in rec.factors:
        assert f.lebesgue_multiple is H
        assert f.c == pytest.approx(1.0)
        assert f.c_error is not None


def test_record_serializes_with_expected_keys():
    d = classify_product(delta0(), delta0(), PLAN2).to_dict({"seed": 0})
    json.dumps(d)
    for key in ("mu1_nevanlinna", "mu2_nevanlinna", "mu1_lebesgue_multiple", "mu2_lebesgue_multiple",
                "product_nevanlinna_predicted", "product_nevanlinna_observed", "agree"):
        assert key in d
    assert d["product_nevanlinna_observed"] == "Fails"
    assert d["config"] == {"seed": 0}


TORUS_PAIRS = [
    ("lambda_atom", torus_lam(), torus_atom(), None, H),
    ("atom_atom", torus_atom(), torus_atom(), None, F),
    ("two_lambda_lambda", torus_lam(1, 2.0), torus_lam(), None, H),
    ("permuted_atom_lambda", torus_atom((1.0,)), torus_lam(), (2,), H),
    ("permuted_atom_atom", torus_atom((1.0,)), torus_atom((2.0,), 3.0), (2,), F),
]


@pytest.mark.parametrize("name, nu1, nu2, b1, expected", TORUS_PAIRS, ids=[p[0] for p in TORUS_PAIRS])
def test_torus_products_agree(name, nu1, nu2, b1, expected):
    rec = classify_product_torus(nu1, nu2, M=8, b1=b1, plan=SamplePlan.default(2, 6, max_index=8))
    assert rec.agree
    assert rec.predicted is expected and rec.observed is expected


def test_torus_atom_pair_fails_at_first_mixed_index():
    rec = classify_product_torus(torus_atom(), torus_atom(), M=8)
    bad = [s for s in rec.observed_report.samples if s.selector == (1, -1)]
    assert bad and abs(bad[0].residual) == pytest.approx(1.0)
    assert "product_mixed_fourier_predicted" in rec.to_dict()


@pytest.mark.parametrize("classify, a, b", [
    (classify_product, zero_measure(1), lam()),
    (classify_product, delta0(), zero_measure(1)),
    (classify_product_torus, torus_lam(), zero_measure(1, TORUS)),
])
def test_zero_factor_is_degenerate(classify, a, b):
    rec = classify(a, b)
    assert rec.verdict == DEGENERATE
    assert rec.agree
    assert rec.predicted is None and rec.observed is None
    assert len(rec.notes) == 1 and "zero" in rec.notes[0]


def test_domain_mismatch():
    with pytest.raises(DomainError):
        classify_product(lam(), torus_lam())
    with pytest.raises(DomainError):
        classify_product_torus(torus_lam(), lam())


def test_classify_measure_atom():
    s = classify_measure(delta0())
    assert (s.growth, s.nevanlinna, s.lebesgue_multiple) == (H, H, F)
    assert any("vacuous" in n for n in s.notes)


def test_classify_measure_lebesgue_three():
    s = classify_measure(lam(3), SamplePlan.default(3, 4))
    assert (s.growth, s.nevanlinna, s.lebesgue_multiple) == (H, H, H)
    assert s.c == pytest.approx(1.0)


def test_classify_measure_divergent_density():
    s = classify_measure(make_density("quadratic"))
    assert s.growth is F
    assert s.nevanlinna is F


@pytest.mark.parametrize("nu, mixed, leb, c", [
    (torus_lam(2, 2.0), H, H, 2.0),
    (torus_atom(), H, F, None),
])
def test_classify_measure_torus(nu, mixed, leb, c):
    s = classify_measure(nu, SamplePlan.default(nu.dim, 6, max_index=4))
    assert (s.nevanlinna, s.lebesgue_multiple) == (mixed, leb)
    if c is not None:
        assert s.c == pytest.approx(c)
