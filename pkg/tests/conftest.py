import math

import numpy as np
import pytest

from nevanlinna.measures import (
    TORUS,
    convex_line_measure,
    make_density,
    make_dirac,
    make_lebesgue,
    tensor,
)


def lam(n=1, c=1.0):
    return make_lebesgue(n, c)


def pi_delta0():
    return make_dirac([0.0], math.pi)


def delta0():
    return make_dirac([0.0])


def real_fixtures():
    """The six half-plane fixture measures, keyed by a readable name."""
    return {
        "lambda2": lam(2),
        "delta0_delta0": tensor(delta0(), delta0()),
        "pi_delta0_lambda": tensor(pi_delta0(), lam()),
        "lambda_pi_delta0": tensor(lam(), pi_delta0()),
        "line": convex_line_measure(0.5, 0.5),
        "three_lambda2": lam(2, 3.0),
    }


NEVANLINNA_FIXTURES = ("lambda2", "pi_delta0_lambda", "lambda_pi_delta0", "line", "three_lambda2")
LEBESGUE_FIXTURES = ("lambda2", "three_lambda2")


def torus_lam(n=1, c=1.0):
    return make_lebesgue(n, c, domain=TORUS)


def torus_atom(point=(0.0,), weight=1.0):
    return make_dirac(list(point), weight, domain=TORUS)


def rel_close(a, b, rel, floor=1e-12):
    return abs(a - b) <= rel * max(abs(a), abs(b)) + floor


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    _ACCEPTANCE[number] = (title, rep.passed, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, duration = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} ({duration:.2f} s) {title}")
