"""Moving measures between R^n and the polytorus.

The Cayley pushforward turns the half-plane conditions into statements
about Fourier coefficients. Mixed coefficients of the pushed measure are a
fixed multiple (2^n) of the discrete Nevanlinna residuals on the real side.

Run with ``python3 demos/03_cayley_torus.py``.
"""
import math

from nevanlinna import (
    cayley_pushforward,
    evaluate_f,
    fourier_coefficient,
    make_density,
    make_dirac,
    make_lebesgue,
    mixed_fourier_check,
    nevanlinna_form_residual,
    tensor,
)


def main():
    nu = cayley_pushforward(make_lebesgue(1))
    print(f"Lebesgue on R pushes to: {nu.to_dict()}")
    atom = cayley_pushforward(make_dirac([0.0], math.pi))
    print(f"pi delta_0 pushes to:    {atom.to_dict()}")

    print("\nf is identically 1 for Lebesgue measure on the torus:")
    nu2 = make_lebesgue(2, domain="torus")
    print(f"  f(0.3, -0.2i) = {evaluate_f(0.0, nu2, [0.3, -0.2j]).value:.12f}")

    mu = tensor(make_density("gaussian", {"loc": 0.3}), make_density("cauchy", {"scale": 0.7}))
    pushed = cayley_pushforward(mu)
    print("\nFourier coefficient versus 4 x discrete residual for a Gaussian x Cauchy density:")
    for m in [(1, -1), (2, -1), (-3, 2)]:
        c = fourier_coefficient(pushed, m).value
        r = nevanlinna_form_residual(mu, "d", selector=m).value
        print(f"  m={m}:  {c:.10f}   {4 * r:.10f}")
    print(f"  mixed check: {mixed_fourier_check(pushed, 4).verdict.value}")

    delta2 = cayley_pushforward(tensor(make_dirac([0.0]), make_dirac([0.0])))
    print("\ndelta_0 x delta_0 is caught on the torus side as well:")
    print(f"  mixed check: {mixed_fourier_check(delta2, 4).verdict.value}")


if __name__ == "__main__":
    main()
