"""Lebesgue measure, the growth condition and the functions it represents.

Run with ``python3 demos/01_lebesgue_and_growth.py``.
"""
import math

from nevanlinna import (
    RepresentationData,
    SamplePlan,
    classify_measure,
    evaluate_q,
    growth_check,
    lebesgue_check,
    make_density,
    make_dirac,
    make_lebesgue,
)


def main():
    print("Lebesgue measure on R^2 represents the constant function i:")
    data = RepresentationData(0.0, [0.0, 0.0], make_lebesgue(2))
    for z in ([1 + 2j, 0.5j], [-3 + 0.1j, 2 + 2j]):
        print(f"  q({z}) = {evaluate_q(data, z).value:.12f}")

    print("\nA point mass of weight pi at 0 gives q(z) = -1/z in one variable:")
    atom = RepresentationData(0.0, [0.0], make_dirac([0.0], math.pi))
    z = 1 + 1j
    print(f"  q({z}) = {evaluate_q(atom, [z]).value:.12f}   -1/z = {-1 / z:.12f}")

    print("\nThe growth integral separates admissible measures from divergent ones:")
    for label, mu in [("lambda_R", make_lebesgue(1)), ("(1+t^2) dt", make_density("quadratic"))]:
        report = growth_check(mu)
        print(f"  {label:12s} growth: {report.verdict.value}")

    print("\nLebesgue multiples are recognised and their constant is fitted:")
    plan = SamplePlan.default(2, samples=10)
    report = lebesgue_check(make_lebesgue(2, 3.0), plan)
    print(f"  3 lambda_R2: {report.verdict.value}, c = {report.extras['c']:.9f}")

    print("\nOne-line summaries:")
    for label, mu in [("delta_0", make_dirac([0.0])), ("lambda_R3", make_lebesgue(3))]:
        s = classify_measure(mu, SamplePlan.default(mu.dim, 6))
        print(f"  {label:10s} growth={s.growth.value} nevanlinna={s.nevanlinna.value} "
              f"lebesgue_multiple={s.lebesgue_multiple.value}")


if __name__ == "__main__":
    main()
