"""Which product measures are Nevanlinna measures.

A product is Nevanlinna exactly when both factors are and one of them is a
multiple of Lebesgue measure. The demo predicts the verdict from the
factors and compares it with a direct check of the product.

Run with ``python3 demos/02_product_measures.py``.
"""
import math

from nevanlinna import (
    SamplePlan,
    classify_product,
    convex_line_measure,
    make_dirac,
    make_lebesgue,
    nevanlinna_residual,
    tensor,
    zero_measure,
)


def main():
    lam, atom, pi_atom = make_lebesgue(1), make_dirac([0.0]), make_dirac([0.0], math.pi)
    plan = SamplePlan.default(2, samples=12)
    pairs = [
        ("lambda x pi delta_0", lam, pi_atom, None),
        ("delta_0 x delta_0", atom, atom, None),
        ("lambda x lambda", lam, lam, None),
        ("pi delta_0 placed on coordinate 2", pi_atom, lam, (2,)),
        ("zero x lambda", zero_measure(1), lam, None),
    ]
    print(f"{'pair':36s} {'predicted':10s} {'observed':10s} verdict")
    for label, a, b, b1 in pairs:
        rec = classify_product(a, b, plan, b1)
        predicted = rec.predicted.value if rec.predicted else "-"
        observed = rec.observed.value if rec.observed else "-"
        print(f"{label:36s} {predicted:10s} {observed:10s} {rec.verdict}")

    print("\nWhy delta_0 x delta_0 fails: its pair residual at (i, i) is")
    print(f"  {nevanlinna_residual(tensor(atom, atom), [1j, 1j]).value}")

    print("\nA measure on a line in R^2 is Nevanlinna without being a product:")
    line = convex_line_measure(0.5, 0.5)
    r = nevanlinna_residual(line, [0.3 + 1j, -1 + 0.4j]).value
    print(f"  pair residual {abs(r):.2e}")


if __name__ == "__main__":
    main()
