#!/usr/bin/env python3
"""Check every closed-form dispersion bound against computed quantities.

Covers the three-part integral estimate (tail, middle, bulk), the level
amplification inequality on a simulated trajectory, the desk-scale
1.4818^-n rate with an empirically calibrated constant, and the fixed
analytic constants (ray integrals, the Im g ceiling, the variation bound,
the equilibrium exponent ratio).
"""

from math import floor, pi

import numpy as np

from hypercube_walk import bounds, specfun


def show(report: bounds.BoundReport) -> None:
    flag = "ok " if report.passed else "FAIL"
    print(f"  [{flag}] {report.name:<24} computed {report.computed:>12.4e}"
          f"  bound {report.bound:>12.4e}  margin {report.margin:>12.4e}")


def main() -> None:
    print("=== three-part integral estimate, n = 20, 28, 36 ===")
    for n in (20, 28, 36):
        nu = floor(0.8663 * n)
        print(f"n = {n}, order {nu}:")
        for report in bounds.theorem2_bounds(n, nu):
            show(report)

    print("\n=== level amplification at n = 12 (worst pairs shown) ===")
    reports = bounds.lemma1_empirical_reports(12, t_max=20, w_max=6)
    tightest = sorted(reports, key=lambda r: r.margin)[:5]
    for report in tightest:
        show(report)
    coin, shift = bounds.lemma1_chain_margins(12, t_max=20)
    print(f"  per-step inequality slacks: coin {coin:.2e}, shift {shift:.2e}")

    print("\n=== desk-scale rate with C calibrated at n = 10 ===")
    c_emp = bounds.calibrate_theorem1(n_ref=10)
    print(f"  C = {c_emp:.5f}")
    for n in (10, 25, 40, 50):
        show(bounds.theorem1_check(n, c_empirical=c_emp)[0])

    print("\n=== fixed analytic constants ===")
    ray_34, ray_54 = specfun.beta_half_integrals(1.0)
    print(f"  ray integral (3/4 power) at a=1: {ray_34:.6f}")
    print(f"  ray integral (5/4 power) at a=1: {ray_54:.6f}")
    print(f"  variation bound at c = pi/2:     {specfun.variation_bound(pi / 2):.6f}")
    print(f"  equilibrium level ratio:         {bounds.equilibrium_c():.6f}")
    print(f"  2^H at that ratio:               {2.0**bounds.binary_entropy(0.13368):.5f}")
    ys = np.linspace(1e-8, 40.0, 200001)
    zs = 1.0 + 1j * ys
    im_g = (zs - np.sqrt(zs * zs - 1.0) + np.arccos(1.0 / zs)).imag
    print(f"  max Im g on the critical ray:    {im_g.max():.6f}  (< 0.2607)")


if __name__ == "__main__":
    main()
