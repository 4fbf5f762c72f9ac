"""Smoke test for the python bindings."""

import math

try:
    import cauchy_fdiv as m
except ImportError:
    import _cauchy_fdiv as m


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


approx(m.chi((0.6, 1.2), (0.0, 1.0)), 1.0 / 6.0, 1e-14)
approx(m.divergence("kl", (0.0, 1.0), (1.0, 1.0)), math.log(1.25), 1e-14)
approx(
    m.oracle_divergence("kl", (0.0, 1.0), (1.0, 1.0), tol=1e-11),
    math.log(1.25),
    1e-8,
)

est, se = m.mc_divergence("kl", (0.0, 1.0), (1.0, 1.0), n=50000, seed=3)
assert abs(est - math.log(1.25)) < 6 * se

r = m.taylor_divergence("kl", (0.6, 1.2), (0.0, 1.0), tol=1e-12, max_terms=40)
approx(r["value"], math.log(13.0 / 12.0), 1e-6)

approx(m.h_of_chi("chisq", 3.5), 3.5, 1e-14)
approx(m.entropy(1.0), math.log(4.0 * math.pi), 1e-14)
approx(m.fisher_rao_distance((0.0, 1.0), (0.0, math.e)), 1.0 / math.sqrt(2.0), 1e-12)

a_star, value = m.chernoff((0.0, 3.0), (0.0, 1.0))
approx(a_star, 0.5, 1e-5)
approx(value, m.divergence("bhattacharyya", (0.0, 3.0), (0.0, 1.0)), 1e-8)

assert m.j_polynomial(3) == [1.0, 3.0, 1.5]
approx(m.series_coefficient("kl", 2), 0.5, 1e-15)

kl2 = m.kl_bivariate((0.0, 0.0), [1.0, 0.0, 1.0], (0.0, 0.0), [1.0, 0.0, 1.0])
approx(kl2, 0.0, 1e-3)

approx(
    m.family_divergence("js", "wrapped", (0.3, 0.5), (1.0, 1.2)),
    m.family_divergence("js", "wrapped", (1.0, 1.2), (0.3, 0.5)),
    1e-12,
)

c = m.chebyshev_center([(0.0, 4.0), (0.0, 1.0)])
approx(c[0], 0.0, 1e-6)
approx(c[1], 2.0, 1e-3)

print("python smoke ok")
