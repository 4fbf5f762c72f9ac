#include <doctest.h>

#include <cmath>

#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/oracle.hpp"
#include "cfdiv/quadrature.hpp"

using namespace cfdiv;

TEST_CASE("CauchyParam validates the scale")
{
    CHECK_THROWS_AS(CauchyParam(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CauchyParam(0.0, -1.0), std::invalid_argument);
    const CauchyParam p(2.0, 3.0);
    CHECK(p.location() == 2.0);
    CHECK(p.scale() == 3.0);
    CHECK(p.theta() == std::complex<double>(2.0, 3.0));
}

TEST_CASE("chi is the maximal invariant")
{
    const CauchyParam p(0.6, 1.2), q(0.0, 1.0);
    CHECK(chi(p, q) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(chi(p, q) == chi(q, p));
    CHECK(chi(p, p) == 0.0);

    const double lambda = 3.7;
    const CauchyParam a(0.0, lambda), b(0.0, 1.0);
    CHECK(chi(a, b) == doctest::Approx((lambda - 1.0) * (lambda - 1.0) /
                                       (2.0 * lambda)));
}

TEST_CASE("density, cdf and quantile are consistent")
{
    const CauchyParam p(-1.5, 0.8);
    CHECK(density(p, -1.5) == doctest::Approx(1.0 / (std::acos(-1.0) * 0.8)));
    CHECK(cauchy_cdf(p, -1.5) == doctest::Approx(0.5));
    for (double u : {0.1, 0.35, 0.5, 0.77, 0.99})
        CHECK(cauchy_cdf(p, cauchy_quantile(p, u)) ==
              doctest::Approx(u).epsilon(1e-12));
    const double mass =
        integrate_line([&](double x) { return density(p, x); }, 1e-12);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Moebius maps act on the upper half-plane")
{
    CHECK_THROWS_AS(MoebiusMap(1.0, 0.0, 0.0, -1.0), std::invalid_argument);
    const MoebiusMap A(2.0, 1.0, 1.0, 1.0);  // determinant 1 after scaling
    CHECK(A.a() * A.d() - A.b() * A.c() == doctest::Approx(1.0));

    const CauchyParam p(0.4, 1.7);
    const CauchyParam ap = mobius_apply(A, p);
    const std::complex<double> img = A.apply(p.theta());
    CHECK(ap.location() == doctest::Approx(img.real()));
    CHECK(ap.scale() == doctest::Approx(img.imag()));

    const MoebiusMap B(1.0, -0.3, 0.2, 1.0);
    const CauchyParam q(-0.9, 0.6);
    CHECK(chi(mobius_apply(B, p), mobius_apply(B, q)) ==
          doctest::Approx(chi(p, q)).epsilon(1e-12));
}

TEST_CASE("standard-pair reduction")
{
    const CauchyParam p(1.3, 0.4), q(-0.7, 2.2);
    const StandardPair sp = reduce_to_standard_pair(p, q);
    const double u = chi(p, q);
    CHECK(sp.lambda == doctest::Approx(1.0 + u + std::sqrt(u * (u + 2.0))));
    const CauchyParam ip = mobius_apply(sp.map, p);
    const CauchyParam iq = mobius_apply(sp.map, q);
    CHECK(std::fabs(ip.location()) < 1e-9);
    CHECK(ip.scale() == doctest::Approx(sp.lambda).epsilon(1e-10));
    CHECK(std::fabs(iq.location()) < 1e-9);
    CHECK(iq.scale() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sup density ratio agrees with the grid oracle")
{
    const CauchyParam p(0.3, 1.5), q(-0.2, 0.7);
    CHECK(sup_density_ratio(p, q) ==
          doctest::Approx(sup_ratio_grid(p, q)).epsilon(1e-6));
    CHECK(sup_density_ratio(p, p) == doctest::Approx(1.0));
}

TEST_CASE("Fisher-Rao distance on the scale axis")
{
    const CauchyParam p(0.0, 1.0), q(0.0, std::exp(1.0));
    CHECK(fisher_rao_distance(p, q) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(fisher_rao_distance(p, p) == 0.0);
}

TEST_CASE("Christoffel symbols of the hyperbolic metric")
{
    const CauchyParam p(0.7, 2.0);
    const Christoffel g = christoffel(p);
    CHECK(g.gamma[0][0][1] == doctest::Approx(-0.5));
    CHECK(g.gamma[0][1][0] == doctest::Approx(-0.5));
    CHECK(g.gamma[1][1][1] == doctest::Approx(-0.5));
    CHECK(g.gamma[1][0][0] == doctest::Approx(0.5));
    CHECK(g.gamma[0][0][0] == 0.0);
    CHECK(g.gamma[1][0][1] == 0.0);
}
