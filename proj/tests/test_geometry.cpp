#include <doctest.h>

#include <cmath>

#include "cfdiv/geometry_analysis.hpp"

using namespace cfdiv;

TEST_CASE("metric spec validation and distances")
{
    CHECK_THROWS_AS(MetricSpec(DivergenceKind(DivTag::KL), 1.5),
                    std::invalid_argument);
    const MetricSpec m(DivergenceKind(DivTag::KL), 0.5);
    const CauchyParam p(0.0, 1.0), q(1.0, 1.0);
    CHECK(m.distance(p, q) ==
          doctest::Approx(std::sqrt(std::log(1.25))).epsilon(1e-12));
}

TEST_CASE("triangle scans")
{
    const MetricSpec sqrt_kl(DivergenceKind(DivTag::KL), 0.5);
    CHECK(triangle_scan(sqrt_kl, 2000, 7).empty());
    const MetricSpec kl_raw(DivergenceKind(DivTag::KL), 1.0);
    CHECK(metric_violation_search(kl_raw).has_value());
    const MetricSpec half(DivergenceKind(DivTag::KL), 0.5);
    CHECK_FALSE(metric_violation_search(half).has_value());
}

TEST_CASE("Gromov four-point defect is positive and grows")
{
    const DivergenceKind kl(DivTag::KL);
    const double d10 = gromov_four_point_probe(kl, 10.0);
    const double d100 = gromov_four_point_probe(kl, 100.0);
    CHECK(d10 > 0.0);
    CHECK(d100 > d10);
    CHECK_THROWS_AS(gromov_four_point_probe(kl, 0.5), std::domain_error);
}

TEST_CASE("Fisher-Rao to Bhattacharyya transform")
{
    const auto r0 = fr_to_bhat_transform(0.0);
    CHECK(r0.t_value == 0.0);
    CHECK(r0.ratio == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0)))
                          .epsilon(1e-3));
    double prev_t = -1.0, prev_ratio = 1e300;
    for (double s : {0.1, 0.5, 1.0, 2.0, 4.0}) {
        const auto r = fr_to_bhat_transform(s);
        CHECK(r.t_value > prev_t);
        CHECK(r.ratio < prev_ratio);
        prev_t = r.t_value;
        prev_ratio = r.ratio;
    }
    CHECK_THROWS_AS(fr_to_bhat_transform(-1.0), std::domain_error);
}

TEST_CASE("Chernoff optimizer at a symmetric pair")
{
    const CauchyParam p(0.0, 3.0), q(0.0, 1.0);
    const auto r = chernoff_optimizer(p, q);
    CHECK(r.a_star == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(r.value ==
          doctest::Approx(divergence(DivergenceKind(DivTag::Bhattacharyya),
                                     p, q))
              .epsilon(1e-8));
}

TEST_CASE("Chebyshev center of an axial pair")
{
    const std::vector<CauchyParam> pts{CauchyParam(0.0, 4.0),
                                       CauchyParam(0.0, 1.0)};
    const CauchyParam c = chebyshev_center(pts);
    CHECK(std::fabs(c.location()) < 1e-6);
    CHECK(c.scale() == doctest::Approx(2.0).epsilon(1e-4));
    CHECK_THROWS_AS(chebyshev_center({}), std::invalid_argument);
}

TEST_CASE("chi-ball Euclidean bound")
{
    const auto d = chi_ball_euclidean_bound(CauchyParam(1.0, 2.0), 0.5);
    CHECK(d.center_re == doctest::Approx(1.0));
    CHECK(d.center_im == doctest::Approx(3.0));
    CHECK(d.radius == doctest::Approx(std::sqrt(0.5 * 2.5) * 2.0));
    // The extreme scale-axis point of the chi-ball sits inside the disc.
    const double delta = 0.5;
    const double lam = 1.0 + delta + std::sqrt(delta * (delta + 2.0));
    const CauchyParam w(1.0, 2.0 * lam);
    const double dx = w.location() - d.center_re;
    const double dy = w.scale() - d.center_im;
    CHECK(std::sqrt(dx * dx + dy * dy) <= d.radius + 1e-12);
}
