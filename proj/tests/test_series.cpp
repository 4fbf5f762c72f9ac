#include <doctest.h>

#include <cmath>

#include "cfdiv/chi_series.hpp"

using namespace cfdiv;

TEST_CASE("low-order chi-power polynomials")
{
    const auto d2 = chi_power_polynomial(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == doctest::Approx(0.0));
    CHECK(d2[1] == doctest::Approx(1.0));

    const auto d3 = chi_power_polynomial(3);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0] == doctest::Approx(0.0));
    CHECK(d3[1] == doctest::Approx(0.0));
    CHECK(d3[2] == doctest::Approx(1.5));

    const CauchyParam p(0.7, 1.4), q(-0.3, 0.8);
    CHECK(chi_power_divergence(2, p, q) == doctest::Approx(chi(p, q)));
}

TEST_CASE("series coefficients")
{
    CHECK(series_coefficient(DivergenceKind(DivTag::KL), 2) ==
          doctest::Approx(0.5));
    CHECK(series_coefficient(DivergenceKind(DivTag::KL), 3) ==
          doctest::Approx(-1.0 / 3.0));
    CHECK(series_coefficient(DivergenceKind(DivTag::JS), 2) ==
          doctest::Approx(0.125));
    CHECK(series_coefficient(DivergenceKind(DivTag::HellingerSq), 2) ==
          doctest::Approx(0.125));
    CHECK(series_coefficient(DivergenceKind(DivTag::HarmonicMean), 2) ==
          doctest::Approx(0.25));
    // Alpha coefficients approach the KL coefficients as alpha -> -1 and
    // the reverse-KL coefficients (-1)^n / (n(n-1)) as alpha -> +1.
    const DivergenceKind near_kl(DivTag::Alpha, -0.999);
    const DivergenceKind near_rkl(DivTag::Alpha, 0.999);
    for (int n = 2; n <= 4; ++n) {
        CHECK(series_coefficient(near_kl, n) ==
              doctest::Approx(series_coefficient(DivergenceKind(DivTag::KL), n))
                  .epsilon(1e-3));
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        CHECK(series_coefficient(near_rkl, n) ==
              doctest::Approx(sign / (n * (n - 1.0))).epsilon(1e-3));
    }
    CHECK_THROWS_AS(series_coefficient(DivergenceKind(DivTag::TV), 2),
                    std::invalid_argument);
}

TEST_CASE("series sums match the closed forms inside the gate")
{
    const double u = 0.1;
    const double lambda = 1.0 + u + std::sqrt(u * (u + 2.0));
    const CauchyParam p(0.0, lambda), q(0.0, 1.0);
    for (DivTag t : {DivTag::KL, DivTag::JS, DivTag::HellingerSq,
                     DivTag::HarmonicMean}) {
        const DivergenceKind kind(t);
        REQUIRE(has_series(kind));
        const auto r = taylor_f_divergence(kind, p, q, 1e-11, 120);
        CHECK(r.verdict == SeriesVerdict::Converged);
        CHECK(r.value == doctest::Approx(h_of_chi(kind, u)).epsilon(1e-8));
    }
    const auto at_zero =
        taylor_f_divergence(DivergenceKind(DivTag::KL), q, q, 1e-11, 120);
    CHECK(at_zero.value == 0.0);
    CHECK(at_zero.verdict == SeriesVerdict::Converged);
}

TEST_CASE("convergence gate thresholds")
{
    auto pair_at = [](double u) {
        return CauchyParam(0.0, 1.0 + u + std::sqrt(u * (u + 2.0)));
    };
    const CauchyParam base(0.0, 1.0);
    const DivergenceKind kl(DivTag::KL), hm(DivTag::HarmonicMean);
    CHECK(series_radius(kl) == 1.0);
    CHECK(series_radius(hm) == 2.0);
    CHECK(convergence_gate(kl, pair_at(0.24), base));
    CHECK_FALSE(convergence_gate(kl, pair_at(0.26), base));
    CHECK(convergence_gate(hm, pair_at(0.6), base));
    CHECK_FALSE(convergence_gate(hm, pair_at(0.7), base));
}

TEST_CASE("total variation admits no chi-power expansion")
{
    const auto rep = tv_no_expansion_probe(CauchyParam(0.0, 1.0), 0.1, 5);
    REQUIRE(rep.ratios.size() == 5);
    for (std::size_t i = 1; i < rep.ratios.size(); ++i)
        CHECK(rep.ratios[i] > rep.ratios[i - 1]);
}
