#include <doctest.h>

#include <cmath>

#include "cfdiv/closed_form.hpp"
#include "cfdiv/oracle.hpp"
#include "cfdiv/quadrature.hpp"

using namespace cfdiv;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("kind parsing round-trips")
{
    for (const char* name :
         {"chisq", "kl", "tv", "js", "taneja", "lecam", "hellinger",
          "jeffreys", "bhattacharyya", "chernoff", "skewed-kl", "skewed-js",
          "hm", "qdiv2", "kumar-chhina", "alpha"})
        CHECK(kind_name(parse_kind(name)) == name);
    CHECK(parse_kind("chi2").tag == DivTag::ChiSquared);
    CHECK(parse_kind("bhat").tag == DivTag::Bhattacharyya);
    CHECK(parse_kind("kc").tag == DivTag::KumarChhina);
    CHECK_THROWS_AS(parse_kind("nope"), std::invalid_argument);
}

TEST_CASE("reference divergence values")
{
    const CauchyParam p(0.0, 1.0), q(1.0, 1.0);
    CHECK(divergence(DivergenceKind(DivTag::KL), p, q) ==
          doctest::Approx(std::log(1.25)).epsilon(1e-14));
    CHECK(divergence(DivergenceKind(DivTag::ChiSquared), p, q) ==
          doctest::Approx(0.5));
    CHECK(divergence(DivergenceKind(DivTag::Jeffreys), p, q) ==
          doctest::Approx(2.0 * std::log(1.25)));
}

TEST_CASE("h_f identities")
{
    const DivergenceKind lecam(DivTag::LeCam), hm(DivTag::HarmonicMean);
    const DivergenceKind bhat(DivTag::Bhattacharyya), cher(DivTag::Chernoff);
    const DivergenceKind js(DivTag::JS), skl_half(DivTag::SkewedKL, 0.5);
    for (double u : {0.0, 0.2, 1.0, 4.0, 25.0}) {
        CHECK(h_of_chi(lecam, u) == doctest::Approx(2.0 * h_of_chi(hm, u)));
        CHECK(h_of_chi(bhat, u) == h_of_chi(cher, u));
        CHECK(h_of_chi(skl_half, u) ==
              doctest::Approx(h_of_chi(js, u)).epsilon(1e-12));
    }
    for (const DivTag t : {DivTag::ChiSquared, DivTag::KL, DivTag::TV,
                           DivTag::JS, DivTag::Taneja, DivTag::LeCam,
                           DivTag::HellingerSq, DivTag::Jeffreys,
                           DivTag::Bhattacharyya, DivTag::HarmonicMean})
        CHECK(h_of_chi(DivergenceKind(t), 0.0) == 0.0);
    CHECK_THROWS_AS(h_of_chi(DivergenceKind(DivTag::KumarChhina), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(h_of_chi(js, -0.5), std::domain_error);
}

TEST_CASE("total variation via the crossing roots")
{
    const CauchyParam p(0.2, 1.1), q(-0.8, 2.4);
    const double closed = divergence(DivergenceKind(DivTag::TV), p, q);
    CHECK(tv_two_root(p, q) == doctest::Approx(closed).epsilon(1e-12));

    // Equal scales: single crossing at the midpoint.
    const CauchyParam a(0.0, 1.0), b(3.0, 1.0);
    const auto roots = density_crossings(a, b);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(1.5));
    CHECK(tv_two_root(a, b) ==
          doctest::Approx(divergence(DivergenceKind(DivTag::TV), a, b))
              .epsilon(1e-12));

    // Crossings really are crossings.
    for (double r : density_crossings(p, q))
        CHECK(density(p, r) == doctest::Approx(density(q, r)).epsilon(1e-9));
}

TEST_CASE("J polynomials")
{
    const auto j3 = j_polynomial(3);
    REQUIRE(j3.size() == 3);
    CHECK(j3[0] == doctest::Approx(1.0));
    CHECK(j3[1] == doctest::Approx(3.0));
    CHECK(j3[2] == doctest::Approx(1.5));

    const CauchyParam p(0.0, 1.0 + 1.0 + std::sqrt(3.0)), q(0.0, 1.0);
    // chi = 1 at lambda = 2 + sqrt(3).
    CHECK(chi(p, q) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bc_skewed_integer(5, p, q) == doctest::Approx(55.375).epsilon(1e-12));
    CHECK_THROWS_AS(j_polynomial(1), std::invalid_argument);
}

TEST_CASE("q-divergence of order 2")
{
    const CauchyParam p(0.0, 1.0), q(0.0, 2.0);
    CHECK(q_divergence_2(p, q) == doctest::Approx(kPi / 2.0));
    CHECK(q_divergence_2(q, p) == doctest::Approx(kPi));
    CHECK(divergence(DivergenceKind(DivTag::QDiv2), p, q) ==
          doctest::Approx(kPi / 2.0));
}

TEST_CASE("entropy and mixtures")
{
    CHECK(cauchy_entropy(1.0) == doctest::Approx(std::log(4.0 * kPi)));
    CHECK_THROWS_AS(cauchy_entropy(0.0), std::domain_error);

    const MixtureTwo mix(0.4, CauchyParam(0.0, 1.0), CauchyParam(1.5, 0.7));
    const double mass =
        integrate_line([&](double x) { return mix.density(x); }, 1e-11);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));

    const double closed = kl_point_to_mixture(mix.c0, mix);
    const double quad = integrate_line(
        [&](double x) {
            const double a = density(mix.c0, x);
            return a * std::log(a / mix.density(x));
        },
        1e-12);
    CHECK(closed == doctest::Approx(quad).epsilon(1e-9));
    CHECK_THROWS_AS(kl_point_to_mixture(CauchyParam(9.0, 9.0), mix),
                    std::invalid_argument);
}

TEST_CASE("angular skewed Bhattacharyya coefficient")
{
    const CauchyParam p(0.4, 1.3), q(-0.6, 0.9);
    const double bc_half = bc_skewed_angular(0.5, p, q);
    const double hell = divergence(DivergenceKind(DivTag::HellingerSq), p, q);
    CHECK(bc_half == doctest::Approx(1.0 - hell).epsilon(1e-10));
    const double bhat = divergence(DivergenceKind(DivTag::Bhattacharyya), p, q);
    CHECK(-std::log(bc_half) == doctest::Approx(bhat).epsilon(1e-10));
    CHECK_THROWS_AS(bc_skewed_angular(0.0, p, q), std::domain_error);
}
