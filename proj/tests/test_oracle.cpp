#include <doctest.h>

#include <cmath>

#include "cfdiv/families.hpp"
#include "cfdiv/oracle.hpp"

using namespace cfdiv;

TEST_CASE("density specifications integrate to one")
{
    CHECK(quad_density_norm(DensitySpec{CauchyParam(1.0, 0.6)}, 1e-11) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quad_density_norm(
              DensitySpec{MixtureTwo(0.3, CauchyParam(0.0, 1.0),
                                     CauchyParam(2.0, 0.4))},
              1e-11) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quad_density_norm(DensitySpec{LogCauchySpec{0.4, 0.8}}, 1e-11) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quad_density_norm(DensitySpec{CircularSpec{{0.3, -0.2}}}, 1e-11) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quad_density_norm(DensitySpec{WrappedSpec{0.7, 0.9}}, 1e-11) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quad_density_norm(
              DensitySpec{BivariateCauchy(0.5, -0.5, 2.0, 0.3, 1.0)}, 1e-6) ==
          doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("generator validation")
{
    CHECK_THROWS_AS(GeneratorSpec("bad", [](double u) { return u; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        catalog_generator(DivergenceKind(DivTag::Bhattacharyya)),
        std::invalid_argument);
    const auto kc = catalog_generator(DivergenceKind(DivTag::KumarChhina));
    CHECK(kc.f(1.0) == doctest::Approx(0.0));
}

TEST_CASE("quadrature oracle matches closed forms")
{
    const CauchyParam p(0.5, 1.2), q(-0.4, 0.8);
    for (DivTag t : {DivTag::KL, DivTag::TV, DivTag::HellingerSq,
                     DivTag::Bhattacharyya, DivTag::QDiv2}) {
        const DivergenceKind kind(t);
        CHECK(oracle_divergence(kind, p, q, 1e-11) ==
              doctest::Approx(divergence(kind, p, q)).epsilon(1e-8));
    }
    const DivergenceKind skl(DivTag::SkewedKL, 0.3);
    CHECK(oracle_divergence(skl, p, q, 1e-11) ==
          doctest::Approx(divergence(skl, p, q)).epsilon(1e-8));
    const DivergenceKind sjs(DivTag::SkewedJS, 0.3);
    CHECK(oracle_divergence(sjs, p, q, 1e-11) ==
          doctest::Approx(divergence(sjs, p, q)).epsilon(1e-8));
}

TEST_CASE("Monte Carlo estimator is consistent and deterministic")
{
    const CauchyParam p(0.0, 1.0), q(1.0, 1.0);
    const auto gen = catalog_generator(DivergenceKind(DivTag::KL));
    const auto r1 =
        mc_f_divergence(gen, DensitySpec{p}, DensitySpec{q}, 200000, 42);
    const auto r2 =
        mc_f_divergence(gen, DensitySpec{p}, DensitySpec{q}, 200000, 42);
    CHECK(r1.estimate == r2.estimate);
    CHECK(r1.stderr_ == r2.stderr_);
    CHECK(r1.stderr_ > 0.0);
    CHECK(r1.stderr_ < 0.05);
    const double closed = divergence(DivergenceKind(DivTag::KL), p, q);
    CHECK(std::fabs(r1.estimate - closed) < 5.0 * r1.stderr_);
    const auto r3 =
        mc_f_divergence(gen, DensitySpec{p}, DensitySpec{q}, 200000, 43);
    CHECK(r3.estimate != r1.estimate);
}

TEST_CASE("bivariate scale matrix validation")
{
    CHECK_THROWS_AS(BivariateCauchy(0.0, 0.0, 1.0, 2.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(BivariateCauchy(0.0, 0.0, -1.0, 0.0, 1.0),
                    std::domain_error);
}

TEST_CASE("bivariate KL vanishes on identical inputs and is invariant "
          "under joint translation")
{
    const BivariateCauchy a(0.3, -0.2, 1.5, 0.4, 0.9);
    CHECK(quad_kl_bivariate(a, a, 1e-4) == doctest::Approx(0.0).epsilon(1e-3));
    const BivariateCauchy p(0.0, 0.0, 1.0, 0.0, 1.0);
    const BivariateCauchy q(1.0, 0.0, 2.0, 0.0, 1.0);
    const BivariateCauchy p2(2.0, 3.0, 1.0, 0.0, 1.0);
    const BivariateCauchy q2(3.0, 3.0, 2.0, 0.0, 1.0);
    CHECK(quad_kl_bivariate(p, q, 1e-4) ==
          doctest::Approx(quad_kl_bivariate(p2, q2, 1e-4)).epsilon(1e-3));
}
