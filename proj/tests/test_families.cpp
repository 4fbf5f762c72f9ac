#include <doctest.h>

#include <cmath>

#include "cfdiv/families.hpp"

using namespace cfdiv;

TEST_CASE("disk parameterization of the circular family")
{
    const CauchyParam i_point = theta_from_disk(CircularSpec{{0.0, 0.0}});
    CHECK(i_point.location() == doctest::Approx(0.0));
    CHECK(i_point.scale() == doctest::Approx(1.0));

    const CircularSpec w{{0.35, -0.2}};
    const CircularSpec back = disk_from_theta(theta_from_disk(w));
    CHECK(back.w.real() == doctest::Approx(w.w.real()).epsilon(1e-12));
    CHECK(back.w.imag() == doctest::Approx(w.w.imag()).epsilon(1e-12));
    CHECK_THROWS_AS(theta_from_disk(CircularSpec{{1.2, 0.0}}),
                    std::domain_error);
}

TEST_CASE("wrapped Cauchy matches its circular representation")
{
    const WrappedSpec wc{0.8, 0.6};
    const CircularSpec c = circular_from_wrapped(wc);
    for (double phi : {-2.5, -0.3, 0.8, 1.9})
        CHECK(circular_density(c, phi) ==
              doctest::Approx(wrapped_density(wc, phi)).epsilon(1e-12));
    CHECK_THROWS_AS(circular_from_wrapped(WrappedSpec{0.0, -1.0}),
                    std::domain_error);
}

TEST_CASE("family divergences are symmetric in the invariant")
{
    const DivergenceKind js(DivTag::JS);
    const WrappedSpec a{0.3, 0.5}, b{-1.1, 1.2};
    CHECK(family_divergence(js, a, b) ==
          doctest::Approx(family_divergence(js, b, a)).epsilon(1e-12));
    const LogCauchySpec la{0.0, 1.0}, lb{0.7, 0.4};
    CHECK(family_divergence(js, la, lb) ==
          doctest::Approx(family_divergence(js, lb, la)).epsilon(1e-12));
}

TEST_CASE("disk automorphisms preserve the unit circle")
{
    const std::complex<double> a(0.3, 0.4);
    for (double th : {-2.0, 0.5, 2.7}) {
        const std::complex<double> w(std::cos(th), std::sin(th));
        CHECK(std::abs(disk_automorphism(0.9, a, w)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(disk_automorphism(0.0, {1.5, 0.0}, {0.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("Boole transform of a Cauchy parameter")
{
    const CauchyParam im = boole_image(2.0, CauchyParam(0.0, 1.0));
    CHECK(im.location() == doctest::Approx(0.0));
    CHECK(im.scale() == doctest::Approx(4.0));

    for (double x : {-3.0, -0.4, 0.2, 1.7})
        CHECK(boole_pushforward_check(1.3, CauchyParam(0.5, 0.9), x) < 1e-12);
    CHECK_THROWS_AS(boole_pushforward_check(1.0, CauchyParam(0.0, 1.0), 0.0),
                    std::domain_error);
}

TEST_CASE("Moebius pushforward identity")
{
    const MoebiusMap A(1.2, 0.3, -0.4, 0.7);
    const CauchyParam th(0.2, 1.1);
    for (double x : {-2.0, 0.1, 1.4, 5.0})
        CHECK(mobius_pushforward_residual(A, th, x) < 1e-12);
}
