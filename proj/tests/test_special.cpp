#include <doctest.h>

#include <cmath>

#include "cfdiv/quadrature.hpp"
#include "cfdiv/special_fn.hpp"

using namespace cfdiv;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("AGM fixed point")
{
    CHECK(agm(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(agm(1.0, std::sqrt(2.0)) ==
          doctest::Approx(1.1981402347).epsilon(1e-9));
    CHECK(agm(2.0, 8.0) == doctest::Approx(2.0 * agm(1.0, 4.0)));
}

TEST_CASE("complete elliptic integrals at the endpoints")
{
    CHECK(elliptic_k(0.0) == doctest::Approx(kPi / 2.0));
    CHECK(elliptic_e(0.0) == doctest::Approx(kPi / 2.0));
    CHECK(elliptic_e(1.0) == doctest::Approx(1.0));
}

TEST_CASE("derivative identities for K and E")
{
    const double h = 1e-5;
    for (double x : {0.2, 0.5, 0.8}) {
        const double k = elliptic_k(x), e = elliptic_e(x);
        const double kprime = (elliptic_k(x + h) - elliptic_k(x - h)) / (2 * h);
        const double eprime = (elliptic_e(x + h) - elliptic_e(x - h)) / (2 * h);
        CHECK(kprime == doctest::Approx(-k / (2.0 * x) +
                                        e / (2.0 * x * (1.0 - x)))
                            .epsilon(1e-6));
        CHECK(eprime == doctest::Approx((e - k) / (2.0 * x)).epsilon(1e-6));
    }
}

TEST_CASE("Gauss deficit series against a direct evaluation")
{
    for (double x : {0.25, 0.5, 0.75}) {
        const double e = adaptive_quadrature(
            [x](double th) {
                const double s = std::sin(th);
                return std::sqrt(1.0 - x * s * s);
            },
            0.0, kPi / 2.0, 1e-13);
        const double direct = 1.0 - e / elliptic_k(x);
        CHECK(gauss_ek_deficit(x) == doctest::Approx(direct).epsilon(1e-11));
    }
}
