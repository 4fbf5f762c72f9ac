#include "cfdiv/cauchy_core.hpp"

#include <cmath>

namespace cfdiv {

namespace {
const double kPi = std::acos(-1.0);
}

MoebiusMap::MoebiusMap(double a, double b, double c, double d)
{
    const double det = a * d - b * c;
    if (!(det > 0.0))
        throw std::invalid_argument(
            "MoebiusMap: determinant must be positive");
    const double r = std::sqrt(det);
    a_ = a / r;
    b_ = b / r;
    c_ = c / r;
    d_ = d / r;
}

std::complex<double> MoebiusMap::apply(std::complex<double> z) const
{
    return (a_ * z + b_) / (c_ * z + d_);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const
{
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
            c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

double chi(const CauchyParam& p, const CauchyParam& q)
{
    const double dl = p.location() - q.location();
    const double ds = p.scale() - q.scale();
    return (dl * dl + ds * ds) / (2.0 * p.scale() * q.scale());
}

double density(const CauchyParam& p, double x)
{
    const double d = x - p.location();
    return p.scale() / (kPi * (p.scale() * p.scale() + d * d));
}

double cauchy_cdf(const CauchyParam& p, double x)
{
    return std::atan((x - p.location()) / p.scale()) / kPi + 0.5;
}

double cauchy_quantile(const CauchyParam& p, double u)
{
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("cauchy_quantile: u must lie in (0,1)");
    return p.location() + p.scale() * std::tan(kPi * (u - 0.5));
}

CauchyParam mobius_apply(const MoebiusMap& A, const CauchyParam& p)
{
    const std::complex<double> z = A.apply(p.theta());
    return {z.real(), std::fabs(z.imag())};
}

StandardPair reduce_to_standard_pair(const CauchyParam& p, const CauchyParam& q)
{
    // Step 1: translate/scale q to i.
    const double rs = std::sqrt(q.scale());
    MoebiusMap A(1.0 / rs, -q.location() / rs, 0.0, rs);
    std::complex<double> z = A.apply(p.theta());

    // Step 2: rotation fixing i that puts z on the imaginary axis.
    const double phi =
        0.5 * std::atan2(-2.0 * z.real(), 1.0 - std::norm(z));
    const MoebiusMap R(std::cos(phi), std::sin(phi), -std::sin(phi),
                       std::cos(phi));
    A = R.compose(A);
    z = R.apply(z);

    // Step 3: the inversion -1/z (also fixing i) when the image lies
    // below i.
    double lambda = z.imag();
    if (lambda < 1.0) {
        const MoebiusMap S(0.0, -1.0, 1.0, 0.0);
        A = S.compose(A);
        lambda = 1.0 / lambda;
    }
    return {lambda, A};
}

double sup_density_ratio(const CauchyParam& p, const CauchyParam& q)
{
    const double u = chi(p, q);
    return 1.0 + u + std::sqrt(u * (u + 2.0));
}

double fisher_rao_distance(const CauchyParam& p, const CauchyParam& q)
{
    return std::acosh(1.0 + chi(p, q)) / std::sqrt(2.0);
}

Christoffel christoffel(const CauchyParam& p)
{
    const double s = p.scale();
    Christoffel c{};
    c.gamma[0][0][1] = c.gamma[0][1][0] = -1.0 / s;  // Gamma^1_{12}
    c.gamma[1][1][1] = -1.0 / s;                     // Gamma^2_{22}
    c.gamma[1][0][0] = 1.0 / s;                      // Gamma^2_{11}
    return c;
}

}  // namespace cfdiv
