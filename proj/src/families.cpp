#include "cfdiv/families.hpp"

#include <cmath>

namespace cfdiv {

namespace {
const double kPi = std::acos(-1.0);
}

CauchyParam theta_from_disk(const CircularSpec& c)
{
    if (!(std::abs(c.w) < 1.0))
        throw std::domain_error(
            "theta_from_disk: parameter must lie inside the unit disk");
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> th = i * (1.0 - c.w) / (1.0 + c.w);
    return {th.real(), th.imag()};
}

CircularSpec disk_from_theta(const CauchyParam& p)
{
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> th = p.theta();
    return {(1.0 + i * th) / (1.0 - i * th)};
}

double circular_density(const CircularSpec& p, double phi)
{
    const std::complex<double> e(std::cos(phi), std::sin(phi));
    const double d2 = std::norm(e - p.w);
    return (1.0 - std::norm(p.w)) / (2.0 * kPi * d2);
}

double wrapped_density(const WrappedSpec& p, double phi)
{
    if (!(p.gamma > 0.0))
        throw std::domain_error("wrapped_density: gamma must be positive");
    return std::sinh(p.gamma) /
           (2.0 * kPi * (std::cosh(p.gamma) - std::cos(phi - p.mu)));
}

CircularSpec circular_from_wrapped(const WrappedSpec& wc)
{
    if (!(wc.gamma > 0.0))
        throw std::domain_error(
            "circular_from_wrapped: gamma must be positive");
    const double rho = std::exp(-wc.gamma);
    const CircularSpec c{std::polar(rho, wc.mu)};
    // The density identity pins the branch convention; verify it.
    for (int k = 0; k < 16; ++k) {
        const double phi = -kPi + 2.0 * kPi * k / 16.0;
        if (std::fabs(circular_density(c, phi) - wrapped_density(wc, phi)) >
            1e-9)
            throw std::runtime_error(
                "circular_from_wrapped: density identity failed; "
                "unexpected branch convention");
    }
    return c;
}

std::complex<double> disk_automorphism(double phi, std::complex<double> a,
                                       std::complex<double> w)
{
    if (!(std::abs(a) < 1.0))
        throw std::domain_error(
            "disk_automorphism: |a| must be smaller than 1");
    const std::complex<double> e(std::cos(phi), std::sin(phi));
    return e * (w + a) / (std::conj(a) * w + 1.0);
}

double log_cauchy_density(const LogCauchySpec& p, double y)
{
    if (!(p.sigma > 0.0))
        throw std::domain_error("log_cauchy_density: sigma must be positive");
    if (!(y > 0.0))
        throw std::domain_error(
            "log_cauchy_density: support is the positive half-line");
    const double d = std::log(y) - p.mu;
    return p.sigma / (kPi * y * (d * d + p.sigma * p.sigma));
}

double family_divergence(const DivergenceKind& kind, const CircularSpec& p,
                         const CircularSpec& q)
{
    return divergence(kind, theta_from_disk(p), theta_from_disk(q));
}

double family_divergence(const DivergenceKind& kind, const WrappedSpec& p,
                         const WrappedSpec& q)
{
    return family_divergence(kind, circular_from_wrapped(p),
                             circular_from_wrapped(q));
}

double family_divergence(const DivergenceKind& kind, const LogCauchySpec& p,
                         const LogCauchySpec& q)
{
    return divergence(kind, CauchyParam(p.mu, p.sigma),
                      CauchyParam(q.mu, q.sigma));
}

CauchyParam boole_image(double a, const CauchyParam& theta)
{
    if (!(a > 0.0))
        throw std::domain_error("boole_image: a must be positive");
    const double l = theta.location(), s = theta.scale();
    const double n2 = l * l + s * s;
    return {a * l * (n2 - 1.0) / n2, a * s * (n2 + 1.0) / n2};
}

double boole_pushforward_check(double a, const CauchyParam& theta, double x)
{
    if (x == 0.0)
        throw std::domain_error("boole_pushforward_check: x must be nonzero");
    const CauchyParam image = boole_image(a, theta);
    const double xp = a * (x - 1.0 / x);
    auto deriv = [a](double t) { return a * (1.0 + 1.0 / (t * t)); };
    const double lhs = density(image, xp);
    const double rhs = density(theta, x) / std::fabs(deriv(x)) +
                       density(theta, -1.0 / x) /
                           std::fabs(deriv(-1.0 / x));
    return std::fabs(lhs - rhs);
}

double mobius_pushforward_residual(const MoebiusMap& A, const CauchyParam& theta,
                                   double x)
{
    const double den = A.c() * x + A.d();
    if (den == 0.0)
        throw std::domain_error(
            "mobius_pushforward_residual: x maps to infinity");
    const double xp = (A.a() * x + A.b()) / den;
    const CauchyParam image = mobius_apply(A, theta);
    return std::fabs(density(image, xp) - density(theta, x) * den * den);
}

}  // namespace cfdiv
