#include "cfdiv/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cfdiv/quadrature.hpp"
#include "cfdiv/special_fn.hpp"
#include "jpoly.hpp"

namespace cfdiv {

namespace {

const double kPi = std::acos(-1.0);

double lambda_of_chi(double u)
{
    return 1.0 + u + std::sqrt(u * (u + 2.0));
}

/** D_KL(p1 : (1-w) p1 + w p2) in closed form. */
double klpmix(const CauchyParam& p1, const CauchyParam& p2, double w)
{
    if (!(w >= 0.0 && w <= 1.0))
        throw std::domain_error("klpmix: weight must lie in [0,1]");
    const double dl = p1.location() - p2.location();
    const double s1 = p1.scale(), s2 = p2.scale();
    const double num = dl * dl + (s1 + s2) * (s1 + s2);
    const double den =
        (1.0 - w) * (dl * dl + s1 * s1 + s2 * s2) + 2.0 * w * s1 * s2 +
        2.0 * std::sqrt(s1 * s1 * s2 * s2 +
                        s1 * s2 * ((s1 - s2) * (s1 - s2) + dl * dl) * w *
                            (1.0 - w));
    return std::log(num / den);
}

double h_hellinger(double u)
{
    if (u == 0.0) return 0.0;
    const double c = 1.0 / lambda_of_chi(u);
    return 1.0 - std::sqrt(c) / agm(1.0, c);
}

double h_bhattacharyya(double u)
{
    if (u == 0.0) return 0.0;
    const double lambda = lambda_of_chi(u);
    return 0.5 * std::log(lambda) + std::log(agm(1.0, 1.0 / lambda));
}

std::pair<CauchyParam, CauchyParam> standard_pair_of_chi(double u)
{
    return {CauchyParam(0.0, lambda_of_chi(u)), CauchyParam(0.0, 1.0)};
}

}  // namespace

DivergenceKind parse_kind(const std::string& name, double alpha)
{
    if (name == "chisq" || name == "chi2") return {DivTag::ChiSquared};
    if (name == "kl") return {DivTag::KL};
    if (name == "tv") return {DivTag::TV};
    if (name == "js") return {DivTag::JS};
    if (name == "taneja") return {DivTag::Taneja};
    if (name == "lecam") return {DivTag::LeCam};
    if (name == "hellinger") return {DivTag::HellingerSq};
    if (name == "jeffreys") return {DivTag::Jeffreys};
    if (name == "bhattacharyya" || name == "bhat")
        return {DivTag::Bhattacharyya};
    if (name == "chernoff") return {DivTag::Chernoff};
    if (name == "skewed-kl") return {DivTag::SkewedKL, alpha};
    if (name == "skewed-js") return {DivTag::SkewedJS, alpha};
    if (name == "hm" || name == "harmonic") return {DivTag::HarmonicMean};
    if (name == "qdiv2") return {DivTag::QDiv2};
    if (name == "kumar-chhina" || name == "kc") return {DivTag::KumarChhina};
    if (name == "alpha") return {DivTag::Alpha, alpha};
    throw std::invalid_argument("unknown divergence kind: " + name);
}

std::string kind_name(const DivergenceKind& kind)
{
    switch (kind.tag) {
        case DivTag::ChiSquared: return "chisq";
        case DivTag::KL: return "kl";
        case DivTag::TV: return "tv";
        case DivTag::JS: return "js";
        case DivTag::Taneja: return "taneja";
        case DivTag::LeCam: return "lecam";
        case DivTag::HellingerSq: return "hellinger";
        case DivTag::Jeffreys: return "jeffreys";
        case DivTag::Bhattacharyya: return "bhattacharyya";
        case DivTag::Chernoff: return "chernoff";
        case DivTag::SkewedKL: return "skewed-kl";
        case DivTag::SkewedJS: return "skewed-js";
        case DivTag::HarmonicMean: return "hm";
        case DivTag::QDiv2: return "qdiv2";
        case DivTag::KumarChhina: return "kumar-chhina";
        case DivTag::Alpha: return "alpha";
    }
    return "?";
}

bool has_closed_form(const DivergenceKind& kind)
{
    switch (kind.tag) {
        case DivTag::KumarChhina:
        case DivTag::Alpha:
            return false;
        default:
            return true;
    }
}

double h_of_chi(const DivergenceKind& kind, double u)
{
    if (!(u >= 0.0))
        throw std::domain_error("h_of_chi: chi must be nonnegative");
    switch (kind.tag) {
        case DivTag::ChiSquared:
            return u;
        case DivTag::KL:
            return std::log1p(0.5 * u);
        case DivTag::TV:
            return (2.0 / kPi) * std::atan(std::sqrt(0.5 * u));
        case DivTag::JS: {
            const double r = std::sqrt(2.0 + u);
            return std::log(2.0 * r / (r + std::sqrt(2.0)));
        }
        case DivTag::Taneja:
            return std::log(0.5 * (1.0 + std::sqrt(1.0 + 0.5 * u)));
        case DivTag::LeCam:
            return 2.0 - 4.0 * std::sqrt(1.0 / (2.0 * (u + 2.0)));
        case DivTag::HellingerSq:
            return h_hellinger(u);
        case DivTag::Jeffreys:
            return 2.0 * std::log1p(0.5 * u);
        case DivTag::Bhattacharyya:
        case DivTag::Chernoff:
            return h_bhattacharyya(u);
        case DivTag::HarmonicMean:
            return 1.0 - std::sqrt(2.0 / (u + 2.0));
        case DivTag::SkewedKL: {
            auto [p, q] = standard_pair_of_chi(u);
            return klpmix(p, q, kind.alpha);
        }
        case DivTag::SkewedJS: {
            auto [p, q] = standard_pair_of_chi(u);
            return (1.0 - kind.alpha) * klpmix(p, q, kind.alpha) +
                   kind.alpha * klpmix(q, p, 1.0 - kind.alpha);
        }
        default:
            throw std::invalid_argument(
                "h_of_chi: kind '" + kind_name(kind) +
                "' has no closed form in chi (use the oracle)");
    }
}

double divergence(const DivergenceKind& kind, const CauchyParam& p,
                  const CauchyParam& q)
{
    switch (kind.tag) {
        case DivTag::QDiv2:
            return q_divergence_2(p, q);
        case DivTag::SkewedKL:
            return klpmix(p, q, kind.alpha);
        case DivTag::SkewedJS:
            return (1.0 - kind.alpha) * klpmix(p, q, kind.alpha) +
                   kind.alpha * klpmix(q, p, 1.0 - kind.alpha);
        default:
            return h_of_chi(kind, chi(p, q));
    }
}

std::vector<double> density_crossings(const CauchyParam& p, const CauchyParam& q)
{
    const double l1 = p.location(), s1 = p.scale();
    const double l2 = q.location(), s2 = q.scale();
    if (s1 == s2) {
        if (l1 == l2) return {};
        return {0.5 * (l1 + l2)};
    }
    const double a = s1 - s2;
    const double b = -2.0 * (s1 * l2 - s2 * l1);
    const double c = s1 * l2 * l2 - s2 * l1 * l1 + s1 * s2 * (s2 - s1);
    const double disc = b * b - 4.0 * a * c;
    const double root = std::sqrt(std::max(disc, 0.0));
    const double qq = -0.5 * (b + std::copysign(root, b));
    double r1, r2;
    if (qq != 0.0) {
        r1 = qq / a;
        r2 = c / qq;
    } else {
        r1 = 0.0;
        r2 = 0.0;
    }
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

double tv_two_root(const CauchyParam& p, const CauchyParam& q)
{
    auto roots = density_crossings(p, q);
    if (roots.empty()) return 0.0;
    if (roots.size() == 1) {
        const double dl = std::fabs(p.location() - q.location());
        return (2.0 / kPi) * std::atan(dl / (2.0 * p.scale()));
    }
    const double mass_p = cauchy_cdf(p, roots[1]) - cauchy_cdf(p, roots[0]);
    const double mass_q = cauchy_cdf(q, roots[1]) - cauchy_cdf(q, roots[0]);
    return std::fabs(mass_p - mass_q);
}

std::vector<double> j_polynomial(int a)
{
    if (a < 2 || a > 30)
        throw std::invalid_argument(
            "j_polynomial: a must lie in [2, 30]");
    const auto& rat = detail::jpoly_rational(a);
    std::vector<double> out;
    out.reserve(rat.size());
    for (const auto& r : rat) out.push_back(static_cast<double>(r));
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> j_polynomial_rational(int a)
{
    if (a < 2 || a > 30)
        throw std::invalid_argument(
            "j_polynomial_rational: a must lie in [2, 30]");
    const auto& rat = detail::jpoly_rational(a);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& r : rat) {
        const auto num = boost::multiprecision::numerator(r);
        const auto den = boost::multiprecision::denominator(r);
        out.emplace_back(num.convert_to<std::int64_t>(),
                         den.convert_to<std::int64_t>());
    }
    return out;
}

double bc_skewed_integer(int a, const CauchyParam& p, const CauchyParam& q)
{
    const auto coeffs = j_polynomial(a);
    const double u = chi(p, q);
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * u + *it;
    return v;
}

double cauchy_entropy(double s)
{
    if (!(s > 0.0))
        throw std::domain_error("cauchy_entropy: scale must be positive");
    return std::log(4.0 * kPi * s);
}

MixtureTwo::MixtureTwo(double weight, CauchyParam a, CauchyParam b)
    : w(weight), c0(a), c1(b)
{
    if (!(w >= 0.0 && w <= 1.0))
        throw std::domain_error("MixtureTwo: weight must lie in [0,1]");
}

double MixtureTwo::density(double x) const
{
    return (1.0 - w) * cfdiv::density(c0, x) + w * cfdiv::density(c1, x);
}

double kl_point_to_mixture(const CauchyParam& p, const MixtureTwo& mix)
{
    if (!(p == mix.c0))
        throw std::invalid_argument(
            "kl_point_to_mixture: p must equal the first mixture component");
    return klpmix(p, mix.c1, mix.w);
}

double two_mixture_entropy(const MixtureTwo& mix)
{
    if (mix.w == 0.0) return cauchy_entropy(mix.c0.scale());
    if (mix.w == 1.0) return cauchy_entropy(mix.c1.scale());
    const double js =
        (1.0 - mix.w) * klpmix(mix.c0, mix.c1, mix.w) +
        mix.w * klpmix(mix.c1, mix.c0, 1.0 - mix.w);
    return js + (1.0 - mix.w) * cauchy_entropy(mix.c0.scale()) +
           mix.w * cauchy_entropy(mix.c1.scale());
}

double mixture_family_kl(double theta1, double theta2, const CauchyParam& c0,
                         const CauchyParam& c1)
{
    const double h = 1e-6;
    if (!(theta1 > 0.0 && theta1 < 1.0 && theta2 > h && theta2 < 1.0 - h))
        throw std::domain_error(
            "mixture_family_kl: parameters must lie inside (0,1)");
    auto F = [&](double t) {
        return -two_mixture_entropy(MixtureTwo(t, c0, c1));
    };
    const double fprime = (F(theta2 + h) - F(theta2 - h)) / (2.0 * h);
    return F(theta1) - F(theta2) - (theta1 - theta2) * fprime;
}

double q_divergence_2(const CauchyParam& p, const CauchyParam& q)
{
    const double dl = p.location() - q.location();
    const double ds = p.scale() - q.scale();
    return kPi * (dl * dl + ds * ds) / q.scale();
}

double bc_skewed_angular(double s_exp, const CauchyParam& p,
                         const CauchyParam& q)
{
    if (!(s_exp > 0.0 && s_exp < 1.0))
        throw std::domain_error(
            "bc_skewed_angular: exponent must lie in (0,1)");
    const double u = chi(p, q);
    if (u == 0.0) return 1.0;
    const double ch = 1.0 + u;
    const double sh = std::sqrt(u * (u + 2.0));
    auto f = [&](double th) {
        return std::pow(ch + std::cos(th) * sh, -s_exp) / (2.0 * kPi);
    };
    return adaptive_quadrature(f, -kPi, kPi, 1e-13,
                               {-kPi / 2.0, 0.0, kPi / 2.0});
}

}  // namespace cfdiv
