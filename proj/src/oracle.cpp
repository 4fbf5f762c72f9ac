#include "cfdiv/oracle.hpp"

#include <cmath>
#include <random>

#include "cfdiv/families.hpp"
#include "cfdiv/quadrature.hpp"

namespace cfdiv {

namespace {
const double kPi = std::acos(-1.0);
}

BivariateCauchy::BivariateCauchy(double m0, double m1, double a11, double a12,
                                 double a22)
    : mu{m0, m1}, s11(a11), s12(a12), s22(a22)
{
    if (!(s11 > 0.0) || !(s11 * s22 - s12 * s12 > 0.0))
        throw std::domain_error(
            "BivariateCauchy: scale matrix must be positive definite");
}

Support DensitySpec::support() const
{
    struct V {
        Support operator()(const CauchyParam&) const { return Support::Line; }
        Support operator()(const MixtureTwo&) const { return Support::Line; }
        Support operator()(const LogCauchySpec&) const
        { return Support::HalfLine; }
        Support operator()(const CircularSpec&) const
        { return Support::Circle; }
        Support operator()(const WrappedSpec&) const { return Support::Circle; }
        Support operator()(const BivariateCauchy&) const
        { return Support::Plane; }
    };
    return std::visit(V{}, family);
}

double DensitySpec::density1d(double x) const
{
    struct V {
        double x;
        double operator()(const CauchyParam& p) const
        { return density(p, x); }
        double operator()(const MixtureTwo& m) const { return m.density(x); }
        double operator()(const LogCauchySpec& p) const
        { return log_cauchy_density(p, x); }
        double operator()(const CircularSpec& p) const
        { return circular_density(p, x); }
        double operator()(const WrappedSpec& p) const
        { return wrapped_density(p, x); }
        double operator()(const BivariateCauchy&) const {
            throw std::invalid_argument(
                "density1d: bivariate density is not one-dimensional");
        }
    };
    return std::visit(V{x}, family);
}

GeneratorSpec::GeneratorSpec(std::string n, std::function<double(double)> fn)
    : name(std::move(n)), f(std::move(fn))
{
    if (!(std::fabs(f(1.0)) <= 1e-12))
        throw std::invalid_argument(
            "GeneratorSpec '" + name + "': f(1) must vanish");
}

GeneratorSpec catalog_generator(const DivergenceKind& kind)
{
    switch (kind.tag) {
        case DivTag::ChiSquared:
            return {"chisq", [](double u) { return (u - 1.0) * (u - 1.0); }};
        case DivTag::KL:
            return {"kl", [](double u) { return -std::log(u); }};
        case DivTag::TV:
            return {"tv", [](double u) { return 0.5 * std::fabs(u - 1.0); }};
        case DivTag::JS:
            return {"js", [](double u) {
                        return 0.5 * (u * std::log(u) -
                                      (1.0 + u) * std::log(0.5 * (1.0 + u)));
                    }};
        case DivTag::Taneja:
            return {"taneja", [](double u) {
                        return 0.25 * (u - 1.0) * std::log(u) -
                               0.5 * (u * std::log(u) -
                                      (1.0 + u) * std::log(0.5 * (1.0 + u)));
                    }};
        case DivTag::LeCam:
            return {"lecam", [](double u) {
                        return (1.0 - u) * (1.0 - u) / (1.0 + u);
                    }};
        case DivTag::HellingerSq:
            return {"hellinger", [](double u) {
                        const double d = std::sqrt(u) - 1.0;
                        return 0.5 * d * d;
                    }};
        case DivTag::Jeffreys:
            return {"jeffreys", [](double u) {
                        return (u - 1.0) * std::log(u);
                    }};
        case DivTag::HarmonicMean:
            return {"hm", [](double u) { return (1.0 - u) / (1.0 + u); }};
        case DivTag::KumarChhina:
            return {"kumar-chhina", [](double u) {
                        const double d = u - 1.0;
                        return (u + 1.0) * d * d / u *
                               std::log(0.5 * (u + 1.0) / std::sqrt(u));
                    }};
        case DivTag::Alpha: {
            const double a = kind.alpha;
            if (std::fabs(a) >= 1.0)
                throw std::domain_error(
                    "catalog_generator: alpha must lie in (-1,1)");
            return {"alpha", [a](double u) {
                        return 4.0 / (1.0 - a * a) *
                               (1.0 - std::pow(u, 0.5 * (1.0 + a)));
                    }};
        }
        case DivTag::SkewedKL: {
            const double a = kind.alpha;
            return {"skewed-kl", [a](double u) {
                        return -std::log1p(a * (u - 1.0));
                    }};
        }
        default:
            throw std::invalid_argument(
                "catalog_generator: kind '" + kind_name(kind) +
                "' is not expressible as a single generator");
    }
}

double quad_f_divergence(const GeneratorSpec& gen, const DensitySpec& p,
                         const DensitySpec& q, double tol,
                         const std::vector<double>& splits)
{
    if (p.support() != q.support())
        throw std::invalid_argument(
            "quad_f_divergence: mismatched supports");
    auto integrand = [&](double x) {
        const double pd = p.density1d(x);
        // Deep in the tails both densities underflow; the contribution
        // vanishes there.
        if (pd == 0.0) return 0.0;
        return pd * gen.f(q.density1d(x) / pd);
    };
    switch (p.support()) {
        case Support::Line:
            return integrate_line(integrand, tol, splits);
        case Support::HalfLine: {
            // In t = log y coordinates the log-Cauchy density times the
            // Jacobian is exactly a Cauchy density; integrating there
            // avoids tail overflow entirely.
            const auto* lp = std::get_if<LogCauchySpec>(&p.family);
            const auto* lq = std::get_if<LogCauchySpec>(&q.family);
            if (lp == nullptr || lq == nullptr)
                throw std::invalid_argument(
                    "quad_f_divergence: unsupported half-line density");
            const CauchyParam tp(lp->mu, lp->sigma), tq(lq->mu, lq->sigma);
            auto g = [&](double t) {
                const double pd = density(tp, t);
                return pd * gen.f(density(tq, t) / pd);
            };
            std::vector<double> tsplits;
            for (double s : splits)
                if (s > 0.0) tsplits.push_back(std::log(s));
            return integrate_line(g, tol, tsplits);
        }
        case Support::Circle:
            return integrate_circle(integrand, tol);
        default:
            throw std::invalid_argument(
                "quad_f_divergence: use quad_kl_bivariate for the plane");
    }
}

McResult mc_f_divergence(const GeneratorSpec& gen, const DensitySpec& p,
                         const DensitySpec& q, std::int64_t n,
                         std::uint64_t seed)
{
    const auto* pc = std::get_if<CauchyParam>(&p.family);
    if (pc == nullptr)
        throw std::invalid_argument(
            "mc_f_divergence: sampling requires a Cauchy first argument");
    if (n < 1)
        throw std::invalid_argument("mc_f_divergence: n must be >= 1");
    std::mt19937_64 rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        // 53-bit uniform in (0,1); platform-independent.
        const double u =
            (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        const double x = cauchy_quantile(*pc, u);
        const double pd = p.density1d(x);
        const double v = gen.f(q.density1d(x) / pd);
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / static_cast<double>(n);
    const double var =
        std::max(0.0, sumsq / static_cast<double>(n) - mean * mean);
    const double se =
        n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
    return {mean, se};
}

namespace {

struct Sym2 {
    double a11, a12, a22;

    Sym2 inverse() const {
        const double det = a11 * a22 - a12 * a12;
        return {a22 / det, -a12 / det, a11 / det};
    }
    double det() const { return a11 * a22 - a12 * a12; }
    /** Principal square root of an SPD matrix. */
    Sym2 sqrt_spd() const {
        const double s = std::sqrt(det());
        const double t = std::sqrt(a11 + a22 + 2.0 * s);
        return {(a11 + s) / t, a12 / t, (a22 + s) / t};
    }
};

}  // namespace

double bivariate_log_integral(const BivariateCauchy& q, double tol)
{
    const Sym2 inv = Sym2{q.s11, q.s12, q.s22}.inverse();
    auto inner = [&](double x2) {
        auto f = [&](double x1) {
            const double d1 = x1 - q.mu[0];
            const double d2 = x2 - q.mu[1];
            const double quad =
                inv.a11 * d1 * d1 + 2.0 * inv.a12 * d1 * d2 +
                inv.a22 * d2 * d2;
            const double w =
                std::pow(1.0 + x1 * x1 + x2 * x2, -1.5);
            return std::log1p(quad) * w;
        };
        // The outer tan substitution amplifies absolute errors by
        // 1/cos^2 ~ x2^2, so tighten the inner tolerance accordingly.
        return integrate_line(f, tol * 0.02 / (1.0 + x2 * x2), {q.mu[0]},
                              4000);
    };
    return integrate_line(inner, tol * 0.5, {q.mu[1]}, 4000);
}

double quad_kl_bivariate(const BivariateCauchy& p, const BivariateCauchy& q,
                         double tol)
{
    // Reduce to D_KL(p_{0,I} : p_{mu', Sigma'}) with
    // mu' = Sigma_p^{-1/2}(mu_q - mu_p), Sigma' = Sigma_p^{-1/2} Sigma_q
    // Sigma_p^{-1/2}.
    const Sym2 sp{p.s11, p.s12, p.s22};
    const Sym2 m = sp.sqrt_spd().inverse();  // Sigma_p^{-1/2}
    const double d0 = q.mu[0] - p.mu[0];
    const double d1 = q.mu[1] - p.mu[1];
    const double mu0 = m.a11 * d0 + m.a12 * d1;
    const double mu1 = m.a12 * d0 + m.a22 * d1;
    const Sym2 sq{q.s11, q.s12, q.s22};
    // M * Sigma_q * M with M symmetric.
    const double b11 = m.a11 * sq.a11 + m.a12 * sq.a12;
    const double b12 = m.a11 * sq.a12 + m.a12 * sq.a22;
    const double b21 = m.a12 * sq.a11 + m.a22 * sq.a12;
    const double b22 = m.a12 * sq.a12 + m.a22 * sq.a22;
    const Sym2 sprime{b11 * m.a11 + b12 * m.a12,
                      b11 * m.a12 + b12 * m.a22,
                      b21 * m.a12 + b22 * m.a22};
    const BivariateCauchy qstd(mu0, mu1, sprime.a11, sprime.a12, sprime.a22);
    const BivariateCauchy pstd(0.0, 0.0, 1.0, 0.0, 1.0);
    const double cross = bivariate_log_integral(qstd, tol);
    const double self = bivariate_log_integral(pstd, tol);
    const double c2 = 1.0 / (2.0 * kPi);
    return 0.5 * std::log(sprime.det()) +
           1.5 * c2 * (cross - self);
}

double oracle_divergence(const DivergenceKind& kind, const CauchyParam& p,
                         const CauchyParam& q, double tol)
{
    const DensitySpec dp{p}, dq{q};
    switch (kind.tag) {
        case DivTag::TV: {
            return quad_f_divergence(catalog_generator(kind), dp, dq, tol,
                                     density_crossings(p, q));
        }
        case DivTag::Bhattacharyya:
        case DivTag::Chernoff: {
            // 1 - BC through the Hellinger generator, then -log.
            GeneratorSpec g("one-minus-sqrt",
                            [](double u) { return 1.0 - std::sqrt(u); });
            const double one_minus_bc = quad_f_divergence(g, dp, dq, tol);
            return -std::log1p(-one_minus_bc);
        }
        case DivTag::SkewedJS: {
            const double a = kind.alpha;
            const DivergenceKind fwd(DivTag::SkewedKL, a);
            const DivergenceKind rev(DivTag::SkewedKL, 1.0 - a);
            return (1.0 - a) * quad_f_divergence(catalog_generator(fwd), dp,
                                                 dq, tol) +
                   a * quad_f_divergence(catalog_generator(rev), dq, dp, tol);
        }
        case DivTag::QDiv2: {
            // D_2(p:q) = (int p^2/q - 1) / int p^2 with int p^2 = 1/(2 pi s).
            GeneratorSpec g("inv-minus-one",
                            [](double u) { return 1.0 / u - 1.0; });
            const double v = quad_f_divergence(g, dp, dq, tol);
            return v * 2.0 * kPi * p.scale();
        }
        default:
            return quad_f_divergence(catalog_generator(kind), dp, dq, tol);
    }
}

double sup_ratio_grid(const CauchyParam& p, const CauchyParam& q)
{
    auto best_of = [&](const CauchyParam& num, const CauchyParam& den) {
        auto ratio = [&](double u) {
            const double x = std::tan(u);
            return density(num, x) / density(den, x);
        };
        const int n = 100000;
        const double h = kPi / (n + 1);
        double best = num.scale() / den.scale();  // both tail limits
        double best_u = kPi / 2.0;
        for (int i = 1; i <= n; ++i) {
            const double u = -kPi / 2.0 + i * h;
            const double r = ratio(u);
            if (r > best) {
                best = r;
                best_u = u;
            }
        }
        // Golden-section refinement around the best cell.
        double a = best_u - h, b = best_u + h;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = ratio(c), fd = ratio(d);
        for (int it = 0; it < 80; ++it) {
            if (fc > fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - gr * (b - a);
                fc = ratio(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + gr * (b - a);
                fd = ratio(d);
            }
        }
        return std::max({best, fc, fd});
    };
    return std::max(best_of(p, q), best_of(q, p));
}

double quad_density_norm(const DensitySpec& p, double tol)
{
    auto f = [&](double x) { return p.density1d(x); };
    switch (p.support()) {
        case Support::Line:
            return integrate_line(f, tol);
        case Support::HalfLine: {
            const auto* lp = std::get_if<LogCauchySpec>(&p.family);
            if (lp == nullptr)
                throw std::invalid_argument(
                    "quad_density_norm: unsupported half-line density");
            const CauchyParam tp(lp->mu, lp->sigma);
            auto g = [&](double t) { return density(tp, t); };
            return integrate_line(g, tol);
        }
        case Support::Circle:
            return integrate_circle(f, tol);
        default: {
            const auto& b = std::get<BivariateCauchy>(p.family);
            const Sym2 inv = Sym2{b.s11, b.s12, b.s22}.inverse();
            const double c2 = 1.0 / (2.0 * kPi);
            const double norm =
                c2 / std::sqrt(Sym2{b.s11, b.s12, b.s22}.det());
            auto innerf = [&](double x2) {
                auto g = [&](double x1) {
                    const double d1 = x1 - b.mu[0];
                    const double d2 = x2 - b.mu[1];
                    const double quad = inv.a11 * d1 * d1 +
                                        2.0 * inv.a12 * d1 * d2 +
                                        inv.a22 * d2 * d2;
                    return norm * std::pow(1.0 + quad, -1.5);
                };
                return integrate_line(g, tol * 0.02 / (1.0 + x2 * x2),
                                      {b.mu[0]}, 4000);
            };
            return integrate_line(innerf, tol * 0.5, {b.mu[1]}, 4000);
        }
    }
}

}  // namespace cfdiv
