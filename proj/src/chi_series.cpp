#include "cfdiv/chi_series.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "jpoly.hpp"

namespace cfdiv {

namespace {

constexpr int kMaxTermsCap = 200;

double eval_poly(const std::vector<double>& coeffs, double x)
{
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

const std::vector<double>& chi_power_poly_cached(int n)
{
    static std::map<int, std::vector<double>> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const auto& rat = detail::chi_power_rational(n);
    std::vector<double> d;
    d.reserve(rat.size());
    for (const auto& r : rat) d.push_back(static_cast<double>(r));
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(n, std::move(d)).first->second;
}

double generalized_binomial(double beta, int n)
{
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= (beta - k) / (k + 1);
    return r;
}

}  // namespace

std::vector<double> chi_power_polynomial(int n)
{
    if (n < 2 || n > kMaxTermsCap)
        throw std::invalid_argument(
            "chi_power_polynomial: order out of range");
    return chi_power_poly_cached(n);
}

double chi_power_divergence(int n, const CauchyParam& p, const CauchyParam& q)
{
    if (n < 2 || n > 30)
        throw std::invalid_argument(
            "chi_power_divergence: order must lie in [2, 30]");
    return eval_poly(chi_power_poly_cached(n), chi(p, q));
}

bool has_series(const DivergenceKind& kind)
{
    switch (kind.tag) {
        case DivTag::KL:
        case DivTag::Alpha:
        case DivTag::JS:
        case DivTag::HellingerSq:
        case DivTag::HarmonicMean:
            return true;
        default:
            return false;
    }
}

double series_coefficient(const DivergenceKind& kind, int n)
{
    if (n < 2)
        throw std::invalid_argument("series_coefficient: n must be >= 2");
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    switch (kind.tag) {
        case DivTag::KL:
            return sign / n;
        case DivTag::Alpha: {
            const double a = kind.alpha;
            if (std::fabs(a) >= 1.0)
                throw std::domain_error(
                    "series_coefficient: alpha must lie in (-1,1)");
            return -4.0 / (1.0 - a * a) *
                   generalized_binomial(0.5 * (1.0 + a), n);
        }
        case DivTag::JS:
            return sign * (std::pow(2.0, n - 1) - 1.0) /
                   (static_cast<double>(n) * (n - 1) * std::pow(2.0, n));
        case DivTag::HellingerSq: {
            double dfact = 1.0;  // (2n-3)!!
            for (int k = 2 * n - 3; k >= 2; k -= 2) dfact *= k;
            double fact = 1.0;
            for (int k = 2; k <= n; ++k) fact *= k;
            return sign * dfact / (std::pow(2.0, n) * fact);
        }
        case DivTag::HarmonicMean:
            return sign / std::pow(2.0, n);
        default:
            throw std::invalid_argument(
                "series_coefficient: kind '" + kind_name(kind) +
                "' has no chi-power expansion");
    }
}

double series_radius(const DivergenceKind& kind)
{
    switch (kind.tag) {
        case DivTag::KL:
        case DivTag::Alpha:
        case DivTag::JS:
        case DivTag::HellingerSq:
            return 1.0;
        case DivTag::HarmonicMean:
            return 2.0;
        default:
            throw std::invalid_argument(
                "series_radius: kind '" + kind_name(kind) +
                "' has no chi-power expansion");
    }
}

bool convergence_gate(const DivergenceKind& kind, const CauchyParam& p,
                      const CauchyParam& q)
{
    return sup_density_ratio(p, q) < 1.0 + series_radius(kind);
}

SeriesResult taylor_f_divergence(const DivergenceKind& kind,
                                 const CauchyParam& p, const CauchyParam& q,
                                 double tol, int max_terms)
{
    if (!has_series(kind))
        throw std::invalid_argument(
            "taylor_f_divergence: kind '" + kind_name(kind) +
            "' has no chi-power expansion");
    if (max_terms < 2) max_terms = 2;
    if (max_terms > kMaxTermsCap) max_terms = kMaxTermsCap;
    const double u = chi(p, q);
    SeriesResult res{0.0, 0, SeriesVerdict::Truncated, {}};
    if (u == 0.0) {
        res.verdict = SeriesVerdict::Converged;
        return res;
    }
    const bool gate = convergence_gate(kind, p, q);
    for (int n = 2; n <= max_terms; ++n) {
        const double term =
            series_coefficient(kind, n) *
            eval_poly(chi_power_poly_cached(n), u);
        res.value += term;
        res.term_trace.push_back(term);
        res.terms_used = n - 1;
        if (gate && std::fabs(term) < tol) {
            res.verdict = SeriesVerdict::Converged;
            return res;
        }
    }
    res.verdict = gate ? SeriesVerdict::Truncated : SeriesVerdict::Diverged;
    return res;
}

TvProbeReport tv_no_expansion_probe(const CauchyParam& p0, double radius,
                                    int steps)
{
    if (!(radius > 0.0))
        throw std::domain_error(
            "tv_no_expansion_probe: radius must be positive");
    TvProbeReport rep;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < steps; ++k) {
        const double d = radius * std::pow(10.0, -k);
        const CauchyParam pk(p0.location() + d * inv_sqrt2,
                             p0.scale() + d * inv_sqrt2);
        const double tv = divergence(DivergenceKind(DivTag::TV), p0, pk);
        const double d2 = chi_power_divergence(2, p0, pk);
        rep.distances.push_back(d);
        rep.tv_values.push_back(tv);
        rep.ratios.push_back(tv / d2);
    }
    return rep;
}

}  // namespace cfdiv
