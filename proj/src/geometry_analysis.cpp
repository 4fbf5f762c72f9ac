#include "cfdiv/geometry_analysis.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "cfdiv/quadrature.hpp"
#include "cfdiv/special_fn.hpp"
#include "rng.hpp"

namespace cfdiv {

namespace {

const double kSqrt2 = std::sqrt(2.0);

CauchyParam random_param(std::mt19937_64& rng)
{
    const double l = detail::uniform(rng, -10.0, 10.0);
    const double s = std::exp(detail::uniform(rng, -3.0, 3.0));
    return {l, s};
}

/** KL-based metrization transform t(u) = log((1 + cosh(sqrt(2) u)) / 2). */
double axis_t(double u)
{
    return std::log(0.5 * (1.0 + std::cosh(kSqrt2 * u)));
}

}  // namespace

double MetricSpec::distance(const CauchyParam& p, const CauchyParam& q) const
{
    return std::pow(divergence(kind, p, q), alpha);
}

std::vector<TriangleViolation> triangle_scan(const MetricSpec& m,
                                             std::int64_t n_triples,
                                             std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<TriangleViolation> out;
    for (std::int64_t it = 0; it < n_triples; ++it) {
        const CauchyParam x = random_param(rng);
        const CauchyParam y = random_param(rng);
        const CauchyParam z = random_param(rng);
        const double dxy = m.distance(x, y);
        const double dyz = m.distance(y, z);
        const double dxz = m.distance(x, z);
        const double slack = 1e-12;
        if (dxz > dxy + dyz + slack)
            out.push_back({x, y, z, dxz - dxy - dyz});
        else if (dxy > dxz + dyz + slack)
            out.push_back({x, z, y, dxy - dxz - dyz});
        else if (dyz > dxy + dxz + slack)
            out.push_back({y, x, z, dyz - dxy - dxz});
    }
    return out;
}

std::optional<TriangleViolation> metric_violation_search(const MetricSpec& m)
{
    for (double u = 1.0; u >= 1e-4; u *= 0.8) {
        const CauchyParam x(0.0, 1.0);
        const CauchyParam y(0.0, std::exp(kSqrt2 * u));
        const CauchyParam z(0.0, std::exp(2.0 * kSqrt2 * u));
        const double dxy = m.distance(x, y);
        const double dyz = m.distance(y, z);
        const double dxz = m.distance(x, z);
        if (dxz > dxy + dyz + 1e-15)
            return TriangleViolation{x, y, z, dxz - dxy - dyz};
    }
    return std::nullopt;
}

double negative_definiteness_check(const std::vector<CauchyParam>& points,
                                   int trials, std::uint64_t seed)
{
    const std::size_t n = points.size();
    if (n < 2)
        throw std::invalid_argument(
            "negative_definiteness_check: need at least two points");
    // Precompute the KL matrix (symmetric, zero diagonal).
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    const DivergenceKind kl(DivTag::KL);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = divergence(kl, points[i], points[j]);
    std::mt19937_64 rng(seed);
    double worst = -std::numeric_limits<double>::infinity();
    std::vector<double> c(n);
    for (int t = 0; t < trials; ++t) {
        double mean = 0.0;
        for (auto& ci : c) {
            ci = detail::uniform(rng, -1.0, 1.0);
            mean += ci;
        }
        mean /= static_cast<double>(n);
        for (auto& ci : c) ci -= mean;
        double q = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                q += 2.0 * c[i] * c[j] * d[i][j];
        worst = std::max(worst, q);
    }
    return worst;
}

double bc_kernel_psd_check(const std::vector<CauchyParam>& points,
                           double s_exp)
{
    const std::size_t n = points.size();
    if (n < 1)
        throw std::invalid_argument("bc_kernel_psd_check: empty point list");
    Eigen::MatrixXd g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = bc_skewed_angular(s_exp, points[i], points[j]);
            g(i, j) = g(j, i) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    return es.eigenvalues().minCoeff();
}

double gromov_four_point_probe(const DivergenceKind& kind, double n)
{
    if (!(n >= 1.0))
        throw std::domain_error("gromov_four_point_probe: n must be >= 1");
    auto dist = [&](double a, double b) {
        return std::sqrt(
            divergence(kind, CauchyParam(0.0, a), CauchyParam(0.0, b)));
    };
    const double a0 = 1.0, a1 = n, a2 = n * n, a3 = n * n * n;
    const double sum0 = dist(a0, a2) + dist(a1, a3);
    const double p1 = dist(a0, a1) + dist(a2, a3);
    const double p2 = dist(a0, a3) + dist(a1, a2);
    return sum0 - std::max(p1, p2);
}

FrToBhat fr_to_bhat_transform(double s)
{
    if (!(s >= 0.0))
        throw std::domain_error("fr_to_bhat_transform: s must be >= 0");
    auto t_of = [](double v) {
        // -log J_3(F_3(v)) = v/sqrt(2) + log agm(1, e^{-sqrt(2) v}).
        return v / kSqrt2 + std::log(agm(1.0, std::exp(-kSqrt2 * v)));
    };
    const double t = s > 0.0 ? t_of(s) : 0.0;
    const double s_eff = s > 0.0 ? s : 1e-5;
    const double ratio = std::sqrt(t_of(s_eff)) / s_eff;
    return {t, ratio};
}

ChernoffResult chernoff_optimizer(const CauchyParam& p, const CauchyParam& q)
{
    if (chi(p, q) == 0.0) return {0.5, 0.0};
    auto lambda_fn = [&](double a) {
        return std::log(bc_skewed_angular(a, p, q));
    };
    double lo = 1e-3, hi = 1.0 - 1e-3;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = lambda_fn(c), fd = lambda_fn(d);
    while (hi - lo > 1e-4) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = lambda_fn(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = lambda_fn(d);
        }
    }
    // Parabolic vertex through three points; robust to quadrature noise.
    const double m = 0.5 * (lo + hi), h = 1e-3;
    const double fm = lambda_fn(m);
    const double fp = lambda_fn(m + h), fn = lambda_fn(m - h);
    const double denom = fp - 2.0 * fm + fn;
    double a_star = m;
    if (denom > 0.0) a_star = m - 0.5 * h * (fp - fn) / denom;
    return {a_star, -lambda_fn(a_star)};
}

namespace {

double max_chi_to(const std::vector<CauchyParam>& pts, double l, double s)
{
    const CauchyParam c(l, s);
    double worst = 0.0;
    for (const auto& z : pts) worst = std::max(worst, chi(z, c));
    return worst;
}

/** Fisher-Rao geodesic midpoint of two parameters. */
CauchyParam geodesic_midpoint(const CauchyParam& p, const CauchyParam& q)
{
    const StandardPair sp = reduce_to_standard_pair(p, q);
    const MoebiusMap& A = sp.map;
    const MoebiusMap inv(A.d(), -A.b(), -A.c(), A.a());
    return mobius_apply(inv, CauchyParam(0.0, std::sqrt(sp.lambda)));
}

}  // namespace

CauchyParam chebyshev_center(const std::vector<CauchyParam>& points)
{
    if (points.empty())
        throw std::invalid_argument("chebyshev_center: empty point list");
    if (points.size() == 1) return points[0];
    // Candidate starts: pairwise geodesic midpoints plus the coordinate
    // centroid (arithmetic in l, geometric in s).
    std::vector<CauchyParam> starts;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            starts.push_back(geodesic_midpoint(points[i], points[j]));
    double lsum = 0.0, logssum = 0.0;
    for (const auto& z : points) {
        lsum += z.location();
        logssum += std::log(z.scale());
    }
    starts.emplace_back(lsum / points.size(),
                        std::exp(logssum / points.size()));

    double best_l = starts[0].location();
    double best_tau = std::log(starts[0].scale());
    double best_val = max_chi_to(points, best_l, std::exp(best_tau));
    for (const auto& start : starts) {
        double l = start.location(), tau = std::log(start.scale());
        double val = max_chi_to(points, l, std::exp(tau));
        for (double step = 1.0; step > 1e-10; step *= 0.5) {
            bool moved = true;
            while (moved) {
                moved = false;
                const double dl[4] = {step, -step, 0.0, 0.0};
                const double dt[4] = {0.0, 0.0, step, -step};
                for (int k = 0; k < 4; ++k) {
                    const double nl = l + dl[k], nt = tau + dt[k];
                    const double nv = max_chi_to(points, nl, std::exp(nt));
                    if (nv < val) {
                        l = nl;
                        tau = nt;
                        val = nv;
                        moved = true;
                    }
                }
            }
        }
        if (val < best_val) {
            best_val = val;
            best_l = l;
            best_tau = tau;
        }
    }
    return {best_l, std::exp(best_tau)};
}

std::vector<double> fit_h_polynomial(FitTarget target, int order, int degree,
                                     int n_samples, std::uint64_t seed)
{
    if (n_samples < degree + 1)
        throw std::invalid_argument(
            "fit_h_polynomial: need at least degree+1 samples");
    if (order < 2)
        throw std::invalid_argument("fit_h_polynomial: order must be >= 2");
    std::mt19937_64 rng(seed);
    Eigen::MatrixXd design(n_samples, degree + 1);
    Eigen::VectorXd b(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double u =
            std::pow(10.0, detail::uniform(rng, -2.0, 1.0));
        const double lambda = 1.0 + u + std::sqrt(u * (u + 2.0));
        const CauchyParam p(0.0, lambda), q(0.0, 1.0);
        auto integrand = [&](double x) {
            const double pd = density(p, x), qd = density(q, x);
            if (target == FitTarget::J)
                return std::pow(pd, order) * std::pow(qd, 1 - order);
            return pd * std::pow(qd / pd - 1.0, order);
        };
        const double rough = integrate_line(integrand, 1e-6);
        b(i) = integrate_line(integrand,
                              std::max(1e-10, 1e-9 * std::fabs(rough)));
        double pw = 1.0;
        for (int j = 0; j <= degree; ++j) {
            design(i, j) = pw;
            pw *= u;
        }
    }
    // Column scaling for conditioning; undone after the QR solve.
    Eigen::VectorXd colnorm(degree + 1);
    for (int j = 0; j <= degree; ++j) {
        colnorm(j) = design.col(j).norm();
        design.col(j) /= colnorm(j);
    }
    Eigen::VectorXd sol = design.colPivHouseholderQr().solve(b);
    std::vector<double> out(degree + 1);
    for (int j = 0; j <= degree; ++j) out[j] = sol(j) / colnorm(j);
    return out;
}

EuclideanDisc chi_ball_euclidean_bound(const CauchyParam& z, double delta)
{
    if (!(delta >= 0.0))
        throw std::domain_error(
            "chi_ball_euclidean_bound: delta must be >= 0");
    return {z.location(), (1.0 + delta) * z.scale(),
            std::sqrt(delta * (delta + 2.0)) * z.scale()};
}

}  // namespace cfdiv
