#include "cfdiv/acceptance.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/chi_series.hpp"
#include "cfdiv/closed_form.hpp"
#include "cfdiv/families.hpp"
#include "cfdiv/geometry_analysis.hpp"
#include "cfdiv/oracle.hpp"
#include "cfdiv/quadrature.hpp"
#include "cfdiv/special_fn.hpp"
#include "rng.hpp"

namespace cfdiv {

namespace {

const double kPi = std::acos(-1.0);

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

struct Check {
    CriterionResult res;

    explicit Check(int id, std::string name)
        : res{id, std::move(name), true, {}, {}} {}

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            res.passed = false;
            res.failures.push_back(what);
        }
    }

    void close(double got, double want, double tol, const std::string& what)
    {
        require(std::fabs(got - want) <= tol,
                what + ": got " + fmt(got) + ", want " + fmt(want) +
                    " (tol " + fmt(tol) + ")");
    }
};

CauchyParam draw_param(std::mt19937_64& rng, double l_range, double log_s_range)
{
    return {detail::uniform(rng, -l_range, l_range),
            std::exp(detail::uniform(rng, -log_s_range, log_s_range))};
}

// ---------------------------------------------------------------- 1
CriterionResult closed_vs_oracle()
{
    Check c(1, "closed-form vs quadrature oracle");
    const DivTag tags[] = {
        DivTag::ChiSquared, DivTag::KL,          DivTag::TV,
        DivTag::JS,         DivTag::Taneja,      DivTag::LeCam,
        DivTag::HellingerSq, DivTag::HarmonicMean, DivTag::Jeffreys,
        DivTag::Bhattacharyya, DivTag::Chernoff,
    };
    std::mt19937_64 rng(20240101);
    double worst = 0.0;
    for (int it = 0; it < 100; ++it) {
        const CauchyParam p(detail::uniform(rng, -5.0, 5.0),
                            detail::uniform(rng, 0.1, 10.0));
        const CauchyParam q(detail::uniform(rng, -5.0, 5.0),
                            detail::uniform(rng, 0.1, 10.0));
        for (DivTag t : tags) {
            const DivergenceKind kind(t);
            const double cf = divergence(kind, p, q);
            const double tol = std::max(1e-13, 1e-9 * std::fabs(cf));
            double oc;
            try {
                oc = oracle_divergence(kind, p, q, tol);
            } catch (const ConvergenceError& e) {
                c.require(false, kind_name(kind) + " pair " +
                                     std::to_string(it) +
                                     ": oracle did not converge (" +
                                     e.what() + ")");
                continue;
            }
            const double rel =
                std::fabs(cf - oc) / std::max(std::fabs(cf), 1e-12);
            worst = std::max(worst, rel);
            c.require(rel <= 1e-7, kind_name(kind) + " pair " +
                                       std::to_string(it) + ": closed " +
                                       fmt(cf) + " vs oracle " + fmt(oc));
        }
    }
    c.res.metrics["max_relative_error"] = worst;
    return c.res;
}

// ---------------------------------------------------------------- 2
CriterionResult symmetry_suite()
{
    Check c(2, "f-divergence symmetry for generic generators");
    std::vector<GeneratorSpec> gens;
    gens.push_back(catalog_generator(DivergenceKind(DivTag::KumarChhina)));
    gens.emplace_back("abs-power-3/2", [](double u) {
        return std::pow(std::fabs(u - 1.0), 1.5);
    });
    gens.emplace_back("exp-affine",
                      [](double u) { return std::exp(u - 1.0) - u; });
    gens.emplace_back("puiseux", [](double u) {
        return (u - 1.0) * (u - 1.0) / std::sqrt(u);
    });
    gens.emplace_back("quartic-rational", [](double u) {
        const double d = u - 1.0;
        return d * d * d * d / (u * u + u + 1.0);
    });
    gens.emplace_back("log-mean", [](double u) {
        return 0.5 * (u - 1.0) - std::log(0.5 * (u + 1.0));
    });

    std::mt19937_64 rng(20240102);
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
        const CauchyParam p = draw_param(rng, 1.0, 0.5);
        const CauchyParam q = draw_param(rng, 1.0, 0.5);
        const DensitySpec dp{p}, dq{q};
        for (const auto& g : gens) {
            const double fwd = quad_f_divergence(g, dp, dq, 1e-10);
            const double rev = quad_f_divergence(g, dq, dp, 1e-10);
            const double gap = std::fabs(fwd - rev);
            worst = std::max(worst, gap);
            c.require(gap <= 1e-7,
                      g.name + " pair " + std::to_string(it) + ": forward " +
                          fmt(fwd) + " vs reverse " + fmt(rev));
        }
    }
    c.res.metrics["max_forward_reverse_gap"] = worst;
    return c.res;
}

// ---------------------------------------------------------------- 3
CriterionResult invariance_suite()
{
    Check c(3, "SL(2,R) invariance of chi and KL");
    std::mt19937_64 rng(20240103);
    const DivergenceKind kl(DivTag::KL);
    double worst_chi = 0.0, worst_kl = 0.0;
    for (int it = 0; it < 100; ++it) {
        double a, b, cc, d, det;
        do {
            a = detail::uniform(rng, -1.0, 1.0);
            b = detail::uniform(rng, -1.0, 1.0);
            cc = detail::uniform(rng, -1.0, 1.0);
            d = detail::uniform(rng, -1.0, 1.0);
            det = a * d - b * cc;
        } while (det < 0.2);
        const MoebiusMap A(a, b, cc, d);
        const CauchyParam p = draw_param(rng, 2.0, 1.0);
        const CauchyParam q = draw_param(rng, 2.0, 1.0);
        const CauchyParam ap = mobius_apply(A, p), aq = mobius_apply(A, q);
        const double u0 = chi(p, q), u1 = chi(ap, aq);
        const double k0 = divergence(kl, p, q), k1 = divergence(kl, ap, aq);
        const double dchi = std::fabs(u1 - u0) / std::max(1.0, u0);
        const double dkl = std::fabs(k1 - k0) / std::max(1.0, k0);
        worst_chi = std::max(worst_chi, dchi);
        worst_kl = std::max(worst_kl, dkl);
        c.require(dchi <= 1e-10, "chi drift at draw " + std::to_string(it) +
                                     ": " + fmt(u0) + " -> " + fmt(u1));
        c.require(dkl <= 1e-9, "KL drift at draw " + std::to_string(it) +
                                   ": " + fmt(k0) + " -> " + fmt(k1));
    }
    c.res.metrics["max_chi_drift"] = worst_chi;
    c.res.metrics["max_kl_drift"] = worst_kl;
    return c.res;
}

// ---------------------------------------------------------------- 4
CriterionResult jpoly_suite()
{
    Check c(4, "J-polynomial coefficients and quadrature");
    using Rat = std::pair<std::int64_t, std::int64_t>;
    const std::vector<std::vector<Rat>> expected = {
        {{1, 1}, {1, 1}},
        {{1, 1}, {3, 1}, {3, 2}},
        {{1, 1}, {6, 1}, {15, 2}, {5, 2}},
        {{1, 1}, {10, 1}, {45, 2}, {35, 2}, {35, 8}},
    };
    for (int a = 2; a <= 5; ++a) {
        const auto got = j_polynomial_rational(a);
        const auto& want = expected[a - 2];
        bool same = got.size() == want.size();
        for (std::size_t i = 0; same && i < got.size(); ++i)
            same = got[i] == want[i];
        c.require(same, "J_" + std::to_string(a) +
                            " rational coefficients differ from reference");
    }
    for (double u : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double lambda = 1.0 + u + std::sqrt(u * (u + 2.0));
        const CauchyParam p(0.0, lambda), q(0.0, 1.0);
        const double cf = bc_skewed_integer(6, p, q);
        auto integrand = [&](double x) {
            return std::pow(density(p, x), 6) / std::pow(density(q, x), 5);
        };
        const double quad =
            integrate_line(integrand, std::max(1e-12, 1e-9 * cf));
        c.require(std::fabs(cf - quad) <= 1e-7 * cf,
                  "J_6 at chi=" + fmt(u) + ": closed " + fmt(cf) +
                      " vs quadrature " + fmt(quad));
    }
    return c.res;
}

// ---------------------------------------------------------------- 5
CriterionResult regression_suite()
{
    Check c(5, "polynomial regression of h from quadrature data");
    const auto j6 = fit_h_polynomial(FitTarget::J, 6, 5, 60, 20240105);
    c.res.metrics["j6_constant"] = j6[0];
    c.require(j6[0] >= 0.99 && j6[0] <= 1.01,
              "J_6 fit constant term " + fmt(j6[0]) +
                  " outside [0.99, 1.01]");
    const auto k6 = fit_h_polynomial(FitTarget::ChiK, 6, 5, 60, 20240106);
    c.res.metrics["chi6_constant"] = k6[0];
    c.require(std::fabs(k6[0]) <= 1e-2,
              "order-6 chi fit constant term " + fmt(k6[0]) +
                  " exceeds 1e-2 in magnitude");
    return c.res;
}

// ---------------------------------------------------------------- 6
CriterionResult series_suite()
{
    Check c(6, "chi-power Taylor series and convergence gate");
    const DivergenceKind kl(DivTag::KL);
    const CauchyParam p(0.6, 1.2), q(0.0, 1.0);
    const auto r = taylor_f_divergence(kl, p, q, 1e-12, 40);
    const double want = std::log(13.0 / 12.0);
    c.res.metrics["series_value"] = r.value;
    c.close(r.value, want, 1e-6, "KL series at chi=1/6 vs log(13/12)");

    const double sweep[] = {0.2, 0.24, 0.26, 0.3};
    const bool expect_conv[] = {true, true, false, false};
    for (int i = 0; i < 4; ++i) {
        const double u = sweep[i];
        const double lambda = 1.0 + u + std::sqrt(u * (u + 2.0));
        const CauchyParam pu(0.0, lambda), qu(0.0, 1.0);
        const auto s = taylor_f_divergence(kl, pu, qu, 1e-3, 150);
        const bool conv = s.verdict == SeriesVerdict::Converged;
        c.require(conv == expect_conv[i],
                  "chi=" + fmt(u) + ": expected " +
                      (expect_conv[i] ? "converged" : "diverged") +
                      ", terms grew to " + fmt(s.term_trace.back()));
        if (!expect_conv[i] && !s.term_trace.empty()) {
            // Past the gate the terms bottom out and grow again instead of
            // decaying to zero.
            double smallest = std::fabs(s.term_trace.front());
            for (double t : s.term_trace)
                smallest = std::min(smallest, std::fabs(t));
            c.require(std::fabs(s.term_trace.back()) > 2.0 * smallest,
                      "chi=" + fmt(u) + ": terms fail to grow past the gate");
        }
    }
    return c.res;
}

// ---------------------------------------------------------------- 7
CriterionResult bivariate_suite()
{
    Check c(7, "bivariate KL asymmetry");
    const BivariateCauchy far(0.0, -10.0, 100.0, 0.0, 0.01);
    const BivariateCauchy centered(0.0, 0.0, 100.0, 0.0, 0.01);
    const double i_far = bivariate_log_integral(far, 2e-3);
    const double i_centered = bivariate_log_integral(centered, 2e-3);
    c.res.metrics["shifted_integral"] = i_far;
    c.res.metrics["centered_integral"] = i_centered;
    c.close(i_far, 57.953, 0.05, "shifted log integral");
    c.close(i_centered, 30.1523, 0.05, "centered log integral");

    const BivariateCauchy std2(0.0, 0.0, 1.0, 0.0, 1.0);
    const double fwd = quad_kl_bivariate(std2, far, 1e-3);
    const double rev = quad_kl_bivariate(far, std2, 1e-3);
    c.res.metrics["forward_kl"] = fwd;
    c.res.metrics["reverse_kl"] = rev;
    c.require(std::fabs(fwd - rev) > 1.0,
              "forward/reverse KL gap " + fmt(std::fabs(fwd - rev)) +
                  " not > 1");
    return c.res;
}

// ---------------------------------------------------------------- 8
CriterionResult elliptic_suite()
{
    Check c(8, "elliptic integral suite");
    auto k_quad = [](double t) {
        return adaptive_quadrature(
            [t](double th) {
                const double s = std::sin(th);
                return 1.0 / std::sqrt(1.0 - t * s * s);
            },
            0.0, kPi / 2.0, 1e-12);
    };
    auto e_quad = [](double t) {
        return adaptive_quadrature(
            [t](double th) {
                const double s = std::sin(th);
                return std::sqrt(1.0 - t * s * s);
            },
            0.0, kPi / 2.0, 1e-12);
    };
    for (double t = 0.0; t < 0.95; t += 0.1)
        c.close(elliptic_k(t), k_quad(t), 1e-10, "K at t=" + fmt(t));
    c.close(elliptic_k(0.99), k_quad(0.99), 1e-10, "K at t=0.99");

    for (double x = 0.1; x < 0.95; x += 0.1) {
        const double direct = 1.0 - e_quad(x) / k_quad(x);
        c.close(gauss_ek_deficit(x), direct, 1e-10,
                "Gauss deficit at x=" + fmt(x));
    }

    // Least-squares recovery of the small-x deficit expansion.
    const int m = 40, deg = 6;
    Eigen::MatrixXd design(m, deg);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) {
        const double x =
            std::pow(10.0, -3.0 + 2.0 * i / (m - 1.0));
        rhs(i) = gauss_ek_deficit(x);
        double pw = x;
        for (int j = 0; j < deg; ++j) {
            design(i, j) = pw;
            pw *= x;
        }
    }
    Eigen::VectorXd colnorm(deg);
    for (int j = 0; j < deg; ++j) {
        colnorm(j) = design.col(j).norm();
        design.col(j) /= colnorm(j);
    }
    Eigen::VectorXd sol = design.colPivHouseholderQr().solve(rhs);
    const double want[4] = {0.5, 1.0 / 16.0, 1.0 / 32.0, 41.0 / 2048.0};
    for (int j = 0; j < 4; ++j)
        c.close(sol(j) / colnorm(j), want[j], 1e-4,
                "deficit expansion coefficient of x^" + std::to_string(j + 1));

    // Ratio bounds and monotonicity on a dense grid.
    double prev_ek = 1.0;
    for (int i = 1; i <= 1000; ++i) {
        const double x = 1e-3 + (0.999 - 1e-3) * (i - 1) / 999.0;
        const double ek = 1.0 - gauss_ek_deficit(x);
        const double rx = std::sqrt(x);
        const double b1 = 0.5 - 0.25 * x + 0.5 * std::sqrt(1.0 - x);
        const double b2 =
            2.0 * rx / std::log((1.0 + rx) / (1.0 - rx));
        c.require(ek <= b1 + 1e-12, "E/K bound (AGM form) fails at x=" + fmt(x));
        c.require(ek <= b2 + 1e-12,
                  "E/K bound (log form) fails at x=" + fmt(x));
        const double kk = elliptic_k(x);
        const double lg = std::log(4.0 / std::sqrt(1.0 - x));
        c.require(lg <= kk + 1e-12 && kk <= 4.0 / (3.0 + x) * lg + 1e-12,
                  "K log-bracket fails at x=" + fmt(x));
        c.require(ek < prev_ek + 1e-15, "E/K not decreasing at x=" + fmt(x));
        prev_ek = ek;
    }
    return c.res;
}

// ---------------------------------------------------------------- 9
CriterionResult metric_suite()
{
    Check c(9, "metrization thresholds");
    const MetricSpec sqrt_kl(DivergenceKind(DivTag::KL), 0.5);
    const MetricSpec sqrt_bhat(DivergenceKind(DivTag::Bhattacharyya), 0.5);
    const auto v1 = triangle_scan(sqrt_kl, 100000, 20240109);
    const auto v2 = triangle_scan(sqrt_bhat, 100000, 20240110);
    c.res.metrics["sqrt_kl_violations"] = static_cast<double>(v1.size());
    c.res.metrics["sqrt_bhat_violations"] = static_cast<double>(v2.size());
    c.require(v1.empty(), "sqrt(KL) triangle violations found: " +
                              std::to_string(v1.size()));
    c.require(v2.empty(), "sqrt(Bhattacharyya) triangle violations found: " +
                              std::to_string(v2.size()));
    for (double a : {0.55, 0.6, 0.75, 1.0}) {
        const MetricSpec ms(DivergenceKind(DivTag::KL), a);
        const auto w = metric_violation_search(ms);
        c.require(w.has_value(),
                  "no triangle violation found for KL^" + fmt(a));
        if (w) c.res.metrics["kl_defect_alpha_" + fmt(a)] = w->defect;
    }
    return c.res;
}

// ---------------------------------------------------------------- 10
CriterionResult negdef_suite()
{
    Check c(10, "Hilbert embeddability (negative definiteness)");
    std::mt19937_64 rng(20240111);
    std::vector<CauchyParam> pts;
    for (int i = 0; i < 12; ++i)
        pts.emplace_back(detail::uniform(rng, -5.0, 5.0),
                         detail::uniform(rng, 0.2, 5.0));
    const double worst = negative_definiteness_check(pts, 1000, 20240112);
    c.res.metrics["max_quadratic_form"] = worst;
    c.require(worst <= 1e-9,
              "centered KL quadratic form reached " + fmt(worst));
    std::vector<CauchyParam> kpts(pts.begin(), pts.begin() + 8);
    const double mineig = bc_kernel_psd_check(kpts, 0.5);
    c.res.metrics["bc_gram_min_eigenvalue"] = mineig;
    c.require(mineig >= -1e-9,
              "Hellinger-kernel Gram matrix min eigenvalue " + fmt(mineig));
    return c.res;
}

// ---------------------------------------------------------------- 11
CriterionResult chernoff_suite()
{
    Check c(11, "Chernoff information at a* = 1/2");
    std::mt19937_64 rng(20240113);
    const DivergenceKind bhat(DivTag::Bhattacharyya);
    double worst_a = 0.0, worst_v = 0.0;
    for (int it = 0; it < 20; ++it) {
        CauchyParam p(0.0, 1.0), q(0.0, 1.0);
        do {
            p = draw_param(rng, 3.0, 1.0);
            q = draw_param(rng, 3.0, 1.0);
        } while (chi(p, q) < 0.2);
        const auto r = chernoff_optimizer(p, q);
        const double da = std::fabs(r.a_star - 0.5);
        const double dv = std::fabs(r.value - divergence(bhat, p, q));
        worst_a = std::max(worst_a, da);
        worst_v = std::max(worst_v, dv);
        c.require(da <= 1e-6, "pair " + std::to_string(it) +
                                  ": a* = " + fmt(r.a_star));
        c.require(dv <= 1e-8,
                  "pair " + std::to_string(it) + ": Chernoff value " +
                      fmt(r.value) + " vs Bhattacharyya " +
                      fmt(divergence(bhat, p, q)));
    }
    c.res.metrics["max_a_star_error"] = worst_a;
    c.res.metrics["max_value_error"] = worst_v;
    return c.res;
}

// ---------------------------------------------------------------- 12
CriterionResult monotone_suite()
{
    Check c(12, "strict monotonicity of every h_f");
    const DivergenceKind kinds[] = {
        DivergenceKind(DivTag::ChiSquared),
        DivergenceKind(DivTag::KL),
        DivergenceKind(DivTag::TV),
        DivergenceKind(DivTag::JS),
        DivergenceKind(DivTag::Taneja),
        DivergenceKind(DivTag::LeCam),
        DivergenceKind(DivTag::HellingerSq),
        DivergenceKind(DivTag::Jeffreys),
        DivergenceKind(DivTag::Bhattacharyya),
        DivergenceKind(DivTag::Chernoff),
        DivergenceKind(DivTag::SkewedKL, 0.3),
        DivergenceKind(DivTag::SkewedJS, 0.3),
        DivergenceKind(DivTag::HarmonicMean),
    };
    for (const auto& kind : kinds) {
        double prev = h_of_chi(kind, 0.0);
        bool ok = true;
        double bad_u = 0.0;
        for (int i = 1; i <= 10000; ++i) {
            const double u = 0.01 * i;
            const double v = h_of_chi(kind, u);
            if (!(v > prev)) {
                ok = false;
                bad_u = u;
                break;
            }
            prev = v;
        }
        c.require(ok, kind_name(kind) + ": h_f not strictly increasing at u=" +
                          fmt(bad_u));
    }
    return c.res;
}

// ---------------------------------------------------------------- 13
CriterionResult gromov_suite()
{
    Check c(13, "unbounded four-point Gromov defect");
    for (DivTag t : {DivTag::KL, DivTag::Bhattacharyya}) {
        const DivergenceKind kind(t);
        double prev = -1e300;
        for (double n : {10.0, 100.0, 1000.0, 10000.0}) {
            const double d = gromov_four_point_probe(kind, n);
            c.require(d > prev, kind_name(kind) + ": defect at n=" + fmt(n) +
                                    " (" + fmt(d) + ") not above " +
                                    fmt(prev));
            c.res.metrics[kind_name(kind) + "_defect_n" + fmt(n)] = d;
            prev = d;
        }
    }
    return c.res;
}

// ---------------------------------------------------------------- 14
CriterionResult families_suite()
{
    Check c(14, "Cauchy-type families and the Boole transform");
    std::mt19937_64 rng(20240114);
    const DivTag tags[] = {DivTag::KL, DivTag::TV, DivTag::JS,
                           DivTag::HellingerSq};

    for (int it = 0; it < 3; ++it) {
        double re, im;
        do {
            re = detail::uniform(rng, -0.6, 0.6);
            im = detail::uniform(rng, -0.6, 0.6);
        } while (re * re + im * im > 0.36);
        const CircularSpec cp{{re, im}};
        double re2, im2;
        do {
            re2 = detail::uniform(rng, -0.6, 0.6);
            im2 = detail::uniform(rng, -0.6, 0.6);
        } while (re2 * re2 + im2 * im2 > 0.36);
        const CircularSpec cq{{re2, im2}};
        for (DivTag t : tags) {
            const DivergenceKind kind(t);
            const double cf = family_divergence(kind, cp, cq);
            const double tol = t == DivTag::TV ? 1e-8 : 1e-9;
            const double oc = quad_f_divergence(
                catalog_generator(kind), DensitySpec{cp}, DensitySpec{cq}, tol);
            c.close(oc, cf, 1e-6,
                    "circular " + kind_name(kind) + " pair " +
                        std::to_string(it));
        }
    }

    for (int it = 0; it < 3; ++it) {
        const WrappedSpec wp{detail::uniform(rng, -kPi, kPi),
                             detail::uniform(rng, 0.3, 1.5)};
        const WrappedSpec wq{detail::uniform(rng, -kPi, kPi),
                             detail::uniform(rng, 0.3, 1.5)};
        for (DivTag t : tags) {
            const DivergenceKind kind(t);
            const double cf = family_divergence(kind, wp, wq);
            const double tol = t == DivTag::TV ? 1e-8 : 1e-9;
            const double oc = quad_f_divergence(
                catalog_generator(kind), DensitySpec{wp}, DensitySpec{wq}, tol);
            c.close(oc, cf, 1e-6,
                    "wrapped " + kind_name(kind) + " pair " +
                        std::to_string(it));
        }
    }

    for (int it = 0; it < 3; ++it) {
        const LogCauchySpec lp{detail::uniform(rng, -1.0, 1.0),
                               std::exp(detail::uniform(rng, -0.7, 0.7))};
        const LogCauchySpec lq{detail::uniform(rng, -1.0, 1.0),
                               std::exp(detail::uniform(rng, -0.7, 0.7))};
        std::vector<double> splits;
        for (double r : density_crossings(CauchyParam(lp.mu, lp.sigma),
                                          CauchyParam(lq.mu, lq.sigma)))
            splits.push_back(std::exp(r));
        for (DivTag t : tags) {
            const DivergenceKind kind(t);
            const double cf = family_divergence(kind, lp, lq);
            const double oc = quad_f_divergence(
                catalog_generator(kind), DensitySpec{lp}, DensitySpec{lq},
                1e-9, t == DivTag::TV ? splits : std::vector<double>{});
            c.close(oc, cf, 1e-6,
                    "log-Cauchy " + kind_name(kind) + " pair " +
                        std::to_string(it));
        }
    }

    double worst_res = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const double a = detail::uniform(rng, 0.2, 3.0);
        const CauchyParam th = draw_param(rng, 2.0, 1.0);
        double x = detail::uniform(rng, -5.0, 5.0);
        if (std::fabs(x) < 0.05) x = x < 0.0 ? -0.05 : 0.05;
        worst_res = std::max(worst_res, boole_pushforward_check(a, th, x));
    }
    c.res.metrics["max_boole_residual"] = worst_res;
    c.require(worst_res <= 1e-10,
              "Boole pushforward residual reached " + fmt(worst_res));

    // The Boole transform is not Moebius: divergences are not preserved.
    const DivergenceKind kl(DivTag::KL);
    const CauchyParam p0(0.0, 1.0), q0(0.0, 2.0);
    const CauchyParam p1 = boole_image(2.0, p0), q1 = boole_image(2.0, q0);
    const double before = divergence(kl, p0, q0);
    const double after = oracle_divergence(kl, p1, q1, 1e-10);
    c.res.metrics["boole_kl_gap"] = std::fabs(after - before);
    c.require(std::fabs(after - before) > 1e-3,
              "Boole images unexpectedly preserve KL: " + fmt(before) +
                  " vs " + fmt(after));
    return c.res;
}

// ---------------------------------------------------------------- 15
CriterionResult angular_suite()
{
    Check c(15, "angular Bhattacharyya-coefficient identity");
    std::mt19937_64 rng(20240115);
    const DivergenceKind hell(DivTag::HellingerSq);
    for (int it = 0; it < 10; ++it) {
        const CauchyParam p = draw_param(rng, 3.0, 1.0);
        const CauchyParam q = draw_param(rng, 3.0, 1.0);
        for (double s : {0.25, 0.5, 0.75}) {
            const double ang = bc_skewed_angular(s, p, q);
            auto integrand = [&](double x) {
                return std::pow(density(p, x), s) *
                       std::pow(density(q, x), 1.0 - s);
            };
            const double direct = integrate_line(integrand, 1e-12);
            c.close(ang, direct, 1e-8,
                    "angular BC s=" + fmt(s) + " pair " + std::to_string(it));
            if (s == 0.5) {
                const double elliptic = 1.0 - divergence(hell, p, q);
                c.close(ang, elliptic, 1e-8,
                        "angular BC vs elliptic closed form, pair " +
                            std::to_string(it));
            }
        }
    }
    return c.res;
}

// ---------------------------------------------------------------- 16
CriterionResult entropy_suite()
{
    Check c(16, "entropies and the mixture Bregman identity");
    for (double s : {0.3, 1.0, 2.5}) {
        const CauchyParam p(0.0, s);
        auto integrand = [&](double x) {
            const double d = density(p, x);
            return -d * std::log(d);
        };
        c.close(integrate_line(integrand, 1e-12), cauchy_entropy(s), 1e-9,
                "differential entropy at s=" + fmt(s));
    }
    const MixtureTwo mixes[] = {
        MixtureTwo(0.3, CauchyParam(0.0, 1.0), CauchyParam(1.0, 1.0)),
        MixtureTwo(0.5, CauchyParam(0.0, 1.0), CauchyParam(2.0, 0.5)),
    };
    for (const auto& mix : mixes) {
        auto integrand = [&](double x) {
            const double d = mix.density(x);
            return -d * std::log(d);
        };
        c.close(two_mixture_entropy(mix), integrate_line(integrand, 1e-10),
                1e-7, "two-component mixture entropy at w=" + fmt(mix.w));
    }
    const CauchyParam c0(0.0, 1.0), c1(1.0, 1.0);
    const double t1 = 0.3, t2 = 0.7;
    const MixtureTwo m1(t1, c0, c1), m2(t2, c0, c1);
    auto integrand = [&](double x) {
        const double a = m1.density(x), b = m2.density(x);
        return a * std::log(a / b);
    };
    c.close(mixture_family_kl(t1, t2, c0, c1), integrate_line(integrand, 1e-9),
            1e-6, "mixture-family Bregman KL");
    return c.res;
}

}  // namespace

CriterionResult run_criterion(int id)
{
    switch (id) {
        case 1: return closed_vs_oracle();
        case 2: return symmetry_suite();
        case 3: return invariance_suite();
        case 4: return jpoly_suite();
        case 5: return regression_suite();
        case 6: return series_suite();
        case 7: return bivariate_suite();
        case 8: return elliptic_suite();
        case 9: return metric_suite();
        case 10: return negdef_suite();
        case 11: return chernoff_suite();
        case 12: return monotone_suite();
        case 13: return gromov_suite();
        case 14: return families_suite();
        case 15: return angular_suite();
        case 16: return entropy_suite();
        default:
            throw std::invalid_argument("run_criterion: id out of range");
    }
}

const std::map<std::string, int>& suite_criteria()
{
    static const std::map<std::string, int> m = {
        {"symmetry", 2},  {"invariance", 3}, {"metric", 9},
        {"negdef", 10},   {"monotone", 12},  {"series", 6},
        {"families", 14}, {"bivariate", 7},
    };
    return m;
}

}  // namespace cfdiv
