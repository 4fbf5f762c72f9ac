#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "cfdiv/acceptance.hpp"
#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/chi_series.hpp"
#include "cfdiv/closed_form.hpp"
#include "cfdiv/families.hpp"
#include "cfdiv/geometry_analysis.hpp"
#include "cfdiv/oracle.hpp"

namespace py = pybind11;
using namespace cfdiv;

namespace {

using Pair = std::pair<double, double>;

CauchyParam param(const Pair& p) { return {p.first, p.second}; }

const char* verdict_name(SeriesVerdict v)
{
    switch (v) {
        case SeriesVerdict::Converged: return "converged";
        case SeriesVerdict::Diverged: return "diverged";
        default: return "truncated";
    }
}

}  // namespace

PYBIND11_MODULE(_cauchy_fdiv, m)
{
    m.doc() = "f-divergences between Cauchy-type distributions";

    m.def(
        "chi",
        [](const Pair& p, const Pair& q) { return chi(param(p), param(q)); },
        py::arg("p"), py::arg("q"),
        "Maximal invariant chi((l1,s1), (l2,s2)).");

    m.def(
        "divergence",
        [](const std::string& kind, const Pair& p, const Pair& q,
           double alpha) {
            return divergence(parse_kind(kind, alpha), param(p), param(q));
        },
        py::arg("kind"), py::arg("p"), py::arg("q"), py::arg("alpha") = 0.5,
        "Closed-form divergence between two Cauchy densities.");

    m.def(
        "oracle_divergence",
        [](const std::string& kind, const Pair& p, const Pair& q, double tol,
           double alpha) {
            return oracle_divergence(parse_kind(kind, alpha), param(p),
                                     param(q), tol);
        },
        py::arg("kind"), py::arg("p"), py::arg("q"), py::arg("tol") = 1e-10,
        py::arg("alpha") = 0.5,
        "Adaptive-quadrature evaluation of any divergence kind.");

    m.def(
        "mc_divergence",
        [](const std::string& kind, const Pair& p, const Pair& q,
           std::int64_t n, std::uint64_t seed, double alpha) {
            const auto r = mc_f_divergence(
                catalog_generator(parse_kind(kind, alpha)),
                DensitySpec{param(p)}, DensitySpec{param(q)}, n, seed);
            return std::make_pair(r.estimate, r.stderr_);
        },
        py::arg("kind"), py::arg("p"), py::arg("q"),
        py::arg("n") = 1000000, py::arg("seed") = 0, py::arg("alpha") = 0.5,
        "Seeded Monte Carlo estimate; returns (estimate, stderr).");

    m.def(
        "h_of_chi",
        [](const std::string& kind, double u, double alpha) {
            return h_of_chi(parse_kind(kind, alpha), u);
        },
        py::arg("kind"), py::arg("u"), py::arg("alpha") = 0.5,
        "h_f such that the divergence equals h_f(chi).");

    m.def(
        "taylor_divergence",
        [](const std::string& kind, const Pair& p, const Pair& q, double tol,
           int max_terms, double alpha) {
            const auto r = taylor_f_divergence(parse_kind(kind, alpha),
                                               param(p), param(q), tol,
                                               max_terms);
            py::dict d;
            d["value"] = r.value;
            d["terms_used"] = r.terms_used;
            d["verdict"] = verdict_name(r.verdict);
            d["term_trace"] = r.term_trace;
            return d;
        },
        py::arg("kind"), py::arg("p"), py::arg("q"), py::arg("tol") = 1e-10,
        py::arg("max_terms") = 100, py::arg("alpha") = 0.5,
        "Chi-power series evaluation with the convergence gate.");

    m.def(
        "series_coefficient",
        [](const std::string& kind, int n, double alpha) {
            return series_coefficient(parse_kind(kind, alpha), n);
        },
        py::arg("kind"), py::arg("n"), py::arg("alpha") = 0.5);

    m.def(
        "chi_power_divergence",
        [](int n, const Pair& p, const Pair& q) {
            return chi_power_divergence(n, param(p), param(q));
        },
        py::arg("n"), py::arg("p"), py::arg("q"),
        "Pearson power chi divergence of integer order n >= 2.");

    m.def("j_polynomial", &j_polynomial, py::arg("a"),
          "Coefficients of J_a(chi) = int p^a q^(1-a).");

    m.def(
        "kl_bivariate",
        [](const Pair& mu_p, const std::vector<double>& sig_p,
           const Pair& mu_q, const std::vector<double>& sig_q, double tol) {
            if (sig_p.size() != 3 || sig_q.size() != 3)
                throw std::invalid_argument(
                    "scale matrices must be [s11, s12, s22]");
            const BivariateCauchy p(mu_p.first, mu_p.second, sig_p[0],
                                    sig_p[1], sig_p[2]);
            const BivariateCauchy q(mu_q.first, mu_q.second, sig_q[0],
                                    sig_q[1], sig_q[2]);
            return quad_kl_bivariate(p, q, tol);
        },
        py::arg("mu_p"), py::arg("sigma_p"), py::arg("mu_q"),
        py::arg("sigma_q"), py::arg("tol") = 1e-4,
        "KL divergence between bivariate Cauchy densities.");

    m.def(
        "fisher_rao_distance",
        [](const Pair& p, const Pair& q) {
            return fisher_rao_distance(param(p), param(q));
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "sup_density_ratio",
        [](const Pair& p, const Pair& q) {
            return sup_density_ratio(param(p), param(q));
        },
        py::arg("p"), py::arg("q"));

    m.def("entropy", &cauchy_entropy, py::arg("scale"),
          "Differential entropy log(4 pi s).");

    m.def(
        "chernoff",
        [](const Pair& p, const Pair& q) {
            const auto r = chernoff_optimizer(param(p), param(q));
            return std::make_pair(r.a_star, r.value);
        },
        py::arg("p"), py::arg("q"),
        "Chernoff information; returns (a_star, value).");

    m.def(
        "fr_to_bhat",
        [](double s) {
            const auto r = fr_to_bhat_transform(s);
            return std::make_pair(r.t_value, r.ratio);
        },
        py::arg("s"),
        "Fisher-Rao to Bhattacharyya transform; returns (t, sqrt(t)/s).");

    m.def(
        "chebyshev_center",
        [](const std::vector<Pair>& pts) {
            std::vector<CauchyParam> v;
            v.reserve(pts.size());
            for (const auto& p : pts) v.push_back(param(p));
            const auto c = chebyshev_center(v);
            return std::make_pair(c.location(), c.scale());
        },
        py::arg("points"),
        "Chebyshev center in the chi pseudo-distance.");

    m.def(
        "fit_h_polynomial",
        [](const std::string& target, int order, int degree, int samples,
           std::uint64_t seed) {
            FitTarget t;
            if (target == "j")
                t = FitTarget::J;
            else if (target == "chik")
                t = FitTarget::ChiK;
            else
                throw std::invalid_argument("target must be 'j' or 'chik'");
            return fit_h_polynomial(t, order, degree, samples, seed);
        },
        py::arg("target"), py::arg("order"), py::arg("degree") = 5,
        py::arg("samples") = 60, py::arg("seed") = 0,
        "Least-squares recovery of h from quadrature data.");

    m.def(
        "family_divergence",
        [](const std::string& kind, const std::string& family, const Pair& p,
           const Pair& q, double alpha) {
            const auto k = parse_kind(kind, alpha);
            if (family == "wrapped")
                return family_divergence(k, WrappedSpec{p.first, p.second},
                                         WrappedSpec{q.first, q.second});
            if (family == "log-cauchy")
                return family_divergence(k, LogCauchySpec{p.first, p.second},
                                         LogCauchySpec{q.first, q.second});
            if (family == "circular")
                return family_divergence(
                    k, CircularSpec{{p.first, p.second}},
                    CircularSpec{{q.first, q.second}});
            throw std::invalid_argument("unknown family: " + family);
        },
        py::arg("kind"), py::arg("family"), py::arg("p"), py::arg("q"),
        py::arg("alpha") = 0.5,
        "Divergence within the circular, wrapped or log-Cauchy family.");

    m.def(
        "run_suite",
        [](const std::string& name) {
            const auto& suites = suite_criteria();
            const auto it = suites.find(name);
            if (it == suites.end())
                throw std::invalid_argument("unknown suite: " + name);
            const auto r = run_criterion(it->second);
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["failures"] = r.failures;
            d["metrics"] = r.metrics;
            return d;
        },
        py::arg("name"),
        "Runs a property suite (symmetry, invariance, metric, negdef, "
        "monotone, series, families, bivariate).");
}
