#ifndef CFDIV_GEOMETRY_ANALYSIS_HPP_
#define CFDIV_GEOMETRY_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/closed_form.hpp"

namespace cfdiv {

/** Candidate metric d(p,q) = D(p,q)^alpha for a base divergence kind. */
struct MetricSpec {
    DivergenceKind kind;
    double alpha;  // in (0, 1]

    MetricSpec(DivergenceKind k, double a) : kind(k), alpha(a) {
        if (!(a > 0.0 && a <= 1.0))
            throw std::invalid_argument("MetricSpec: alpha must lie in (0,1]");
    }

    double distance(const CauchyParam& p, const CauchyParam& q) const;
};

struct TriangleViolation {
    CauchyParam x, y, z;
    double defect;  // d(x,z) - d(x,y) - d(y,z) > 0
};

/**
 * Random scan for triangle-inequality violations; scales log-uniform in
 * [e^-3, e^3], locations uniform in [-10, 10].
 */
std::vector<TriangleViolation> triangle_scan(const MetricSpec& m,
                                             std::int64_t n_triples,
                                             std::uint64_t seed);

/**
 * Deterministic small-u search on the imaginary axis for a triangle
 * violation of D_KL^alpha; expected to succeed iff alpha > 1/2.
 */
std::optional<TriangleViolation> metric_violation_search(const MetricSpec& m);

/**
 * Max over centered random weight vectors c of sum c_i c_j D_KL(z_i,z_j);
 * nonpositive by Schoenberg negative-definiteness.
 */
double negative_definiteness_check(const std::vector<CauchyParam>& points,
                                   int trials, std::uint64_t seed);

/** Smallest eigenvalue of the Gram matrix [BC_s(z_i, z_j)]. */
double bc_kernel_psd_check(const std::vector<CauchyParam>& points,
                           double s_exp);

/**
 * Four-point Gromov defect at (i, n i, n^2 i, n^3 i) for sqrt(KL) or
 * sqrt(Bhattacharyya); grows without bound in n.
 */
double gromov_four_point_probe(const DivergenceKind& kind, double n);

struct FrToBhat {
    double t_value;
    double ratio;  // sqrt(t)/s, continued to s = 0 by a numeric limit
};

/** Transform t(s) = -log J_3(F_3(s)) mapping Fisher-Rao to Bhattacharyya. */
FrToBhat fr_to_bhat_transform(double s);

struct ChernoffResult {
    double a_star;
    double value;
};

/** Golden-section minimization of Lambda(a) = log int p^a q^{1-a}. */
ChernoffResult chernoff_optimizer(const CauchyParam& p, const CauchyParam& q);

/** Chebyshev center argmin_c max_i chi(z_i, c) by coordinate descent. */
CauchyParam chebyshev_center(const std::vector<CauchyParam>& points);

/**
 * Least-squares estimate of polynomial h such that the quadrature
 * values of the target integral match h(chi); target is either
 * J(d) = int p^d q^{1-d} or the order-k chi divergence.
 */
enum class FitTarget { J, ChiK };

std::vector<double> fit_h_polynomial(FitTarget target, int order, int degree,
                                     int n_samples, std::uint64_t seed);

/**
 * Euclidean disc containing the chi-ball {w : chi(z,w) <= delta}:
 * center Re(z) + i (1+delta) Im(z), radius sqrt(delta (delta+2)) Im(z).
 */
struct EuclideanDisc {
    double center_re, center_im, radius;
};

EuclideanDisc chi_ball_euclidean_bound(const CauchyParam& z, double delta);

}  // namespace cfdiv

#endif  // CFDIV_GEOMETRY_ANALYSIS_HPP_
