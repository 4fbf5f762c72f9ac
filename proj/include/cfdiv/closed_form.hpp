#ifndef CFDIV_CLOSED_FORM_HPP_
#define CFDIV_CLOSED_FORM_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cfdiv/cauchy_core.hpp"

namespace cfdiv {

enum class DivTag {
    ChiSquared,
    KL,
    TV,
    JS,
    Taneja,
    LeCam,
    HellingerSq,
    Jeffreys,
    Bhattacharyya,
    Chernoff,
    SkewedKL,
    SkewedJS,
    HarmonicMean,
    QDiv2,
    KumarChhina,
    Alpha,
};

/**
 * Divergence selector: a tag plus the skew/alpha parameter used by
 * SkewedKL, SkewedJS and Alpha.
 */
struct DivergenceKind {
    DivTag tag;
    double alpha;

    DivergenceKind(DivTag t, double a = 0.5) : tag(t), alpha(a) {}
};

/** Parse/print tags using the CLI spelling ("kl", "tv", "hellinger", ...). */
DivergenceKind parse_kind(const std::string& name, double alpha = 0.5);
std::string kind_name(const DivergenceKind& kind);

/** True when divergence() can evaluate the kind without the oracle. */
bool has_closed_form(const DivergenceKind& kind);

/**
 * h_f(u) such that I_f(p:q) = h_f(chi(p,q)).  Supported for all tags
 * except QDiv2 (not an f-divergence), KumarChhina and Alpha (oracle /
 * series only).
 */
double h_of_chi(const DivergenceKind& kind, double u);

/**
 * Divergence between two Cauchy densities.  Closed-form kinds evaluate
 * h_f(chi); QDiv2 uses its own (asymmetric) formula.
 */
double divergence(const DivergenceKind& kind, const CauchyParam& p,
                  const CauchyParam& q);

/** Total variation via the explicit density-crossing roots. */
double tv_two_root(const CauchyParam& p, const CauchyParam& q);

/**
 * Crossing points of the two densities; two roots when s1 != s2, the
 * single midpoint root (duplicated) when s1 == s2 and l1 != l2.
 */
std::vector<double> density_crossings(const CauchyParam& p, const CauchyParam& q);

/** int p^a q^{1-a} = J_a(chi) for integer a >= 2. */
double bc_skewed_integer(int a, const CauchyParam& p, const CauchyParam& q);

/** Coefficients [c0, c1, ..., c_{a-1}] of J_a(t) in the variable t = chi. */
std::vector<double> j_polynomial(int a);

/**
 * Exact rational coefficients of J_a as (numerator, denominator) pairs
 * in lowest terms; throws if a coefficient exceeds 64-bit range.
 */
std::vector<std::pair<std::int64_t, std::int64_t>> j_polynomial_rational(int a);

/** Differential entropy log(4 pi s). */
double cauchy_entropy(double s);

/** Two-component Cauchy mixture (1-w) c0 + w c1. */
struct MixtureTwo {
    double w;
    CauchyParam c0;
    CauchyParam c1;

    MixtureTwo(double weight, CauchyParam a, CauchyParam b);

    double density(double x) const;
};

/** D_KL(c0 : (1-w) c0 + w c1) in closed form. */
double kl_point_to_mixture(const CauchyParam& p, const MixtureTwo& mix);

/** Closed-form differential entropy of a two-component Cauchy mixture. */
double two_mixture_entropy(const MixtureTwo& mix);

/**
 * KL between two mixtures m_theta1, m_theta2 of the same component pair,
 * as the Bregman divergence of F(theta) = -h(m_theta) with F' taken by
 * central difference.
 */
double mixture_family_kl(double theta1, double theta2, const CauchyParam& c0,
                         const CauchyParam& c1);

/** q-divergence of order 2: pi ((l1-l2)^2 + (s1-s2)^2) / s2 (asymmetric). */
double q_divergence_2(const CauchyParam& p, const CauchyParam& q);

/**
 * Skewed Bhattacharyya coefficient int p^s q^{1-s} via the angular
 * kernel (1/2pi) int_{-pi}^{pi} (cosh d + cos(theta) sinh d)^{-s} dtheta
 * with d the Poincare distance arccosh(1 + chi), s in (0,1).
 */
double bc_skewed_angular(double s_exp, const CauchyParam& p,
                         const CauchyParam& q);

}  // namespace cfdiv

#endif  // CFDIV_CLOSED_FORM_HPP_
