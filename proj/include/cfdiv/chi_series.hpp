#ifndef CFDIV_CHI_SERIES_HPP_
#define CFDIV_CHI_SERIES_HPP_

#include <vector>

#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/closed_form.hpp"

namespace cfdiv {

enum class SeriesVerdict { Converged, Diverged, Truncated };

struct SeriesResult {
    double value;
    int terms_used;
    SeriesVerdict verdict;
    std::vector<double> term_trace;
};

/**
 * Pearson power chi divergence of order n:
 * D_{chi,n}(p:q) = int (q - p)^n / p^{n-1}, a polynomial in chi(p,q).
 */
double chi_power_divergence(int n, const CauchyParam& p, const CauchyParam& q);

/** Coefficients of D_{chi,n} as a polynomial in chi (exact construction). */
std::vector<double> chi_power_polynomial(int n);

/** True when the kind has a series coefficient rule. */
bool has_series(const DivergenceKind& kind);

/**
 * Series coefficient a_n (n >= 2) of the expansion
 * I_f = sum_n a_n D_{chi,n}.  Supported kinds: KL, Alpha(alpha), JS,
 * HellingerSq, HarmonicMean.
 */
double series_coefficient(const DivergenceKind& kind, int n);

/** Convergence radius r_f of the generator's Taylor series at u = 1. */
double series_radius(const DivergenceKind& kind);

/** True iff sup density ratio < 1 + r_f (series convergence gate). */
bool convergence_gate(const DivergenceKind& kind, const CauchyParam& p,
                      const CauchyParam& q);

/** Sums the chi-power series, gated by the convergence criterion. */
SeriesResult taylor_f_divergence(const DivergenceKind& kind,
                                 const CauchyParam& p, const CauchyParam& q,
                                 double tol, int max_terms);

/**
 * Witness that TV admits no power-chi expansion: evaluates
 * TV / D_{chi,2} along an approach to p0 at distances radius * 10^{-k};
 * the ratios blow up like 1/sqrt(chi).
 */
struct TvProbeReport {
    std::vector<double> distances;
    std::vector<double> ratios;
    std::vector<double> tv_values;
};

TvProbeReport tv_no_expansion_probe(const CauchyParam& p0, double radius,
                                    int steps = 5);

}  // namespace cfdiv

#endif  // CFDIV_CHI_SERIES_HPP_
