#ifndef CFDIV_FAMILIES_HPP_
#define CFDIV_FAMILIES_HPP_

#include <complex>

#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/closed_form.hpp"
#include "cfdiv/oracle.hpp"

namespace cfdiv {

/** theta(w) = i (1 - w) / (1 + w), mapping the unit disk onto H. */
CauchyParam theta_from_disk(const CircularSpec& w);

/** Inverse map w(theta) = (1 + i theta) / (1 - i theta). */
CircularSpec disk_from_theta(const CauchyParam& p);

/**
 * Disk parameter of a wrapped Cauchy: w = e^{i eta} with eta = mu + i gamma,
 * verified against the wrapped density on a grid of angles.
 */
CircularSpec circular_from_wrapped(const WrappedSpec& wc);

/** Disk automorphism t_{phi,a}(w) = e^{i phi} (w + a) / (conj(a) w + 1). */
std::complex<double> disk_automorphism(double phi, std::complex<double> a,
                                       std::complex<double> w);

double circular_density(const CircularSpec& p, double phi);
double wrapped_density(const WrappedSpec& p, double phi);
double log_cauchy_density(const LogCauchySpec& p, double y);

/** f-divergence between two circular Cauchy densities (reduction). */
double family_divergence(const DivergenceKind& kind, const CircularSpec& p,
                         const CircularSpec& q);
double family_divergence(const DivergenceKind& kind, const WrappedSpec& p,
                         const WrappedSpec& q);
double family_divergence(const DivergenceKind& kind, const LogCauchySpec& p,
                         const LogCauchySpec& q);

/** Image parameter of the Boole transform phi_a(z) = a (z - 1/z). */
CauchyParam boole_image(double a, const CauchyParam& theta);

/**
 * Residual |C(x'; l', s') - sum of the two pushforward branches| of the
 * Boole two-branch density identity at x' = phi_a(x).
 */
double boole_pushforward_check(double a, const CauchyParam& theta, double x);

/**
 * Residual of the single-branch Moebius pushforward identity
 * C(A.x; A.theta) = C(x; theta) / |phi_A'(x)|.
 */
double mobius_pushforward_residual(const MoebiusMap& A, const CauchyParam& theta,
                                   double x);

}  // namespace cfdiv

#endif  // CFDIV_FAMILIES_HPP_
