#ifndef CFDIV_SPECIAL_FN_HPP_
#define CFDIV_SPECIAL_FN_HPP_

namespace cfdiv {

/** Arithmetic-geometric mean of a, b > 0. */
double agm(double a, double b);

/**
 * Complete elliptic integral of the first kind in the parameter
 * convention K(t) = int_0^{pi/2} (1 - t sin^2 theta)^{-1/2} dtheta,
 * t in [0,1).  Computed as pi / (2 agm(1, sqrt(1-t))).
 */
double elliptic_k(double t);

/**
 * Complete elliptic integral of the second kind,
 * E(t) = int_0^{pi/2} sqrt(1 - t sin^2 theta) dtheta, t in [0,1].
 */
double elliptic_e(double t);

/**
 * Gauss deficit 1 - E(x)/K(x) for x in (0,1), evaluated through the
 * AGM difference series x/2 + sum_{n>=0} 2^{n-2} (a_n - b_n)^2 with
 * (a_0, b_0) = (1, sqrt(1-x)).
 */
double gauss_ek_deficit(double x);

}  // namespace cfdiv

#endif  // CFDIV_SPECIAL_FN_HPP_
