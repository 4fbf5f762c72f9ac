#ifndef CFDIV_CAUCHY_CORE_HPP_
#define CFDIV_CAUCHY_CORE_HPP_

#include <complex>
#include <stdexcept>

namespace cfdiv {

/**
 * Parameter pair (location l, scale s > 0) of a univariate Cauchy density,
 * also viewed as the point theta = l + i s of the upper half-plane.
 */
class CauchyParam {
public:
    CauchyParam(double location, double scale)
        : location_(location), scale_(scale)
    {
        if (!(scale > 0.0))
            throw std::invalid_argument(
                "CauchyParam: scale parameter must be positive");
    }

    double location() const { return location_; }
    double scale() const { return scale_; }
    std::complex<double> theta() const { return {location_, scale_}; }

    bool operator==(const CauchyParam& o) const
    { return location_ == o.location_ && scale_ == o.scale_; }

private:
    double location_;
    double scale_;
};

/**
 * Element of SL(2,R) acting on the upper half-plane by
 * z -> (az + b)/(cz + d).  Inputs with positive determinant are
 * rescaled so that ad - bc = 1; nonpositive determinants are rejected.
 */
class MoebiusMap {
public:
    MoebiusMap(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    std::complex<double> apply(std::complex<double> z) const;

    /** Composition: (*this) after other. */
    MoebiusMap compose(const MoebiusMap& other) const;

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

private:
    double a_, b_, c_, d_;
};

/** Maximal invariant chi(p,q) = ((l1-l2)^2 + (s1-s2)^2) / (2 s1 s2). */
double chi(const CauchyParam& p, const CauchyParam& q);

/** Density s / (pi (s^2 + (x-l)^2)). */
double density(const CauchyParam& p, double x);

/** CDF (1/pi) arctan((x-l)/s) + 1/2. */
double cauchy_cdf(const CauchyParam& p, double x);

/** Quantile l + s tan(pi (u - 1/2)) for u in (0,1). */
double cauchy_quantile(const CauchyParam& p, double u);

/** Image parameter of the Moebius action on theta. */
CauchyParam mobius_apply(const MoebiusMap& A, const CauchyParam& p);

struct StandardPair {
    double lambda;   // >= 1
    MoebiusMap map;  // sends (p, q) to ((0, lambda), (0, 1))
};

/**
 * Finds lambda >= 1 and A in SL(2,R) with A.p = (0, lambda), A.q = (0, 1).
 * lambda solves chi = (lambda-1)^2 / (2 lambda).
 */
StandardPair reduce_to_standard_pair(const CauchyParam& p, const CauchyParam& q);

/** Supremum of the density ratio: lambda = 1 + chi + sqrt(chi (chi+2)). */
double sup_density_ratio(const CauchyParam& p, const CauchyParam& q);

/** Fisher-Rao distance (1/sqrt(2)) arccosh(1 + chi). */
double fisher_rao_distance(const CauchyParam& p, const CauchyParam& q);

/**
 * Christoffel symbols of the Fisher metric g = diag(1/(2s^2), 1/(2s^2))
 * at p, indexed as gamma[k][i][j] for the symbol Gamma^{k+1}_{(i+1)(j+1)}
 * with coordinates (x^1, x^2) = (l, s).
 */
struct Christoffel {
    double gamma[2][2][2];
};

Christoffel christoffel(const CauchyParam& p);

}  // namespace cfdiv

#endif  // CFDIV_CAUCHY_CORE_HPP_
