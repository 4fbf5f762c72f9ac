#ifndef CFDIV_ORACLE_HPP_
#define CFDIV_ORACLE_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "cfdiv/cauchy_core.hpp"
#include "cfdiv/closed_form.hpp"

namespace cfdiv {

struct LogCauchySpec {
    double mu;
    double sigma;  // > 0
};

struct CircularSpec {
    std::complex<double> w;  // |w| < 1
};

struct WrappedSpec {
    double mu;
    double gamma;  // > 0
};

/** Bivariate Cauchy with location mu and SPD scale matrix Sigma. */
struct BivariateCauchy {
    double mu[2];
    double s11, s12, s22;

    BivariateCauchy(double m0, double m1, double a11, double a12, double a22);
};

enum class Support { Line, HalfLine, Circle, Plane };

/** A density together with its support, for oracle integration. */
struct DensitySpec {
    std::variant<CauchyParam, MixtureTwo, LogCauchySpec, CircularSpec,
                 WrappedSpec, BivariateCauchy>
        family;

    Support support() const;
    /** Density value at a point of a one-dimensional support. */
    double density1d(double x) const;
};

/** Named generator f with f(1) = 0 (checked at construction). */
struct GeneratorSpec {
    std::string name;
    std::function<double(double)> f;

    GeneratorSpec(std::string n, std::function<double(double)> fn);
};

/** Catalog generator for a divergence kind (f such that I_f(p:q) = D(p:q)). */
GeneratorSpec catalog_generator(const DivergenceKind& kind);

/**
 * I_f(p:q) = int p f(q/p) by adaptive quadrature with absolute
 * tolerance tol.  Known integrand kinks may be passed as split points
 * (support coordinates).
 */
double quad_f_divergence(const GeneratorSpec& f, const DensitySpec& p,
                         const DensitySpec& q, double tol,
                         const std::vector<double>& splits = {});

struct McResult {
    double estimate;
    double stderr_;
};

/**
 * Monte Carlo estimate of I_f(p:q) by importance sampling from p
 * (Cauchy only), with the quantile transform and a seeded mt19937_64.
 */
McResult mc_f_divergence(const GeneratorSpec& f, const DensitySpec& p,
                         const DensitySpec& q, std::int64_t n,
                         std::uint64_t seed);

/** KL divergence between bivariate Cauchy densities (d = 2). */
double quad_kl_bivariate(const BivariateCauchy& p, const BivariateCauchy& q,
                         double tol);

/**
 * The raw integral int log(1 + (x-mu)^T Sigma^{-1} (x-mu)) (1+|x|^2)^{-3/2} dx
 * over the plane; building block of quad_kl_bivariate and of the
 * published 57.953 / 30.1523 values.
 */
double bivariate_log_integral(const BivariateCauchy& q, double tol);

/**
 * Quadrature evaluation of any DivergenceKind between univariate Cauchy
 * densities, composing generators as needed (Bhattacharyya/Chernoff as
 * -log of the coefficient, QDiv2 via its defining integral, ...).
 * Independent of every closed form except the density itself.
 */
double oracle_divergence(const DivergenceKind& kind, const CauchyParam& p,
                         const CauchyParam& q, double tol);

/** Brute-force density-ratio maximization (oracle for sup_density_ratio). */
double sup_ratio_grid(const CauchyParam& p, const CauchyParam& q);

/** int of the density over its support (normalization check). */
double quad_density_norm(const DensitySpec& p, double tol);

}  // namespace cfdiv

#endif  // CFDIV_ORACLE_HPP_
