#include "cfdiv/special_fn.hpp"

#include <cmath>
#include <stdexcept>

namespace cfdiv {

namespace {
const double kPi = std::acos(-1.0);
constexpr int kMaxIter = 60;
}

double agm(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("agm: arguments must be positive");
    for (int i = 0; i < kMaxIter; ++i) {
        const double an = 0.5 * (a + b);
        const double gn = std::sqrt(a * b);
        a = an;
        b = gn;
        if (std::fabs(a - b) <= 1e-15 * a) break;
    }
    return 0.5 * (a + b);
}

double elliptic_k(double t)
{
    if (!(t >= 0.0 && t < 1.0))
        throw std::domain_error("elliptic_k: parameter must lie in [0,1)");
    return kPi / (2.0 * agm(1.0, std::sqrt(1.0 - t)));
}

double gauss_ek_deficit(double x)
{
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("gauss_ek_deficit: x must lie in (0,1)");
    double a = 1.0, b = std::sqrt(1.0 - x);
    double sum = 0.5 * x;
    double pow2 = 0.25;  // 2^{n-2} with n = 0
    for (int n = 0; n < kMaxIter; ++n) {
        const double d = a - b;
        const double term = pow2 * d * d;
        sum += term;
        if (term < 1e-18 * sum && n > 1) break;
        const double an = 0.5 * (a + b);
        const double gn = std::sqrt(a * b);
        a = an;
        b = gn;
        pow2 *= 2.0;
    }
    return sum;
}

double elliptic_e(double t)
{
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("elliptic_e: parameter must lie in [0,1]");
    if (t == 0.0) return kPi / 2.0;
    if (t == 1.0) return 1.0;
    return elliptic_k(t) * (1.0 - gauss_ek_deficit(t));
}

}  // namespace cfdiv
