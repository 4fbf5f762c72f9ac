#include "jpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cfdiv {
namespace detail {

namespace {

void trim(RatPoly& p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

RatPoly add(const RatPoly& x, const RatPoly& y)
{
    RatPoly r(std::max(x.size(), y.size()), Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    return r;
}

RatPoly scale(RatPoly x, const Rat& c)
{
    for (auto& v : x) v *= c;
    return x;
}

RatPoly mul(const RatPoly& x, const RatPoly& y)
{
    RatPoly r(x.size() + y.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

BigInt double_factorial(int n)
{
    // (-1)!! = 1 by convention.
    BigInt r = 1;
    for (int k = n; k >= 2; k -= 2) r *= k;
    return r;
}

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/** Chebyshev-style half sums H_m(mu) = (lambda^m + lambda^{-m})/2 with
 *  mu = lambda + 1/lambda, as polynomials in mu. */
std::vector<RatPoly> half_sums(int max_m)
{
    std::vector<RatPoly> h(max_m + 1);
    h[0] = {Rat(1)};
    if (max_m >= 1) h[1] = {Rat(0), Rat(1, 2)};
    for (int m = 2; m <= max_m; ++m) {
        RatPoly t = mul({Rat(0), Rat(1)}, h[m - 1]);  // mu * H_{m-1}
        h[m] = add(t, scale(h[m - 2], Rat(-1)));
    }
    return h;
}

/** Substitute mu = 2 + 2t into a polynomial in mu (Horner). */
RatPoly substitute_mu(const RatPoly& in_mu)
{
    const RatPoly lin{Rat(2), Rat(2)};
    RatPoly r{Rat(0)};
    for (auto it = in_mu.rbegin(); it != in_mu.rend(); ++it) {
        r = mul(r, lin);
        r[0] += *it;
    }
    return r;
}

RatPoly build_jpoly(int a)
{
    if (a == 0 || a == 1) return {Rat(1)};
    if (a < 0) throw std::invalid_argument("jpoly_rational: a must be >= 0");
    const BigInt denom = (BigInt(1) << (a - 1)) * factorial(a - 1);
    auto h = half_sums(a - 1);
    RatPoly j_mu{Rat(0)};
    for (int i = 0; i <= a - 1; ++i) {
        const BigInt num =
            binomial(a - 1, i) * double_factorial(2 * i - 1) *
            double_factorial(2 * a - 2 * i - 3);
        const int m = std::abs(2 * i + 1 - a);
        j_mu = add(j_mu, scale(h[m], Rat(num, denom)));
    }
    RatPoly j = substitute_mu(j_mu);
    trim(j);
    return j;
}

RatPoly build_chi_power(int n)
{
    if (n < 2)
        throw std::invalid_argument("chi_power_rational: order must be >= 2");
    RatPoly r{Rat(0)};
    for (int i = 0; i <= n; ++i) {
        Rat c(binomial(n, i) * ((n - i) % 2 == 0 ? 1 : -1));
        r = add(r, scale(jpoly_rational(i), c));
    }
    trim(r);
    return r;
}

std::mutex cache_mutex;

}  // namespace

const RatPoly& jpoly_rational(int a)
{
    static std::map<int, RatPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, build_jpoly(a)).first;
    return it->second;
}

const RatPoly& chi_power_rational(int n)
{
    static std::map<int, RatPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    RatPoly built = build_chi_power(n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, std::move(built)).first->second;
}

}  // namespace detail
}  // namespace cfdiv
