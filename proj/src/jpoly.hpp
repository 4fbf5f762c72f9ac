#ifndef CFDIV_SRC_JPOLY_HPP_
#define CFDIV_SRC_JPOLY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cfdiv {
namespace detail {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rat>;  // ascending coefficients

/** Exact coefficients of J_a(t) = int p^a q^{1-a} as a polynomial in chi. */
const RatPoly& jpoly_rational(int a);

/** Exact coefficients of the order-n power chi divergence in chi. */
const RatPoly& chi_power_rational(int n);

}  // namespace detail
}  // namespace cfdiv

#endif  // CFDIV_SRC_JPOLY_HPP_
