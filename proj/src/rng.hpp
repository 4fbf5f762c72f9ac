#ifndef CFDIV_SRC_RNG_HPP_
#define CFDIV_SRC_RNG_HPP_

#include <random>

namespace cfdiv {
namespace detail {

/** 53-bit uniform in (0,1), independent of libstdc++ distribution details. */
inline double uniform01(std::mt19937_64& rng)
{
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace detail
}  // namespace cfdiv

#endif  // CFDIV_SRC_RNG_HPP_
