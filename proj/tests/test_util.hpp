#ifndef FACEKIT_TEST_UTIL_HPP
#define FACEKIT_TEST_UTIL_HPP

#include "facekit/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace facekit::testing {

inline RatVec rv(std::initializer_list<const char*> coords)
{
  RatVec v;
  for (const char* c : coords)
    v.push_back(parse_rat(c));
  return v;
}

inline RatVec iv(std::initializer_list<long> coords)
{
  RatVec v;
  for (long c : coords)
    v.push_back(Rat(c));
  return v;
}

inline std::vector<RatVec> unit_square()
{
  return {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})};
}

// Small deterministic rational generator for oracle tests.
class RatGen {
 public:
  explicit RatGen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi)
  {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat rational(long num_bound, long den_bound)
  {
    long den = integer(1, den_bound);
    long num = integer(-num_bound * den, num_bound * den);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  RatVec vec(std::size_t dim, long num_bound, long den_bound)
  {
    RatVec v(dim);
    for (auto& q : v)
      q = rational(num_bound, den_bound);
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace facekit::testing

#endif
