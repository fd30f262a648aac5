#ifndef FACEKIT_DDMETHOD_HPP
#define FACEKIT_DDMETHOD_HPP

#include "facekit/rational.hpp"

#include <cstddef>
#include <vector>

namespace facekit::dd {

// Generators of the cone {y in Q^n : a . y >= 0 for every a in rows}:
// cone = span(lineality) + cone(rays). Rays are primitive integer vectors.
struct ConeGenerators {
  std::vector<RatVec> lineality;
  std::vector<RatVec> rays;
};

ConeGenerators generators(const std::vector<RatVec>& rows, std::size_t n);

}  // namespace facekit::dd

#endif
