#ifndef FACEKIT_CONE_HPP
#define FACEKIT_CONE_HPP

#include "facekit/rational.hpp"

#include <cstddef>
#include <vector>

namespace facekit {

// Finitely generated cone: all nonnegative combinations of the generators.
// Construction drops zero vectors and exact duplicates.
class ConeGen {
 public:
  ConeGen(std::size_t dim, std::vector<RatVec> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& generators() const { return generators_; }

 private:
  std::size_t dim_;
  std::vector<RatVec> generators_;
};

// Basis of lin K = K ∩ (-K). May be empty.
struct LinealityBasis {
  std::size_t dim = 0;
  std::vector<RatVec> basis;
};

struct AffineHull {
  RatVec base;
  std::vector<RatVec> basis;  // direction space; size is the affine dimension
};

bool in_cone(const ConeGen& cone, const RatVec& d);

/// lin K is spanned by the generators g with -g in K: it is the smallest
/// face of K, and a face of a finitely generated cone is generated by the
/// generators it contains.
LinealityBasis cone_lineality(const ConeGen& cone);

/// base is points[0]; basis is a maximal independent subset of the
/// differences points[i] - points[0]. Throws InputError on empty input.
AffineHull affine_hull(const std::vector<RatVec>& points);

}  // namespace facekit

#endif
