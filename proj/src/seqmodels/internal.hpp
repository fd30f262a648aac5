#ifndef FACEKIT_SEQMODELS_INTERNAL_HPP
#define FACEKIT_SEQMODELS_INTERNAL_HPP

#include "facekit/seqmodels.hpp"

namespace facekit::detail {

// Certificate that some y >= 0 with ||y||_d = 1 is missed by F_min(x, M) for
// any M that contains y and lies in the nonnegative orthant: y decays more
// slowly than x, so x = a y + (1 - a) z forces a negative entry of z.
Certificate majorant_exclusion(const SeqPoint& x, int d);

const SeqPoint& harmonic_v();

}  // namespace facekit::detail

#endif
