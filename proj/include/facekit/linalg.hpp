#ifndef FACEKIT_LINALG_HPP
#define FACEKIT_LINALG_HPP

#include "facekit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace facekit::linalg {

// Exact Gaussian elimination helpers. Every routine takes vectors of equal
// dimension `dim`; an empty list has rank 0.

std::size_t rank(const std::vector<RatVec>& vectors, std::size_t dim);

/// Greedy maximal linearly independent subsequence, in input order.
std::vector<RatVec> independent_subset(const std::vector<RatVec>& vectors, std::size_t dim);

/// Reduced row echelon basis of span(vectors).
std::vector<RatVec> span_basis(const std::vector<RatVec>& vectors, std::size_t dim);

bool in_span(const std::vector<RatVec>& basis, const RatVec& v);

/// Basis of the orthogonal complement {y : <b, y> = 0 for all b}.
std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vectors, std::size_t dim);

/// Solves M y = rhs for square M (rows given in `rows`); empty when singular.
std::optional<RatVec> solve_square(const std::vector<RatVec>& rows, const RatVec& rhs);

}  // namespace facekit::linalg

#endif
