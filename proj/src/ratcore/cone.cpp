#include "facekit/cone.hpp"

#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"
#include "facekit/lp.hpp"

#include <set>

namespace facekit {

ConeGen::ConeGen(std::size_t dim, std::vector<RatVec> generators) : dim_(dim)
{
  if (dim == 0)
    throw InputError("cone dimension must be positive");
  std::set<RatVec, LexLess> seen;
  for (RatVec& g : generators) {
    if (g.size() != dim)
      throw InputError("cone generator has dimension " + std::to_string(g.size()) + ", expected " +
                       std::to_string(dim));
    if (is_zero(g) || !seen.insert(g).second)
      continue;
    generators_.push_back(std::move(g));
  }
}

bool in_cone(const ConeGen& cone, const RatVec& d)
{
  if (d.size() != cone.dim())
    throw InputError("vector dimension does not match the cone");
  if (is_zero(d))
    return true;
  const auto& gens = cone.generators();
  if (gens.empty())
    return false;
  // d = sum_j mu_j g_j, mu >= 0
  lp::Problem p;
  p.num_vars = gens.size();
  p.nonneg.assign(gens.size(), true);
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    Constraint row{zeros(gens.size()), d[i], Relation::Equal};
    for (std::size_t j = 0; j < gens.size(); ++j)
      row.coeffs[j] = gens[j][i];
    p.rows.push_back(std::move(row));
  }
  return lp::solve(p).status != lp::Status::Infeasible;
}

LinealityBasis cone_lineality(const ConeGen& cone)
{
  std::vector<RatVec> symmetric;
  for (const RatVec& g : cone.generators())
    if (in_cone(cone, -g))
      symmetric.push_back(g);
  return {cone.dim(), linalg::independent_subset(symmetric, cone.dim())};
}

AffineHull affine_hull(const std::vector<RatVec>& points)
{
  if (points.empty())
    throw InputError("affine hull of an empty point list");
  const std::size_t dim = points.front().size();
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != dim)
      throw InputError("points of unequal dimension");
    diffs.push_back(points[i] - points[0]);
  }
  return {points.front(), linalg::independent_subset(diffs, dim)};
}

}  // namespace facekit
