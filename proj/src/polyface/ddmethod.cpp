#include "ddmethod.hpp"

#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"

#include <set>

namespace facekit::dd {

namespace {

struct Ray {
  RatVec v;
  std::vector<bool> zero;  // zero[i]: row i processed so far is tight
};

void add_unique(std::vector<Ray>& out, std::set<RatVec, LexLess>& seen, Ray r)
{
  r.v = primitive(r.v);
  if (is_zero(r.v) || !seen.insert(r.v).second)
    return;
  out.push_back(std::move(r));
}

}  // namespace

ConeGenerators generators(const std::vector<RatVec>& rows, std::size_t n)
{
  for (const RatVec& a : rows)
    if (a.size() != n)
      throw InputError("constraint row of wrong dimension in double description");

  std::vector<RatVec> lin;
  for (std::size_t i = 0; i < n; ++i)
    lin.push_back(unit_vector(n, i));
  std::vector<Ray> rays;
  std::vector<std::size_t> processed;

  for (std::size_t row = 0; row < rows.size(); ++row) {
    const RatVec& a = rows[row];
    if (is_zero(a))
      continue;

    auto pivot = lin.end();
    for (auto it = lin.begin(); it != lin.end(); ++it)
      if (sgn(dot(a, *it)) != 0) {
        pivot = it;
        break;
      }

    if (pivot != lin.end()) {
      // The hyperplane cuts the lineality space: one lineality direction turns
      // into a ray, everything else is projected onto a . y = 0.
      RatVec l = *pivot;
      if (sgn(dot(a, l)) < 0)
        l = -l;
      Rat al = dot(a, l);
      std::vector<RatVec> next_lin;
      for (auto it = lin.begin(); it != lin.end(); ++it) {
        if (it == pivot)
          continue;
        next_lin.push_back(*it - (dot(a, *it) / al) * l);
      }
      lin = std::move(next_lin);
      std::vector<Ray> next;
      std::set<RatVec, LexLess> seen;
      for (Ray& r : rays) {
        r.v = r.v - (dot(a, r.v) / al) * l;
        r.zero.push_back(true);
        add_unique(next, seen, std::move(r));
      }
      Ray lr{l, std::vector<bool>(processed.size(), true)};
      lr.zero.push_back(false);
      add_unique(next, seen, std::move(lr));
      rays = std::move(next);
      processed.push_back(row);
      continue;
    }

    std::vector<Rat> val(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k)
      val[k] = dot(a, rays[k].v);

    // Effective dimension of the pointed part after adding this row.
    const std::size_t eff = n - lin.size();
    std::vector<Ray> next;
    std::set<RatVec, LexLess> seen;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (sgn(val[k]) >= 0) {
        Ray r = rays[k];
        r.zero.push_back(sgn(val[k]) == 0);
        add_unique(next, seen, std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sgn(val[p]) <= 0)
        continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (sgn(val[q]) >= 0)
          continue;
        std::vector<bool> common(processed.size());
        std::vector<RatVec> tight;
        for (std::size_t i = 0; i < processed.size(); ++i) {
          common[i] = rays[p].zero[i] && rays[q].zero[i];
          if (common[i])
            tight.push_back(rows[processed[i]]);
        }
        if (eff >= 2 && linalg::rank(tight, n) < eff - 2)
          continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q)
            continue;
          bool covers = true;
          for (std::size_t i = 0; i < processed.size(); ++i)
            if (common[i] && !rays[k].zero[i]) {
              covers = false;
              break;
            }
          if (covers)
            adjacent = false;
        }
        if (!adjacent)
          continue;
        Ray r{val[p] * rays[q].v - val[q] * rays[p].v, common};
        r.zero.push_back(true);
        add_unique(next, seen, std::move(r));
      }
    }
    rays = std::move(next);
    processed.push_back(row);
  }

  ConeGenerators out;
  out.lineality = linalg::span_basis(lin, n);
  for (Ray& r : rays)
    out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace facekit::dd
