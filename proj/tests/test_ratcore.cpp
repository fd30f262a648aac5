#include "doctest.h"

#include "facekit/cone.hpp"
#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"
#include "facekit/lp.hpp"
#include "test_util.hpp"

#include <functional>

using namespace facekit;
using facekit::testing::iv;
using facekit::testing::rv;

namespace {

Constraint le(RatVec a, Rat b) { return {std::move(a), std::move(b), Relation::LessEq}; }
Constraint ge(RatVec a, Rat b) { return {std::move(a), std::move(b), Relation::GreaterEq}; }

// Independent oracle: a bounded polyhedron is nonempty iff one of its basic
// solutions (dim tight, linearly independent constraints) is feasible.
bool oracle_feasible(const std::vector<Constraint>& cs, std::size_t dim)
{
  std::vector<std::size_t> pick(dim);
  const std::size_t m = cs.size();
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == dim) {
      std::vector<RatVec> rows;
      RatVec rhs;
      for (std::size_t k : pick) {
        rows.push_back(cs[k].coeffs);
        rhs.push_back(cs[k].rhs);
      }
      auto x = linalg::solve_square(rows, rhs);
      return x && satisfies(cs, *x);
    }
    for (std::size_t k = from; k < m; ++k) {
      pick[depth] = k;
      if (rec(depth + 1, k + 1))
        return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

TEST_CASE("rationals parse canonically")
{
  CHECK(parse_rat("2/4") == Rat(1, 2));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(to_string(parse_rat("+12/8")) == "3/2");
}

TEST_CASE("malformed rationals are rejected")
{
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("a"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1/"), ParseError);
  CHECK_THROWS_AS(parse_rat("6/-1"), ParseError);
}

TEST_CASE("lp_feasible on boxes")
{
  SUBCASE("unit interval is nonempty")
  {
    std::vector<Constraint> cs{ge(iv({1}), 0), le(iv({1}), 1)};
    LpOutcome out = lp_feasible(cs, 1);
    REQUIRE(out.status == LpStatus::Feasible);
    REQUIRE(out.witness);
    CHECK(satisfies(cs, *out.witness));
  }
  SUBCASE("empty interval has a certificate")
  {
    std::vector<Constraint> cs{ge(iv({1}), 1), le(iv({1}), 0)};
    LpOutcome out = lp_feasible(cs, 1);
    REQUIRE(out.status == LpStatus::Infeasible);
    REQUIRE(out.certificate);
    CHECK(certifies_infeasible(cs, *out.certificate));
  }
  SUBCASE("dimension mismatch")
  {
    std::vector<Constraint> cs{ge(iv({1, 2}), 1)};
    CHECK_THROWS_AS(lp_feasible(cs, 1), InputError);
  }
}

TEST_CASE("lp_feasible agrees with basic-solution enumeration")
{
  facekit::testing::RatGen gen(12345);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < 3; ++i) {
      cs.push_back(le(unit_vector(3, i), 3));
      cs.push_back(ge(unit_vector(3, i), -3));
    }
    int extra = static_cast<int>(gen.integer(1, 4));
    for (int k = 0; k < extra; ++k) {
      RatVec a = gen.vec(3, 2, 3);
      Rat b = gen.rational(2, 4);
      Relation rel = gen.integer(0, 2) == 0 ? Relation::Equal
                                             : (gen.integer(0, 1) ? Relation::LessEq : Relation::GreaterEq);
      cs.push_back({a, b, rel});
    }
    // equality rows: the oracle needs them among the tight set; split in two
    std::vector<Constraint> split;
    for (const auto& c : cs) {
      if (c.rel == Relation::Equal) {
        split.push_back(le(c.coeffs, c.rhs));
        split.push_back(ge(c.coeffs, c.rhs));
      } else {
        split.push_back(c);
      }
    }
    LpOutcome out = lp_feasible(cs, 3);
    bool expect = oracle_feasible(split, 3);
    CHECK((out.status == LpStatus::Feasible) == expect);
    if (out.status == LpStatus::Feasible) {
      ++feasible;
      CHECK(satisfies(cs, *out.witness));
    } else {
      ++infeasible;
      CHECK(certifies_infeasible(cs, *out.certificate));
    }
  }
  CHECK(feasible > 10);
  CHECK(infeasible > 10);
}

TEST_CASE("strict feasibility via the shared slack")
{
  lp::Problem p;
  p.num_vars = 1;
  p.rows = {le(iv({1}), 0), ge(iv({1}), 0)};
  CHECK_FALSE(lp::strictly_feasible(p, {true, false}));
  CHECK(lp::strictly_feasible(p, {false, false}));
  p.rows = {le(iv({1}), 1), ge(iv({1}), 0)};
  auto x = lp::strictly_feasible(p, {true, true});
  REQUIRE(x);
  CHECK((*x)[0] > 0);
  CHECK((*x)[0] < 1);
}

TEST_CASE("in_cone")
{
  ConeGen orthant(2, {iv({1, 0}), iv({0, 1})});
  CHECK(in_cone(orthant, iv({2, 3})));
  CHECK_FALSE(in_cone(orthant, iv({-1, 0})));
  ConeGen line(2, {iv({1, 1}), iv({-1, -1})});
  CHECK(in_cone(line, iv({3, 3})));
  CHECK_FALSE(in_cone(line, iv({1, 0})));
  CHECK_THROWS_AS(in_cone(line, iv({1})), InputError);
}

TEST_CASE("cone construction drops zeros and duplicates")
{
  ConeGen k(2, {iv({0, 0}), iv({1, 0}), iv({1, 0})});
  CHECK(k.generators().size() == 1);
}

TEST_CASE("cone_lineality")
{
  auto span_dim = [](const ConeGen& k) { return cone_lineality(k).basis.size(); };
  CHECK(span_dim(ConeGen(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})})) == 1);
  CHECK(linalg::in_span(cone_lineality(ConeGen(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})})).basis,
                        iv({1, 0})));
  CHECK(span_dim(ConeGen(2, {iv({1, 0}), iv({0, 1})})) == 0);
  CHECK(span_dim(ConeGen(2, {iv({1, 1}), iv({-1, -1}), iv({1, -1}), iv({-1, 1})})) == 2);
}

TEST_CASE("lineality cross-checks on random cones")
{
  facekit::testing::RatGen gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t dim = static_cast<std::size_t>(gen.integer(1, 4));
    std::size_t count = static_cast<std::size_t>(gen.integer(1, 8));
    std::vector<RatVec> gens;
    for (std::size_t j = 0; j < count; ++j) {
      RatVec g = gen.vec(dim, 2, 2);
      gens.push_back(g);
      if (gen.integer(0, 3) == 0)
        gens.push_back(-g);  // plant symmetric pairs
    }
    ConeGen k(dim, gens);
    LinealityBasis lin = cone_lineality(k);

    // d in K and -d in K  <=>  d in span(lin)
    for (int probe = 0; probe < 4; ++probe) {
      RatVec d = gen.vec(dim, 2, 2);
      if (probe == 0 && !lin.basis.empty())
        d = lin.basis.front() + Rat(2) * lin.basis.back();
      bool both = in_cone(k, d) && in_cone(k, -d);
      CHECK(both == linalg::in_span(lin.basis, d));
    }

    // generator order does not change the subspace
    std::vector<RatVec> reversed(gens.rbegin(), gens.rend());
    LinealityBasis lin2 = cone_lineality(ConeGen(dim, reversed));
    CHECK(lin2.basis.size() == lin.basis.size());
    for (const RatVec& b : lin2.basis)
      CHECK(linalg::in_span(lin.basis, b));
    for (const RatVec& b : lin.basis)
      CHECK(linalg::in_span(lin2.basis, b));
  }
}

TEST_CASE("affine_hull")
{
  AffineHull seg = affine_hull({iv({0, 0}), iv({1, 0})});
  CHECK(seg.base == iv({0, 0}));
  REQUIRE(seg.basis.size() == 1);
  CHECK(seg.basis[0] == iv({1, 0}));
  CHECK(affine_hull({iv({0, 0})}).basis.empty());
  CHECK(affine_hull({iv({0, 0}), iv({1, 0}), iv({0, 1})}).basis.size() == 2);
  CHECK_THROWS_AS(affine_hull({}), InputError);

  facekit::testing::RatGen gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RatVec> pts;
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back(gen.vec(3, 1, 1));
    std::vector<RatVec> diffs;
    for (const auto& p : pts)
      diffs.push_back(p - pts[0]);
    CHECK(affine_hull(pts).basis.size() == linalg::rank(diffs, 3));
  }
}
