#include "doctest.h"

#include "facekit/cone.hpp"
#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"
#include "facekit/polytope.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

using namespace facekit;
using facekit::testing::iv;
using facekit::testing::RatGen;
using facekit::testing::rv;
using facekit::testing::unit_square;

namespace {

VPolytope square() { return VPolytope(2, unit_square()); }
VPolytope triangle() { return VPolytope(2, {iv({0, 0}), iv({1, 0}), iv({0, 1})}); }

FaceId face_of(const VPolytope& P, std::vector<RatVec> pts)
{
  FaceId f;
  for (const RatVec& p : pts) {
    auto it = std::find(P.verts().begin(), P.verts().end(), p);
    REQUIRE(it != P.verts().end());
    f.vertex_indices.push_back(static_cast<std::size_t>(it - P.verts().begin()));
  }
  std::sort(f.vertex_indices.begin(), f.vertex_indices.end());
  return f;
}

VPolytope random_polytope(RatGen& g, std::size_t dim, std::size_t count)
{
  for (;;) {
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < count; ++i)
      pts.push_back(g.vec(dim, 2, 4));
    VPolytope P(dim, pts);
    if (P.size() >= 2)
      return P;
  }
}

RatVec random_point(RatGen& g, const VPolytope& P)
{
  // sparse convex combination so boundary points are common
  RatVec x = zeros(P.dim());
  std::vector<Rat> w(P.size(), Rat(0));
  Rat total = 0;
  for (auto& q : w) {
    if (g.integer(0, 2) == 0)
      continue;
    q = g.integer(1, 5);
    total += q;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (std::size_t j = 0; j < P.size(); ++j)
    x = x + (w[j] / total) * P.verts()[j];
  return x;
}

// Membership recomputed from the facet description.
bool inside_facets(const HRep& h, const RatVec& x)
{
  for (std::size_t i = 0; i < h.facet_normals.size(); ++i)
    if (dot(h.facet_normals[i], x) > h.facet_offsets[i])
      return false;
  for (std::size_t i = 0; i < h.eq_normals.size(); ++i)
    if (dot(h.eq_normals[i], x) != h.eq_offsets[i])
      return false;
  return true;
}

}  // namespace

TEST_CASE("canonical form")
{
  VPolytope P(2, {iv({1, 1}), iv({0, 0}), rv({"1/2", "1/2"}), iv({1, 0}), iv({0, 1}), iv({0, 0})});
  CHECK(P.size() == 4);
  CHECK(P.verts().front() == iv({0, 0}));
  CHECK(P.verts().back() == iv({1, 1}));
  CHECK(P == square());
  CHECK_THROWS_AS(VPolytope(2, {}), InputError);
  CHECK_THROWS_AS(VPolytope(2, {iv({1})}), InputError);
}

TEST_CASE("contains")
{
  CHECK(contains(square(), rv({"1/2", "1/2"})));
  CHECK_FALSE(contains(square(), iv({2, 0})));
  CHECK(contains(triangle(), rv({"1/3", "1/3"})));
  CHECK_THROWS_AS(contains(square(), iv({1})), InputError);
}

TEST_CASE("minimal_face examples")
{
  VPolytope S = square();
  CHECK(minimal_face(S, rv({"1/2", "0"})) == face_of(S, {iv({0, 0}), iv({1, 0})}));
  CHECK(minimal_face(S, iv({0, 0})) == face_of(S, {iv({0, 0})}));
  CHECK(minimal_face(S, rv({"1/2", "1/2"})).size() == 4);
  CHECK_THROWS_AS(minimal_face(S, iv({3, 3})), PreconditionError);

  CHECK(minimal_face_oracle(S, rv({"1/2", "0"})) == face_of(S, {iv({0, 0}), iv({1, 0})}));
  CHECK(minimal_face_oracle(triangle(), iv({0, 0})) == face_of(triangle(), {iv({0, 0})}));
  CHECK_THROWS_AS(minimal_face_oracle(S, iv({3, 3})), PreconditionError);
}

TEST_CASE("minimal_face agrees with the segment oracle on random instances")
{
  RatGen g(2024);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t dim = static_cast<std::size_t>(g.integer(2, 4));
    VPolytope P = random_polytope(g, dim, static_cast<std::size_t>(g.integer(3, 8)));
    RatVec x = random_point(g, P);
    CHECK(minimal_face(P, x) == minimal_face_oracle(P, x));
  }
}

TEST_CASE("interiors")
{
  VPolytope S = square();
  CHECK(interiors(S, rv({"1/2", "1/2"})) == InteriorVerdict{true, true, true, true});
  CHECK(interiors(S, rv({"1/2", "0"})) == InteriorVerdict{false, false, false, false});
  VPolytope seg(2, {iv({0, 0}), iv({1, 0})});
  CHECK(interiors(seg, rv({"1/2", "0"})) == InteriorVerdict{true, true, true, true});
  VPolytope point(3, {iv({1, 2, 3})});
  CHECK(interiors(point, iv({1, 2, 3})) == InteriorVerdict{true, true, true, true});

  RatGen g(7);
  for (int trial = 0; trial < 60; ++trial) {
    VPolytope P = random_polytope(g, static_cast<std::size_t>(g.integer(2, 3)), 6);
    RatVec x = random_point(g, P);
    InteriorVerdict v = interiors(P, x);
    CHECK(v.ri == v.icr);
    CHECK(v.icr == v.fri);
    CHECK(v.fri == v.qri);
  }
}

TEST_CASE("is_face")
{
  VPolytope S = square();
  CHECK(is_face(S, face_of(S, {iv({0, 0}), iv({1, 0})})));
  CHECK_FALSE(is_face(S, face_of(S, {iv({0, 0}), iv({1, 1})})));
  CHECK(is_face(S, FaceId{{0, 1, 2, 3}}));
  CHECK(is_face(S, FaceId{}));
  CHECK_THROWS_AS(is_face(S, FaceId{{7}}), InputError);
}

TEST_CASE("enumerate_faces")
{
  CHECK(enumerate_faces(square()).size() == 10);
  CHECK(enumerate_faces(triangle()).size() == 8);
  // cube: 1 + 8 + 12 + 6 + 1
  std::vector<RatVec> cube;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        cube.push_back(iv({a, b, c}));
  CHECK(enumerate_faces(VPolytope(3, cube)).size() == 28);

  std::vector<FaceId> faces = enumerate_faces(square());
  for (std::size_t k = 1; k < faces.size(); ++k)
    CHECK(face_order(faces[k - 1], faces[k]) < 0);

  std::vector<RatVec> parabola;
  for (long i = 0; i < 13; ++i)
    parabola.push_back(iv({i, i * i}));
  VPolytope big(2, parabola);
  CHECK(big.size() == 13);
  CHECK_THROWS_AS(enumerate_faces(big), ResourceError);
  CHECK(enumerate_faces(big, 13).size() == 1 + 13 + 13 + 1);
}

TEST_CASE("enumeration bound from the environment")
{
  ::setenv("FACEKIT_ENUM_BOUND", "3", 1);
  CHECK(enum_bound() == 3);
  CHECK_THROWS_AS(enumerate_faces(square()), ResourceError);
  ::setenv("FACEKIT_ENUM_BOUND", "junk", 1);
  CHECK(enum_bound() == 12);
  ::unsetenv("FACEKIT_ENUM_BOUND");
  CHECK(enum_bound() == 12);
}

TEST_CASE("face lattice is closed under intersection")
{
  RatGen g(11);
  for (int trial = 0; trial < 6; ++trial) {
    VPolytope P = random_polytope(g, 3, 6);
    std::vector<FaceId> faces = enumerate_faces(P);
    auto has = [&](const FaceId& f) { return std::find(faces.begin(), faces.end(), f) != faces.end(); };
    for (const FaceId& a : faces)
      for (const FaceId& b : faces) {
        FaceId c;
        std::set_intersection(a.vertex_indices.begin(), a.vertex_indices.end(), b.vertex_indices.begin(),
                              b.vertex_indices.end(), std::back_inserter(c.vertex_indices));
        CHECK(has(c));
      }
    // Euler relation for 3-polytopes: f0 - f1 + f2 = 2 when full dimensional.
    if (face_dimension(P, faces.back()) == 3) {
      long f[3] = {0, 0, 0};
      for (const FaceId& face : faces) {
        int d = face_dimension(P, face);
        if (d >= 0 && d < 3)
          ++f[d];
      }
      CHECK(f[0] - f[1] + f[2] == 2);
    }
  }
}

TEST_CASE("decompose")
{
  VPolytope S = square();
  auto parts = decompose(S, {rv({"1/2", "1/2"}), rv({"1/2", "0"}), iv({0, 0})});
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].face.size() == 4);
  CHECK(parts[1].face == face_of(S, {iv({0, 0}), iv({1, 0})}));
  CHECK(parts[2].face == face_of(S, {iv({0, 0})}));
  CHECK(parts[0].faces_checked == 8);
  CHECK_THROWS_AS(decompose(S, {iv({5, 5})}), PreconditionError);

  RatGen g(5);
  VPolytope P = random_polytope(g, 3, 7);
  std::vector<RatVec> samples;
  for (int k = 0; k < 40; ++k)
    samples.push_back(random_point(g, P));
  for (const RatVec& v : P.verts())
    samples.push_back(v);
  auto out = decompose(P, samples);
  std::vector<FaceId> faces = enumerate_faces(P);
  for (const Assignment& a : out) {
    // recount with interiors on each face polytope
    int hits = 0;
    for (const FaceId& f : faces) {
      if (f.empty())
        continue;
      VPolytope F = face_polytope(P, f);
      if (contains(F, a.point) && interiors(F, a.point).ri) {
        ++hits;
        CHECK(f == a.face);
      }
    }
    CHECK(hits == 1);
  }
  for (std::size_t j = 0; j < P.size(); ++j)
    CHECK(out[40 + j].face == FaceId{{j}});
}

TEST_CASE("notinfri_witness")
{
  VPolytope S = square();
  CHECK_FALSE(notinfri_witness(S, rv({"1/2", "1/2"})));
  auto w = notinfri_witness(S, rv({"1/2", "0"}));
  REQUIRE(w);
  CHECK((w->y == iv({0, 1}) || w->y == iv({1, 1})));
  CHECK(w->r == Rat(1, 2));
  CHECK(w->grid_points > 0);
  CHECK(verify_notinfri_witness(S, rv({"1/2", "0"}), *w));
  // a radius covering the face breaks the grid check
  NotInFriWitness bad{w->y, Rat(1), 0};
  CHECK_FALSE(verify_notinfri_witness(S, rv({"1/2", "0"}), bad));
  VPolytope seg(2, {iv({0, 0}), iv({1, 0})});
  CHECK_FALSE(notinfri_witness(seg, rv({"1/2", "0"})));

  RatGen g(31);
  for (int trial = 0; trial < 30; ++trial) {
    VPolytope P = random_polytope(g, static_cast<std::size_t>(g.integer(2, 3)), 5);
    RatVec x = random_point(g, P);
    auto wit = notinfri_witness(P, x);
    CHECK(wit.has_value() == !interiors(P, x).fri);
    if (wit)
      CHECK(verify_notinfri_witness(P, x, *wit));
  }
}

TEST_CASE("set calculus")
{
  VPolytope seg(1, {iv({0}), iv({1})});
  CHECK(product(seg, seg) == square());
  CHECK(msum(square(), square()) == VPolytope(2, {iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({2, 2})}));
  CHECK(image(LinMap({iv({1, 0})}), square()) == seg);
  CHECK(translate(square(), iv({1, 2})) == VPolytope(2, {iv({1, 2}), iv({2, 2}), iv({1, 3}), iv({2, 3})}));
  CHECK_THROWS_AS(msum(seg, square()), InputError);
  CHECK_THROWS_AS(image(LinMap({iv({1, 0, 0})}), square()), InputError);
  CHECK_THROWS_AS(translate(square(), iv({1})), InputError);
}

TEST_CASE("facets of simple shapes")
{
  HRep h = facets(square());
  CHECK(h.facet_normals.size() == 4);
  CHECK(h.eq_normals.empty());
  HRep seg = facets(VPolytope(2, {iv({0, 0}), iv({1, 1})}));
  CHECK(seg.facet_normals.size() == 2);
  CHECK(seg.eq_normals.size() == 1);
  HRep pt = facets(VPolytope(3, {iv({1, 2, 3})}));
  CHECK(pt.facet_normals.empty());
  CHECK(pt.eq_normals.size() == 3);
}

TEST_CASE("intersect")
{
  VPolytope S = square();
  auto r = intersect(S, translate(S, rv({"1/2", "0"})));
  REQUIRE(r);
  CHECK(*r == VPolytope(2, {rv({"1/2", "0"}), iv({1, 0}), rv({"1/2", "1"}), iv({1, 1})}));
  CHECK_FALSE(intersect(S, translate(S, iv({3, 0}))));
  auto touch = intersect(S, translate(S, iv({1, 1})));
  REQUIRE(touch);
  CHECK(touch->verts() == std::vector<RatVec>{iv({1, 1})});
  VPolytope big(5, {iv({0, 0, 0, 0, 0}), iv({1, 0, 0, 0, 0})});
  CHECK_THROWS_AS(intersect(big, big), ResourceError);

  RatGen g(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = static_cast<std::size_t>(g.integer(1, 3));
    VPolytope P = random_polytope(g, dim, static_cast<std::size_t>(g.integer(2, 6)));
    VPolytope Q = random_polytope(g, dim, static_cast<std::size_t>(g.integer(2, 6)));
    auto I = intersect(P, Q);
    HRep hp = facets(P), hq = facets(Q);
    // facet descriptions reproduce membership
    for (int k = 0; k < 5; ++k) {
      RatVec x = g.vec(dim, 2, 4);
      CHECK(inside_facets(hp, x) == contains(P, x));
    }
    if (I) {
      for (const RatVec& v : I->verts()) {
        CHECK(contains(P, v));
        CHECK(contains(Q, v));
      }
    }
    for (const VPolytope* S2 : {&P, &Q})
      for (const RatVec& v : S2->verts())
        if (contains(P, v) && contains(Q, v)) {
          REQUIRE(I);
          CHECK(contains(*I, v));
        }
    for (int k = 0; k < 6; ++k) {
      RatVec x = random_point(g, P);
      if (contains(Q, x)) {
        REQUIRE(I);
        CHECK(contains(*I, x));
      }
    }
  }
}

TEST_CASE("polytope text format")
{
  VPolytope P = parse_polytope("# square\ndim 2\n0 0\n1 0 # corner\n\n0 1\n1/1 2/2\n");
  CHECK(P == square());
  CHECK(parse_polytope(format_polytope(P)) == P);
  auto line_of = [](const char* text) {
    try {
      parse_polytope(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("dim 2\n0 0\n1/0 1\n") == 3);
  CHECK(line_of("dim 2\n0 0 0\n") == 2);
  CHECK(line_of("# c\nvertices 2\n") == 2);
  CHECK(line_of("dim 0\n") == 1);
  CHECK(line_of("dim 2\n") != 999);
  CHECK(parse_point(" 1/2   0 ", 2) == rv({"1/2", "0"}));
  CHECK_THROWS_AS(parse_point("1", 2), ParseError);
}
