#include "doctest.h"

#include "facekit/errors.hpp"
#include "facekit/seqmodels.hpp"
#include "test_util.hpp"

#include <cmath>
#include <map>
#include <set>

using namespace facekit;
using facekit::testing::RatGen;

using K = ModelSet::Kind;

namespace {

SeqPoint P(const char* text) { return parse_seqpoint(text); }

// Partial sum of |x_i|^d straight from entry().
double brute_power_sum(const SeqPoint& x, int d, std::size_t n)
{
  double s = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    double v = std::fabs(x.entry(i).get_d());
    s += d == 1 ? v : v * v;
  }
  return s;
}

SeqPoint random_point(RatGen& g, bool allow_harmonic)
{
  std::map<std::size_t, Rat> head;
  const long nh = g.integer(0, 3);
  for (long j = 0; j < nh; ++j)
    head[static_cast<std::size_t>(g.integer(1, 6))] = g.rational(3, 6);
  SeqPoint x = SeqPoint::finite(head);
  const long nt = g.integer(0, 2);
  for (long j = 0; j < nt; ++j) {
    Rat r(g.integer(1, 8), 9);
    r.canonicalize();
    x = x + SeqPoint::geometric(g.rational(2, 5), r, static_cast<std::size_t>(g.integer(1, 4)));
  }
  if (allow_harmonic && g.integer(0, 2) == 0)
    x = x + SeqPoint::harmonic(g.rational(2, 3), static_cast<std::size_t>(g.integer(1, 3)));
  return x;
}

}  // namespace

TEST_CASE("seqpoint text round trip")
{
  CHECK(P("head 1=1/2,2=1/2") == SeqPoint::finite({{1, Rat(1, 2)}, {2, Rat(1, 2)}}));
  CHECK(P("head tail harmonic 1@1") == SeqPoint::harmonic(1));
  CHECK(P("head 1=3 tail geometric 1,1/2@2").entry(1) == 3);
  CHECK(P("head 1=3 tail geometric 1,1/2@2").entry(3) == Rat(1, 8));

  RatGen g(11);
  for (int t = 0; t < 300; ++t) {
    SeqPoint x = random_point(g, true);
    std::string s = format_seqpoint(x);
    CAPTURE(s);
    CHECK(parse_seqpoint(s) == x);
  }

  CHECK_THROWS_AS(P("head 1=1/0"), ParseError);
  CHECK_THROWS_AS(P("head 3=1 tail harmonic 1@2"), ParseError);
  CHECK_THROWS_AS(P("head tail geometric 1,1"), ParseError);
  CHECK_THROWS_AS(P("tail"), ParseError);
}

TEST_CASE("entries agree with the defining formula")
{
  SeqPoint x = P("head 2=1 tail harmonic 2@3 tail geometric 1,1/3@3");
  for (std::size_t i = 1; i <= 12; ++i) {
    Rat want = 0;
    if (i == 2)
      want = 1;
    if (i >= 3)
      want = pow(Rat(1, 3), i) + Rat(2) / Rat(static_cast<unsigned long>(i));
    CHECK(x.entry(i) == want);
  }
  std::vector<Rat> e = x.entries(12);
  for (std::size_t i = 1; i <= 12; ++i)
    CHECK(e[i - 1] == x.entry(i));
}

TEST_CASE("norm enclosures")
{
  NormBound a = norm_enclosure(P("head 1=1/2,2=1/2"), NormKind::L1);
  CHECK(a.exact);
  CHECK(a.lo == 1);
  NormBound b = norm_enclosure(SeqPoint::geometric(1, Rat(1, 2)), NormKind::L1);
  CHECK(b.exact);
  CHECK(b.lo == 1);
  CHECK(norm_enclosure(SeqPoint::harmonic(1), NormKind::L1).divergent);

  // ||(1/i)||_2^2 = pi^2 / 6
  const double pi2_6 = 1.6449340668482264;
  NormBound h = norm_enclosure(SeqPoint::harmonic(1), NormKind::L2);
  CHECK_FALSE(h.sq_exact);
  CHECK(h.sq_lo.get_d() <= pi2_6 + 1e-15);
  CHECK(h.sq_hi.get_d() >= pi2_6 - 1e-15);
  CHECK((h.sq_hi - h.sq_lo) <= enclosure_width());
  CHECK(h.lo.get_d() <= std::sqrt(pi2_6) + 1e-14);
  CHECK(h.hi.get_d() >= std::sqrt(pi2_6) - 1e-14);

  RatGen g(5);
  for (int t = 0; t < 60; ++t) {
    SeqPoint x = random_point(g, false);
    CAPTURE(format_seqpoint(x));
    NormBound n1 = norm_enclosure(x, NormKind::L1);
    NormBound n2 = norm_enclosure(x, NormKind::L2);
    REQUIRE(n2.sq_exact);
    // ratios are at most 8/9, so 600 terms leave less than 1e-25
    CHECK(n1.hi.get_d() >= brute_power_sum(x, 1, 600) - 1e-9);
    CHECK(std::fabs(n2.sq_lo.get_d() - brute_power_sum(x, 2, 600)) < 1e-9);
    CHECK(n1.lo <= n1.hi);
    CHECK(n2.lo <= n2.hi);
  }
}

TEST_CASE("inverse square tail bounds bracket the partial-sum remainder")
{
  for (std::size_t n : {1u, 2u, 7u, 50u}) {
    Rat lo, hi;
    inverse_square_tail(n, lo, hi);
    double head = 0;
    for (std::size_t i = 1; i < n; ++i)
      head += 1.0 / (double(i) * double(i));
    double rest = 1.6449340668482264 - head;
    CHECK(lo.get_d() <= rest + 1e-12);
    CHECK(hi.get_d() >= rest - 1e-12);
  }
}

TEST_CASE("membership examples")
{
  Verdict in = member(ModelSet::pos_ball2(), P("head 1=1/2"));
  CHECK(in.answer == Answer::In);
  CHECK(revalidate(in.cert));
  Verdict neg = member(ModelSet::pos_ball2(), P("head 1=-1/2"));
  CHECK(neg.answer == Answer::Out);
  CHECK(revalidate(neg.cert));
  Verdict h = member(ModelSet::l1_ball(), SeqPoint::harmonic(1));
  CHECK(h.answer == Answer::Out);
  CHECK(revalidate(h.cert));
  CHECK_THROWS_AS(fri_member(ModelSet::pos_ball2(), P("head 1=2")), PreconditionError);
}

TEST_CASE("interior characterizations")
{
  const SeqPoint g = SeqPoint::geometric(Rat(1, 2), Rat(1, 2));
  CHECK(fri_member(ModelSet::pos_ball2(), g).answer == Answer::In);
  CHECK(icr_member(ModelSet::pos_ball2(), g).answer == Answer::Out);
  CHECK(fri_member(ModelSet::pos_ball2(), P("head 1=1/2 tail geometric 1/4,1/2@3")).answer == Answer::Out);

  CHECK(fri_member(ModelSet::l1_ball(), P("head 1=1")).answer == Answer::Out);
  CHECK(qri_member(ModelSet::l1_ball(), P("head 1=1")).answer == Answer::Out);
  const SeqPoint unit_geo = SeqPoint::geometric(1, Rat(1, 2));
  CHECK(fri_member(ModelSet::l1_ball(), unit_geo).answer == Answer::Out);
  CHECK(qri_member(ModelSet::l1_ball(), unit_geo).answer == Answer::In);
  CHECK(fri_member(ModelSet::l1_ball(), g).answer == Answer::In);
}

TEST_CASE("minimal face classes")
{
  const SeqPoint unit = P("head 1=3/5,2=4/5");
  CHECK(minimal_face_class(ModelSet::pos_ball2(), unit).kind == FaceClass::Kind::Singleton);

  const SeqPoint x = SeqPoint::geometric(Rat(1, 2), Rat(1, 2));
  FaceClass f = minimal_face_class(ModelSet::pos_ball2(), x);
  Certificate why;
  CHECK(f.test_in_face(Rat(1, 2) * x, &why));
  CHECK(revalidate(why));

  const SeqPoint u = SeqPoint::harmonic(1);
  ModelSet cl = ModelSet::conv_l1_point(u);
  CHECK(minimal_face_class(cl, P("head 1=1/4")).kind == FaceClass::Kind::SubspaceL);
  CHECK(minimal_face_class(cl, u).kind == FaceClass::Kind::Singleton);
}

TEST_CASE("corpus verdicts and certificates")
{
  std::vector<CorpusCase> corpus = example_corpus();
  std::size_t pos_fri_in = 0, pos_zero = 0, pos_unit = 0;
  for (const CorpusCase& c : corpus) {
    CAPTURE(c.label);
    Verdict m = member(c.model, c.point);
    CHECK(m.answer == c.member);
    CHECK(revalidate(m.cert));
    if (m.answer != Answer::In)
      continue;
    std::optional<Answer> got[3] = {icr_member(c.model, c.point).answer, fri_member(c.model, c.point).answer,
                                    qri_member(c.model, c.point).answer};
    if (c.icr)
      CHECK(*got[0] == *c.icr);
    if (c.fri)
      CHECK(*got[1] == *c.fri);
    if (c.qri)
      CHECK(*got[2] == *c.qri);
    // sandwich on decisive answers
    if (*got[0] == Answer::In)
      CHECK(*got[1] == Answer::In);
    if (*got[1] == Answer::In)
      CHECK(*got[2] == Answer::In);
    if (c.model.kind == K::PosBall2) {
      if (c.fri == Answer::In)
        ++pos_fri_in;
      bool has_zero = false;
      for (std::size_t i = 1; i <= 40; ++i)
        has_zero = has_zero || sgn(c.point.entry(i)) == 0;
      if (has_zero) {
        ++pos_zero;
        CHECK(*got[1] == Answer::Out);
      }
      NormBound n = norm_enclosure(c.point, NormKind::L2);
      if (n.sq_exact && n.sq_lo == 1) {
        ++pos_unit;
        CHECK(*got[1] == Answer::Out);
      }
      CHECK(*got[0] == Answer::Out);
    }
  }
  CHECK(pos_fri_in + pos_zero + pos_unit >= 12);
  CHECK(pos_fri_in >= 1);
  CHECK(pos_zero >= 1);
  CHECK(pos_unit >= 1);
}

TEST_CASE("every certificate in every claim set revalidates")
{
  for (const std::string& name : claim_set_names()) {
    std::vector<Claim> claims = claims_for(name);
    CHECK_FALSE(claims.empty());
    for (const Claim& c : claims) {
      CAPTURE(name);
      CAPTURE(c.name);
      CHECK(c.pass);
      CHECK(revalidate(c.cert));
    }
  }
  CHECK_THROWS_AS(claims_for("no-such-set"), InputError);
}

TEST_CASE("tampered certificates fail revalidation")
{
  Verdict v = fri_member(ModelSet::pos_ball2(), SeqPoint::geometric(Rat(1, 2), Rat(1, 2)));
  REQUIRE(revalidate(v.cert));
  Certificate bad = v.cert;
  bool touched = false;
  for (Check& c : bad.checks)
    if (c.subject) {
      c.subject = *c.subject + SeqPoint::unit(1, -5);
      touched = true;
    }
  REQUIRE(touched);
  CHECK_FALSE(revalidate(bad));
  Certificate lit;
  lit.add(literal("1 < 0", 1, Rel::Lt, 0));
  CHECK_FALSE(revalidate(lit));
}

TEST_CASE("zalinescu report flags the discrepancy")
{
  bool flagged = false;
  for (const Claim& c : claims_for("zalinescu"))
    for (const std::string& n : c.notes)
      flagged = flagged || n.find("discrepancy") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("majorant examples")
{
  MajorantPlan plan;
  plan.delta = 1;
  plan.d = 1;
  plan.z = SeqPoint::geometric(1, Rat(1, 2));
  SeqPoint y = majorant_construct(SeqPoint(), plan);
  CHECK(y == plan.z);
  for (std::size_t k = 1; k <= plan.schedule.size(); ++k)
    CHECK(plan.schedule[k - 1] == k);

  const SeqPoint x = SeqPoint::geometric(1, Rat(1, 2));
  MajorantPlan p2 = auto_plan(x, 1, 1);
  SeqPoint y2 = majorant_construct(x, p2);
  auto i = majorant_verify(x, y2, Rat(1, 10), 10000);
  REQUIRE(i);
  CHECK(abs(x.entry(*i)) < Rat(1, 10) * y2.entry(*i));

  CHECK(majorant_verify(SeqPoint(), SeqPoint::unit(1), 1, 10) == std::optional<std::size_t>(1));
  CHECK_FALSE(majorant_verify(x, x, Rat(1, 2), 5000));
  MajorantPlan ph = auto_plan(SeqPoint::harmonic(1), 1, 1);
  CHECK_THROWS_AS(majorant_construct(SeqPoint::harmonic(1), ph), UnsupportedError);
}

TEST_CASE("majorant on seeded inputs")
{
  RatGen g(2024);
  for (int t = 0; t < 25; ++t) {
    SeqPoint x = random_point(g, false);
    CAPTURE(format_seqpoint(x));
    MajorantPlan plan = auto_plan(x, Rat(g.integer(1, 3)) / Rat(g.integer(1, 3)), 1);
    SeqPoint y = majorant_construct(x, plan);
    NormBound n = norm_enclosure(y, NormKind::L1);
    CHECK(n.exact);
    CHECK(n.lo == plan.delta);
    for (std::size_t k = 1; k < plan.schedule.size(); ++k)
      CHECK(plan.schedule[k] > plan.schedule[k - 1]);
    // y_{N(k)} = z_k on the recorded schedule, zero off it
    std::set<std::size_t> slots(plan.schedule.begin(), plan.schedule.end());
    for (std::size_t k = 1; k <= plan.schedule.size(); ++k)
      CHECK(y.entry(plan.schedule[k - 1]) == plan.z.entry(k));
    for (std::size_t i = 1; i < plan.schedule.back(); ++i)
      if (!slots.count(i))
        CHECK(sgn(y.entry(i)) == 0);
    for (const Rat& eps : {Rat(1), Rat(1, 10), Rat(1, 100)}) {
      auto i = majorant_verify(x, y, eps, 10000);
      REQUIRE(i);
      CHECK(abs(x.entry(*i)) < eps * y.entry(*i));
      for (std::size_t j = 1; j < *i; ++j)
        CHECK_FALSE(abs(x.entry(j)) < eps * y.entry(j));
    }
  }
}

TEST_CASE("nonemptiness witness")
{
  SeriesSpec one;
  one.terms = {P("head 1=1/3")};
  SeriesWitness w1 = nonemptiness_witness(ModelSet::pos_ball2(), one);
  CHECK(w1.xbar == one.terms[0]);
  CHECK(w1.verified);

  SeriesSpec basis;
  for (std::size_t i = 1; i <= 6; ++i)
    basis.terms.push_back(SeqPoint::unit(i, Rat(1, 2)));
  SeriesWitness w = nonemptiness_witness(ModelSet::pos_ball2(), basis);
  CHECK(w.verified);
  CHECK(revalidate(w.cert));
  for (std::size_t i = 1; i <= 6; ++i)
    CHECK(sgn(w.xbar.entry(i)) > 0);
  Rat total = 0;
  for (const Rat& l : w.weights)
    total += l;
  CHECK(total == 1);
  std::vector<Rat> ws = SeriesSpec::weights(4);
  CHECK(ws == std::vector<Rat>{Rat(1, 2), Rat(1, 4), Rat(1, 8), Rat(1, 8)});

  SeriesSpec outside;
  outside.terms = {P("head 1=2")};
  CHECK_THROWS_AS(nonemptiness_witness(ModelSet::pos_ball2(), outside), PreconditionError);
}

TEST_CASE("sigma hull partial sums")
{
  std::vector<Claim> claims = sigma_hull_demo(10);
  REQUIRE(claims.size() == 11);
  for (const Claim& c : claims)
    CHECK(c.pass);
  // x^3 rebuilt independently
  SeqPoint x3;
  for (unsigned long i = 1; i <= 3; ++i)
    x3.set_entry(i, Rat(1) / Rat((1ul << i) * i));
  CHECK(x3 == P("head 1=1/2,2=1/8,3=1/24"));
  CHECK_THROWS_AS(sigma_hull_demo(11), InputError);
}

TEST_CASE("truncations of PosBall2 points stay in the face of a fri point")
{
  const SeqPoint x = SeqPoint::geometric(Rat(1, 2), Rat(1, 2));
  FaceClass f = minimal_face_class(ModelSet::pos_ball2(), x);
  const SeqPoint y = P("head 1=1/3 tail geometric 1/2,2/3@2");
  REQUIRE(member(ModelSet::pos_ball2(), y).answer == Answer::In);
  Rat prev = -1;
  for (std::size_t n = 1; n <= 30; ++n) {
    SeqPoint yn = y.truncated(n);
    CHECK(f.test_in_face(yn));
    NormBound d = norm_enclosure(y - yn, NormKind::L2);
    REQUIRE(d.sq_exact);
    if (n > 1)
      CHECK(d.sq_lo < prev);
    prev = d.sq_lo;
  }
}

TEST_CASE("claim reports serialize")
{
  nlohmann::json j = to_json(claims_for("posball2"));
  REQUIRE(j.is_array());
  for (const auto& rec : j) {
    CHECK(rec.contains("claim"));
    CHECK(rec["verdict"] == "Pass");
    CHECK(rec["certificate"].contains("checks"));
  }
}
