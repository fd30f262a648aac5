// Acceptance run: one PASS/FAIL line per criterion. Optional argv[1] is the
// path of the CLI binary, used to repeat the determinism check end to end.
#include "facekit/facekit.h"

#include "facekit/polytope.hpp"
#include "facekit/proplab.hpp"
#include "facekit/seqmodels.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace facekit;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& why)
  {
    if (!cond && ok) {
      ok = false;
      detail << "[" << why << "] ";
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Outcome&)>& body)
{
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  failures += !o.ok;
  std::printf("%s %2d %s: %s(%.1f s)\n", o.ok ? "PASS" : "FAIL", n, title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

bool all_pass(const std::vector<Claim>& cs)
{
  for (const Claim& c : cs)
    if (!c.pass || !revalidate(c.cert))
      return false;
  return !cs.empty();
}

const Claim* find_claim(const std::vector<Claim>& cs, const std::string& prefix)
{
  for (const Claim& c : cs)
    if (c.name.rfind(prefix, 0) == 0)
      return &c;
  return nullptr;
}

bool mentions(const Certificate& c, const std::string& word)
{
  for (const std::string& f : c.facts)
    if (f.find(word) != std::string::npos)
      return true;
  for (const Check& k : c.checks)
    if (k.what.find(word) != std::string::npos)
      return true;
  return false;
}

// Finite head plus up to two positive-ratio geometric terms.
SeqPoint random_point(Rng& g)
{
  std::map<std::size_t, Rat> head;
  const long nh = g.integer(0, 3);
  for (long j = 0; j < nh; ++j)
    head[static_cast<std::size_t>(g.integer(1, 6))] = g.rational(3, 6);
  SeqPoint x = SeqPoint::finite(head);
  const long nt = g.integer(0, 2);
  for (long j = 0; j < nt; ++j)
    x = x + SeqPoint::geometric(g.rational(2, 5), Rat(g.integer(1, 8)) / 9, static_cast<std::size_t>(g.integer(1, 4)));
  return x;
}

std::string run_cli(const std::string& cli)
{
  const std::string cmd = "\"" + cli + "\" check --seed 7 --trials 10 --format json";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return {};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p))
    out.append(buf, n);
  const int rc = pclose(p);
  return rc == 0 ? out : std::string{};
}

}  // namespace

int main(int argc, char** argv)
{
  const std::uint64_t seed = 7;
  GenConfig cfg;
  cfg.seed = seed;

  // Shared corpus for criteria 1 and 2.
  std::vector<std::pair<VPolytope, std::vector<RatVec>>> corpus;
  for (std::size_t t = 0; t < 60; ++t) {
    Rng rng(sub_seed(seed, "acceptance", t));
    VPolytope P = gen_polytope(cfg, rng);
    std::vector<RatVec> xs = sample_points(P, cfg, rng);
    corpus.emplace_back(std::move(P), std::move(xs));
  }

  criterion(1, "oracle equivalence", [&](Outcome& o) {
    std::size_t pairs = 0, mismatches = 0;
    for (const auto& [P, xs] : corpus)
      for (const RatVec& x : xs) {
        ++pairs;
        mismatches += !(minimal_face(P, x) == minimal_face_oracle(P, x));
      }
    const PropertyReport r = run_property("P-ORACLE", cfg);
    o.require(pairs >= 500, "fewer than 500 pairs");
    o.require(mismatches == 0, "mismatch");
    o.require(r.status == Status::Pass, "P-ORACLE not Pass");
    o.detail << pairs << " direct pairs, " << mismatches << " mismatches; P-ORACLE " << to_string(r.status) << " over "
             << r.trials << " trials ";
  });

  criterion(2, "sandwich and coincidence", [&](Outcome& o) {
    std::size_t pairs = 0, bad = 0;
    for (const auto& [P, xs] : corpus)
      for (const RatVec& x : xs) {
        ++pairs;
        const InteriorVerdict v = interiors(P, x);
        const bool chain = (!v.ri || v.icr) && (!v.icr || v.fri) && (!v.fri || v.qri);
        const bool equal = v.ri == v.icr && v.icr == v.fri && v.fri == v.qri;
        bad += !(chain && equal);
      }
    const PropertyReport r = run_property("P-SANDWICH", cfg);
    o.require(bad == 0, "flag disagreement");
    o.require(r.status == Status::Pass, "P-SANDWICH not Pass");
    o.detail << pairs << " pairs, " << bad << " violations; P-SANDWICH " << to_string(r.status) << ' ';
  });

  criterion(3, "decomposition", [&](Outcome& o) {
    const PropertyReport r = run_property("P-DECOMPOSE", cfg);
    o.require(r.trials >= 200, "fewer than 200 trials");
    o.require(r.status == Status::Pass && !r.counterexample, "P-DECOMPOSE not Pass");
    o.detail << "P-DECOMPOSE " << to_string(r.status) << " over " << r.trials << " trials ";
  });

  criterion(4, "calculus suites", [&](Outcome& o) {
    const std::vector<std::string> ids = {"P-PRODUCT", "P-TRANSLATE", "P-IMAGE",   "P-SUM",
                                          "P-INTERSECT", "P-ICRFRI", "P-SEGMENT", "P-IDEMPOTENT",
                                          "P-NOTINFRI", "P-ICRMINF", "P-CLOSPROP"};
    std::size_t passed = 0;
    for (const std::string& id : ids) {
      const PropertyReport r = run_property(id, cfg);
      const bool ok = r.status == Status::Pass && !r.counterexample;
      passed += ok;
      o.require(ok, id + " " + to_string(r.status));
    }
    o.detail << passed << '/' << ids.size() << " suites Pass at " << cfg.trials << " trials ";
  });

  criterion(5, "PosBall2 regression", [&](Outcome& o) {
    std::size_t cases = 0, in = 0, zero = 0, unit = 0, icr_out = 0;
    for (const CorpusCase& c : example_corpus()) {
      if (c.model.kind != ModelSet::Kind::PosBall2 || c.member != Answer::In)
        continue;
      bool has_zero = false;
      for (std::size_t i = 1; i <= 60; ++i)
        has_zero = has_zero || sgn(c.point.entry(i)) <= 0;
      const NormBound n = norm_enclosure(c.point, NormKind::L2);
      std::optional<Answer> expect;
      if (has_zero) {
        expect = Answer::Out;
        ++zero;
      } else if (n.sq_exact && n.sq_lo == 1) {
        expect = Answer::Out;
        ++unit;
      } else if (n.sq_hi < 1 && c.point.harmonic_coeff() == 0) {
        expect = Answer::In;
        ++in;
      }
      if (!expect)
        continue;
      ++cases;
      const Verdict f = fri_member(c.model, c.point);
      o.require(f.answer == *expect && revalidate(f.cert), "fri verdict for " + c.label);
      const Verdict i = icr_member(c.model, c.point);
      const bool majorant = i.answer == Answer::Out && revalidate(i.cert) && mentions(i.cert, "majorant");
      icr_out += majorant;
      o.require(majorant, "icr certificate for " + c.label);
    }
    o.require(cases >= 12 && in && zero && unit, "corpus too small");
    o.require(all_pass(claims_for("posball2")), "posball2 claims");
    o.detail << cases << " points (" << in << " In, " << zero << " zero coordinate, " << unit << " unit norm), "
             << icr_out << " icr Out with majorant ";
  });

  criterion(6, "L1 ball regression", [&](Outcome& o) {
    std::size_t cases = 0, finite_edge = 0, infinite_edge = 0;
    for (const CorpusCase& c : example_corpus()) {
      if (c.model.kind != ModelSet::Kind::L1BallInL2 || c.member != Answer::In)
        continue;
      const NormBound n = norm_enclosure(c.point, NormKind::L1);
      if (!n.exact)
        continue;
      ++cases;
      const Verdict f = fri_member(c.model, c.point);
      o.require((f.answer == Answer::In) == (n.lo < 1) && f.answer != Answer::Inconclusive, "fri for " + c.label);
      if (n.lo == 1) {
        const Verdict q = qri_member(c.model, c.point);
        const Answer want = c.point.has_tail() ? Answer::In : Answer::Out;
        o.require(q.answer == want && revalidate(q.cert), "qri for " + c.label);
        (c.point.has_tail() ? infinite_edge : finite_edge) += 1;
      }
    }
    const std::vector<Claim> claims = claims_for("l1ball");
    const Claim* w = find_claim(claims, "fri strictly inside qri");
    o.require(w && w->pass && revalidate(w->cert), "fri/qri witness");
    o.require(all_pass(claims), "l1ball claims");
    o.require(finite_edge && infinite_edge, "boundary cases missing");
    o.detail << cases << " points, boundary: " << finite_edge << " finite (qri Out), " << infinite_edge
             << " geometric (qri In); witness certified ";
  });

  criterion(7, "gadget claims", [&](Outcome& o) {
    const std::vector<Claim> g = gadget_claims();
    o.require(all_pass(g), "gadget claim failed");
    o.require(find_claim(g, "(ii) 0 in fri(C n D)") && find_claim(g, "(iii) 0 not in fri D"), "intersection claims");
    o.require(find_claim(g, "(v)"), "nonpartition claim");
    bool flagged = false;
    for (const Claim& c : g)
      for (const std::string& n : c.notes)
        flagged = flagged || n.find("discrepancy") != std::string::npos;
    o.require(flagged, "discrepancy not flagged");
    std::size_t total = g.size();
    for (const char* set : {"icrneqfri", "zalinescu", "intersection", "nonpartition"}) {
      const std::vector<Claim> cs = claims_for(set);
      total += cs.size();
      o.require(all_pass(cs), std::string(set) + " claims");
    }
    o.detail << total << " claims Pass, discrepancy flagged ";
  });

  criterion(8, "majorant", [&](Outcome& o) {
    Rng g(sub_seed(seed, "majorant", 0));
    std::size_t inputs = 0;
    for (; inputs < 12; ++inputs) {
      const SeqPoint x = random_point(g);
      MajorantPlan plan = auto_plan(x, Rat(g.integer(1, 3)) / Rat(g.integer(1, 3)), 1);
      const SeqPoint y = majorant_construct(x, plan);
      const NormBound n = norm_enclosure(y, NormKind::L1);
      o.require(n.exact && n.lo == plan.delta, "norm of " + format_seqpoint(x));
      for (std::size_t k = 1; k < plan.schedule.size(); ++k)
        o.require(plan.schedule[k] > plan.schedule[k - 1], "schedule");
      for (const Rat& eps : {Rat(1), Rat(1, 10), Rat(1, 100)}) {
        const auto i = majorant_verify(x, y, eps, 10000);
        o.require(i && abs(x.entry(*i)) < eps * y.entry(*i), "verify " + format_seqpoint(x));
      }
    }
    o.require(all_pass(claims_for("majorant")), "majorant claims");
    o.detail << inputs << " seeded inputs, exact norm, increasing schedule, indices found ";
  });

  criterion(9, "sigma hull", [&](Outcome& o) {
    const std::vector<Claim> cs = sigma_hull_demo(10);
    o.require(cs.size() == 11 && all_pass(cs), "demo claims");
    for (std::size_t k = 1; k <= 10; ++k)
      o.require(find_claim(cs, "x^" + std::to_string(k) + " in co A") != nullptr, "missing x^k");
    o.require(find_claim(cs, "x not in co A") != nullptr, "missing limit claim");
    o.detail << "x^1..x^10 in co A, x not in co A ";
  });

  criterion(10, "determinism", [&](Outcome& o) {
    std::string runs[2];
    for (auto& r : runs) {
      char* out = nullptr;
      int pass = 0;
      const fk_status s = fk_check_run("", seed, 20, FK_FORMAT_JSON, &out, &pass);
      o.require(s == FK_OK && pass, "check run failed");
      r = out ? out : "";
      fk_string_free(out);
    }
    o.require(!runs[0].empty() && runs[0] == runs[1], "C API reports differ");
    o.detail << "C API: " << runs[0].size() << " identical bytes";
    if (argc > 1) {
      const std::string a = run_cli(argv[1]), b = run_cli(argv[1]);
      o.require(!a.empty() && a == b, "CLI reports differ");
      o.detail << ", CLI: " << a.size() << " identical bytes";
    }
    o.detail << ' ';
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
