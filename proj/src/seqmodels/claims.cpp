#include "facekit/errors.hpp"
#include "facekit/seqmodels.hpp"
#include "internal.hpp"

namespace facekit {

using nlohmann::json;

namespace {

using K = ModelSet::Kind;

std::string source_name(Source s)
{
  switch (s) {
    case Source::Literal:
      return "literal";
    case Source::Entry:
      return "entry";
    case Source::AbsEntry:
      return "abs_entry";
    case Source::L1Norm:
      return "l1_norm";
    case Source::L2NormSqLo:
      return "l2_norm_sq_lo";
    case Source::L2NormSqHi:
      return "l2_norm_sq_hi";
    case Source::HarmonicCoeff:
      return "harmonic_coeff";
    case Source::TailCount:
      return "tail_count";
    case Source::AllEntries:
      return "all_entries";
  }
  return "?";
}

Claim finish(Claim c, bool logic_ok)
{
  c.pass = logic_ok && revalidate(c.cert);
  return c;
}

Check is_true(const std::string& what, bool b) { return literal(what, b ? 1 : 0, Rel::Eq, 1); }

Rat l1(const SeqPoint& p) { return norm_enclosure(p, NormKind::L1).lo; }

}  // namespace

json to_json(const Certificate& c)
{
  json checks = json::array();
  for (const Check& k : c.checks) {
    json j;
    j["what"] = k.what;
    j["source"] = source_name(k.source);
    if (k.source != Source::AllEntries)
      j["lhs"] = to_string(k.lhs);
    j["rel"] = to_string(k.rel);
    j["rhs"] = to_string(k.rhs);
    if (k.source == Source::Entry || k.source == Source::AbsEntry)
      j["index"] = k.index;
    if (k.subject)
      j["subject"] = format_seqpoint(*k.subject);
    j["holds"] = k.holds();
    checks.push_back(std::move(j));
  }
  return json{{"checks", checks}, {"facts", c.facts}};
}

json to_json(const Claim& c)
{
  json j{{"claim", c.name}, {"verdict", c.pass ? "Pass" : "Fail"}, {"certificate", to_json(c.cert)}};
  if (!c.notes.empty())
    j["notes"] = c.notes;
  return j;
}

json to_json(const std::vector<Claim>& claims)
{
  json a = json::array();
  for (const Claim& c : claims)
    a.push_back(to_json(c));
  return a;
}

// ---------------------------------------------------------------------------
// Convex series prefix

std::vector<Rat> SeriesSpec::weights(std::size_t K)
{
  std::vector<Rat> w;
  if (K == 0)
    return w;
  for (std::size_t n = 1; n < K; ++n)
    w.push_back(pow(Rat(1, 2), n));
  w.push_back(K == 1 ? Rat(1) : pow(Rat(1, 2), K - 1));
  return w;
}

SeriesWitness nonemptiness_witness(const ModelSet& m, const SeriesSpec& spec)
{
  if (spec.terms.empty())
    throw InputError("series needs at least one term");
  SeriesWitness out;
  out.weights = SeriesSpec::weights(spec.terms.size());
  for (std::size_t n = 0; n < spec.terms.size(); ++n) {
    Verdict mv = member(m, spec.terms[n]);
    if (mv.answer != Answer::In)
      throw PreconditionError("series term " + std::to_string(n + 1) + " is not in " + m.name());
    out.cert.append(mv.cert);
    out.xbar = out.xbar + out.weights[n] * spec.terms[n];
  }
  Rat total = 0;
  for (const Rat& w : out.weights)
    total += w;
  out.cert.add(literal("weights sum to 1", total, Rel::Eq, 1));
  out.cert.note("prefix verification over " + std::to_string(spec.terms.size()) + " terms");
  out.cert.note("xbar = " + format_seqpoint(out.xbar));

  bool ok = member(m, out.xbar).answer == Answer::In;
  out.cert.add(is_true("xbar lies in the set", ok));
  FaceClass face = minimal_face_class(m, out.xbar);
  out.cert.note("F_min(xbar) class " + to_string(face.kind));
  for (std::size_t n = 0; n < spec.terms.size(); ++n) {
    const Rat& lam = out.weights[n];
    const std::string tag = "x_" + std::to_string(n + 1);
    if (lam == 1) {
      bool same = out.xbar == spec.terms[n];
      out.cert.add(is_true(tag + " == xbar (single term)", same));
      ok = ok && same;
      continue;
    }
    // xbar = lam x_n + (1 - lam) r_n with r_n a convex combination of the rest.
    SeqPoint r = (1 / (1 - lam)) * (out.xbar - lam * spec.terms[n]);
    bool r_in = member(m, r).answer == Answer::In;
    bool split = lam * spec.terms[n] + (1 - lam) * r == out.xbar;
    Certificate why;
    bool in_face = face.test_in_face(spec.terms[n], &why);
    out.cert.add(is_true(tag + ": remainder r_n lies in the set", r_in));
    out.cert.add(is_true(tag + ": xbar = lam x_n + (1 - lam) r_n", split));
    out.cert.add(is_true(tag + " passes the minimal-face test", in_face));
    out.cert.append(why);
    ok = ok && r_in && split && in_face;
  }
  out.verified = ok && revalidate(out.cert);
  return out;
}

// ---------------------------------------------------------------------------
// sigma-convex hull

std::vector<Claim> sigma_hull_demo(std::size_t kmax)
{
  if (kmax == 0 || kmax > 10)
    throw InputError("sigma hull demo runs for 1 <= k <= 10");
  std::vector<Claim> out;
  auto uvec = [](std::size_t i) -> SeqPoint { return SeqPoint::unit(i, Rat(1, static_cast<unsigned long>(i))); };
  auto x_entry = [](std::size_t i) -> Rat { return pow(Rat(1, 2), i) / Rat(static_cast<unsigned long>(i)); };

  for (std::size_t k = 1; k <= kmax; ++k) {
    Claim c;
    c.name = "x^" + std::to_string(k) + " in co A";
    SeqPoint xk;
    Rat total = 0;
    std::vector<std::string> weights;
    for (std::size_t i = 1; i <= k; ++i) {
      Rat w = pow(Rat(1, 2), i);
      xk = xk + w * uvec(i);
      total += w;
      weights.push_back(to_string(w) + " on u^" + std::to_string(i));
    }
    Rat w0 = pow(Rat(1, 2), k);
    total += w0;
    weights.push_back(to_string(w0) + " on 0");
    std::string wl;
    for (const auto& s : weights)
      wl += (wl.empty() ? "" : ", ") + s;
    c.cert.note("weights {" + wl + "}");
    c.cert.add(literal("weights sum to 1", total, Rel::Eq, 1));
    c.cert.add(literal("weights nonnegative", w0, Rel::Gt, 0));
    bool entries_ok = true;
    for (std::size_t i = 1; i <= k + 1; ++i)
      entries_ok = entries_ok && xk.entry(i) == (i <= k ? x_entry(i) : Rat(0));
    c.cert.add(is_true("x^k_i = 2^-i / i for i <= k and 0 after", entries_ok && !xk.has_tail()));
    c.cert.add(literal("support size", Rat(static_cast<unsigned long>(xk.head().size())), Rel::Eq,
                       Rat(static_cast<unsigned long>(k))));
    // ||x - x^k||_2^2 = sum_{i>k} 4^-i / i^2
    const Rat K1(static_cast<unsigned long>(k + 1));
    Rat lo = pow(Rat(1, 4), k + 1) / (K1 * K1);
    Rat hi = pow(Rat(1, 4), k) / (3 * K1 * K1);
    Rat next_hi = pow(Rat(1, 4), k + 1) / (3 * (K1 + 1) * (K1 + 1));
    c.cert.add(literal("tail bound lo <= hi", lo, Rel::Le, hi));
    c.cert.add(literal("next tail hi < this tail lo (strict decrease)", next_hi, Rel::Lt, lo));
    c.cert.note("||x - x^k||_2^2 in [" + to_string(lo) + ", " + to_string(hi) + "]");
    if (k == 3)
      c.cert.add(is_true("x^3 = (1/2, 1/8, 1/24, 0, ...)",
                         xk == SeqPoint::finite({{1, Rat(1, 2)}, {2, Rat(1, 8)}, {3, Rat(1, 24)}})));
    out.push_back(finish(std::move(c), true));
  }

  Claim lim;
  lim.name = "x not in co A";
  lim.cert.note("x_i = 2^-i / i for every i");
  lim.cert.note("a convex combination of m points of A = {0, u^1, u^2, ...} has at most m nonzero entries");
  for (std::size_t k = 1; k <= kmax; ++k)
    lim.cert.add(literal("x_" + std::to_string(k + 1) + " > 0: x has more than " + std::to_string(k) + " nonzeros",
                         x_entry(k + 1), Rel::Gt, 0));
  lim.cert.note("every x_i is positive, so x has infinite support and lies outside co A");
  lim.cert.note("x^k -> x, so co A is not closed although A is compact");
  out.push_back(finish(std::move(lim), true));
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample gadgets

namespace {

const SeqPoint& V() { return detail::harmonic_v(); }

// (i) v/2 lies in icr C and in fri D.
Claim claim_half_v()
{
  Claim c;
  c.name = "(i) v/2 in fri C and v/2 in fri D";
  const SeqPoint half = Rat(1, 2) * V();
  bool ok = true;
  const ModelSet GC = ModelSet::gadget(K::GadgetC), GD = ModelSet::gadget(K::GadgetD),
                 GB = ModelSet::gadget(K::GadgetB), GA = ModelSet::gadget(K::GadgetA);

  const std::vector<Rat> ss = {Rat(1, 4), Rat(1, 2), Rat(2), Rat(5)};
  const std::vector<SeqPoint> ws = {SeqPoint(), SeqPoint::unit(1, -1), SeqPoint::geometric(Rat(-1, 2), Rat(1, 2)),
                                    SeqPoint::finite({{1, Rat(3)}, {2, Rat(-1)}})};
  std::size_t replayed = 0;
  for (const Rat& s : ss)
    for (const SeqPoint& w : ws) {
      const SeqPoint x = V() + s * (w - V());
      const Rat wn = l1(w);
      Rat eps = 1;
      for (int guard = 0; guard < 64; ++guard) {
        if (Rat(1, 2) + eps * (Rat(1, 2) - s) > 0 && eps * (s * (wn + 1) - Rat(1, 2)) < Rat(1, 2))
          break;
        eps /= 2;
      }
      const Rat tp = Rat(1, 2) + eps * (Rat(1, 2) - s);
      const SeqPoint y = half + eps * (half - x);
      const SeqPoint wp = (-eps * s / tp) * w;
      bool step = tp > 0 && eps * (s * (wn + 1) - Rat(1, 2)) < Rat(1, 2) &&
                  y == (1 - tp) * V() + tp * wp && member(GB, wp).answer == Answer::In &&
                  member(GC, y).answer == Answer::In && member(GC, x).answer == Answer::In &&
                  (1 / (1 + eps)) * y + (eps / (1 + eps)) * x == half;
      ok = ok && step;
      ++replayed;
    }
  c.cert.add(literal("C-points replayed with y = (1 - t')v + t'w'", Rat(static_cast<unsigned long>(replayed)),
                     Rel::Eq, Rat(static_cast<unsigned long>(ss.size() * ws.size()))));
  c.cert.add(is_true("every replay: t' > 0, w' in B, y in C and v/2 in (x, y)", ok));
  c.notes.push_back("the scalar w' = -eps s ||w||_1 / t' as printed does not produce y; the vector "
                    "w' = -eps s w / t' does, and lies in B under the second eps condition");

  bool okd = true;
  const std::vector<SeqPoint> ds = {Rat(1, 3) * V() + SeqPoint::unit(2, 5), V(), Rat(3) * V() +
                                    SeqPoint::geometric(-1, Rat(1, 3)), SeqPoint(), SeqPoint::unit(1, -1),
                                    SeqPoint::geometric(Rat(1, 2), Rat(1, 2))};
  for (const SeqPoint& x : ds) {
    const Rat t = x.harmonic_coeff();
    const SeqPoint u = x - t * V();
    Rat eps = 1;
    while (Rat(1, 2) + eps * (Rat(1, 2) - t) <= 0)
      eps /= 2;
    const SeqPoint y = half + eps * (half - x);
    bool step = member(GD, x).answer == Answer::In && y == (Rat(1, 2) + eps * (Rat(1, 2) - t)) * V() - eps * u &&
                member(GA, y).answer == Answer::In;
    okd = okd && step;
  }
  c.cert.add(is_true("every D-point x: v/2 + eps (v/2 - x) = (1/2 + eps (1/2 - t)) v - eps u lies in A", okd));
  c.notes.push_back("the printed D-direction has its closing parenthesis after v; the identity holds with "
                    "(1/2 + eps (1/2 - t)) v - eps u");
  Verdict fc = fri_member(GC, half), fd = fri_member(GD, half), ic = icr_member(GC, half);
  c.cert.append(fc.cert);
  c.cert.append(fd.cert);
  c.cert.add(is_true("icr verdict for v/2 in C is In", ic.answer == Answer::In));
  c.cert.add(is_true("fri verdicts for v/2 in C and D are In", fc.answer == Answer::In && fd.answer == Answer::In));
  return finish(std::move(c), ok && okd);
}

// (ii) 0 in fri(C n D) from the symmetry of B.
Claim claim_zero_in_cd()
{
  Claim c;
  c.name = "(ii) 0 in fri(C n D)";
  const ModelSet GB = ModelSet::gadget(K::GadgetB), GCD = ModelSet::gadget(K::GadgetCD);
  const std::vector<SeqPoint> xs = {SeqPoint::unit(1, -1), SeqPoint::finite({{1, 2}, {3, Rat(-1, 2)}}),
                                    SeqPoint::geometric(Rat(-1, 2), Rat(1, 2)), SeqPoint::geometric(3, Rat(1, 3)),
                                    SeqPoint()};
  bool ok = true;
  for (const SeqPoint& x : xs) {
    if (x.is_zero())
      continue;
    const Rat n = l1(x);
    const SeqPoint opp = (-1 / n) * x;
    const Rat lam = 1 / (1 + n);
    ok = ok && member(GB, x).answer == Answer::In && member(GB, opp).answer == Answer::In &&
         (lam * x + (1 - lam) * opp).is_zero();
  }
  c.cert.add(is_true("for sampled x in B: -x/||x||_1 in B and 0 = lam x + (1 - lam)(-x/||x||_1)", ok));
  c.cert.note("B lies in F_min(0, C n D) and C n D lies in cl B");
  Verdict f = fri_member(GCD, SeqPoint());
  c.cert.append(f.cert);
  c.cert.add(is_true("fri verdict for 0 in C n D is In", f.answer == Answer::In));
  return finish(std::move(c), ok && f.answer == Answer::In);
}

// (iii) 0 not in fri D.
Claim claim_zero_not_in_d()
{
  Claim c;
  c.name = "(iii) 0 not in fri D";
  const ModelSet GD = ModelSet::gadget(K::GadgetD);
  bool ok = true;
  for (const SeqPoint& a : {Rat(1, 2) * V(), V() + SeqPoint::unit(1, 4), Rat(2) * V()})
    for (const Rat& lam : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
      // 0 = lam a + (1 - lam) y forces y = -lam a / (1 - lam)
      SeqPoint y = (-lam / (1 - lam)) * a;
      ok = ok && sgn(y.harmonic_coeff()) < 0 && member(GD, y).answer == Answer::Out;
    }
  c.cert.add(is_true("0 = lam a + (1 - lam) y with a in A forces a negative v-coefficient in y, outside D", ok));

  const SeqPoint printed = V() + SeqPoint::unit(1, -2);
  c.cert.add(sourced("the printed point v + (-2, 0, ...) has first entry -1", Source::Entry, printed, Rel::Eq, -1, 1));
  c.cert.add(sourced("its entries are all >= -1, so it lies in cl B", Source::AllEntries, printed, Rel::Ge, -1));
  c.notes.push_back("discrepancy: the printed witness v + (-2, 0, 0, ...) has first coordinate -1 and lies in "
                    "cl B; the shift -3 gives a valid witness");
  const SeqPoint w = V() + SeqPoint::unit(1, -3);
  c.cert.add(sourced("w = v + (-3, 0, ...) has t = 1, so w in A, a subset of D", Source::HarmonicCoeff, w, Rel::Eq, 1));
  c.cert.add(sourced("w_1 = -2 < -1, so w is not in cl B", Source::Entry, w, Rel::Lt, -1, 1));
  Verdict f = fri_member(GD, SeqPoint());
  c.cert.append(f.cert);
  c.cert.add(is_true("fri verdict for 0 in D is Out", f.answer == Answer::Out));
  return finish(std::move(c), ok && member(GD, w).answer == Answer::In && f.answer == Answer::Out);
}

// (iv) fri C + fri D misses l1++ while fri(C + D) contains it.
Claim claim_zalinescu()
{
  Claim c;
  c.name = "(iv) fri C + fri D is strictly smaller than fri(C + D)";
  const SeqPoint xbar = V();
  const ModelSet ZC = ModelSet::zal_segment(xbar), ZP = ModelSet::zal_l1_plus(), ZS = ModelSet::zal_sum(xbar);
  const SeqPoint p = SeqPoint::geometric(1, Rat(1, 2));
  Verdict f = fri_member(ZS, p);
  c.cert.append(f.cert);
  c.cert.add(is_true("p = geometric(1, 1/2) is In for fri(C + D)", f.answer == Answer::In));
  c.cert.add(sourced("p has no harmonic term", Source::HarmonicCoeff, p, Rel::Eq, 0));

  bool ok = f.answer == Answer::In;
  for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(3, 4)})
    for (const SeqPoint& d : {SeqPoint::geometric(1, Rat(1, 2)), SeqPoint::geometric(Rat(1, 5), Rat(2, 3))}) {
      SeqPoint a = t * xbar;
      bool parts = fri_member(ZC, a).answer == Answer::In && fri_member(ZP, d).answer == Answer::In;
      SeqPoint s = a + d;
      bool divergent = norm_enclosure(s, NormKind::L1).divergent && member(ZP, s).answer == Answer::Out;
      ok = ok && parts && divergent && sgn(s.harmonic_coeff()) > 0;
    }
  c.cert.add(is_true("sampled fri C + fri D sums carry t xbar with t in (0,1) and have divergent l1 norm", ok));
  c.cert.note("fri C = (0, xbar), so every element of fri C + fri D has harmonic coefficient t in (0, 1)");
  c.cert.note("such points are not in l1, so p is not in fri C + fri D");
  c.notes.push_back("discrepancy: the text asserts that l1++ and fri(C + D) are disjoint right after proving "
                    "l1++ is contained in fri(C + D); the statement checked here is that l1++ and "
                    "fri C + fri D are disjoint");
  return finish(std::move(c), ok);
}

// (v) qri of a face and of the whole set overlap.
Claim claim_nonpartition()
{
  Claim c;
  c.name = "(v) xbar in qri F_min(xbar, C) and in qri C";
  const ModelSet B1 = ModelSet::l1_ball();
  const SeqPoint xbar = SeqPoint::geometric(1, Rat(1, 2));
  Verdict q = qri_member(B1, xbar), f = fri_member(B1, xbar);
  c.cert.append(q.cert);
  c.cert.append(f.cert);
  bool ok = q.answer == Answer::In && f.answer == Answer::Out;
  c.cert.add(is_true("qri In and fri Out for the full set", ok));
  FaceClass face = minimal_face_class(B1, xbar);
  c.cert.add(is_true("F_min(xbar) is the sign slice", face.kind == FaceClass::Kind::SignSlice));
  ok = ok && face.kind == FaceClass::Kind::SignSlice;

  // xbar in icr F: for y in F, xbar + e (xbar - y) stays in F for some e > 0.
  const std::vector<SeqPoint> ys = {SeqPoint::geometric(2, Rat(1, 3)), SeqPoint::geometric(3, Rat(1, 4)),
                                    SeqPoint::unit(1, 1), SeqPoint::finite({{1, Rat(1, 2)}, {2, Rat(1, 2)}}), xbar};
  std::size_t found = 0;
  for (const SeqPoint& y : ys) {
    if (!face.test_in_face(y))
      continue;
    for (Rat e = 1; e > Rat(1, 1 << 20); e /= 2) {
      SeqPoint z = xbar + e * (xbar - y);
      if (face.test_in_face(z)) {
        ++found;
        break;
      }
    }
  }
  c.cert.add(literal("sampled face points y with xbar + e (xbar - y) in F", Rat(static_cast<unsigned long>(found)),
                     Rel::Eq, Rat(static_cast<unsigned long>(ys.size()))));
  c.cert.note("xbar is in icr F_min(xbar), hence in qri F_min(xbar); cl F_min(xbar) != C");
  return finish(std::move(c), ok && found == ys.size());
}

std::vector<Claim> nonemptiness_claims()
{
  std::vector<Claim> out;
  auto run = [&](const std::string& name, const ModelSet& m, std::vector<SeqPoint> terms) {
    Claim c;
    c.name = name;
    SeriesWitness w = nonemptiness_witness(m, SeriesSpec{std::move(terms)});
    c.cert = w.cert;
    Verdict f = fri_member(m, w.xbar);
    c.notes.push_back("xbar fri verdict on this prefix: " + to_string(f.answer));
    c.pass = w.verified;
    out.push_back(std::move(c));
  };
  std::vector<SeqPoint> basis;
  for (std::size_t i = 1; i <= 6; ++i)
    basis.push_back(SeqPoint::unit(i, Rat(1, 2)));
  run("PosBall2 with terms e_i/2", ModelSet::pos_ball2(), basis);
  run("single term series", ModelSet::pos_ball2(), {SeqPoint::geometric(Rat(1, 2), Rat(1, 2))});
  run("L1BallInL2 with geometric terms", ModelSet::l1_ball(),
      {SeqPoint::geometric(Rat(1, 2), Rat(1, 2)), SeqPoint::geometric(Rat(-1, 3), Rat(1, 3)),
       SeqPoint::geometric(Rat(1, 4), Rat(1, 5)), SeqPoint::unit(2, Rat(1, 2))});
  return out;
}

std::vector<Claim> majorant_claims()
{
  std::vector<Claim> out;
  const std::vector<std::string> inputs = {
      "head",
      "head 1=1/2",
      "head 1=1,3=-2",
      "head tail geometric 1,1/2",
      "head tail geometric -2,1/3",
      "head tail geometric 1,2/3",
      "head tail geometric 1/2,1/2 tail geometric 1,1/4",
      "head 1=5 tail geometric 3,2/3@2",
      "head tail geometric 7,1/5",
      "head 2=1/3,4=-1/7",
      "head tail geometric 1,1/2 tail geometric -1,1/3",
      "head tail geometric 1/100,3/5",
  };
  for (const std::string& text : inputs) {
    Claim c;
    const SeqPoint x = parse_seqpoint(text);
    c.name = "majorant of " + format_seqpoint(x);
    MajorantPlan plan = auto_plan(x, 1, 1);
    SeqPoint y = majorant_construct(x, plan);
    c.cert.add(sourced("||y||_1 == delta", Source::L1Norm, y, Rel::Eq, plan.delta));
    bool inc = true;
    for (std::size_t k = 1; k < plan.schedule.size(); ++k)
      inc = inc && plan.schedule[k] > plan.schedule[k - 1];
    c.cert.add(is_true("schedule strictly increasing, hence injective", inc));
    bool ok = inc;
    for (const Rat& eps : {Rat(1), Rat(1, 10), Rat(1, 100)}) {
      auto i = majorant_verify(x, y, eps, 10000);
      ok = ok && i.has_value();
      if (i)
        c.cert.add(sourced("|x_" + std::to_string(*i) + "| < " + to_string(eps) + " y_i", Source::AbsEntry, x,
                           Rel::Lt, eps * y.entry(*i), *i));
    }
    c.notes.push_back("z = " + format_seqpoint(plan.z) + ", y = " + format_seqpoint(y));
    out.push_back(finish(std::move(c), ok));
  }
  return out;
}

std::vector<Claim> posball2_extra()
{
  std::vector<Claim> out;
  const ModelSet B2 = ModelSet::pos_ball2();
  {
    Claim c;
    c.name = "PosBall2: halved point lies in the minimal face (eps = 1/2)";
    const SeqPoint p = SeqPoint::geometric(Rat(1, 2), Rat(1, 2));
    FaceClass f = minimal_face_class(B2, p);
    bool ok = f.kind == FaceClass::Kind::DominatedDecayClass && f.test_in_face(Rat(1, 2) * p, &c.cert);
    Domination d = dominates(p, Rat(1, 2) * p);
    c.cert.add(literal("domination constant", d.eps, Rel::Ge, Rat(1, 2)));
    out.push_back(finish(std::move(c), ok));
  }
  {
    Claim c;
    c.name = "PosBall2: truncations of points of C lie in F_min(x) with decreasing distance";
    const SeqPoint x = SeqPoint::geometric(Rat(1, 2), Rat(1, 2));
    FaceClass f = minimal_face_class(B2, x);
    bool ok = true;
    for (const SeqPoint& y : {SeqPoint::geometric(1, Rat(1, 3)), SeqPoint::geometric(Rat(4, 3), Rat(3, 5)),
                              SeqPoint::finite({{1, Rat(3, 5)}, {3, Rat(4, 5)}})}) {
      Rat prev = norm_enclosure(y, NormKind::L2).sq_lo;
      for (std::size_t N = 1; N <= 8; ++N) {
        SeqPoint yn = y.truncated(N);
        Rat dist = norm_enclosure(y - yn, NormKind::L2).sq_lo;
        bool dec = y.has_tail() ? dist < prev : dist <= prev;
        ok = ok && f.test_in_face(yn) && dec;
        prev = dist;
      }
    }
    c.cert.add(is_true("every truncation y^N, N <= 8, passes the face test; ||y - y^N||_2 decreases", ok));
    out.push_back(finish(std::move(c), ok));
  }
  return out;
}

std::vector<Claim> decomposition_claims()
{
  std::vector<Claim> out;
  const SeqPoint u = V();
  const ModelSet CL = ModelSet::conv_l1_point(u);
  const std::vector<SeqPoint> pts = {u, SeqPoint(), SeqPoint::geometric(1, Rat(1, 2)),
                                     Rat(1, 2) * u + SeqPoint::unit(1, 3), Rat(1, 3) * u};
  Claim c;
  c.name = "ConvL1Point: fri pieces are {u} and C \\ {u}; icr pieces are {u}, L and the rest";
  bool ok = true;
  for (const SeqPoint& p : pts) {
    FaceClass f = minimal_face_class(CL, p);
    Verdict fr = fri_member(CL, p), ic = icr_member(CL, p);
    const bool at_u = p == u;
    const bool in_l = sgn(p.harmonic_coeff()) == 0;
    ok = ok && (fr.answer == Answer::In) == !at_u;
    ok = ok && (ic.answer == Answer::In) == (!at_u && !in_l);
    ok = ok && (f.kind == FaceClass::Kind::Singleton) == at_u && (f.kind == FaceClass::Kind::SubspaceL) == in_l;
    c.notes.push_back(format_seqpoint(p) + ": face " + to_string(f.kind) + ", fri " + to_string(fr.answer) +
                      ", icr " + to_string(ic.answer));
  }
  c.cert.add(is_true("fri = C \\ {u} and icr = C \\ (L u {u}) on the sample", ok));
  out.push_back(finish(std::move(c), ok));

  Claim d;
  d.name = "PosBall2: unit-norm points are their own faces; zero sets separate fri pieces";
  const ModelSet B2 = ModelSet::pos_ball2();
  const SeqPoint a = SeqPoint::finite({{1, Rat(1, 2)}, {2, Rat(1, 3)}});
  const SeqPoint b = SeqPoint::finite({{1, Rat(1, 4)}, {2, Rat(1, 5)}});
  const SeqPoint e = SeqPoint::finite({{1, Rat(1, 2)}});
  FaceClass fa = minimal_face_class(B2, a);
  bool ok2 = fa.test_in_face(b) && !fa.test_in_face(SeqPoint::finite({{1, Rat(1, 2)}, {3, Rat(1, 2)}})) &&
             minimal_face_class(B2, e).test_in_face(SeqPoint::unit(1, Rat(1, 5))) &&
             !minimal_face_class(B2, e).test_in_face(a);
  FaceClass unit = minimal_face_class(B2, SeqPoint::finite({{1, Rat(3, 5)}, {2, Rat(4, 5)}}));
  ok2 = ok2 && unit.kind == FaceClass::Kind::Singleton && !unit.test_in_face(a);
  d.cert.add(is_true("points with the same zero set share a face; different zero sets do not", ok2));
  out.push_back(finish(std::move(d), ok2));
  return out;
}

}  // namespace

std::vector<Claim> gadget_claims()
{
  return {claim_half_v(), claim_zero_in_cd(), claim_zero_not_in_d(), claim_zalinescu(), claim_nonpartition()};
}

std::vector<std::string> claim_set_names()
{
  return {"posball2",     "l1ball",       "icrneqfri",     "sigma-hull",   "zalinescu",
          "intersection", "nonpartition", "decomposition", "nonemptiness", "majorant"};
}

std::vector<Claim> claims_for(const std::string& name)
{
  std::vector<Claim> out;
  auto cat = [&](std::vector<Claim> more) {
    for (Claim& c : more)
      out.push_back(std::move(c));
  };
  if (name == "posball2") {
    cat(corpus_claims(K::PosBall2));
    cat(posball2_extra());
  } else if (name == "l1ball") {
    cat(corpus_claims(K::L1BallInL2));
    Claim w;
    w.name = "fri strictly inside qri: witness geometric(1, 1/2)";
    const SeqPoint p = SeqPoint::geometric(1, Rat(1, 2));
    Verdict f = fri_member(ModelSet::l1_ball(), p), q = qri_member(ModelSet::l1_ball(), p);
    w.cert.append(f.cert);
    w.cert.append(q.cert);
    out.push_back(finish(std::move(w), f.answer == Answer::Out && q.answer == Answer::In));
  } else if (name == "icrneqfri") {
    cat(corpus_claims(K::ConvL1Point));
  } else if (name == "sigma-hull") {
    cat(sigma_hull_demo());
  } else if (name == "zalinescu") {
    cat(corpus_claims(K::ZalSumC));
    cat(corpus_claims(K::ZalL1Plus));
    cat(corpus_claims(K::ZalSum));
    out.push_back(claim_zalinescu());
  } else if (name == "intersection") {
    for (K k : {K::GadgetA, K::GadgetB, K::GadgetC, K::GadgetD, K::GadgetCD})
      cat(corpus_claims(k));
    out.push_back(claim_half_v());
    out.push_back(claim_zero_in_cd());
    out.push_back(claim_zero_not_in_d());
  } else if (name == "nonpartition") {
    out.push_back(claim_nonpartition());
  } else if (name == "decomposition") {
    cat(decomposition_claims());
  } else if (name == "nonemptiness") {
    cat(nonemptiness_claims());
  } else if (name == "majorant") {
    cat(majorant_claims());
  } else {
    throw InputError("unknown claim set '" + name + "'");
  }
  return out;
}

}  // namespace facekit
