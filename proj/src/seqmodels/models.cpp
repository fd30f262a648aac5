#include "facekit/errors.hpp"
#include "facekit/seqmodels.hpp"
#include "internal.hpp"

namespace facekit {

std::string to_string(Answer a)
{
  switch (a) {
    case Answer::In:
      return "In";
    case Answer::Out:
      return "Out";
    case Answer::Inconclusive:
      break;
  }
  return "Inconclusive";
}

bool compare(const Rat& a, Rel r, const Rat& b)
{
  switch (r) {
    case Rel::Lt:
      return a < b;
    case Rel::Le:
      return a <= b;
    case Rel::Eq:
      return a == b;
    case Rel::Ne:
      return a != b;
    case Rel::Ge:
      return a >= b;
    case Rel::Gt:
      return a > b;
  }
  return false;
}

std::string to_string(Rel r)
{
  switch (r) {
    case Rel::Lt:
      return "<";
    case Rel::Le:
      return "<=";
    case Rel::Eq:
      return "==";
    case Rel::Ne:
      return "!=";
    case Rel::Ge:
      return ">=";
    case Rel::Gt:
      return ">";
  }
  return "?";
}

namespace {

// Left-hand side recomputed from the subject; nullopt when undefined (a
// divergent l1 norm).
std::optional<Rat> evaluate(Source src, const SeqPoint& p, std::size_t index)
{
  switch (src) {
    case Source::Entry:
      return p.entry(index);
    case Source::AbsEntry:
      return abs(p.entry(index));
    case Source::L1Norm: {
      NormBound b = norm_enclosure(p, NormKind::L1);
      if (b.divergent)
        return std::nullopt;
      return b.lo;
    }
    case Source::L2NormSqLo:
      return norm_enclosure(p, NormKind::L2).sq_lo;
    case Source::L2NormSqHi:
      return norm_enclosure(p, NormKind::L2).sq_hi;
    case Source::HarmonicCoeff:
      return p.harmonic_coeff();
    case Source::TailCount:
      return Rat(static_cast<unsigned long>((sgn(p.harmonic_coeff()) != 0 ? 1 : 0) + p.geometric_terms().size()));
    case Source::Literal:
    case Source::AllEntries:
      break;
  }
  return Rat(0);
}

bool all_entries(const SeqPoint& p, Rel rel, const Rat& rhs)
{
  switch (rel) {
    case Rel::Ge:
      return entries_at_least(p, rhs, false).holds;
    case Rel::Gt:
      return entries_at_least(p, rhs, true).holds;
    case Rel::Le:
      return entries_at_least(-p, -rhs, false).holds;
    case Rel::Lt:
      return entries_at_least(-p, -rhs, true).holds;
    default:
      break;
  }
  return false;
}

}  // namespace

bool Check::holds() const
{
  if (source == Source::AllEntries)
    return subject && all_entries(*subject, rel, rhs);
  if (source == Source::L1Norm && subject && norm_enclosure(*subject, NormKind::L1).divergent)
    return false;
  return compare(lhs, rel, rhs);
}

Check literal(std::string what, const Rat& lhs, Rel rel, const Rat& rhs)
{
  Check c;
  c.what = std::move(what);
  c.lhs = lhs;
  c.rel = rel;
  c.rhs = rhs;
  return c;
}

Check sourced(std::string what, Source src, const SeqPoint& subject, Rel rel, const Rat& rhs, std::size_t index)
{
  Check c;
  c.what = std::move(what);
  c.rel = rel;
  c.rhs = rhs;
  c.source = src;
  c.index = index;
  c.subject = subject;
  if (auto v = evaluate(src, subject, index))
    c.lhs = *v;
  return c;
}

void Certificate::append(const Certificate& o)
{
  checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  facts.insert(facts.end(), o.facts.begin(), o.facts.end());
}

bool revalidate(const Certificate& cert)
{
  for (const Check& c : cert.checks) {
    if (c.source != Source::Literal && c.source != Source::AllEntries) {
      if (!c.subject)
        return false;
      auto v = evaluate(c.source, *c.subject, c.index);
      if (!v || *v != c.lhs)
        return false;
    }
    if (!c.holds())
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

using K = ModelSet::Kind;

Verdict verdict(Answer a, Certificate c = {})
{
  return Verdict{a, std::move(c)};
}

std::string idx(std::size_t i) { return std::to_string(i); }

// p = t v + u with u in l1.
struct Split {
  Rat t;
  SeqPoint u;
};

Split split(const SeqPoint& p)
{
  Split s;
  s.t = p.harmonic_coeff();
  s.u = p - s.t * detail::harmonic_v();
  return s;
}

Check harmonic_is(const SeqPoint& p, Rel rel, const Rat& value, const std::string& label = "harmonic coefficient t")
{
  return sourced(label, Source::HarmonicCoeff, p, rel, value);
}

void require_member(const ModelSet& m, const SeqPoint& p)
{
  Verdict v = member(m, p);
  if (v.answer != Answer::In)
    throw PreconditionError("point " + format_seqpoint(p) + " is not known to lie in " + m.name());
}

// ---------------------------------------------------------------------------
// Membership

Verdict member_posball2(const SeqPoint& p)
{
  Certificate c;
  LowerBoundCheck lb = entries_at_least(p, 0, false);
  if (!lb.holds) {
    c.add(sourced("x_" + idx(*lb.violation) + " < 0", Source::Entry, p, Rel::Lt, 0, *lb.violation));
    return verdict(Answer::Out, c);
  }
  NormBound nb = norm_enclosure(p, NormKind::L2);
  if (nb.sq_hi <= 1) {
    c.add(sourced("x_i >= 0 for all i", Source::AllEntries, p, Rel::Ge, 0));
    c.add(sourced("||x||_2^2 <= 1", Source::L2NormSqHi, p, Rel::Le, 1));
    return verdict(Answer::In, c);
  }
  if (nb.sq_lo > 1) {
    c.add(sourced("||x||_2^2 > 1", Source::L2NormSqLo, p, Rel::Gt, 1));
    return verdict(Answer::Out, c);
  }
  c.note("squared l2 enclosure [" + to_string(nb.sq_lo) + ", " + to_string(nb.sq_hi) + "] contains 1");
  return verdict(Answer::Inconclusive, c);
}

Verdict member_l1ball(const SeqPoint& p)
{
  Certificate c;
  NormBound nb = norm_enclosure(p, NormKind::L1);
  if (nb.divergent) {
    c.add(harmonic_is(p, Rel::Ne, 0));
    c.note("a nonzero harmonic term makes ||x||_1 divergent");
    return verdict(Answer::Out, c);
  }
  if (nb.lo <= 1) {
    c.add(sourced("||x||_1 <= 1", Source::L1Norm, p, Rel::Le, 1));
    return verdict(Answer::In, c);
  }
  c.add(sourced("||x||_1 > 1", Source::L1Norm, p, Rel::Gt, 1));
  return verdict(Answer::Out, c);
}

Verdict member_conv_l1(const SeqPoint& u, const SeqPoint& p)
{
  Certificate c;
  const Rat alpha = p.harmonic_coeff() / u.harmonic_coeff();
  c.add(harmonic_is(p, Rel::Eq, alpha * u.harmonic_coeff(), "harmonic coefficient of x equals alpha h_u"));
  if (p == u) {
    c.add(sourced("||x - u||_1 == 0", Source::L1Norm, p - u, Rel::Eq, 0));
    return verdict(Answer::In, c);
  }
  if (sgn(alpha) >= 0 && alpha < 1) {
    SeqPoint l = (1 / (1 - alpha)) * (p - alpha * u);
    c.add(literal("alpha >= 0", alpha, Rel::Ge, 0));
    c.add(literal("alpha < 1", alpha, Rel::Lt, 1));
    c.add(harmonic_is(l, Rel::Eq, 0, "l = (x - alpha u)/(1 - alpha) has no harmonic term"));
    c.note("x = (1 - alpha) l + alpha u with l in l1");
    return verdict(Answer::In, c);
  }
  if (sgn(alpha) < 0) {
    c.add(literal("alpha < 0", alpha, Rel::Lt, 0));
  } else if (alpha > 1) {
    c.add(literal("alpha > 1", alpha, Rel::Gt, 1));
  } else {
    c.add(sourced("x - u has no harmonic term", Source::HarmonicCoeff, p - u, Rel::Eq, 0));
    c.add(sourced("||x - u||_1 > 0", Source::L1Norm, p - u, Rel::Gt, 0));
    c.note("alpha = 1 leaves only x = u");
  }
  c.note("the representation x = (1 - alpha) l + alpha u, l in l1, is unique");
  return verdict(Answer::Out, c);
}

Verdict member_zal_segment(const SeqPoint& xbar, const SeqPoint& p)
{
  Certificate c;
  const Rat t = p.harmonic_coeff() / xbar.harmonic_coeff();
  SeqPoint rest = p - t * xbar;
  c.add(harmonic_is(p, Rel::Eq, t * xbar.harmonic_coeff(), "harmonic coefficient of x equals t h_xbar"));
  if (!rest.is_zero()) {
    c.add(sourced("||x - t xbar||_1 > 0", Source::L1Norm, rest, Rel::Gt, 0));
    c.note("only t xbar has this harmonic coefficient on the line through xbar");
    return verdict(Answer::Out, c);
  }
  c.add(sourced("||x - t xbar||_1 == 0", Source::L1Norm, rest, Rel::Eq, 0));
  if (sgn(t) < 0 || t > 1) {
    c.add(literal(sgn(t) < 0 ? "t < 0" : "t > 1", t, sgn(t) < 0 ? Rel::Lt : Rel::Gt, sgn(t) < 0 ? Rat(0) : Rat(1)));
    return verdict(Answer::Out, c);
  }
  c.add(literal("t >= 0", t, Rel::Ge, 0));
  c.add(literal("t <= 1", t, Rel::Le, 1));
  return verdict(Answer::In, c);
}

Verdict member_l1_plus(const SeqPoint& p)
{
  Certificate c;
  if (sgn(p.harmonic_coeff()) != 0) {
    c.add(harmonic_is(p, Rel::Ne, 0));
    c.note("a nonzero harmonic term is not summable");
    return verdict(Answer::Out, c);
  }
  LowerBoundCheck lb = entries_at_least(p, 0, false);
  if (!lb.holds) {
    c.add(sourced("x_" + idx(*lb.violation) + " < 0", Source::Entry, p, Rel::Lt, 0, *lb.violation));
    return verdict(Answer::Out, c);
  }
  c.add(harmonic_is(p, Rel::Eq, 0));
  c.add(sourced("x_i >= 0 for all i", Source::AllEntries, p, Rel::Ge, 0));
  return verdict(Answer::In, c);
}

Verdict member_zal_sum(const SeqPoint& xbar, const SeqPoint& p)
{
  Certificate c;
  const Rat t = p.harmonic_coeff() / xbar.harmonic_coeff();
  SeqPoint d = p - t * xbar;
  c.add(harmonic_is(p, Rel::Eq, t * xbar.harmonic_coeff(), "harmonic coefficient of x equals t h_xbar"));
  c.note("x = t xbar + d with d in l1 fixes t");
  if (sgn(t) < 0 || t > 1) {
    c.add(literal(sgn(t) < 0 ? "t < 0" : "t > 1", t, sgn(t) < 0 ? Rel::Lt : Rel::Gt, sgn(t) < 0 ? Rat(0) : Rat(1)));
    return verdict(Answer::Out, c);
  }
  LowerBoundCheck lb = entries_at_least(d, 0, false);
  if (!lb.holds) {
    c.add(sourced("d_" + idx(*lb.violation) + " < 0", Source::Entry, d, Rel::Lt, 0, *lb.violation));
    return verdict(Answer::Out, c);
  }
  c.add(literal("t >= 0", t, Rel::Ge, 0));
  c.add(literal("t <= 1", t, Rel::Le, 1));
  c.add(sourced("d_i >= 0 for all i", Source::AllEntries, d, Rel::Ge, 0));
  return verdict(Answer::In, c);
}

Verdict member_gadget_b(const SeqPoint& p)
{
  Certificate c;
  if (sgn(p.harmonic_coeff()) != 0) {
    c.add(harmonic_is(p, Rel::Ne, 0));
    c.note("a nonzero harmonic term is not summable");
    return verdict(Answer::Out, c);
  }
  LowerBoundCheck lb = entries_at_least(p, -1, false);
  if (!lb.holds) {
    c.add(sourced("x_" + idx(*lb.violation) + " < -1", Source::Entry, p, Rel::Lt, -1, *lb.violation));
    return verdict(Answer::Out, c);
  }
  c.add(harmonic_is(p, Rel::Eq, 0));
  c.add(sourced("x_i >= -1 for all i", Source::AllEntries, p, Rel::Ge, -1));
  return verdict(Answer::In, c);
}

// C and C n D: x = v + s (w - v) with w in B, i.e. t = 1 - s and u = s w.
Verdict member_gadget_c(const SeqPoint& p, bool capped)
{
  Certificate c;
  Split sp = split(p);
  c.note("x = t v + u with t = 1 - s and u = s w");
  if (sp.t >= 1) {
    c.add(harmonic_is(p, Rel::Ge, 1, "t >= 1 (s <= 0)"));
    return verdict(Answer::Out, c);
  }
  if (capped && sgn(sp.t) < 0) {
    c.add(harmonic_is(p, Rel::Lt, 0, "t < 0 (s > 1)"));
    return verdict(Answer::Out, c);
  }
  const Rat floor = -(1 - sp.t);
  LowerBoundCheck lb = entries_at_least(sp.u, floor, false);
  if (!lb.holds) {
    c.add(sourced("u_" + idx(*lb.violation) + " < -(1 - t)", Source::Entry, sp.u, Rel::Lt, floor, *lb.violation));
    return verdict(Answer::Out, c);
  }
  c.add(harmonic_is(p, Rel::Lt, 1, "t < 1 (s > 0)"));
  if (capped)
    c.add(harmonic_is(p, Rel::Ge, 0, "t >= 0 (s <= 1)"));
  c.add(sourced("u_i >= -(1 - t) for all i (w in B)", Source::AllEntries, sp.u, Rel::Ge, floor));
  return verdict(Answer::In, c);
}

}  // namespace

ModelSet ModelSet::conv_l1_point(const SeqPoint& u)
{
  if (sgn(u.harmonic_coeff()) == 0)
    throw InputError("ConvL1Point needs u in l2 \\ l1, i.e. a nonzero harmonic term");
  return {Kind::ConvL1Point, u};
}

ModelSet ModelSet::zal_segment(const SeqPoint& xbar)
{
  if (sgn(xbar.harmonic_coeff()) <= 0 || !entries_at_least(xbar, 0, false).holds)
    throw InputError("xbar must be nonnegative with a positive harmonic term");
  return {Kind::ZalSumC, xbar};
}

ModelSet ModelSet::zal_sum(const SeqPoint& xbar)
{
  ModelSet m = zal_segment(xbar);
  m.kind = Kind::ZalSum;
  return m;
}

ModelSet ModelSet::gadget(Kind k)
{
  switch (k) {
    case Kind::GadgetA:
    case Kind::GadgetB:
    case Kind::GadgetC:
    case Kind::GadgetD:
    case Kind::GadgetCD:
      return {k, {}};
    default:
      break;
  }
  throw InputError("not a gadget kind");
}

std::string ModelSet::name() const
{
  switch (kind) {
    case Kind::PosBall2:
      return "PosBall2";
    case Kind::L1BallInL2:
      return "L1BallInL2";
    case Kind::ConvL1Point:
      return "ConvL1Point(" + format_seqpoint(param) + ")";
    case Kind::ZalSumC:
      return "ZalSumC(" + format_seqpoint(param) + ")";
    case Kind::ZalL1Plus:
      return "ZalL1Plus";
    case Kind::ZalSum:
      return "ZalSum(" + format_seqpoint(param) + ")";
    case Kind::GadgetA:
      return "GadgetA";
    case Kind::GadgetB:
      return "GadgetB";
    case Kind::GadgetC:
      return "GadgetC";
    case Kind::GadgetD:
      return "GadgetD";
    case Kind::GadgetCD:
      return "GadgetCD";
  }
  return "?";
}

Verdict member(const ModelSet& m, const SeqPoint& p)
{
  switch (m.kind) {
    case K::PosBall2:
      return member_posball2(p);
    case K::L1BallInL2:
      return member_l1ball(p);
    case K::ConvL1Point:
      return member_conv_l1(m.param, p);
    case K::ZalSumC:
      return member_zal_segment(m.param, p);
    case K::ZalL1Plus:
      return member_l1_plus(p);
    case K::ZalSum:
      return member_zal_sum(m.param, p);
    case K::GadgetA: {
      Certificate c;
      bool in = sgn(p.harmonic_coeff()) > 0;
      c.add(harmonic_is(p, in ? Rel::Gt : Rel::Le, 0));
      return verdict(in ? Answer::In : Answer::Out, c);
    }
    case K::GadgetB:
      return member_gadget_b(p);
    case K::GadgetC:
      return member_gadget_c(p, false);
    case K::GadgetD: {
      if (sgn(p.harmonic_coeff()) > 0) {
        Certificate c;
        c.add(harmonic_is(p, Rel::Gt, 0));
        c.note("x in A");
        return verdict(Answer::In, c);
      }
      Verdict b = member_gadget_b(p);
      if (b.answer == Answer::In)
        b.cert.note("x in B");
      else
        b.cert.add(harmonic_is(p, Rel::Le, 0, "x not in A"));
      return b;
    }
    case K::GadgetCD:
      return member_gadget_c(p, true);
  }
  return verdict(Answer::Inconclusive);
}

// ---------------------------------------------------------------------------
// Interiors

namespace {

enum class Notion { Icr, Fri, Qri };

Verdict zero_coordinate_out(const SeqPoint& p, std::size_t j, const std::string& why)
{
  Certificate c;
  c.add(sourced("x_" + idx(j) + " == 0", Source::Entry, p, Rel::Eq, 0, j));
  c.note(why);
  return verdict(Answer::Out, c);
}

Verdict posball2(Notion n, const SeqPoint& p)
{
  if (n == Notion::Icr) {
    Certificate c = detail::majorant_exclusion(p, 2);
    c.note("the majorant y lies in the set and outside F_min(x)");
    return verdict(Answer::Out, c);
  }
  LowerBoundCheck pos = entries_at_least(p, 0, true);
  NormBound nb = norm_enclosure(p, NormKind::L2);
  if (pos.holds && nb.sq_hi < 1) {
    Certificate c;
    c.add(sourced("x_i > 0 for all i", Source::AllEntries, p, Rel::Gt, 0));
    c.add(sourced("||x||_2^2 < 1", Source::L2NormSqHi, p, Rel::Lt, 1));
    c.note("every truncation of a point of the set lies in F_min(x), so F_min(x) is dense");
    if (n == Notion::Qri)
      c.note("fri implies qri");
    return verdict(Answer::In, c);
  }
  if (n == Notion::Qri) {
    Certificate c;
    c.note("qri is decided here only where fri is In");
    return verdict(Answer::Inconclusive, c);
  }
  if (!pos.holds)
    return zero_coordinate_out(p, *pos.violation,
                               "F_min(x) lies in the closed set {y_j = 0}, which misses e_j/2 in the set");
  if (nb.sq_lo >= 1) {
    Certificate c;
    c.add(sourced("||x||_2^2 >= 1", Source::L2NormSqLo, p, Rel::Ge, 1));
    c.note("at unit norm the parallelogram law gives F_min(x) = {x}");
    return verdict(Answer::Out, c);
  }
  Certificate c;
  c.note("squared l2 enclosure [" + to_string(nb.sq_lo) + ", " + to_string(nb.sq_hi) + "] contains 1");
  return verdict(Answer::Inconclusive, c);
}

Verdict l1ball(Notion n, const SeqPoint& p)
{
  NormBound nb = norm_enclosure(p, NormKind::L1);
  Certificate c;
  if (nb.lo < 1) {
    c.add(sourced("||x||_1 < 1", Source::L1Norm, p, Rel::Lt, 1));
    c.note("z = x + a (x - y) with a = (1 - ||x||_1)/||y - x||_1 stays in the set for every y");
    return verdict(Answer::In, c);
  }
  c.add(sourced("||x||_1 == 1", Source::L1Norm, p, Rel::Eq, 1));
  if (n != Notion::Qri) {
    c.note("at unit norm F_min(x) keeps the sign pattern of x, and its closure misses points of other signs");
    return verdict(Answer::Out, c);
  }
  if (!p.has_tail()) {
    c.add(sourced("no tail terms: finite support", Source::TailCount, p, Rel::Eq, 0));
    c.note("unit l1 norm with finite support is excluded from qri");
    return verdict(Answer::Out, c);
  }
  c.add(sourced("tail terms present: infinite support", Source::TailCount, p, Rel::Ge, 1));
  c.note("unit l1 norm with infinitely many nonzero entries is in qri");
  return verdict(Answer::In, c);
}

Verdict conv_l1(Notion n, const SeqPoint& u, const SeqPoint& p)
{
  Certificate c;
  const Rat alpha = p.harmonic_coeff() / u.harmonic_coeff();
  const bool at_u = p == u;
  if (n == Notion::Qri) {
    c.note("l1 is dense in l2, so the closed cone of C - x is all of l2");
    return verdict(Answer::In, c);
  }
  if (at_u) {
    c.add(sourced("||x - u||_1 == 0", Source::L1Norm, p - u, Rel::Eq, 0));
    c.note("F_min(u) = {u}");
    return verdict(Answer::Out, c);
  }
  c.add(harmonic_is(p, Rel::Eq, alpha * u.harmonic_coeff(), "harmonic coefficient of x equals alpha h_u"));
  if (sgn(alpha) > 0) {
    c.add(literal("alpha > 0", alpha, Rel::Gt, 0));
    c.add(literal("alpha < 1", alpha, Rel::Lt, 1));
    c.note("x = (1 - g) z + g y with z in C for every y in C and small g > 0");
    return verdict(Answer::In, c);
  }
  c.add(literal("alpha == 0", alpha, Rel::Eq, 0));
  if (n == Notion::Icr) {
    c.note("F_min(x) = L excludes u");
    return verdict(Answer::Out, c);
  }
  c.note("F_min(x) = L and cl L = l2 contains C");
  return verdict(Answer::In, c);
}

Verdict zal_segment(const SeqPoint& xbar, const SeqPoint& p)
{
  Certificate c;
  const Rat t = p.harmonic_coeff() / xbar.harmonic_coeff();
  c.add(harmonic_is(p, Rel::Eq, t * xbar.harmonic_coeff(), "harmonic coefficient of x equals t h_xbar"));
  if (sgn(t) > 0 && t < 1) {
    c.add(literal("t > 0", t, Rel::Gt, 0));
    c.add(literal("t < 1", t, Rel::Lt, 1));
    return verdict(Answer::In, c);
  }
  c.add(literal(sgn(t) == 0 ? "t == 0" : "t == 1", t, Rel::Eq, sgn(t) == 0 ? Rat(0) : Rat(1)));
  c.note("an endpoint of the segment is its own minimal face");
  return verdict(Answer::Out, c);
}

Verdict l1_plus(Notion n, const SeqPoint& p)
{
  if (n == Notion::Icr) {
    Certificate c = detail::majorant_exclusion(p, 1);
    c.note("the majorant y lies in l1+ and outside F_min(x)");
    return verdict(Answer::Out, c);
  }
  LowerBoundCheck pos = entries_at_least(p, 0, true);
  if (!pos.holds)
    return zero_coordinate_out(p, *pos.violation, "every direction C - x has a nonnegative j-th entry");
  Certificate c;
  c.add(sourced("x_i > 0 for all i", Source::AllEntries, p, Rel::Gt, 0));
  c.note("finitely supported points of l1+ lie in F_min(x) and are dense");
  return verdict(Answer::In, c);
}

Verdict zal_sum(Notion n, const SeqPoint& xbar, const SeqPoint& p)
{
  if (n == Notion::Icr) {
    Certificate c = detail::majorant_exclusion(p, 1);
    c.note("the majorant y lies in l1+, hence in C + D, and outside F_min(x)");
    return verdict(Answer::Out, c);
  }
  LowerBoundCheck pos = entries_at_least(p, 0, true);
  if (!pos.holds)
    return zero_coordinate_out(p, *pos.violation,
                               "all points of C + D are nonnegative, so F_min(x) and every direction keep y_j >= 0 "
                               "against x_j = 0");
  const Rat t = p.harmonic_coeff() / xbar.harmonic_coeff();
  SeqPoint d = p - t * xbar;
  Certificate c;
  c.add(harmonic_is(p, Rel::Eq, t * xbar.harmonic_coeff(), "harmonic coefficient of x equals t h_xbar"));
  if (t < 1 && entries_at_least(d, 0, true).holds) {
    c.add(literal("t < 1", t, Rel::Lt, 1));
    c.add(sourced("d_i > 0 for all i", Source::AllEntries, d, Rel::Gt, 0));
    c.note("x + a (x - y^n) stays in C + D for truncations y^n, which are dense");
    if (n == Notion::Qri)
      c.note("fri implies qri");
    return verdict(Answer::In, c);
  }
  if (t == 1 && n == Notion::Fri) {
    c.add(literal("t == 1", t, Rel::Eq, 1));
    c.add(sourced("||xbar||_2^2 > 0", Source::L2NormSqLo, xbar, Rel::Gt, 0));
    c.note("F_min(x) keeps t = 1, so its closure lies in xbar + l2+ whose distance to 0 is ||xbar||_2");
    return verdict(Answer::Out, c);
  }
  c.note("no closed form for this decomposition");
  return verdict(Answer::Inconclusive, c);
}

Verdict gadget_b(const SeqPoint& p)
{
  LowerBoundCheck lb = entries_at_least(p, -1, true);
  Certificate c;
  if (lb.holds) {
    c.add(sourced("x_i > -1 for all i", Source::AllEntries, p, Rel::Gt, -1));
    c.note("entries tend to 0, so the margin to -1 is uniform");
    return verdict(Answer::In, c);
  }
  c.add(sourced("x_" + idx(*lb.violation) + " == -1", Source::Entry, p, Rel::Eq, -1, *lb.violation));
  c.note("F_min(x) and every direction keep y_j >= -1 against x_j = -1");
  return verdict(Answer::Out, c);
}

// Gadget C and C n D at t in (0,1).
Verdict gadget_c_open(Notion n, const SeqPoint& p)
{
  Split sp = split(p);
  const Rat floor = -(1 - sp.t);
  LowerBoundCheck lb = entries_at_least(sp.u, floor, true);
  Certificate c;
  if (lb.holds) {
    c.add(sourced("u_i > -(1 - t) for all i", Source::AllEntries, sp.u, Rel::Gt, floor));
    c.note("w = u/s has a uniform margin in B, so x + e (x - y) stays in the set for small e");
    return verdict(Answer::In, c);
  }
  const std::size_t j = *lb.violation;
  c.add(sourced("u_" + idx(j) + " == -(1 - t)", Source::Entry, sp.u, Rel::Eq, floor, j));
  if (n == Notion::Icr) {
    c.note("0 is in the set but x + e x leaves it for every e > 0, so 0 is not in F_min(x)");
    return verdict(Answer::Out, c);
  }
  c.note("the harmonic coefficient is not continuous in l2; no closed form");
  return verdict(Answer::Inconclusive, c);
}

Verdict gadget_d_excluded(const SeqPoint& p)
{
  Certificate c;
  c.add(harmonic_is(p, Rel::Eq, 0, "x in B (t == 0)"));
  SeqPoint w = detail::harmonic_v() + SeqPoint::unit(1, -3);
  c.add(harmonic_is(w, Rel::Gt, 0, "w = v + head{1:-3} lies in A"));
  c.add(sourced("w_1 < -1, so w is outside cl B", Source::Entry, w, Rel::Lt, -1, 1));
  c.note("no y in D has x in (a, y) for a in A, so F_min(x, D) lies in B");
  return verdict(Answer::Out, c);
}

Verdict interior(Notion n, const ModelSet& m, const SeqPoint& p)
{
  require_member(m, p);
  switch (m.kind) {
    case K::PosBall2:
      return posball2(n, p);
    case K::L1BallInL2:
      return l1ball(n, p);
    case K::ConvL1Point:
      return conv_l1(n, m.param, p);
    case K::ZalSumC:
      return zal_segment(m.param, p);
    case K::ZalL1Plus:
      return l1_plus(n, p);
    case K::ZalSum:
      return zal_sum(n, m.param, p);
    case K::GadgetA: {
      Certificate c;
      c.add(harmonic_is(p, Rel::Gt, 0));
      c.note("for y in A, x + e (x - y) keeps t > 0 for small e");
      return verdict(Answer::In, c);
    }
    case K::GadgetB:
      return gadget_b(p);
    case K::GadgetC:
      return gadget_c_open(n, p);
    case K::GadgetD: {
      if (sgn(p.harmonic_coeff()) > 0) {
        Certificate c;
        c.add(harmonic_is(p, Rel::Gt, 0));
        c.note("x + e (x - y) lies in A for y in D and small e");
        return verdict(Answer::In, c);
      }
      if (n == Notion::Qri) {
        Certificate c;
        c.note("cl A = l2, so the closed cone of D - x is l2");
        return verdict(Answer::In, c);
      }
      return gadget_d_excluded(p);
    }
    case K::GadgetCD: {
      if (sgn(p.harmonic_coeff()) > 0)
        return gadget_c_open(n, p);
      if (n == Notion::Icr) {
        Certificate c;
        c.add(harmonic_is(p, Rel::Eq, 0, "t == 0 (s == 1)"));
        SeqPoint y = Rat(1, 2) * detail::harmonic_v();
        c.add(harmonic_is(y, Rel::Eq, Rat(1, 2), "y = v/2 in C n D"));
        c.note("x + e (x - y) has t = -e/2 < 0, so y is not in F_min(x)");
        return verdict(Answer::Out, c);
      }
      Verdict b = gadget_b(p);
      if (b.answer == Answer::In)
        b.cert.note("B lies in F_min(x): w + e (w - y) stays in B; C n D lies in cl B");
      return b;
    }
  }
  return verdict(Answer::Inconclusive);
}

}  // namespace

Verdict icr_member(const ModelSet& m, const SeqPoint& p) { return interior(Notion::Icr, m, p); }
Verdict fri_member(const ModelSet& m, const SeqPoint& p) { return interior(Notion::Fri, m, p); }
Verdict qri_member(const ModelSet& m, const SeqPoint& p) { return interior(Notion::Qri, m, p); }

// ---------------------------------------------------------------------------
// Minimal faces

std::string to_string(FaceClass::Kind k)
{
  switch (k) {
    case FaceClass::Kind::Singleton:
      return "Singleton";
    case FaceClass::Kind::DominatedDecayClass:
      return "DominatedDecayClass";
    case FaceClass::Kind::SubspaceL:
      return "SubspaceL";
    case FaceClass::Kind::FullSet:
      return "FullSet";
    case FaceClass::Kind::SignSlice:
      return "SignSlice";
  }
  return "?";
}

FaceClass minimal_face_class(const ModelSet& m, const SeqPoint& p)
{
  require_member(m, p);
  using F = FaceClass::Kind;
  auto make = [&](F k) { return FaceClass{k, m, p}; };
  switch (m.kind) {
    case K::PosBall2: {
      NormBound nb = norm_enclosure(p, NormKind::L2);
      if (nb.sq_lo >= 1)
        return make(F::Singleton);
      if (nb.sq_hi < 1)
        return make(F::DominatedDecayClass);
      throw UnsupportedError("norm enclosure of " + format_seqpoint(p) + " does not separate it from the sphere");
    }
    case K::L1BallInL2:
      return make(norm_enclosure(p, NormKind::L1).lo < 1 ? F::FullSet : F::SignSlice);
    case K::ConvL1Point:
      if (p == m.param)
        return make(F::Singleton);
      return make(sgn(p.harmonic_coeff()) == 0 ? F::SubspaceL : F::FullSet);
    case K::ZalSumC: {
      const Rat t = p.harmonic_coeff() / m.param.harmonic_coeff();
      return make(sgn(t) == 0 || t == 1 ? F::Singleton : F::FullSet);
    }
    case K::ZalL1Plus:
      return make(F::DominatedDecayClass);
    case K::GadgetA:
      return make(F::FullSet);
    default:
      break;
  }
  throw UnsupportedError("no minimal-face closed form for " + m.name());
}

bool FaceClass::test_in_face(const SeqPoint& q, Certificate* why) const
{
  Certificate local;
  Certificate& c = why ? *why : local;
  using F = FaceClass::Kind;
  switch (kind) {
    case F::Singleton: {
      bool eq = q == point;
      c.add(literal("q equals the point", eq ? 1 : 0, Rel::Eq, 1));
      return eq;
    }
    case F::DominatedDecayClass:
    case F::SubspaceL:
    case F::FullSet: {
      Verdict mv = member(model, q);
      c.append(mv.cert);
      if (mv.answer != Answer::In)
        return false;
      if (kind == F::FullSet)
        return true;
      if (kind == F::SubspaceL) {
        bool ok = sgn(q.harmonic_coeff()) == 0;
        c.add(harmonic_is(q, ok ? Rel::Eq : Rel::Ne, 0, "q in L"));
        return ok;
      }
      Domination dm = dominates(point, q);
      c.note("domination: " + dm.reason);
      if (!dm.holds)
        return false;
      c.add(literal("eps with |x_i| >= eps |q_i| for all i", dm.eps, Rel::Gt, 0));
      return true;
    }
    case F::SignSlice: {
      NormBound nb = norm_enclosure(q, NormKind::L1);
      if (nb.divergent || nb.lo != 1) {
        c.note("||q||_1 != 1");
        return false;
      }
      c.add(sourced("||q||_1 == 1", Source::L1Norm, q, Rel::Eq, 1));
      if (!sign_compatible(point, q)) {
        c.note("q has an entry of the wrong sign");
        return false;
      }
      c.note("q vanishes or agrees in sign with x entrywise");
      Domination dm = dominates(point, q);
      c.note("domination: " + dm.reason);
      if (!dm.holds)
        return false;
      c.add(literal("eps with |x_i| >= eps |q_i| for all i", dm.eps, Rel::Gt, 0));
      return true;
    }
  }
  return false;
}

}  // namespace facekit
