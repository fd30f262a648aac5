#include "facekit/errors.hpp"
#include "facekit/seqmodels.hpp"
#include "internal.hpp"

#include <stdexcept>

namespace facekit {

namespace {

constexpr std::size_t kThresholdCap = 200000;
constexpr std::size_t kStabilizeCap = 100000;

// Entries of p in increasing index order, one multiplication per term.
class EntryStream {
 public:
  explicit EntryStream(const SeqPoint& p) : p_(p)
  {
    for (const auto& [r, c] : p.geometric_terms())
      terms_.push_back({r, c});
  }

  Rat next()
  {
    ++i_;
    Rat v = 0;
    if (auto it = p_.head().find(i_); it != p_.head().end())
      v += it->second;
    if (sgn(p_.harmonic_coeff()) != 0)
      v += p_.harmonic_coeff() / Rat(static_cast<unsigned long>(i_));
    for (auto& t : terms_) {
      t.value *= t.ratio;
      v += t.value;
    }
    return v;
  }

  std::size_t index() const { return i_; }

 private:
  struct Term {
    Rat ratio;
    Rat value;  // c r^i
  };
  const SeqPoint& p_;
  std::vector<Term> terms_;
  std::size_t i_ = 0;
};

Rat largest_ratio(const SeqPoint& x)
{
  return x.geometric_terms().empty() ? Rat(0) : x.geometric_terms().rbegin()->first;
}

}  // namespace

MajorantPlan auto_plan(const SeqPoint& x, const Rat& delta, int d)
{
  if (sgn(delta) <= 0)
    throw InputError("majorant norm must be positive");
  if (d != 1 && d != 2)
    throw InputError("majorant exponent must be 1 or 2");
  const Rat rx = largest_ratio(x);
  MajorantPlan plan;
  plan.delta = delta;
  plan.d = d;
  for (unsigned long n = 2;; ++n) {
    Rat r, c;
    if (d == 1) {
      r = 1 - Rat(1, n);
      c = delta * (1 - r) / r;
    } else {
      Rat n2(n * n);
      r = (n2 - 1) / (n2 + 1);
      c = delta * Rat(2 * n) / (n2 - 1);
    }
    if (r > rx) {
      plan.z = SeqPoint::geometric(c, r);
      return plan;
    }
  }
}

std::size_t majorant_threshold(const SeqPoint& x, const Rat& zk, std::size_t k)
{
  if (sgn(zk) <= 0 || k == 0)
    throw InputError("majorant threshold needs z_k > 0 and k >= 1");
  const Rat tau = zk / Rat(static_cast<unsigned long>(k));
  Dominant d = dominant_term(x);
  // Past n0 every |x_m| <= 3/2 |D_m| < tau.
  std::size_t n0 = d.control;
  if (d.kind == Dominant::Kind::Harmonic) {
    Rat q = 3 * abs(d.coeff) / (2 * tau);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (fl >= Int(static_cast<unsigned long>(kThresholdCap)))
      throw UnsupportedError("majorant threshold beyond the scan cap");
    n0 = std::max(n0, static_cast<std::size_t>(fl.get_ui()) + 1);
  } else if (d.kind == Dominant::Kind::Geometric) {
    Rat v = 3 * abs(d.value(n0)) / 2;
    while (v >= tau) {
      if (++n0 > kThresholdCap)
        throw UnsupportedError("majorant threshold beyond the scan cap");
      v *= d.ratio;
    }
  }
  std::vector<Rat> e = x.entries(n0 - 1);
  for (std::size_t m = e.size(); m >= 1; --m)
    if (abs(e[m - 1]) >= tau)
      return m + 1;
  return 1;
}

void majorant_schedule(const SeqPoint& x, MajorantPlan& plan, std::size_t count)
{
  plan.schedule.clear();
  EntryStream z(plan.z);
  for (std::size_t k = 1; k <= count; ++k) {
    std::size_t n = majorant_threshold(x, z.next(), k);
    if (k > 1)
      n = std::max(n, plan.schedule.back() + 1);
    plan.schedule.push_back(n);
  }
}

SeqPoint majorant_construct(const SeqPoint& x, MajorantPlan& plan)
{
  const SeqPoint& z = plan.z;
  if (sgn(z.harmonic_coeff()) != 0 || z.geometric_terms().empty())
    throw PreconditionError("majorant z must carry geometric tails only");
  if (!entries_at_least(z, 0, true).holds)
    throw PreconditionError("majorant z must be positive");
  if (plan.d == 1) {
    NormBound nb = norm_enclosure(z, NormKind::L1);
    if (!nb.exact || nb.lo != plan.delta)
      throw PreconditionError("||z||_1 must equal delta");
  } else if (plan.d == 2) {
    NormBound nb = norm_enclosure(z, NormKind::L2);
    if (!nb.sq_exact || nb.sq_lo != plan.delta * plan.delta)
      throw PreconditionError("||z||_2 must equal delta");
  } else {
    throw PreconditionError("majorant exponent must be 1 or 2");
  }

  Dominant dx = dominant_term(x);
  if (dx.kind == Dominant::Kind::Harmonic)
    throw UnsupportedError("harmonic x: the schedule never settles into a shift, y has no closed form");

  Dominant dz = dominant_term(z);
  const Rat rz = dz.ratio;
  if (dx.kind == Dominant::Kind::Geometric && dx.ratio >= rz)
    throw UnsupportedError("z must decay more slowly than x");

  // Run the recursion until N(k) = k + o is forced for all later k: with no tail
  // once N(k) passes the head; otherwise once 3|c_x| r_x^o k q^k < c_z with
  // q = r_x / r_z, k past the point where k q^k decreases and both controls.
  std::size_t kmin = dz.control;
  Rat q;
  if (dx.kind == Dominant::Kind::Geometric) {
    q = dx.ratio / rz;
    Rat knee = q / (1 - q);
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), knee.get_num_mpz_t(), knee.get_den_mpz_t());
    kmin = std::max<std::size_t>(kmin, c.get_ui());
  }
  plan.schedule.clear();
  EntryStream zs(z);
  std::size_t k0 = 0;
  for (std::size_t k = 1; k <= kStabilizeCap; ++k) {
    std::size_t n = majorant_threshold(x, zs.next(), k);
    if (k > 1)
      n = std::max(n, plan.schedule.back() + 1);
    plan.schedule.push_back(n);
    const std::size_t o = n - k;
    if (dx.kind == Dominant::Kind::None) {
      if (n >= x.head_end()) {
        k0 = k;
        break;
      }
      continue;
    }
    if (k < kmin || n < dx.control)
      continue;
    Rat lhs = 3 * abs(dx.coeff) * pow(dx.ratio, o) * Rat(static_cast<unsigned long>(k)) * pow(q, k);
    if (lhs < abs(dz.coeff)) {
      k0 = k;
      break;
    }
  }
  if (k0 == 0)
    throw UnsupportedError("majorant schedule did not settle within the scan cap");

  const std::size_t o = plan.schedule[k0 - 1] - k0;
  plan.offset = o;
  plan.stable_from = k0;

  // y_i = z_{i-o} from N(k0) on, scheduled values below.
  SeqPoint y;
  for (const auto& [r, c] : z.geometric_terms())
    y = y + SeqPoint::geometric(c / pow(r, o), r);
  const std::size_t nk0 = plan.schedule[k0 - 1];
  std::vector<Rat> zhead = z.entries(k0 + z.head_end());
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t k = 1; k < k0; ++k)
    slot[plan.schedule[k - 1]] = k;
  for (std::size_t i = 1; i < nk0; ++i) {
    auto it = slot.find(i);
    y.set_entry(i, it == slot.end() ? Rat(0) : zhead[it->second - 1]);
  }
  for (std::size_t i = nk0; i <= o + z.head_end(); ++i)
    y.set_entry(i, z.entry(i - o));

  // Later schedule entries follow the shift; record a few for audit.
  for (std::size_t k = k0 + 1; k <= k0 + 5; ++k)
    plan.schedule.push_back(k + o);

  if (plan.d == 1) {
    NormBound nb = norm_enclosure(y, NormKind::L1);
    if (!nb.exact || nb.lo != plan.delta)
      throw std::logic_error("majorant lost its norm");
  } else {
    NormBound nb = norm_enclosure(y, NormKind::L2);
    if (!nb.sq_exact || nb.sq_lo != plan.delta * plan.delta)
      throw std::logic_error("majorant lost its norm");
  }
  return y;
}

std::optional<std::size_t> majorant_verify(const SeqPoint& x, const SeqPoint& y, const Rat& eps, std::size_t bound)
{
  EntryStream xs(x), ys(y);
  for (std::size_t i = 1; i <= bound; ++i) {
    Rat xi = xs.next();
    Rat yi = ys.next();
    if (abs(xi) < eps * yi)
      return i;
  }
  return std::nullopt;
}

namespace detail {

const SeqPoint& harmonic_v()
{
  static const SeqPoint v = SeqPoint::harmonic(1);
  return v;
}

Certificate majorant_exclusion(const SeqPoint& x, int d)
{
  Certificate c;
  MajorantPlan plan = auto_plan(x, 1, d);
  const std::string norm = d == 1 ? "||y||_1 == 1" : "||y||_2^2 == 1";
  c.note("z = " + format_seqpoint(plan.z) + ", y_{N(k)} = z_k, N(k) = max(N'(k), N(k-1)+1)");
  try {
    SeqPoint y = majorant_construct(x, plan);
    c.note("y = " + format_seqpoint(y));
    if (d == 1) {
      c.add(sourced(norm, Source::L1Norm, y, Rel::Eq, 1));
    } else {
      c.add(sourced(norm, Source::L2NormSqLo, y, Rel::Eq, 1));
      c.add(sourced(norm, Source::L2NormSqHi, y, Rel::Eq, 1));
    }
    c.add(sourced("y_i >= 0 for all i", Source::AllEntries, y, Rel::Ge, 0));
    for (const Rat& eps : {Rat(1), Rat(1, 10), Rat(1, 100)}) {
      auto i = majorant_verify(x, y, eps, 10000);
      if (!i)
        throw std::logic_error("majorant does not beat x");
      c.add(sourced("|x_" + std::to_string(*i) + "| < " + to_string(eps) + " * y_i", Source::AbsEntry, x, Rel::Lt,
                    eps * y.entry(*i), *i));
      c.add(sourced("y_" + std::to_string(*i), Source::Entry, y, Rel::Eq, y.entry(*i), *i));
    }
    c.note("for every eps > 0, i = N(k) with k > 1/eps gives |x_i| < eps y_i");
  } catch (const UnsupportedError& e) {
    // y has no closed form in the point language; certify the schedule prefix.
    c.note(std::string("closed form unavailable: ") + e.what());
    const std::size_t K = 8;
    majorant_schedule(x, plan, K);
    c.add(sourced("||z||", d == 1 ? Source::L1Norm : Source::L2NormSqLo, plan.z, Rel::Eq, 1));
    for (std::size_t k = 1; k <= K; ++k) {
      const std::size_t n = plan.schedule[k - 1];
      Rat bound = plan.z.entry(k) / Rat(static_cast<unsigned long>(k));
      c.add(sourced("|x_" + std::to_string(n) + "| < z_" + std::to_string(k) + "/" + std::to_string(k),
                    Source::AbsEntry, x, Rel::Lt, bound, n));
      if (k > 1)
        c.add(literal("N(" + std::to_string(k) + ") > N(" + std::to_string(k - 1) + ")", Rat(n), Rel::Gt,
                      Rat(static_cast<unsigned long>(plan.schedule[k - 2]))));
    }
    c.note("prefix verification: N'(k) holds for every later index by the tail bound, for k <= 8");
  }
  c.note("if y were in F_min(x), x = a y + (1 - a) z' would force z'_i < 0 at an index with |x_i| < a y_i");
  return c;
}

}  // namespace detail

}  // namespace facekit
