#include "facekit/seqpoint.hpp"

#include "facekit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace facekit {

namespace {

constexpr std::size_t kScanCap = 1000000;

void check_ratio(const Rat& r)
{
  if (sgn(r) <= 0 || r >= 1)
    throw InputError("geometric ratio must lie strictly between 0 and 1, got " + to_string(r));
}

Rat ceil_rat(const Rat& q)
{
  Int n = q.get_num();
  Int d = q.get_den();
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return Rat(c);
}

std::size_t to_index(const Rat& q)
{
  Rat c = ceil_rat(q);
  if (c < 1)
    return 1;
  if (c > Rat(static_cast<unsigned long>(kScanCap)))
    throw UnsupportedError("index bound beyond the scan cap");
  return static_cast<std::size_t>(c.get_num().get_ui());
}

}  // namespace

SeqPoint SeqPoint::finite(const std::map<std::size_t, Rat>& head)
{
  SeqPoint p;
  for (const auto& [i, v] : head) {
    if (i == 0)
      throw InputError("sequence indices start at 1");
    p.head_[i] = v;
  }
  p.normalize();
  return p;
}

SeqPoint SeqPoint::unit(std::size_t index, const Rat& value) { return finite({{index, value}}); }

SeqPoint SeqPoint::harmonic(const Rat& scale, std::size_t start)
{
  return make({}, Tail{Tail::Kind::Harmonic, scale, Rat(0), start});
}

SeqPoint SeqPoint::geometric(const Rat& scale, const Rat& ratio, std::size_t start)
{
  return make({}, Tail{Tail::Kind::Geometric, scale, ratio, start});
}

SeqPoint SeqPoint::make(const std::map<std::size_t, Rat>& head, const Tail& tail)
{
  if (tail.kind != Tail::Kind::None) {
    if (tail.start == 0)
      throw InputError("tail start must be positive");
    if (!head.empty() && head.rbegin()->first >= tail.start)
      throw InputError("head index " + std::to_string(head.rbegin()->first) + " is not below the tail start " +
                       std::to_string(tail.start));
  }
  SeqPoint p = finite(head);
  if (tail.kind == Tail::Kind::Harmonic) {
    p.harmonic_ += tail.scale;
    for (std::size_t i = 1; i < tail.start; ++i)
      p.head_[i] -= tail.scale / Rat(static_cast<unsigned long>(i));
  } else if (tail.kind == Tail::Kind::Geometric) {
    check_ratio(tail.ratio);
    p.geometric_[tail.ratio] += tail.scale;
    Rat power = tail.ratio;
    for (std::size_t i = 1; i < tail.start; ++i, power *= tail.ratio)
      p.head_[i] -= tail.scale * power;
  }
  p.normalize();
  return p;
}

void SeqPoint::normalize()
{
  for (auto it = head_.begin(); it != head_.end();)
    it = sgn(it->second) == 0 ? head_.erase(it) : std::next(it);
  for (auto it = geometric_.begin(); it != geometric_.end();)
    it = sgn(it->second) == 0 ? geometric_.erase(it) : std::next(it);
}

Rat SeqPoint::entry(std::size_t i) const
{
  if (i == 0)
    throw InputError("sequence indices start at 1");
  Rat v = 0;
  if (auto it = head_.find(i); it != head_.end())
    v += it->second;
  if (sgn(harmonic_) != 0)
    v += harmonic_ / Rat(static_cast<unsigned long>(i));
  for (const auto& [r, c] : geometric_)
    v += c * pow(r, i);
  return v;
}

std::vector<Rat> SeqPoint::entries(std::size_t n) const
{
  std::vector<Rat> out(n, Rat(0));
  for (const auto& [i, v] : head_)
    if (i <= n)
      out[i - 1] += v;
  if (sgn(harmonic_) != 0)
    for (std::size_t i = 1; i <= n; ++i)
      out[i - 1] += harmonic_ / Rat(static_cast<unsigned long>(i));
  for (const auto& [r, c] : geometric_) {
    Rat term = c * r;
    for (std::size_t i = 1; i <= n; ++i, term *= r)
      out[i - 1] += term;
  }
  return out;
}

void SeqPoint::set_entry(std::size_t i, const Rat& value)
{
  Rat delta = value - entry(i);
  head_[i] += delta;
  normalize();
}

SeqPoint SeqPoint::truncated(std::size_t n) const
{
  std::vector<Rat> e = entries(n);
  std::map<std::size_t, Rat> h;
  for (std::size_t i = 0; i < n; ++i)
    h[i + 1] = e[i];
  return finite(h);
}

SeqPoint SeqPoint::operator+(const SeqPoint& o) const
{
  SeqPoint p = *this;
  for (const auto& [i, v] : o.head_)
    p.head_[i] += v;
  p.harmonic_ += o.harmonic_;
  for (const auto& [r, c] : o.geometric_)
    p.geometric_[r] += c;
  p.normalize();
  return p;
}

SeqPoint SeqPoint::operator-() const { return Rat(-1) * *this; }

SeqPoint SeqPoint::operator-(const SeqPoint& o) const { return *this + (-o); }

SeqPoint operator*(const Rat& s, const SeqPoint& p)
{
  SeqPoint q = p;
  for (auto& [i, v] : q.head_)
    v *= s;
  q.harmonic_ *= s;
  for (auto& [r, c] : q.geometric_)
    c *= s;
  q.normalize();
  return q;
}

// ---------------------------------------------------------------------------
// Text syntax

SeqPoint parse_seqpoint(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;)
    tok.push_back(t);
  if (tok.empty())
    throw ParseError("empty sequence point");

  std::size_t k = 0;
  std::map<std::size_t, Rat> head;
  if (tok[k] == "head") {
    ++k;
    if (k < tok.size() && tok[k] != "tail") {
      std::string list = tok[k++];
      std::size_t pos = 0;
      while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string::npos)
          comma = list.size();
        std::string item = list.substr(pos, comma - pos);
        pos = comma + 1;
        auto eq = item.find('=');
        if (eq == std::string::npos)
          throw ParseError("head entry '" + item + "' is not of the form i=p/q");
        Rat idx = parse_rat(item.substr(0, eq));
        if (idx.get_den() != 1 || sgn(idx) <= 0 || idx > Rat(static_cast<unsigned long>(kScanCap)))
          throw ParseError("head index '" + item.substr(0, eq) + "' must be a positive integer");
        std::size_t i = idx.get_num().get_ui();
        if (head.count(i))
          throw ParseError("head index " + std::to_string(i) + " given twice");
        head[i] = parse_rat(item.substr(eq + 1));
      }
    }
  }

  std::vector<Tail> tails;
  while (k < tok.size()) {
    if (tok[k] != "tail" || k + 2 >= tok.size())
      throw ParseError("expected 'tail harmonic s@n' or 'tail geometric s,r@n' near '" + tok[k] + "'");
    const std::string& kind = tok[k + 1];
    std::string arg = tok[k + 2];
    k += 3;
    std::size_t start = 1;
    if (auto at = arg.find('@'); at != std::string::npos) {
      Rat n = parse_rat(arg.substr(at + 1));
      if (n.get_den() != 1 || sgn(n) <= 0 || n > Rat(static_cast<unsigned long>(kScanCap)))
        throw ParseError("tail start must be a positive integer");
      start = n.get_num().get_ui();
      arg = arg.substr(0, at);
    }
    Tail t;
    t.start = start;
    if (kind == "harmonic") {
      t.kind = Tail::Kind::Harmonic;
      t.scale = parse_rat(arg);
    } else if (kind == "geometric") {
      auto comma = arg.find(',');
      if (comma == std::string::npos)
        throw ParseError("geometric tail needs 's,r'");
      t.kind = Tail::Kind::Geometric;
      t.scale = parse_rat(arg.substr(0, comma));
      t.ratio = parse_rat(arg.substr(comma + 1));
      if (sgn(t.ratio) <= 0 || t.ratio >= 1)
        throw ParseError("geometric ratio must lie strictly between 0 and 1");
    } else {
      throw ParseError("unknown tail kind '" + kind + "'");
    }
    tails.push_back(t);
  }

  SeqPoint p = SeqPoint::finite(head);
  for (const Tail& t : tails) {
    if (!head.empty() && head.rbegin()->first >= t.start)
      throw ParseError("head index " + std::to_string(head.rbegin()->first) + " is not below the tail start " +
                       std::to_string(t.start));
    p = p + SeqPoint::make({}, t);
  }
  return p;
}

std::string format_seqpoint(const SeqPoint& p)
{
  // Tails are written from one index past the head, with the explicit entries
  // before that in the head.
  const std::size_t start = p.has_tail() ? p.head_end() + 1 : 0;
  std::string out = "head";
  std::vector<std::pair<std::size_t, Rat>> listed;
  if (p.has_tail()) {
    std::vector<Rat> e = p.entries(start - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (sgn(e[i]) != 0)
        listed.emplace_back(i + 1, e[i]);
  } else {
    for (const auto& [i, v] : p.head())
      listed.emplace_back(i, v);
  }
  for (std::size_t j = 0; j < listed.size(); ++j)
    out += (j == 0 ? " " : ",") + std::to_string(listed[j].first) + "=" + to_string(listed[j].second);
  if (!p.has_tail())
    return out;
  const std::string at = "@" + std::to_string(start);
  if (sgn(p.harmonic_coeff()) != 0) {
    Rat h = p.harmonic_coeff();
    out += " tail harmonic " + to_string(h) + at;
  }
  for (auto it = p.geometric_terms().rbegin(); it != p.geometric_terms().rend(); ++it) {
    const auto& [r, c] = *it;
    out += " tail geometric " + to_string(c) + "," + to_string(r) + at;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Asymptotics

Rat Dominant::value(std::size_t i) const
{
  switch (kind) {
    case Kind::Harmonic:
      return coeff / Rat(static_cast<unsigned long>(i));
    case Kind::Geometric:
      return coeff * pow(ratio, i);
    case Kind::None:
      break;
  }
  return Rat(0);
}

Dominant dominant_term(const SeqPoint& p)
{
  Dominant d;
  const std::size_t base = p.head_end() + 1;
  d.control = base;
  const auto& geo = p.geometric_terms();
  if (sgn(p.harmonic_coeff()) != 0) {
    d.kind = Dominant::Kind::Harmonic;
    d.coeff = p.harmonic_coeff();
    const Rat bound = abs(d.coeff) / Rat(static_cast<unsigned long>(2 * std::max<std::size_t>(geo.size(), 1)));
    for (const auto& [r, c] : geo) {
      // i r^i decreases from i >= r / (1 - r) on.
      std::size_t i = std::max(base, to_index(r / (1 - r)));
      Rat term = abs(c) * Rat(static_cast<unsigned long>(i)) * pow(r, i);
      while (term > bound) {
        if (++i > kScanCap)
          throw UnsupportedError("tail comparison exceeds the scan cap");
        term = abs(c) * Rat(static_cast<unsigned long>(i)) * pow(r, i);
      }
      d.control = std::max(d.control, i);
    }
    return d;
  }
  if (!geo.empty()) {
    auto top = std::prev(geo.end());
    d.kind = Dominant::Kind::Geometric;
    d.ratio = top->first;
    d.coeff = top->second;
    const Rat bound = abs(d.coeff) / Rat(static_cast<unsigned long>(2 * std::max<std::size_t>(geo.size() - 1, 1)));
    for (auto it = geo.begin(); it != top; ++it) {
      Rat q = it->first / d.ratio;
      std::size_t i = base;
      Rat term = abs(it->second) * pow(q, i);
      while (term > bound) {
        if (++i > kScanCap)
          throw UnsupportedError("tail comparison exceeds the scan cap");
        term *= q;
      }
      d.control = std::max(d.control, i);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Norms

Rat enclosure_width() { return Rat(1, 1000000000000UL); }

void inverse_square_tail(std::size_t n, Rat& lo, Rat& hi)
{
  if (n == 0)
    throw InputError("inverse_square_tail needs n >= 1");
  Rat N(static_cast<unsigned long>(n));
  hi = 1 / N + 1 / (2 * N * N) + 1 / (6 * N * N * N);
  lo = hi - 1 / (30 * N * N * N * N * N);
}

void sqrt_enclosure(const Rat& q, Rat& lo, Rat& hi)
{
  if (sgn(q) < 0)
    throw InputError("square root of a negative number");
  Int num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    Int a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    lo = hi = Rat(a, b);
    lo.canonicalize();
    hi.canonicalize();
    return;
  }
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 15);
  Rat scaled = q * Rat(scale * scale);
  Int fl, cl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpz_cdiv_q(cl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Int s, t;
  mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
  mpz_sqrt(t.get_mpz_t(), cl.get_mpz_t());
  if (t * t < cl)
    t += 1;
  lo = Rat(s, scale);
  hi = Rat(t, scale);
  lo.canonicalize();
  hi.canonicalize();
}

namespace {

// sum_{i >= n} (sum_r c_r r^i)^2, exact.
Rat geometric_square_tail(const std::map<Rat, Rat>& geo, std::size_t n)
{
  Rat s = 0;
  for (const auto& [r, c] : geo)
    for (const auto& [r2, c2] : geo) {
      Rat rr = r * r2;
      s += c * c2 * pow(rr, n) / (1 - rr);
    }
  return s;
}

}  // namespace

NormBound norm_enclosure(const SeqPoint& p, NormKind which)
{
  NormBound b;
  b.which = which;
  const auto& geo = p.geometric_terms();
  if (which == NormKind::L1) {
    if (sgn(p.harmonic_coeff()) != 0) {
      b.divergent = true;
      return b;
    }
    Dominant d = dominant_term(p);
    Rat s = 0;
    std::vector<Rat> e = p.entries(d.control - 1);
    for (const Rat& v : e)
      s += abs(v);
    // beyond the control index all entries share the sign of the dominant term
    Rat tail = 0;
    for (const auto& [r, c] : geo)
      tail += c * pow(r, d.control) / (1 - r);
    s += sgn(d.coeff) < 0 ? Rat(-tail) : tail;
    b.lo = b.hi = s;
    b.exact = true;
    b.sq_lo = b.sq_hi = s * s;
    b.sq_exact = true;
    return b;
  }

  const std::size_t n0 = p.head_end() + 1;
  if (sgn(p.harmonic_coeff()) == 0) {
    Rat s = 0;
    for (const Rat& v : p.entries(n0 - 1))
      s += v * v;
    s += geometric_square_tail(geo, n0);
    b.sq_lo = b.sq_hi = s;
    b.sq_exact = true;
  } else {
    const Rat h = p.harmonic_coeff();
    std::size_t n = std::max<std::size_t>(n0, 16);
    Rat partial = 0;
    std::size_t summed = 1;  // entries 1 .. summed-1 are in partial
    for (;;) {
      std::vector<Rat> e = p.entries(n - 1);
      for (; summed < n; ++summed)
        partial += e[summed - 1] * e[summed - 1];
      Rat zlo, zhi;
      inverse_square_tail(n, zlo, zhi);
      Rat lo = partial + h * h * zlo + geometric_square_tail(geo, n);
      Rat hi = partial + h * h * zhi + geometric_square_tail(geo, n);
      // cross terms 2 h c_r sum_{i >= n} r^i / i with r^n/n <= sum <= r^n/(n(1-r))
      const Rat N(static_cast<unsigned long>(n));
      for (const auto& [r, c] : geo) {
        Rat k = 2 * h * c;
        Rat s_lo = pow(r, n) / N;
        Rat s_hi = s_lo / (1 - r);
        if (sgn(k) > 0) {
          lo += k * s_lo;
          hi += k * s_hi;
        } else {
          lo += k * s_hi;
          hi += k * s_lo;
        }
      }
      b.sq_lo = lo;
      b.sq_hi = hi;
      if (hi - lo <= enclosure_width() || n >= 4096)
        break;
      n *= 2;
    }
    if (sgn(b.sq_lo) < 0)
      b.sq_lo = 0;
  }
  Rat a, c;
  sqrt_enclosure(b.sq_lo, a, c);
  b.lo = a;
  sqrt_enclosure(b.sq_hi, a, c);
  b.hi = c;
  b.exact = b.sq_exact && b.lo == b.hi;
  return b;
}

// ---------------------------------------------------------------------------
// Entrywise tests

LowerBoundCheck entries_at_least(const SeqPoint& p, const Rat& kappa, bool strict)
{
  LowerBoundCheck out;
  auto below = [&](const Rat& v) { return strict ? v <= kappa : v < kappa; };
  Dominant d = dominant_term(p);

  if (sgn(kappa) > 0) {
    // Entries tend to zero, so some entry falls below kappa.
    for (std::size_t i = 1; i <= kScanCap; ++i) {
      if (below(p.entry(i))) {
        out.violation = i;
        out.scanned = i;
        return out;
      }
    }
    throw UnsupportedError("no entry below a positive bound within the scan cap");
  }

  std::size_t end = d.control;
  if (sgn(kappa) < 0 && d.kind != Dominant::Kind::None) {
    // |x_i| <= 3/2 |D_i| < |kappa| from `end` on; |D_i| is decreasing.
    const Rat lim = abs(kappa) * Rat(2, 3);
    if (d.kind == Dominant::Kind::Harmonic) {
      end = std::max(end, to_index(abs(d.coeff) / lim) + 1);
    } else {
      Rat v = abs(d.value(end));
      while (v >= lim) {
        if (++end > kScanCap)
          throw UnsupportedError("lower-bound scan exceeds the cap");
        v *= d.ratio;
      }
    }
  }
  std::vector<Rat> e = p.entries(end - 1);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (below(e[i])) {
      out.violation = i + 1;
      out.scanned = i + 1;
      return out;
    }
  out.scanned = end - 1;
  if (sgn(kappa) == 0) {
    if (d.kind == Dominant::Kind::None) {
      if (strict) {
        out.violation = end;
        return out;
      }
    } else if (sgn(d.coeff) < 0) {
      out.violation = d.control;
      return out;
    }
  }
  out.holds = true;
  return out;
}

Domination dominates(const SeqPoint& x, const SeqPoint& q)
{
  Domination out;
  if (q.is_zero()) {
    out.holds = true;
    out.eps = 1;
    out.reason = "q is zero";
    return out;
  }
  Dominant dx = dominant_term(x);
  Dominant dq = dominant_term(q);
  std::size_t I = std::max(dx.control, dq.control);

  std::optional<Rat> tail_eps;
  using K = Dominant::Kind;
  if (dq.kind == K::None) {
    out.reason = "q is eventually zero";
  } else if (dx.kind == K::None) {
    out.violation = I;
    out.reason = "x is eventually zero while q is not";
    return out;
  } else if (dx.kind == K::Harmonic) {
    if (dq.kind == K::Harmonic) {
      tail_eps = abs(dx.coeff) / abs(dq.coeff) / 3;
      out.reason = "both tails harmonic";
    } else {
      I = std::max(I, to_index(dq.ratio / (1 - dq.ratio)));
      Rat iri = Rat(static_cast<unsigned long>(I)) * pow(dq.ratio, I);
      tail_eps = abs(dx.coeff) / (abs(dq.coeff) * iri) / 3;
      out.reason = "harmonic x decays slower than geometric q";
    }
  } else {
    if (dq.kind == K::Harmonic) {
      out.reason = "geometric x decays faster than harmonic q";
      return out;
    }
    if (dq.ratio > dx.ratio) {
      out.reason = "x decays with ratio " + to_string(dx.ratio) + " < " + to_string(dq.ratio);
      return out;
    }
    tail_eps = abs(dx.coeff) / abs(dq.coeff) * pow(dx.ratio / dq.ratio, I) / 3;
    out.reason = "geometric ratios compare as " + to_string(dq.ratio) + " <= " + to_string(dx.ratio);
  }

  std::vector<Rat> ex = x.entries(I - 1);
  std::vector<Rat> eq = q.entries(I - 1);
  std::optional<Rat> eps = tail_eps;
  for (std::size_t i = 0; i + 1 < I; ++i) {
    if (sgn(eq[i]) == 0)
      continue;
    if (sgn(ex[i]) == 0) {
      out.violation = i + 1;
      out.reason = "x vanishes where q does not";
      return out;
    }
    Rat r = abs(ex[i]) / abs(eq[i]);
    if (!eps || r < *eps)
      eps = r;
  }
  out.holds = true;
  out.eps = eps ? *eps : Rat(1);
  return out;
}

bool sign_compatible(const SeqPoint& x, const SeqPoint& q)
{
  Dominant dx = dominant_term(x);
  Dominant dq = dominant_term(q);
  const std::size_t I = std::max(dx.control, dq.control);
  std::vector<Rat> ex = x.entries(I - 1);
  std::vector<Rat> eq = q.entries(I - 1);
  for (std::size_t i = 0; i + 1 < I; ++i)
    if (sgn(eq[i]) != 0 && sgn(eq[i]) != sgn(ex[i]))
      return false;
  if (dq.kind == Dominant::Kind::None)
    return true;
  if (dx.kind == Dominant::Kind::None)
    return false;
  return sgn(dx.coeff) == sgn(dq.coeff);
}

}  // namespace facekit
