#include "facekit/rational.hpp"

#include "facekit/errors.hpp"

#include <cctype>
#include <sstream>

namespace facekit {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

void check_same_dim(const RatVec& a, const RatVec& b)
{
  if (a.size() != b.size())
    throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
}

}  // namespace

Rat parse_rat(std::string_view text)
{
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat q(n, d);
  q.canonicalize();
  return negative ? Rat(-q) : q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

std::string to_string(const RatVec& v)
{
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out << ", ";
    out << to_string(v[i]);
  }
  out << ')';
  return out.str();
}

RatVec unit_vector(std::size_t dim, std::size_t axis)
{
  RatVec e = zeros(dim);
  e.at(axis) = 1;
  return e;
}

Rat dot(const RatVec& a, const RatVec& b)
{
  check_same_dim(a, b);
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

RatVec operator+(const RatVec& a, const RatVec& b)
{
  check_same_dim(a, b);
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b)
{
  check_same_dim(a, b);
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

RatVec operator-(const RatVec& a)
{
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = -a[i];
  return r;
}

RatVec operator*(const Rat& s, const RatVec& a)
{
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = s * a[i];
  return r;
}

bool is_zero(const RatVec& v)
{
  for (const Rat& q : v)
    if (sgn(q) != 0)
      return false;
  return true;
}

std::strong_ordering lex_compare(const RatVec& a, const RatVec& b)
{
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

Rat abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

Rat pow(const Rat& base, unsigned long exponent)
{
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

RatVec primitive(const RatVec& v)
{
  if (is_zero(v))
    return v;
  Int den_lcm = 1;
  for (const Rat& q : v)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  Int num_gcd = 0;
  for (const Rat& q : v) {
    Int scaled = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int scaled = v[i].get_num() * (den_lcm / v[i].get_den());
    r[i] = Rat(scaled / num_gcd);
  }
  return r;
}

Rat max_norm(const RatVec& v)
{
  Rat m = 0;
  for (const Rat& q : v)
    if (abs(q) > m)
      m = abs(q);
  return m;
}

}  // namespace facekit
