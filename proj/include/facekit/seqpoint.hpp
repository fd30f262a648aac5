#ifndef FACEKIT_SEQPOINT_HPP
#define FACEKIT_SEQPOINT_HPP

#include "facekit/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facekit {

// A named tail as written in the point syntax: harmonic entries scale/i and
// geometric entries scale * ratio^i, both for i >= start.
struct Tail {
  enum class Kind { None, Harmonic, Geometric };
  Kind kind = Kind::None;
  Rat scale;
  Rat ratio;
  std::size_t start = 1;
};

// A real sequence (x_1, x_2, ...) of the form
//   x_i = head_i + h / i + sum_r c_r r^i
// with finitely many nonzero head entries and finitely many geometric terms
// (0 < r < 1). Geometric and harmonic terms all run from i = 1; a tail that
// starts later is absorbed by subtracting its early values in the head. The
// form is unique, so == is value equality. The class is closed under linear
// combinations, which the gadget constructions rely on.
class SeqPoint {
 public:
  SeqPoint() = default;

  static SeqPoint finite(const std::map<std::size_t, Rat>& head);
  static SeqPoint unit(std::size_t index, const Rat& value = Rat(1));
  static SeqPoint harmonic(const Rat& scale, std::size_t start = 1);
  static SeqPoint geometric(const Rat& scale, const Rat& ratio, std::size_t start = 1);
  // head plus one tail, as in the text syntax; head indices may not reach
  // the tail start.
  static SeqPoint make(const std::map<std::size_t, Rat>& head, const Tail& tail);

  Rat entry(std::size_t i) const;
  /// Entries 1..n, computed incrementally.
  std::vector<Rat> entries(std::size_t n) const;

  const std::map<std::size_t, Rat>& head() const { return head_; }
  const Rat& harmonic_coeff() const { return harmonic_; }
  // ratio -> coefficient
  const std::map<Rat, Rat>& geometric_terms() const { return geometric_; }

  bool has_tail() const { return sgn(harmonic_) != 0 || !geometric_.empty(); }
  bool is_zero() const { return head_.empty() && !has_tail(); }
  /// Largest index with a nonzero head entry, 0 when the head is empty.
  std::size_t head_end() const { return head_.empty() ? 0 : head_.rbegin()->first; }

  /// Changes the head so that entry(i) == value.
  void set_entry(std::size_t i, const Rat& value);
  /// First n entries kept, the rest zero.
  SeqPoint truncated(std::size_t n) const;

  SeqPoint operator+(const SeqPoint& o) const;
  SeqPoint operator-(const SeqPoint& o) const;
  SeqPoint operator-() const;
  friend SeqPoint operator*(const Rat& s, const SeqPoint& p);
  bool operator==(const SeqPoint& o) const = default;

 private:
  void normalize();

  std::map<std::size_t, Rat> head_;
  Rat harmonic_;
  std::map<Rat, Rat> geometric_;
};

/// "head i1=p/q,i2=p/q [tail harmonic s@n | tail geometric s,r@n]". The tail
/// clause may repeat. Throws ParseError.
SeqPoint parse_seqpoint(std::string_view text);
/// Canonical text that parse_seqpoint reads back to the same point.
std::string format_seqpoint(const SeqPoint& p);

// The term that controls the sign and size of x_i for large i: the harmonic
// term when present, otherwise the geometric term of largest ratio. For every
// i >= control, sign(x_i) = sign(coeff) and |D_i|/2 <= |x_i| <= 3|D_i|/2 where
// D_i is the dominant term's value. With kind None, x_i = 0 for i >= control.
struct Dominant {
  enum class Kind { None, Harmonic, Geometric };
  Kind kind = Kind::None;
  Rat coeff;
  Rat ratio;
  std::size_t control = 1;

  Rat value(std::size_t i) const;
};

/// Throws UnsupportedError when the control index would exceed 10^6.
Dominant dominant_term(const SeqPoint& p);

enum class NormKind { L1, L2 };

// Enclosure lo <= ||p|| <= hi. For L2 the squared norm has its own enclosure
// sq_lo <= ||p||^2 <= sq_hi, which is what strict threshold tests use.
struct NormBound {
  NormKind which = NormKind::L1;
  Rat lo;
  Rat hi;
  bool exact = false;
  bool divergent = false;
  Rat sq_lo;
  Rat sq_hi;
  bool sq_exact = false;
};

/// Target width of non-exact enclosures.
Rat enclosure_width();

NormBound norm_enclosure(const SeqPoint& p, NormKind which);

/// Bounds on sum_{i >= n} 1/i^2, valid for n >= 1.
void inverse_square_tail(std::size_t n, Rat& lo, Rat& hi);

/// Rational enclosure of sqrt(q) for q >= 0 with 15 decimal digits.
void sqrt_enclosure(const Rat& q, Rat& lo, Rat& hi);

// Result of checking x_i >= kappa (or > kappa) for every i.
struct LowerBoundCheck {
  bool holds = false;
  std::optional<std::size_t> violation;  // index with x_i below the bound
  std::size_t scanned = 0;               // indices checked exactly; beyond, tail analysis
};

LowerBoundCheck entries_at_least(const SeqPoint& p, const Rat& kappa, bool strict);

// exists eps > 0 with |x_i| >= eps |q_i| for every i.
struct Domination {
  bool holds = false;
  Rat eps;                               // certificate when holds
  std::optional<std::size_t> violation;  // x_i = 0 != q_i, when that is the reason
  std::string reason;
};

Domination dominates(const SeqPoint& x, const SeqPoint& q);

/// q_i is zero or has the sign of x_i, for every i.
bool sign_compatible(const SeqPoint& x, const SeqPoint& q);

}  // namespace facekit

#endif
