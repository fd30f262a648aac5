#ifndef FACEKIT_SEQMODELS_HPP
#define FACEKIT_SEQMODELS_HPP

#include "facekit/rational.hpp"
#include "facekit/seqpoint.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace facekit {

enum class Answer { In, Out, Inconclusive };
std::string to_string(Answer a);

enum class Rel { Lt, Le, Eq, Ne, Ge, Gt };
bool compare(const Rat& a, Rel r, const Rat& b);
std::string to_string(Rel r);

// Where the left-hand side of a check comes from. Anything but Literal is
// recomputed from the subject when a certificate is revalidated.
enum class Source {
  Literal,
  Entry,          // subject.entry(index)
  AbsEntry,       // |subject.entry(index)|
  L1Norm,         // exact l1 norm (divergent l1 norms never satisfy a check)
  L2NormSqLo,     // lower end of the squared l2 enclosure
  L2NormSqHi,     // upper end of the squared l2 enclosure
  HarmonicCoeff,  // coefficient of 1/i
  TailCount,      // number of harmonic plus geometric terms
  AllEntries,     // "subject_i rel rhs for every i"; lhs unused
};

struct Check {
  std::string what;
  Rat lhs;
  Rel rel = Rel::Eq;
  Rat rhs;
  Source source = Source::Literal;
  std::size_t index = 0;
  std::optional<SeqPoint> subject;

  bool holds() const;
};

Check literal(std::string what, const Rat& lhs, Rel rel, const Rat& rhs);
Check sourced(std::string what, Source src, const SeqPoint& subject, Rel rel, const Rat& rhs, std::size_t index = 0);

// A conjunction of checks, every one of which must hold, plus statements that
// are argued rather than computed.
struct Certificate {
  std::vector<Check> checks;
  std::vector<std::string> facts;

  void add(Check c) { checks.push_back(std::move(c)); }
  void note(std::string s) { facts.push_back(std::move(s)); }
  void append(const Certificate& o);
};

/// Recomputes every sourced left-hand side and re-evaluates every relation.
bool revalidate(const Certificate& cert);

struct Verdict {
  Answer answer = Answer::Inconclusive;
  Certificate cert;
};

struct ModelSet {
  enum class Kind {
    PosBall2,    // {x in l2 : ||x||_2 <= 1, x >= 0}
    L1BallInL2,  // {x in l2 : ||x||_1 <= 1}
    ConvL1Point, // co(l1 u {u}), u in l2 \ l1
    ZalSumC,     // [0,1] xbar
    ZalL1Plus,   // nonnegative cone of l1
    ZalSum,      // [0,1] xbar + l1+
    GadgetA,     // {t v + u : t > 0, u in l1}, v = (1/i)
    GadgetB,     // {x in l1 : x_i >= -1}
    GadgetC,     // {v + s (w - v) : w in B, s > 0}
    GadgetD,     // A u B
    GadgetCD,    // C n D
  };
  Kind kind = Kind::PosBall2;
  SeqPoint param;

  static ModelSet pos_ball2() { return {Kind::PosBall2, {}}; }
  static ModelSet l1_ball() { return {Kind::L1BallInL2, {}}; }
  /// Throws InputError unless u has a harmonic term (u in l2 \ l1).
  static ModelSet conv_l1_point(const SeqPoint& u);
  /// Throws InputError unless xbar is nonnegative with a positive harmonic term.
  static ModelSet zal_segment(const SeqPoint& xbar = SeqPoint::harmonic(1));
  static ModelSet zal_l1_plus() { return {Kind::ZalL1Plus, {}}; }
  static ModelSet zal_sum(const SeqPoint& xbar = SeqPoint::harmonic(1));
  static ModelSet gadget(Kind k);

  std::string name() const;
};

Verdict member(const ModelSet& m, const SeqPoint& p);
// These require member(m, p) == In and throw PreconditionError otherwise.
Verdict icr_member(const ModelSet& m, const SeqPoint& p);
Verdict fri_member(const ModelSet& m, const SeqPoint& p);
Verdict qri_member(const ModelSet& m, const SeqPoint& p);

// Symbolic description of F_min(p, M).
struct FaceClass {
  enum class Kind { Singleton, DominatedDecayClass, SubspaceL, FullSet, SignSlice };
  Kind kind = Kind::FullSet;
  ModelSet model;
  SeqPoint point;

  /// Whether q lies in the face; `why` receives the deciding certificate.
  bool test_in_face(const SeqPoint& q, Certificate* why = nullptr) const;
};
std::string to_string(FaceClass::Kind k);

/// Throws PreconditionError for p outside M and UnsupportedError for model
/// and point combinations without a closed form.
FaceClass minimal_face_class(const ModelSet& m, const SeqPoint& p);

// ---------------------------------------------------------------------------
// Slowly decaying majorants

struct MajorantPlan {
  Rat delta;
  int d = 1;  // 1 or 2
  SeqPoint z;
  std::vector<std::size_t> schedule;  // schedule[k-1] = N(k), filled by the constructors
  std::size_t offset = 0;             // N(k) = k + offset from k = stable_from on
  std::size_t stable_from = 0;
};

/// z = c r^i with ||z||_d = delta exactly and r strictly above every
/// geometric ratio of x.
MajorantPlan auto_plan(const SeqPoint& x, const Rat& delta, int d);

/// N'(k): least n with |x_m| < z_k / k for every m >= n.
std::size_t majorant_threshold(const SeqPoint& x, const Rat& zk, std::size_t k);

/// N(1), ..., N(count) recorded into plan.schedule.
void majorant_schedule(const SeqPoint& x, MajorantPlan& plan, std::size_t count);

/// y with y_{N(k)} = z_k and zeros elsewhere. Requires z positive with only
/// geometric tails, and ||z||_d == delta. Throws UnsupportedError when the
/// schedule cannot be shown to become a shift of the identity, which is the
/// case for harmonic x.
SeqPoint majorant_construct(const SeqPoint& x, MajorantPlan& plan);

/// Least i <= bound with |x_i| < eps y_i.
std::optional<std::size_t> majorant_verify(const SeqPoint& x, const SeqPoint& y, const Rat& eps, std::size_t bound);

// ---------------------------------------------------------------------------
// Convex series

struct SeriesSpec {
  std::vector<SeqPoint> terms;  // x_1 .. x_K; K is the prefix length
  // Weights 2^-n for n < K with the last weight 2^-(K-1), so they sum to 1.
  static std::vector<Rat> weights(std::size_t K);
};

struct SeriesWitness {
  SeqPoint xbar;
  std::vector<Rat> weights;
  Certificate cert;
  bool verified = false;
};

/// Throws PreconditionError when a term lies outside M.
SeriesWitness nonemptiness_witness(const ModelSet& m, const SeriesSpec& spec);

// ---------------------------------------------------------------------------
// Regression corpus: points with verdicts fixed by the closed-form
// characterizations of each model.

struct CorpusCase {
  std::string label;
  ModelSet model;
  SeqPoint point;
  Answer member = Answer::In;
  std::optional<Answer> icr, fri, qri;
  std::optional<FaceClass::Kind> face;
};

std::vector<CorpusCase> example_corpus();

// ---------------------------------------------------------------------------
// Claim reports

struct Claim {
  std::string name;
  bool pass = false;
  Certificate cert;
  std::vector<std::string> notes;
};

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Claim& c);
nlohmann::json to_json(const std::vector<Claim>& claims);

/// Partial sums of sum_i 2^-i u^i with u^i = e_i / i.
std::vector<Claim> sigma_hull_demo(std::size_t kmax = 10);
std::vector<Claim> gadget_claims();
/// Replays every corpus case: verdicts, certificates, face classes and the
/// model-level sandwich.
std::vector<Claim> corpus_claims(ModelSet::Kind kind);

/// Names accepted by claims_for.
std::vector<std::string> claim_set_names();
/// Throws InputError for unknown names.
std::vector<Claim> claims_for(const std::string& name);

}  // namespace facekit

#endif
