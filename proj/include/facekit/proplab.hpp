#ifndef FACEKIT_PROPLAB_HPP
#define FACEKIT_PROPLAB_HPP

#include "facekit/polytope.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace facekit {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t dim_min = 2, dim_max = 4;
  std::size_t verts_min = 3, verts_max = 8;
  long den_bound = 12;
  std::size_t trials = 200;

  /// Throws InputError on non-positive or inverted bounds.
  void validate() const;
};

// Deterministic across platforms: draws come straight from mt19937_64 words,
// never through the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }
  long integer(long lo, long hi);  // uniform on [lo, hi]
  bool coin() { return (eng_() >> 11) & 1; }
  /// p / q with 1 <= q <= den_bound and |p / q| <= bound.
  Rat rational(long bound, long den_bound);

 private:
  std::mt19937_64 eng_;
};

/// Seed of one trial. Depends only on its arguments, so serial and parallel
/// runs draw the same instances.
std::uint64_t sub_seed(std::uint64_t seed, const std::string& property_id, std::size_t trial);

/// Random polytope with dim in [dim_min, dim_max] and an extreme-point count in
/// [verts_min, verts_max]. Throws GenerationError after 100 degenerate draws.
VPolytope gen_polytope(const GenConfig& cfg);
VPolytope gen_polytope(const GenConfig& cfg, Rng& rng);

/// Vertices, edge midpoints (when the face lattice is within the enumeration
/// bound), the vertex centroid, then random convex combinations; duplicates
/// removed, order fixed by the draw.
std::vector<RatVec> sample_points(const VPolytope& P, const GenConfig& cfg);
std::vector<RatVec> sample_points(const VPolytope& P, const GenConfig& cfg, Rng& rng);

// Axis-parallel box; facet_closed[2j] is the facet x_j = lo_j and
// facet_closed[2j+1] the facet x_j = hi_j. A point on an open facet is outside.
struct FlaggedBox {
  RatVec lo, hi;
  std::vector<bool> facet_closed;

  /// Throws InputError unless 1 <= dim <= 3, lo < hi and the flag count is 2 dim.
  FlaggedBox(RatVec lo, RatVec hi, std::vector<bool> facet_closed);
  static FlaggedBox closed(RatVec lo, RatVec hi);

  std::size_t dim() const { return lo.size(); }
  bool contains(const RatVec& x) const;
  FlaggedBox closure() const { return closed(lo, hi); }
  VPolytope closure_polytope() const;
};

/// All four notions equal the open interior. Throws PreconditionError when x
/// is not in B.
InteriorVerdict box_interiors(const FlaggedBox& B, const RatVec& x);

// ---------------------------------------------------------------------------
// Property registry

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct PropertyReport {
  std::string property_id;
  Status status = Status::Inconclusive;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<nlohmann::json> counterexample;
  std::vector<std::string> notes;
};

nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const std::vector<PropertyReport>& rs);

// Replacement kernels, used to check that the harness notices broken code.
struct Hooks {
  std::function<FaceId(const VPolytope&, const RatVec&)> minimal_face;
  std::function<InteriorVerdict(const VPolytope&, const RatVec&)> interiors;
};

struct PropertyInfo {
  std::string id;
  std::string statement;
};

/// Registry in run order.
const std::vector<PropertyInfo>& property_registry();

/// Comma-separated ids or '*' patterns. An exact id that is not registered
/// throws InputError; a pattern that matches nothing contributes nothing.
std::vector<std::string> select_properties(const std::string& filter);

/// Throws InputError for an unknown id.
PropertyReport run_property(const std::string& id, const GenConfig& cfg, const Hooks& hooks = {});

std::vector<PropertyReport> run_all(const GenConfig& cfg, const std::vector<std::string>& ids,
                                    const Hooks& hooks = {});
std::vector<PropertyReport> run_all(const GenConfig& cfg);

/// Replays a Fail report's counterexample; true when it still fails.
bool counterexample_fails(const std::string& id, const nlohmann::json& counterexample, const Hooks& hooks = {});

/// Maximum number of accepted reductions during counterexample minimization.
inline constexpr std::size_t kMinimizeSteps = 100;

}  // namespace facekit

#endif
