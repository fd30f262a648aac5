#ifndef FACEKIT_PROPLAB_INTERNAL_HPP
#define FACEKIT_PROPLAB_INTERNAL_HPP

#include "facekit/proplab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace facekit::detail {

// Everything a trial is decided on. Serialized as the counterexample.
struct Instance {
  std::vector<VPolytope> polys;
  std::vector<RatVec> points;
  std::vector<FlaggedBox> boxes;
  std::optional<LinMap> map;
  RatVec shift;
};

nlohmann::json to_json(const Instance& in);
Instance instance_from_json(const nlohmann::json& j);

enum class Result { Ok, Fail, Invalid, Skipped };

struct CheckResult {
  Result result = Result::Ok;
  std::string message;
  std::size_t pairs = 0;  // elementary checks performed

  static CheckResult fail(std::string m) { return {Result::Fail, std::move(m), 0}; }
  static CheckResult invalid(std::string m) { return {Result::Invalid, std::move(m), 0}; }
  static CheckResult skipped(std::string m) { return {Result::Skipped, std::move(m), 0}; }
};

struct Kernels {
  const Hooks& hooks;
  FaceId minimal_face(const VPolytope& P, const RatVec& x) const;
  InteriorVerdict interiors(const VPolytope& P, const RatVec& x) const;
  // fri alone: F_min(x,P) = P
  bool fri(const VPolytope& P, const RatVec& x) const;
};

struct PropertyDef {
  PropertyInfo info;
  Instance (*generate)(Rng& rng, const GenConfig& cfg);
  CheckResult (*check)(const Instance& in, const Kernels& k);
  std::vector<std::string> assumptions;
};

// Polytope properties, in registry order. P-SEQ-REGRESSION is handled by the
// harness directly.
const std::vector<PropertyDef>& polytope_properties();

}  // namespace facekit::detail

#endif
