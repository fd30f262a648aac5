#ifndef FACEKIT_POLYTOPE_HPP
#define FACEKIT_POLYTOPE_HPP

#include "facekit/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facekit {

// conv(verts). The constructor canonicalizes: duplicates and non-extreme
// generators are dropped and the extreme points are sorted colexicographically
// (last coordinate first), so two VPolytopes of the same set compare equal.
class VPolytope {
 public:
  VPolytope(std::size_t dim, std::vector<RatVec> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& verts() const { return verts_; }
  std::size_t size() const { return verts_.size(); }

  bool operator==(const VPolytope&) const = default;

 private:
  std::size_t dim_;
  std::vector<RatVec> verts_;
};

// A face named by the sorted indices of the canonical vertices it contains.
struct FaceId {
  std::vector<std::size_t> vertex_indices;

  bool empty() const { return vertex_indices.empty(); }
  std::size_t size() const { return vertex_indices.size(); }
  bool operator==(const FaceId&) const = default;
};

// Orders by cardinality, then lexicographically on the index lists.
std::strong_ordering face_order(const FaceId& a, const FaceId& b);
std::string to_string(const FaceId& f);

struct LinMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RatVec> entries;  // rows x cols

  LinMap() = default;
  explicit LinMap(std::vector<RatVec> matrix);
  RatVec apply(const RatVec& x) const;
};

struct InteriorVerdict {
  bool ri = false;
  bool icr = false;
  bool fri = false;
  bool qri = false;

  bool operator==(const InteriorVerdict&) const = default;
};

bool contains(const VPolytope& P, const RatVec& x);

/// Vertices v with v - x in lin cone(P - x). Throws PreconditionError when x is
/// not in P.
FaceId minimal_face(const VPolytope& P, const RatVec& x);

/// Vertex v is kept iff x = lam v + (1 - lam) z for some lam in (0,1), z in P.
/// One LP per vertex; used to cross-check minimal_face.
FaceId minimal_face_oracle(const VPolytope& P, const RatVec& x);

InteriorVerdict interiors(const VPolytope& P, const RatVec& x);

/// Exposed-face test. Indices must be valid; the empty set and the full
/// vertex set are faces.
bool is_face(const VPolytope& P, const FaceId& S);

/// The enumeration bound: FACEKIT_ENUM_BOUND when set to a positive integer,
/// otherwise 12.
std::size_t enum_bound();

/// All faces including the empty face and P, sorted by face_order. Throws
/// ResourceError when P has more than `bound` vertices.
std::vector<FaceId> enumerate_faces(const VPolytope& P, std::size_t bound);
std::vector<FaceId> enumerate_faces(const VPolytope& P);

/// conv of the selected vertices. Throws InputError on the empty face.
VPolytope face_polytope(const VPolytope& P, const FaceId& F);

/// Affine dimension of the face; -1 for the empty face.
int face_dimension(const VPolytope& P, const FaceId& F);

struct Assignment {
  RatVec point;
  FaceId face;
  std::size_t faces_checked = 0;  // competing faces ruled out during verification
};

/// Maps every sample to its minimal face, then verifies that the sample lies
/// in the relative interior of that face and, when the face lattice is within
/// the enumeration bound, in no other face's relative interior. A failed
/// verification throws std::logic_error.
std::vector<Assignment> decompose(const VPolytope& P, const std::vector<RatVec>& samples);

struct NotInFriWitness {
  RatVec y;
  Rat r;
  std::size_t grid_points = 0;  // grid points of B(y,r) inside P that were checked
};

/// Absent iff x is a face relative interior point. Otherwise y is the first
/// vertex outside F_min(x,P) and r half the l-infinity distance from y to the
/// affine span of F_min(x,P); for each point z of the grid y + {-r,0,r}^dim in
/// P the extension x + eps (x - z) leaves P for every eps > 0.
std::optional<NotInFriWitness> notinfri_witness(const VPolytope& P, const RatVec& x);

/// Re-runs the grid check for a witness. Returns the number of grid points
/// checked, or nullopt when some grid point admits a feasible extension.
std::optional<std::size_t> verify_notinfri_witness(const VPolytope& P, const RatVec& x,
                                                   const NotInFriWitness& w);

/// Largest eps >= 0 with x + eps * d in P (d nonzero, x in P).
Rat max_step(const VPolytope& P, const RatVec& x, const RatVec& d);

VPolytope product(const VPolytope& P, const VPolytope& Q);
VPolytope translate(const VPolytope& P, const RatVec& a);
VPolytope msum(const VPolytope& P, const VPolytope& Q);
VPolytope image(const LinMap& T, const VPolytope& P);

/// Maximum ambient dimension accepted by intersect.
inline constexpr std::size_t kIntersectMaxDim = 4;

/// P ∩ Q through facet descriptions. nullopt means the intersection is empty.
/// Throws ResourceError above kIntersectMaxDim.
std::optional<VPolytope> intersect(const VPolytope& P, const VPolytope& Q);

// Facet description a.x <= b plus equations of the affine hull.
struct HRep {
  std::size_t dim = 0;
  std::vector<RatVec> facet_normals;
  std::vector<Rat> facet_offsets;
  std::vector<RatVec> eq_normals;
  std::vector<Rat> eq_offsets;
};

HRep facets(const VPolytope& P);

// Text format: "dim n" then one vertex per line, '#' starts a comment.
VPolytope parse_polytope(std::string_view text);
VPolytope load_polytope(const std::string& path);
std::string format_polytope(const VPolytope& P);

/// Whitespace-separated rationals; throws ParseError when the count differs
/// from dim.
RatVec parse_point(std::string_view text, std::size_t dim);

}  // namespace facekit

#endif
