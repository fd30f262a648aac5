#include "facekit/errors.hpp"
#include "facekit/proplab.hpp"

#include <set>

namespace facekit {

namespace {

std::uint64_t splitmix(std::uint64_t z)
{
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

void GenConfig::validate() const
{
  if (dim_min == 0 || dim_min > dim_max)
    throw InputError("dimension range must satisfy 1 <= min <= max");
  if (verts_min == 0 || verts_min > verts_max)
    throw InputError("vertex range must satisfy 1 <= min <= max");
  if (den_bound <= 0)
    throw InputError("denominator bound must be positive");
  if (trials == 0)
    throw InputError("trial count must be positive");
}

long Rng::integer(long lo, long hi)
{
  if (hi < lo)
    throw InputError("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

Rat Rng::rational(long bound, long den_bound)
{
  const long q = integer(1, den_bound);
  Rat r(integer(-bound * q, bound * q), q);
  r.canonicalize();
  return r;
}

std::uint64_t sub_seed(std::uint64_t seed, const std::string& property_id, std::size_t trial)
{
  return splitmix(splitmix(seed) ^ splitmix(fnv1a(property_id)) ^ splitmix(0x5851f42d4c957f2dULL * (trial + 1)));
}

VPolytope gen_polytope(const GenConfig& cfg)
{
  Rng rng(cfg.seed);
  return gen_polytope(cfg, rng);
}

VPolytope gen_polytope(const GenConfig& cfg, Rng& rng)
{
  cfg.validate();
  for (int attempt = 0; attempt < 100; ++attempt) {
    const auto dim = static_cast<std::size_t>(rng.integer(static_cast<long>(cfg.dim_min), static_cast<long>(cfg.dim_max)));
    const auto count =
        static_cast<std::size_t>(rng.integer(static_cast<long>(cfg.verts_min), static_cast<long>(cfg.verts_max)));
    std::vector<RatVec> pts;
    for (std::size_t k = 0; k < count; ++k) {
      RatVec v(dim);
      for (auto& c : v)
        c = rng.rational(2, cfg.den_bound);
      pts.push_back(std::move(v));
    }
    VPolytope P(dim, pts);
    if (P.size() >= 2 && P.size() >= cfg.verts_min && P.size() <= cfg.verts_max)
      return P;
  }
  throw GenerationError("no admissible polytope after 100 draws");
}

std::vector<RatVec> sample_points(const VPolytope& P, const GenConfig& cfg)
{
  Rng rng(cfg.seed);
  return sample_points(P, cfg, rng);
}

std::vector<RatVec> sample_points(const VPolytope& P, const GenConfig& cfg, Rng& rng)
{
  std::vector<RatVec> out;
  std::set<RatVec, LexLess> seen;
  auto push = [&](RatVec x) {
    if (seen.insert(x).second)
      out.push_back(std::move(x));
  };
  const auto& V = P.verts();
  for (const RatVec& v : V)
    push(v);
  // two extreme points span an edge exactly when they form a face
  if (P.size() <= enum_bound() && P.size() > 2) {
    for (std::size_t a = 0; a < V.size(); ++a)
      for (std::size_t b = a + 1; b < V.size(); ++b)
        if (is_face(P, FaceId{{a, b}}))
          push(Rat(1, 2) * (V[a] + V[b]));
  } else if (P.size() == 2) {
    push(Rat(1, 2) * (V[0] + V[1]));
  }
  RatVec c = zeros(P.dim());
  for (const RatVec& v : V)
    c = c + v;
  push(Rat(1) / Rat(static_cast<unsigned long>(V.size())) * c);
  // sparse combinations land on proper faces as often as in the interior
  for (int k = 0; k < 4; ++k) {
    std::vector<long> w(V.size(), 0);
    long total = 0;
    for (auto& wi : w)
      if (rng.coin()) {
        wi = rng.integer(1, cfg.den_bound);
        total += wi;
      }
    if (total == 0) {
      w[static_cast<std::size_t>(rng.integer(0, static_cast<long>(V.size()) - 1))] = 1;
      total = 1;
    }
    RatVec x = zeros(P.dim());
    for (std::size_t j = 0; j < V.size(); ++j)
      if (w[j])
        x = x + (Rat(w[j]) / Rat(total)) * V[j];
    push(std::move(x));
  }
  return out;
}

FlaggedBox::FlaggedBox(RatVec lo_, RatVec hi_, std::vector<bool> flags)
    : lo(std::move(lo_)), hi(std::move(hi_)), facet_closed(std::move(flags))
{
  if (lo.empty() || lo.size() > 3)
    throw InputError("box dimension must be 1, 2 or 3");
  if (hi.size() != lo.size() || facet_closed.size() != 2 * lo.size())
    throw InputError("box bounds and facet flags disagree in dimension");
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (!(lo[j] < hi[j]))
      throw InputError("box needs lo < hi in every coordinate");
}

FlaggedBox FlaggedBox::closed(RatVec lo, RatVec hi)
{
  const std::size_t n = lo.size();
  return FlaggedBox(std::move(lo), std::move(hi), std::vector<bool>(2 * n, true));
}

bool FlaggedBox::contains(const RatVec& x) const
{
  if (x.size() != dim())
    throw InputError("point dimension differs from the box");
  for (std::size_t j = 0; j < dim(); ++j) {
    if (x[j] < lo[j] || x[j] > hi[j])
      return false;
    if (x[j] == lo[j] && !facet_closed[2 * j])
      return false;
    if (x[j] == hi[j] && !facet_closed[2 * j + 1])
      return false;
  }
  return true;
}

VPolytope FlaggedBox::closure_polytope() const
{
  std::vector<RatVec> corners;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim()); ++mask) {
    RatVec c(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      c[j] = (mask >> j) & 1 ? hi[j] : lo[j];
    corners.push_back(std::move(c));
  }
  return VPolytope(dim(), corners);
}

InteriorVerdict box_interiors(const FlaggedBox& B, const RatVec& x)
{
  if (!B.contains(x))
    throw PreconditionError("point " + to_string(x) + " is not in the box");
  bool open = true;
  for (std::size_t j = 0; j < B.dim(); ++j)
    open = open && B.lo[j] < x[j] && x[j] < B.hi[j];
  return {open, open, open, open};
}

}  // namespace facekit
