#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"
#include "facekit/lp.hpp"
#include "internal.hpp"

#include <algorithm>

namespace facekit::detail {

using nlohmann::json;

FaceId Kernels::minimal_face(const VPolytope& P, const RatVec& x) const
{
  return hooks.minimal_face ? hooks.minimal_face(P, x) : facekit::minimal_face(P, x);
}

InteriorVerdict Kernels::interiors(const VPolytope& P, const RatVec& x) const
{
  return hooks.interiors ? hooks.interiors(P, x) : facekit::interiors(P, x);
}

bool Kernels::fri(const VPolytope& P, const RatVec& x) const
{
  if (hooks.interiors)
    return hooks.interiors(P, x).fri;
  return minimal_face(P, x).size() == P.size();
}

namespace {

json vec_json(const RatVec& v)
{
  json a = json::array();
  for (const Rat& q : v)
    a.push_back(to_string(q));
  return a;
}

RatVec vec_from(const json& a)
{
  RatVec v;
  for (const auto& s : a)
    v.push_back(parse_rat(s.get<std::string>()));
  return v;
}

std::string show(const InteriorVerdict& v)
{
  return "ri=" + std::to_string(v.ri) + " icr=" + std::to_string(v.icr) + " fri=" + std::to_string(v.fri) +
         " qri=" + std::to_string(v.qri);
}

RatVec centroid(const VPolytope& P)
{
  RatVec c = zeros(P.dim());
  for (const RatVec& v : P.verts())
    c = c + v;
  return (Rat(1) / Rat(static_cast<unsigned long>(P.size()))) * c;
}

RatVec concat(const RatVec& a, const RatVec& b)
{
  RatVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::pair<RatVec, RatVec> split(const RatVec& z, std::size_t n)
{
  return {RatVec(z.begin(), z.begin() + static_cast<long>(n)), RatVec(z.begin() + static_cast<long>(n), z.end())};
}

GenConfig narrowed(const GenConfig& cfg, std::size_t dmin, std::size_t dmax, std::size_t vmin, std::size_t vmax)
{
  GenConfig c = cfg;
  c.dim_min = std::max(cfg.dim_min, dmin);
  c.dim_max = std::min(cfg.dim_max, dmax);
  if (c.dim_min > c.dim_max)
    c.dim_min = c.dim_max = dmax;
  c.verts_min = vmin;
  c.verts_max = vmax;
  return c;
}

GenConfig fixed_dim(const GenConfig& cfg, std::size_t dim)
{
  GenConfig c = cfg;
  c.dim_min = c.dim_max = dim;
  return c;
}

// Precondition shared by most suites: every point lies in polys[0].
std::optional<CheckResult> points_outside(const VPolytope& P, const std::vector<RatVec>& pts)
{
  for (const RatVec& x : pts)
    if (x.size() != P.dim() || !contains(P, x))
      return CheckResult::invalid("point " + to_string(x) + " is not in P");
  return std::nullopt;
}

bool subset_of(const VPolytope& A, const VPolytope& B)
{
  if (A.dim() != B.dim())
    return false;
  for (const RatVec& v : A.verts())
    if (!contains(B, v))
      return false;
  return true;
}

// At most cap points: the trailing centroid and random combinations, then an
// even spread over the vertices and edge midpoints before them.
std::vector<RatVec> thin(std::vector<RatVec> pts, std::size_t cap)
{
  if (pts.size() <= cap)
    return pts;
  const std::size_t tail = std::min<std::size_t>(5, cap);
  std::vector<RatVec> out;
  const std::size_t head = pts.size() - tail, want = cap - tail;
  for (std::size_t i = 0; i < want; ++i)
    out.push_back(pts[i * head / want]);
  for (std::size_t i = head; i < pts.size(); ++i)
    out.push_back(pts[i]);
  return out;
}

// x is a combination of verts with every weight strictly positive.
bool in_relint(const std::vector<RatVec>& verts, const RatVec& x)
{
  const std::size_t m = verts.size();
  lp::Problem p;
  p.num_vars = m;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Constraint row{zeros(m), x[i], Relation::Equal};
    for (std::size_t j = 0; j < m; ++j)
      row.coeffs[j] = verts[j][i];
    p.rows.push_back(std::move(row));
  }
  p.rows.push_back({RatVec(m, Rat(1)), 1, Relation::Equal});
  std::vector<bool> strict(p.rows.size(), false);
  for (std::size_t j = 0; j < m; ++j) {
    p.rows.push_back({unit_vector(m, j), 0, Relation::GreaterEq});
    strict.push_back(true);
  }
  return lp::strictly_feasible(p, strict).has_value();
}

std::vector<RatVec> random_pairs(Rng& rng, const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                 std::size_t count)
{
  std::vector<RatVec> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(concat(a[static_cast<std::size_t>(rng.integer(0, static_cast<long>(a.size()) - 1))],
                         b[static_cast<std::size_t>(rng.integer(0, static_cast<long>(b.size()) - 1))]));
  return out;
}

FlaggedBox random_box(Rng& rng, const GenConfig& cfg)
{
  const auto dim = static_cast<std::size_t>(rng.integer(1, 3));
  RatVec lo(dim), hi(dim);
  std::vector<bool> flags(2 * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    lo[j] = rng.rational(2, cfg.den_bound);
    Rat w(rng.integer(1, 2 * cfg.den_bound), rng.integer(1, cfg.den_bound));
    w.canonicalize();
    hi[j] = lo[j] + w;
  }
  for (std::size_t f = 0; f < flags.size(); ++f)
    flags[f] = rng.coin();
  return FlaggedBox(lo, hi, flags);
}

// Grid lo + k (hi - lo) / steps, k = 0..steps, per axis.
std::vector<RatVec> box_grid(const FlaggedBox& B, long steps)
{
  std::vector<RatVec> pts{RatVec{}};
  for (std::size_t j = 0; j < B.dim(); ++j) {
    std::vector<RatVec> next;
    for (const RatVec& p : pts)
      for (long k = 0; k <= steps; ++k) {
        RatVec q = p;
        q.push_back(B.lo[j] + Rat(k) / steps * (B.hi[j] - B.lo[j]));
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return pts;
}

// -- generators -------------------------------------------------------------

Instance gen_basic(Rng& rng, const GenConfig& cfg)
{
  Instance in;
  in.polys.push_back(gen_polytope(cfg, rng));
  in.points = sample_points(in.polys[0], cfg, rng);
  return in;
}

Instance gen_thin(Rng& rng, const GenConfig& cfg)
{
  Instance in = gen_basic(rng, cfg);
  in.points = thin(std::move(in.points), 10);
  return in;
}

Instance gen_minf_mono(Rng& rng, const GenConfig& cfg)
{
  Instance in;
  VPolytope Q = gen_polytope(cfg, rng);
  std::vector<RatVec> sub;
  for (const RatVec& v : Q.verts())
    if (rng.coin())
      sub.push_back(v);
  while (sub.size() < 2)
    sub.push_back(Q.verts()[sub.size()]);
  VPolytope A(Q.dim(), sub);
  in.points = sample_points(A, cfg, rng);
  in.polys = {A, Q};
  return in;
}

Instance gen_closure(Rng& rng, const GenConfig& cfg)
{
  Instance in = gen_thin(rng, cfg);
  in.boxes.push_back(random_box(rng, cfg));
  return in;
}

Instance gen_product(Rng& rng, const GenConfig& cfg)
{
  GenConfig c = narrowed(cfg, 1, 2, 2, 4);
  Instance in;
  VPolytope P = gen_polytope(c, rng), Q = gen_polytope(c, rng);
  std::vector<RatVec> sp = sample_points(P, c, rng), sq = sample_points(Q, c, rng);
  in.points = random_pairs(rng, sp, sq, 10);
  in.points.push_back(concat(centroid(P), centroid(Q)));
  in.points.push_back(concat(P.verts()[0], centroid(Q)));
  in.polys = {P, Q};
  return in;
}

Instance gen_image(Rng& rng, const GenConfig& cfg)
{
  Instance in = gen_basic(rng, narrowed(cfg, 1, 4, 3, 6));
  const std::size_t n = in.polys[0].dim();
  const bool injective = rng.coin();
  for (;;) {
    const std::size_t m = injective ? n + static_cast<std::size_t>(rng.integer(0, 1))
                                    : static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
    std::vector<RatVec> rows(m, RatVec(n));
    for (auto& r : rows)
      for (auto& e : r)
        e = rng.integer(-2, 2);
    if (!injective || linalg::rank(rows, n) == n) {
      in.map = LinMap(rows);
      return in;
    }
  }
}

Instance gen_translate(Rng& rng, const GenConfig& cfg)
{
  Instance in = gen_thin(rng, cfg);
  in.shift.resize(in.polys[0].dim());
  for (auto& a : in.shift)
    a = rng.rational(3, cfg.den_bound);
  return in;
}

Instance gen_sum(Rng& rng, const GenConfig& cfg)
{
  GenConfig c = narrowed(cfg, 2, 3, 3, 5);
  Instance in;
  VPolytope P = gen_polytope(c, rng);
  VPolytope Q = gen_polytope(fixed_dim(c, P.dim()), rng);
  std::vector<RatVec> sp = sample_points(P, c, rng), sq = sample_points(Q, c, rng);
  in.points = random_pairs(rng, sp, sq, 12);
  in.points.push_back(concat(centroid(P), centroid(Q)));
  in.polys = {P, Q};
  return in;
}

Instance gen_intersect(Rng& rng, const GenConfig& cfg)
{
  GenConfig c = narrowed(cfg, 2, 3, 3, 6);
  Instance in;
  VPolytope P = gen_polytope(c, rng);
  VPolytope Q0 = gen_polytope(fixed_dim(c, P.dim()), rng);
  // centroids coincide, or nearly so: the shared centroid is the witness
  RatVec a = centroid(P) - centroid(Q0);
  if (rng.coin())
    for (auto& e : a)
      e += rng.rational(1, c.den_bound) / 4;
  VPolytope Q = translate(Q0, a);
  in.points = sample_points(P, c, rng);
  for (RatVec& q : sample_points(Q, c, rng))
    in.points.push_back(std::move(q));
  in.polys = {P, Q};
  return in;
}

Instance gen_icrfri(Rng& rng, const GenConfig& cfg)
{
  Instance in;
  VPolytope B = gen_polytope(cfg, rng);
  std::vector<RatVec> sb = sample_points(B, cfg, rng);
  std::vector<RatVec> gens{centroid(B)};
  const long extra = rng.integer(1, 3);
  for (long k = 0; k < extra; ++k)
    gens.push_back(sb[static_cast<std::size_t>(rng.integer(0, static_cast<long>(sb.size()) - 1))]);
  VPolytope A(B.dim(), gens);
  in.points = sample_points(A, cfg, rng);
  in.polys = {A, B};
  return in;
}

Instance gen_closprop(Rng& rng, const GenConfig& cfg)
{
  Instance in;
  FlaggedBox A = random_box(rng, cfg);
  std::vector<bool> more = A.facet_closed;
  for (std::size_t f = 0; f < more.size(); ++f)
    more[f] = more[f] || rng.coin();
  in.boxes = {A, FlaggedBox(A.lo, A.hi, more)};
  return in;
}

// -- checks -------------------------------------------------------------------

CheckResult check_oracle(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (auto bad = points_outside(P, in.points))
    return *bad;
  CheckResult r;
  for (const RatVec& x : in.points) {
    FaceId a = k.minimal_face(P, x), b = minimal_face_oracle(P, x);
    ++r.pairs;
    if (a != b)
      return CheckResult::fail("x = " + to_string(x) + ": minimal_face " + to_string(a) + ", oracle " + to_string(b));
  }
  return r;
}

CheckResult check_sandwich(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (auto bad = points_outside(P, in.points))
    return *bad;
  CheckResult r;
  for (const RatVec& x : in.points) {
    InteriorVerdict v = k.interiors(P, x);
    ++r.pairs;
    const bool chain = (!v.ri || v.icr) && (!v.icr || v.fri) && (!v.fri || v.qri);
    const bool equal = v.ri == v.icr && v.icr == v.fri && v.fri == v.qri;
    if (!chain || !equal)
      return CheckResult::fail("x = " + to_string(x) + ": " + show(v));
    const bool full = k.minimal_face(P, x).size() == P.size();
    if (v.fri != full)
      return CheckResult::fail("x = " + to_string(x) + ": fri flag disagrees with F_min = P");
  }
  return r;
}

CheckResult check_minf_mono(const Instance& in, const Kernels& k)
{
  const VPolytope& A = in.polys.at(0);
  const VPolytope& B = in.polys.at(1);
  if (!subset_of(A, B))
    return CheckResult::invalid("A is not contained in B");
  if (auto bad = points_outside(A, in.points))
    return *bad;
  CheckResult r;
  for (const RatVec& x : in.points) {
    FaceId fa = k.minimal_face(A, x);
    VPolytope FB = face_polytope(B, k.minimal_face(B, x));
    for (std::size_t i : fa.vertex_indices) {
      ++r.pairs;
      if (!contains(FB, A.verts()[i]))
        return CheckResult::fail("x = " + to_string(x) + ": vertex " + to_string(A.verts()[i]) +
                                 " of F_min(x,A) is outside F_min(x,B)");
    }
  }
  return r;
}

CheckResult check_segment(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (auto bad = points_outside(P, in.points))
    return *bad;
  CheckResult r;
  const Rat lams[3] = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
  for (std::size_t a = 0; a < in.points.size(); ++a) {
    const RatVec& x = in.points[a];
    if (!k.fri(P, x))
      continue;
    for (std::size_t b = 0; b < in.points.size(); ++b) {
      // lambda cycles through the three values across pairs
      const RatVec& y = in.points[b];
      const Rat& lam = lams[(a + b) % 3];
      RatVec z = (1 - lam) * x + lam * y;
      ++r.pairs;
      if (!k.fri(P, z))
        return CheckResult::fail("x = " + to_string(x) + ", y = " + to_string(y) + ", lambda = " + to_string(lam) +
                                 ": point of [x,y) is not fri");
    }
  }
  return r;
}

CheckResult check_idempotent(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (auto bad = points_outside(P, in.points))
    return *bad;
  CheckResult r;
  std::vector<RatVec> fri;
  for (const RatVec& x : in.points)
    if (k.fri(P, x))
      fri.push_back(x);
  // x is fri in x + (P - x)/2, a polytope inside fri P
  for (const RatVec& x : fri) {
    std::vector<RatVec> half;
    for (const RatVec& v : P.verts())
      half.push_back(x + Rat(1, 2) * (v - x));
    VPolytope R(P.dim(), half);
    for (const RatVec& w : R.verts()) {
      ++r.pairs;
      if (!k.fri(P, w))
        return CheckResult::fail("x = " + to_string(x) + ": x + (P - x)/2 leaves fri P at " + to_string(w));
    }
    ++r.pairs;
    if (!k.fri(R, x))
      return CheckResult::fail("x = " + to_string(x) + " is not fri in x + (P - x)/2");
  }
  if (fri.empty())
    return r;
  // the hull of the fri samples stays in fri P and so does its fri set
  VPolytope H(P.dim(), fri);
  std::vector<RatVec> probe = H.verts();
  probe.push_back(centroid(H));
  for (const RatVec& z : probe) {
    ++r.pairs;
    if (!k.fri(P, z))
      return CheckResult::fail("hull of fri samples leaves fri P at " + to_string(z));
  }
  return r;
}

CheckResult check_closure(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  CheckResult r;
  const RatVec c = centroid(P);
  Rat prev_gap = -1;
  for (unsigned long n : {2ul, 10ul, 100ul}) {
    const Rat t(1, n);
    std::vector<RatVec> pts;
    for (const RatVec& v : P.verts()) {
      RatVec p = (1 - t) * v + t * c;
      ++r.pairs;
      if (!k.fri(P, p))
        return CheckResult::fail("shrunk vertex " + to_string(p) + " is not fri");
      pts.push_back(std::move(p));
    }
    VPolytope R(P.dim(), pts);
    if (R.size() != P.size())
      return CheckResult::fail("hull of fri samples at t = " + to_string(t) + " has " + std::to_string(R.size()) +
                               " vertices, P has " + std::to_string(P.size()));
    Rat gap = 0;
    for (std::size_t j = 0; j < P.size(); ++j)
      gap = std::max(gap, max_norm(pts[j] - P.verts()[j]));
    if (prev_gap >= 0 && !(gap < prev_gap))
      return CheckResult::fail("vertex gap does not shrink with t");
    prev_gap = gap;
  }
  for (const FlaggedBox& B : in.boxes) {
    const VPolytope Bbar = B.closure_polytope();
    RatVec mid(B.dim());
    for (std::size_t j = 0; j < B.dim(); ++j)
      mid[j] = (B.lo[j] + B.hi[j]) / 2;
    for (const RatVec& g : box_grid(B, 2))
      for (unsigned long n : {2ul, 100ul}) {
        const Rat t(1, n);
        RatVec p = (1 - t) * g + t * mid;
        ++r.pairs;
        if (!B.contains(p) || !box_interiors(B, p).fri || (n == 2 && !k.fri(Bbar, p)))
          return CheckResult::fail("box point " + to_string(p) + " near " + to_string(g) + " is not fri");
      }
  }
  return r;
}

CheckResult check_product(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  const VPolytope& Q = in.polys.at(1);
  const VPolytope PQ = product(P, Q);
  CheckResult r;
  for (const RatVec& z : in.points) {
    auto [x, y] = split(z, P.dim());
    if (!contains(P, x) || !contains(Q, y))
      return CheckResult::invalid("pair outside P x Q");
    InteriorVerdict a = k.interiors(P, x), b = k.interiors(Q, y), c = k.interiors(PQ, z);
    ++r.pairs;
    InteriorVerdict want{a.ri && b.ri, a.icr && b.icr, a.fri && b.fri, a.qri && b.qri};
    if (c != want)
      return CheckResult::fail("(x,y) = " + to_string(z) + ": product " + show(c) + ", factors " + show(want));
  }
  return r;
}

CheckResult check_image(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (!in.map || in.map->cols != P.dim())
    return CheckResult::invalid("map does not act on P");
  if (auto bad = points_outside(P, in.points))
    return *bad;
  const LinMap& T = *in.map;
  const VPolytope TP = image(T, P);
  const bool injective = linalg::rank(T.entries, T.cols) == T.cols;
  CheckResult r;
  for (const RatVec& x : in.points) {
    const bool fx = k.fri(P, x);
    const bool ftx = k.fri(TP, T.apply(x));
    ++r.pairs;
    if (fx && !ftx)
      return CheckResult::fail("x = " + to_string(x) + " is fri but T x = " + to_string(T.apply(x)) + " is not");
    if (injective && fx != ftx)
      return CheckResult::fail("T injective, x = " + to_string(x) + ": fri differs between P and T(P)");
  }
  return r;
}

CheckResult check_translate(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (in.shift.size() != P.dim())
    return CheckResult::invalid("shift dimension differs from P");
  if (auto bad = points_outside(P, in.points))
    return *bad;
  const VPolytope Pa = translate(P, in.shift);
  CheckResult r;
  for (const RatVec& x : in.points) {
    const RatVec xa = x + in.shift;
    ++r.pairs;
    if (k.interiors(P, x) != k.interiors(Pa, xa))
      return CheckResult::fail("x = " + to_string(x) + ": verdict changes under translation");
    if (k.minimal_face(P, x) != k.minimal_face(Pa, xa))
      return CheckResult::fail("x = " + to_string(x) + ": minimal face changes under translation");
  }
  return r;
}

CheckResult check_sum(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  const VPolytope& Q = in.polys.at(1);
  if (P.dim() != Q.dim())
    return CheckResult::invalid("summands differ in dimension");
  const VPolytope S = msum(P, Q);
  CheckResult r;
  for (const RatVec& z : in.points) {
    auto [x, y] = split(z, P.dim());
    if (!contains(P, x) || !contains(Q, y))
      return CheckResult::invalid("pair outside P x Q");
    if (!k.fri(P, x) || !k.fri(Q, y))
      continue;
    ++r.pairs;
    if (!k.fri(S, x + y))
      return CheckResult::fail("x = " + to_string(x) + ", y = " + to_string(y) + ": x + y is not fri in P + Q");
  }
  return r;
}

CheckResult check_intersect(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  const VPolytope& Q = in.polys.at(1);
  if (P.dim() != Q.dim())
    return CheckResult::invalid("polytopes differ in dimension");
  bool witness = false;
  for (const RatVec& x : in.points)
    if (contains(P, x) && contains(Q, x) && k.fri(P, x) && k.fri(Q, x)) {
      witness = true;
      break;
    }
  if (!witness)
    return CheckResult::skipped("no sampled point of fri P n fri Q");
  std::optional<VPolytope> R = intersect(P, Q);
  if (!R)
    return CheckResult::fail("intersection empty although a common fri point exists");
  Rng fixed(0);
  GenConfig c;
  CheckResult r;
  for (const RatVec& z : sample_points(*R, c, fixed)) {
    if (!k.fri(*R, z))
      continue;
    ++r.pairs;
    if (!k.fri(P, z) || !k.fri(Q, z))
      return CheckResult::fail("z = " + to_string(z) + " is fri in P n Q but not in both");
  }
  return r;
}

CheckResult check_icrfri(const Instance& in, const Kernels& k)
{
  const VPolytope& A = in.polys.at(0);
  const VPolytope& B = in.polys.at(1);
  if (!subset_of(A, B))
    return CheckResult::invalid("A is not contained in B");
  if (auto bad = points_outside(A, in.points))
    return *bad;
  std::vector<RatVec> probe = in.points;
  for (const RatVec& v : A.verts())
    probe.push_back(v);
  probe.push_back(centroid(A));
  bool witness = false;
  for (const RatVec& x : probe)
    witness = witness || k.fri(B, x);
  if (!witness)
    return CheckResult::skipped("no sampled point of A n fri B");
  CheckResult r;
  for (const RatVec& z : probe) {
    if (!k.fri(A, z))
      continue;
    ++r.pairs;
    if (!k.fri(B, z))
      return CheckResult::fail("z = " + to_string(z) + " is fri in A but not in B");
  }
  return r;
}

CheckResult check_notinfri(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (auto bad = points_outside(P, in.points))
    return *bad;
  CheckResult r;
  for (const RatVec& x : in.points) {
    std::optional<NotInFriWitness> w = notinfri_witness(P, x);
    const bool fri = k.fri(P, x);
    ++r.pairs;
    if (w.has_value() == fri)
      return CheckResult::fail("x = " + to_string(x) + ": witness " + (w ? "present" : "absent") +
                               " but fri = " + std::to_string(fri));
    if (w && !verify_notinfri_witness(P, x, *w))
      return CheckResult::fail("x = " + to_string(x) + ": witness does not re-verify");
  }
  return r;
}

CheckResult check_decompose(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (auto bad = points_outside(P, in.points))
    return *bad;
  if (P.size() > enum_bound())
    return CheckResult::invalid("face lattice above the enumeration bound");
  std::vector<Assignment> asg;
  try {
    asg = decompose(P, in.points);
  } catch (const std::logic_error& e) {
    return CheckResult::fail(std::string("decompose rejected its own assignment: ") + e.what());
  }
  if (asg.size() != in.points.size())
    return CheckResult::fail("decompose dropped samples");
  std::vector<std::vector<RatVec>> polys;
  std::vector<FaceId> ids;
  for (const FaceId& f : enumerate_faces(P))
    if (!f.empty()) {
      std::vector<RatVec> vs;
      for (std::size_t i : f.vertex_indices)
        vs.push_back(P.verts()[i]);
      polys.push_back(std::move(vs));
      ids.push_back(f);
    }
  CheckResult r;
  for (const Assignment& a : asg) {
    if (a.face != k.minimal_face(P, a.point))
      return CheckResult::fail("x = " + to_string(a.point) + ": assigned face is not F_min");
    std::size_t hits = 0;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      ++r.pairs;
      if (!in_relint(polys[j], a.point))
        continue;
      ++hits;
      if (ids[j] != a.face)
        return CheckResult::fail("x = " + to_string(a.point) + " is in ri of " + to_string(ids[j]) +
                                 " as well as its assigned face " + to_string(a.face));
    }
    if (hits != 1)
      return CheckResult::fail("x = " + to_string(a.point) + " lies in " + std::to_string(hits) +
                               " face relative interiors");
  }
  return r;
}

CheckResult check_icrminf(const Instance& in, const Kernels& k)
{
  const VPolytope& P = in.polys.at(0);
  if (auto bad = points_outside(P, in.points))
    return *bad;
  CheckResult r;
  for (const RatVec& x : in.points) {
    FaceId f = k.minimal_face(P, x);
    if (f.empty())
      return CheckResult::fail("x = " + to_string(x) + ": empty minimal face");
    VPolytope F = face_polytope(P, f);
    ++r.pairs;
    if (!contains(F, x) || !k.interiors(F, x).icr)
      return CheckResult::fail("x = " + to_string(x) + " is not icr in F_min = " + to_string(f));
  }
  return r;
}

CheckResult check_closprop(const Instance& in, const Kernels& k)
{
  if (in.boxes.size() != 2)
    return CheckResult::invalid("box chain needs A and B");
  const FlaggedBox& A = in.boxes[0];
  const FlaggedBox& B = in.boxes[1];
  if (A.lo != B.lo || A.hi != B.hi)
    return CheckResult::invalid("boxes of a chain share their closure");
  for (std::size_t f = 0; f < A.facet_closed.size(); ++f)
    if (A.facet_closed[f] && !B.facet_closed[f])
      return CheckResult::invalid("A is not contained in B");
  const FlaggedBox Abar = A.closure();
  const VPolytope Apoly = A.closure_polytope();
  CheckResult r;
  for (const RatVec& g : box_grid(A, 4)) {
    ++r.pairs;
    const bool fa = A.contains(g) && box_interiors(A, g).fri;
    const bool fb = B.contains(g) && box_interiors(B, g).fri;
    const bool fbar = box_interiors(Abar, g).fri;
    // the analytic closed box agrees with the exact polytope computation
    if (fbar != k.fri(Apoly, g))
      return CheckResult::fail("g = " + to_string(g) + ": box and polytope fri disagree on cl A");
    if ((fa && !fb) || (fb && !fbar))
      return CheckResult::fail("g = " + to_string(g) + ": fri A, fri B, fri cl A not nested");
    if (fa != (A.contains(g) && fbar))
      return CheckResult::fail("g = " + to_string(g) + ": fri A differs from A n fri cl A");
  }
  return r;
}

}  // namespace

json to_json(const Instance& in)
{
  json j = json::object();
  json polys = json::array();
  for (const VPolytope& P : in.polys)
    polys.push_back(format_polytope(P));
  j["polytopes"] = polys;
  json pts = json::array();
  for (const RatVec& x : in.points)
    pts.push_back(vec_json(x));
  j["points"] = pts;
  if (!in.boxes.empty()) {
    json boxes = json::array();
    for (const FlaggedBox& b : in.boxes)
      boxes.push_back({{"lo", vec_json(b.lo)}, {"hi", vec_json(b.hi)}, {"facet_closed", b.facet_closed}});
    j["boxes"] = boxes;
  }
  if (in.map) {
    json rows = json::array();
    for (const RatVec& row : in.map->entries)
      rows.push_back(vec_json(row));
    j["map"] = rows;
  }
  if (!in.shift.empty())
    j["shift"] = vec_json(in.shift);
  return j;
}

Instance instance_from_json(const json& j)
{
  Instance in;
  for (const auto& p : j.at("polytopes"))
    in.polys.push_back(parse_polytope(p.get<std::string>()));
  for (const auto& x : j.at("points"))
    in.points.push_back(vec_from(x));
  if (j.contains("boxes"))
    for (const auto& b : j["boxes"])
      in.boxes.emplace_back(vec_from(b.at("lo")), vec_from(b.at("hi")), b.at("facet_closed").get<std::vector<bool>>());
  if (j.contains("map")) {
    std::vector<RatVec> rows;
    for (const auto& row : j["map"])
      rows.push_back(vec_from(row));
    in.map = LinMap(rows);
  }
  if (j.contains("shift"))
    in.shift = vec_from(j["shift"]);
  return in;
}

const std::vector<PropertyDef>& polytope_properties()
{
  static const std::vector<PropertyDef> defs = {
      {{"P-ORACLE", "minimal_face agrees with the segment-union oracle"}, gen_basic, check_oracle, {}},
      {{"P-SANDWICH", "ri => icr => fri => qri, all equal in finite dimension"}, gen_basic, check_sandwich, {}},
      {{"P-MINF-MONO", "F_min(x,A) is contained in F_min(x,B) for A in B"}, gen_minf_mono, check_minf_mono, {}},
      {{"P-SEGMENT", "[x,y) stays in fri C for x in fri C"}, gen_thin,
       check_segment,
       {"lambda cycles through 1/4, 1/2, 3/4 over the (x, y) pairs", "at most 10 sample points per trial"}},
      {{"P-IDEMPOTENT", "fri(fri C) = fri C"},
       gen_thin,
       check_idempotent,
       {"realized as: each fri sample x is fri in x + (C - x)/2, a polytope inside fri C; the hull of the fri "
        "samples stays in fri C",
        "at most 10 sample points per trial"}},
      {{"P-CLOSURE", "cl fri C = cl C"},
       gen_closure,
       check_closure,
       {"polytopes: vertices shrunk toward the centroid by t = 1/2, 1/10, 1/100 are fri and their hull keeps the "
        "vertex count; boxes: grid step (hi - lo)/2, shrink factors 1/2 and 1/100 (sampling density is an "
        "assumption)"}},
      {{"P-PRODUCT", "fri(C x D) = fri C x fri D"},
       gen_product,
       check_product,
       {"factors of dimension 1-2 with 2-4 vertices, 12 sampled pairs per trial"}},
      {{"P-IMAGE", "T(fri C) in fri T(C), equality for injective T"}, gen_image, check_image, {}},
      {{"P-TRANSLATE", "fri(C + a) = fri C + a"}, gen_translate, check_translate, {"at most 10 sample points per trial"}},
      {{"P-SUM", "fri C + fri D in fri(C + D)"},
       gen_sum,
       check_sum,
       {"summands of dimension 2-3 with 3-5 vertices, 13 sampled pairs per trial"}},
      {{"P-INTERSECT", "fri(C n D) in fri C n fri D when fri C n fri D is nonempty"},
       gen_intersect,
       check_intersect,
       {"dimension 2-3; D is translated so its vertex centroid is at or near that of C"}},
      {{"P-ICRFRI", "A in B with A n fri B nonempty gives fri A in fri B"}, gen_icrfri, check_icrfri, {}},
      {{"P-NOTINFRI", "notinfri witness present iff x is not fri, and it re-verifies"}, gen_thin, check_notinfri,
       {"at most 10 sample points per trial"}},
      {{"P-DECOMPOSE", "every sample lies in the relative interior of exactly one face"},
       gen_thin,
       check_decompose,
       {"at most 10 sample points per trial"}},
      {{"P-ICRMINF", "x is icr in F_min(x,C)"}, gen_basic, check_icrminf, {}},
      {{"P-CLOSPROP", "fri A in fri B in fri cl A and fri A = A n fri cl A"},
       gen_closprop,
       check_closprop,
       {"grid step (hi - lo)/4 per axis, boundary included (sampling density is an assumption)"}},
  };
  return defs;
}

}  // namespace facekit::detail
