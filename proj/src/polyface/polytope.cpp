#include "facekit/polytope.hpp"

#include "ddmethod.hpp"
#include "facekit/cone.hpp"
#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"
#include "facekit/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace facekit {

namespace {

void require_dim(const VPolytope& P, const RatVec& x)
{
  if (x.size() != P.dim())
    throw InputError("point has dimension " + std::to_string(x.size()) + ", polytope has " +
                     std::to_string(P.dim()));
}

void require_member(const VPolytope& P, const RatVec& x)
{
  if (!contains(P, x))
    throw PreconditionError("point " + to_string(x) + " is not in the polytope");
}

// x = sum_j lam_j pts_j with lam a probability vector.
bool in_hull(const std::vector<RatVec>& pts, const RatVec& x)
{
  lp::Problem p;
  p.num_vars = pts.size();
  p.nonneg.assign(pts.size(), true);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Constraint row{zeros(pts.size()), x[i], Relation::Equal};
    for (std::size_t j = 0; j < pts.size(); ++j)
      row.coeffs[j] = pts[j][i];
    p.rows.push_back(std::move(row));
  }
  p.rows.push_back({RatVec(pts.size(), Rat(1)), 1, Relation::Equal});
  return lp::solve(p).status != lp::Status::Infeasible;
}

std::vector<RatVec> cone_generators_at(const VPolytope& P, const RatVec& x)
{
  std::vector<RatVec> gens;
  for (const RatVec& v : P.verts())
    gens.push_back(v - x);
  return gens;
}

std::vector<RatVec> select(const VPolytope& P, const FaceId& F)
{
  std::vector<RatVec> pts;
  for (std::size_t i : F.vertex_indices)
    pts.push_back(P.verts().at(i));
  return pts;
}

bool relative_interior_point(const std::vector<RatVec>& verts, const RatVec& x)
{
  // ri conv(V) is the set of combinations with every weight strictly positive.
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

// Compares from the last coordinate down, so a square lists its bottom edge
// first: (0,0), (1,0), (0,1), (1,1).
bool colex_less(const RatVec& a, const RatVec& b)
{
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return a[i] < b[i];
  return false;
}

std::vector<RatVec> extreme_points(std::vector<RatVec> pts)
{
  std::sort(pts.begin(), pts.end(), colex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<RatVec> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != k)
        others.push_back(pts[j]);
    if (others.empty() || !in_hull(others, pts[k]))
      out.push_back(pts[k]);
  }
  return out;
}

}  // namespace

VPolytope::VPolytope(std::size_t dim, std::vector<RatVec> generators) : dim_(dim)
{
  if (dim == 0)
    throw InputError("polytope dimension must be positive");
  if (generators.empty())
    throw InputError("polytope needs at least one generator");
  for (const RatVec& g : generators)
    if (g.size() != dim)
      throw InputError("generator has dimension " + std::to_string(g.size()) + ", expected " +
                       std::to_string(dim));
  verts_ = extreme_points(std::move(generators));
}

std::strong_ordering face_order(const FaceId& a, const FaceId& b)
{
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  return a.vertex_indices <=> b.vertex_indices;
}

std::string to_string(const FaceId& f)
{
  std::string s = "{";
  for (std::size_t k = 0; k < f.vertex_indices.size(); ++k) {
    if (k)
      s += ',';
    s += std::to_string(f.vertex_indices[k]);
  }
  return s + "}";
}

LinMap::LinMap(std::vector<RatVec> matrix) : entries(std::move(matrix))
{
  rows = entries.size();
  if (rows == 0)
    throw InputError("linear map needs at least one row");
  cols = entries.front().size();
  if (cols == 0)
    throw InputError("linear map needs at least one column");
  for (const RatVec& r : entries)
    if (r.size() != cols)
      throw InputError("ragged linear map");
}

RatVec LinMap::apply(const RatVec& x) const
{
  if (x.size() != cols)
    throw InputError("linear map applied to a vector of wrong dimension");
  RatVec y(rows);
  for (std::size_t i = 0; i < rows; ++i)
    y[i] = dot(entries[i], x);
  return y;
}

bool contains(const VPolytope& P, const RatVec& x)
{
  require_dim(P, x);
  return in_hull(P.verts(), x);
}

FaceId minimal_face(const VPolytope& P, const RatVec& x)
{
  require_member(P, x);
  std::vector<RatVec> gens = cone_generators_at(P, x);
  LinealityBasis lin = cone_lineality(ConeGen(P.dim(), gens));
  FaceId f;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (linalg::in_span(lin.basis, gens[j]))
      f.vertex_indices.push_back(j);
  return f;
}

FaceId minimal_face_oracle(const VPolytope& P, const RatVec& x)
{
  require_member(P, x);
  const auto& verts = P.verts();
  const std::size_t m = verts.size();
  FaceId f;
  for (std::size_t k = 0; k < m; ++k) {
    // Variables lam, mu_0..mu_{m-1} >= 0 with mu = (1 - lam) * weights of z:
    //   lam v_k + sum_j mu_j v_j = x,  lam + sum_j mu_j = 1,  0 < lam < 1.
    lp::Problem p;
    p.num_vars = 1 + m;
    p.nonneg.assign(1 + m, true);
    for (std::size_t i = 0; i < P.dim(); ++i) {
      Constraint row{zeros(1 + m), x[i], Relation::Equal};
      row.coeffs[0] = verts[k][i];
      for (std::size_t j = 0; j < m; ++j)
        row.coeffs[1 + j] = verts[j][i];
      p.rows.push_back(std::move(row));
    }
    p.rows.push_back({RatVec(1 + m, Rat(1)), 1, Relation::Equal});
    p.rows.push_back({unit_vector(1 + m, 0), 0, Relation::GreaterEq});
    p.rows.push_back({unit_vector(1 + m, 0), 1, Relation::LessEq});
    std::vector<bool> strict(p.rows.size(), false);
    strict[strict.size() - 2] = true;
    strict[strict.size() - 1] = true;
    if (lp::strictly_feasible(p, strict))
      f.vertex_indices.push_back(k);
  }
  return f;
}

InteriorVerdict interiors(const VPolytope& P, const RatVec& x)
{
  require_member(P, x);
  InteriorVerdict v;
  v.ri = relative_interior_point(P.verts(), x);

  ConeGen cone(P.dim(), cone_generators_at(P, x));
  v.icr = true;
  for (const RatVec& g : cone.generators())
    if (!in_cone(cone, -g)) {
      v.icr = false;
      break;
    }

  // A finitely generated cone is closed, so the closed conic hull is the cone:
  // it is a subspace iff it coincides with its lineality space.
  LinealityBasis lin = cone_lineality(cone);
  v.qri = true;
  for (const RatVec& g : cone.generators())
    if (!linalg::in_span(lin.basis, g)) {
      v.qri = false;
      break;
    }

  // Faces of a polytope are closed, so C ⊆ cl F_min means F_min = C.
  v.fri = minimal_face(P, x).size() == P.size();
  return v;
}

bool is_face(const VPolytope& P, const FaceId& S)
{
  const std::size_t m = P.size();
  std::vector<bool> in(m, false);
  for (std::size_t i : S.vertex_indices) {
    if (i >= m)
      throw InputError("vertex index " + std::to_string(i) + " out of range");
    in[i] = true;
  }
  std::size_t count = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  if (count == 0 || count == m)
    return true;
  // Variables (c, b): c.v = b on S, c.v < b off S.
  const std::size_t n = P.dim() + 1;
  lp::Problem p;
  p.num_vars = n;
  std::vector<bool> strict;
  for (std::size_t j = 0; j < m; ++j) {
    RatVec row = P.verts()[j];
    row.push_back(-1);
    p.rows.push_back({row, 0, in[j] ? Relation::Equal : Relation::LessEq});
    strict.push_back(!in[j]);
  }
  return lp::strictly_feasible(p, strict).has_value();
}

std::size_t enum_bound()
{
  if (const char* env = std::getenv("FACEKIT_ENUM_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 12;
}

std::vector<FaceId> enumerate_faces(const VPolytope& P) { return enumerate_faces(P, enum_bound()); }

std::vector<FaceId> enumerate_faces(const VPolytope& P, std::size_t bound)
{
  const std::size_t m = P.size();
  if (m > bound)
    throw ResourceError("face enumeration bound exceeded: " + std::to_string(m) + " vertices, bound " +
                        std::to_string(bound));
  if (m >= 8 * sizeof(unsigned long) - 1)
    throw ResourceError("face enumeration bound exceeded");
  std::vector<FaceId> faces;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    FaceId f;
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (1UL << j))
        f.vertex_indices.push_back(j);
    if (is_face(P, f))
      faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const FaceId& a, const FaceId& b) { return face_order(a, b) < 0; });
  return faces;
}

VPolytope face_polytope(const VPolytope& P, const FaceId& F)
{
  if (F.empty())
    throw InputError("the empty face has no polytope");
  return VPolytope(P.dim(), select(P, F));
}

int face_dimension(const VPolytope& P, const FaceId& F)
{
  if (F.empty())
    return -1;
  return static_cast<int>(affine_hull(select(P, F)).basis.size());
}

std::vector<Assignment> decompose(const VPolytope& P, const std::vector<RatVec>& samples)
{
  for (const RatVec& s : samples)
    require_member(P, s);
  std::optional<std::vector<FaceId>> lattice;
  if (P.size() <= enum_bound())
    lattice = enumerate_faces(P);

  std::vector<Assignment> out;
  for (const RatVec& s : samples) {
    Assignment a{s, minimal_face(P, s), 0};
    if (!relative_interior_point(select(P, a.face), s))
      throw std::logic_error("decompose: sample " + to_string(s) + " is not in ri of " + to_string(a.face));
    if (lattice) {
      for (const FaceId& f : *lattice) {
        if (f.empty() || f == a.face)
          continue;
        std::vector<RatVec> pts = select(P, f);
        if (in_hull(pts, s) && relative_interior_point(pts, s))
          throw std::logic_error("decompose: sample " + to_string(s) + " also lies in ri of " + to_string(f));
        ++a.faces_checked;
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

Rat max_step(const VPolytope& P, const RatVec& x, const RatVec& d)
{
  require_dim(P, x);
  require_dim(P, d);
  if (is_zero(d))
    throw InputError("max_step needs a nonzero direction");
  // Variables eps, lam_j >= 0: sum_j lam_j v_j - eps d = x, sum lam = 1.
  const std::size_t m = P.size();
  lp::Problem p;
  p.num_vars = 1 + m;
  p.nonneg.assign(1 + m, true);
  for (std::size_t i = 0; i < P.dim(); ++i) {
    Constraint row{zeros(1 + m), x[i], Relation::Equal};
    row.coeffs[0] = -d[i];
    for (std::size_t j = 0; j < m; ++j)
      row.coeffs[1 + j] = P.verts()[j][i];
    p.rows.push_back(std::move(row));
  }
  Constraint sum{RatVec(1 + m, Rat(1)), 1, Relation::Equal};
  sum.coeffs[0] = 0;
  p.rows.push_back(std::move(sum));
  p.objective = unit_vector(1 + m, 0);
  lp::Solution s = lp::solve(p);
  if (s.status != lp::Status::Optimal)
    throw PreconditionError("max_step: base point is not in the polytope");
  return s.value;
}

namespace {

std::optional<std::size_t> check_grid(const VPolytope& P, const RatVec& x, const RatVec& y, const Rat& r)
{
  const std::size_t n = P.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= 3;
  std::size_t checked = 0;
  for (std::size_t code = 0; code < total; ++code) {
    RatVec z = y;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3)
      z[i] += Rat(static_cast<long>(c % 3) - 1) * r;
    if (!contains(P, z))
      continue;
    if (z == x || sgn(max_step(P, x, x - z)) != 0)
      return std::nullopt;
    ++checked;
  }
  return checked;
}

}  // namespace

std::optional<NotInFriWitness> notinfri_witness(const VPolytope& P, const RatVec& x)
{
  FaceId f = minimal_face(P, x);
  if (f.size() == P.size())
    return std::nullopt;
  std::size_t yi = 0;
  while (std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), yi))
    ++yi;
  const RatVec& y = P.verts()[yi];
  AffineHull hull = affine_hull(select(P, f));

  // min s subject to -s <= (y - base - B alpha)_i <= s, alpha free.
  const std::size_t k = hull.basis.size();
  const std::size_t n = P.dim();
  lp::Problem p;
  p.num_vars = k + 1;
  std::vector<bool> nonneg(k + 1, false);
  nonneg[k] = true;
  p.nonneg = nonneg;
  RatVec diff = y - hull.base;
  for (std::size_t i = 0; i < n; ++i) {
    // (B alpha)_i + s >= diff_i   and   (B alpha)_i - s <= diff_i
    Constraint lo{zeros(k + 1), diff[i], Relation::GreaterEq};
    Constraint hi{zeros(k + 1), diff[i], Relation::LessEq};
    for (std::size_t j = 0; j < k; ++j) {
      lo.coeffs[j] = hull.basis[j][i];
      hi.coeffs[j] = hull.basis[j][i];
    }
    lo.coeffs[k] = 1;
    hi.coeffs[k] = -1;
    p.rows.push_back(std::move(lo));
    p.rows.push_back(std::move(hi));
  }
  p.objective = zeros(k + 1);
  p.objective[k] = -1;
  lp::Solution s = lp::solve(p);
  if (s.status != lp::Status::Optimal || sgn(s.value) >= 0)
    throw std::logic_error("notinfri_witness: vertex outside the face lies on its affine span");

  NotInFriWitness w{y, Rat(-s.value / 2), 0};
  auto checked = check_grid(P, x, w.y, w.r);
  if (!checked)
    throw std::logic_error("notinfri_witness: grid re-verification failed");
  w.grid_points = *checked;
  return w;
}

std::optional<std::size_t> verify_notinfri_witness(const VPolytope& P, const RatVec& x,
                                                   const NotInFriWitness& w)
{
  require_member(P, x);
  require_dim(P, w.y);
  if (sgn(w.r) <= 0 || !contains(P, w.y))
    return std::nullopt;
  return check_grid(P, x, w.y, w.r);
}

VPolytope product(const VPolytope& P, const VPolytope& Q)
{
  std::vector<RatVec> pts;
  for (const RatVec& p : P.verts())
    for (const RatVec& q : Q.verts()) {
      RatVec v = p;
      v.insert(v.end(), q.begin(), q.end());
      pts.push_back(std::move(v));
    }
  return VPolytope(P.dim() + Q.dim(), std::move(pts));
}

VPolytope translate(const VPolytope& P, const RatVec& a)
{
  require_dim(P, a);
  std::vector<RatVec> pts;
  for (const RatVec& v : P.verts())
    pts.push_back(v + a);
  return VPolytope(P.dim(), std::move(pts));
}

VPolytope msum(const VPolytope& P, const VPolytope& Q)
{
  if (P.dim() != Q.dim())
    throw InputError("Minkowski sum of polytopes of different dimension");
  std::vector<RatVec> pts;
  for (const RatVec& p : P.verts())
    for (const RatVec& q : Q.verts())
      pts.push_back(p + q);
  return VPolytope(P.dim(), std::move(pts));
}

VPolytope image(const LinMap& T, const VPolytope& P)
{
  if (T.cols != P.dim())
    throw InputError("linear map has " + std::to_string(T.cols) + " columns, polytope dimension " +
                     std::to_string(P.dim()));
  std::vector<RatVec> pts;
  for (const RatVec& v : P.verts())
    pts.push_back(T.apply(v));
  return VPolytope(T.rows, std::move(pts));
}

HRep facets(const VPolytope& P)
{
  const std::size_t n = P.dim();
  if (n > kIntersectMaxDim)
    throw ResourceError("double description limited to dimension " + std::to_string(kIntersectMaxDim));
  // Cone of valid inequalities (a, beta): beta - a.v >= 0 for every vertex.
  std::vector<RatVec> rows;
  for (const RatVec& v : P.verts()) {
    RatVec r = -v;
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  dd::ConeGenerators g = dd::generators(rows, n + 1);
  HRep h;
  h.dim = n;
  for (const RatVec& l : g.lineality) {
    RatVec a(l.begin(), l.end() - 1);
    if (is_zero(a))
      continue;
    h.eq_normals.push_back(a);
    h.eq_offsets.push_back(l.back());
  }
  for (const RatVec& r : g.rays) {
    RatVec a(r.begin(), r.end() - 1);
    bool tight = false;
    for (const RatVec& v : P.verts())
      if (dot(a, v) == r.back()) {
        tight = true;
        break;
      }
    if (!tight || is_zero(a))
      continue;
    h.facet_normals.push_back(a);
    h.facet_offsets.push_back(r.back());
  }
  return h;
}

std::optional<VPolytope> intersect(const VPolytope& P, const VPolytope& Q)
{
  if (P.dim() != Q.dim())
    throw InputError("intersection of polytopes of different dimension");
  const std::size_t n = P.dim();
  if (n > kIntersectMaxDim)
    throw ResourceError("double description limited to dimension " + std::to_string(kIntersectMaxDim));

  // Homogenized system over (x, t): beta t - a.x >= 0 per inequality, both
  // signs for equations, and t >= 0.
  std::vector<RatVec> rows;
  auto add_le = [&](const RatVec& a, const Rat& beta) {
    RatVec r = -a;
    r.push_back(beta);
    rows.push_back(std::move(r));
  };
  for (const VPolytope* S : {&P, &Q}) {
    HRep h = facets(*S);
    for (std::size_t i = 0; i < h.facet_normals.size(); ++i)
      add_le(h.facet_normals[i], h.facet_offsets[i]);
    for (std::size_t i = 0; i < h.eq_normals.size(); ++i) {
      add_le(h.eq_normals[i], h.eq_offsets[i]);
      add_le(-h.eq_normals[i], Rat(-h.eq_offsets[i]));
    }
  }
  rows.push_back(unit_vector(n + 1, n));
  dd::ConeGenerators g = dd::generators(rows, n + 1);
  if (!g.lineality.empty())
    throw std::logic_error("intersect: homogenized cone of a bounded set has lineality");
  std::vector<RatVec> pts;
  for (const RatVec& r : g.rays) {
    if (sgn(r.back()) <= 0)
      continue;
    RatVec x(r.begin(), r.end() - 1);
    Rat t = r.back();
    for (Rat& q : x)
      q /= t;
    pts.push_back(std::move(x));
  }
  if (pts.empty())
    return std::nullopt;
  return VPolytope(n, std::move(pts));
}

namespace {

std::vector<std::string> tokens(std::string_view line)
{
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t)
    out.push_back(t);
  return out;
}

}  // namespace

VPolytope parse_polytope(std::string_view text)
{
  std::size_t dim = 0;
  std::vector<RatVec> verts;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> tok = tokens(line);
    if (tok.empty())
      continue;
    if (dim == 0) {
      if (tok.size() != 2 || tok[0] != "dim")
        throw ParseError("expected header 'dim n'", line_no);
      Rat d;
      try {
        d = parse_rat(tok[1]);
      } catch (const ParseError&) {
        throw ParseError("malformed dimension '" + tok[1] + "'", line_no);
      }
      if (d.get_den() != 1 || sgn(d) <= 0 || d > 1000)
        throw ParseError("dimension must be a positive integer", line_no);
      dim = d.get_num().get_ui();
      continue;
    }
    if (tok.size() != dim)
      throw ParseError("expected " + std::to_string(dim) + " coordinates, found " + std::to_string(tok.size()),
                       line_no);
    RatVec v;
    for (const std::string& t : tok) {
      try {
        v.push_back(parse_rat(t));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    verts.push_back(std::move(v));
  }
  if (dim == 0)
    throw ParseError("missing header 'dim n'", line_no);
  if (verts.empty())
    throw ParseError("no vertices", line_no);
  return VPolytope(dim, std::move(verts));
}

VPolytope load_polytope(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_polytope(text.str());
}

std::string format_polytope(const VPolytope& P)
{
  std::string out = "dim " + std::to_string(P.dim()) + "\n";
  for (const RatVec& v : P.verts()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i)
        out += ' ';
      out += to_string(v[i]);
    }
    out += '\n';
  }
  return out;
}

RatVec parse_point(std::string_view text, std::size_t dim)
{
  std::vector<std::string> tok = tokens(text);
  if (tok.size() != dim)
    throw ParseError("point needs " + std::to_string(dim) + " coordinates, found " + std::to_string(tok.size()));
  RatVec v;
  for (const std::string& t : tok)
    v.push_back(parse_rat(t));
  return v;
}

}  // namespace facekit
