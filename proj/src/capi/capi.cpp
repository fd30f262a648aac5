#include "facekit/facekit.h"

#include "facekit/errors.hpp"
#include "facekit/polytope.hpp"
#include "facekit/proplab.hpp"
#include "facekit/seqmodels.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

struct fk_polytope {
  facekit::VPolytope poly;
};

namespace {

using nlohmann::json;

thread_local std::string g_error;
thread_local std::size_t g_error_line = 0;

fk_status fail(fk_status s, const std::string& msg, std::size_t line = 0)
{
  g_error = msg;
  g_error_line = line;
  return s;
}

// Maps the C++ error hierarchy onto status codes. Order matters: ParseError
// derives from InputError.
template <class F>
fk_status guarded(F&& f)
{
  g_error.clear();
  g_error_line = 0;
  try {
    f();
    return FK_OK;
  } catch (const facekit::ParseError& e) {
    return fail(FK_ERR_PARSE, e.what(), e.line());
  } catch (const facekit::InputError& e) {
    return fail(FK_ERR_INPUT, e.what());
  } catch (const facekit::ResourceError& e) {
    return fail(FK_ERR_RESOURCE, e.what());
  } catch (const facekit::PreconditionError& e) {
    return fail(FK_ERR_PRECONDITION, e.what());
  } catch (const facekit::UnsupportedError& e) {
    return fail(FK_ERR_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FK_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(FK_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what)
{
  if (!p)
    throw facekit::InputError(std::string(what) + " is null");
}

void need_format(fk_format f)
{
  if (f != FK_FORMAT_TEXT && f != FK_FORMAT_JSON && f != FK_FORMAT_CSV)
    throw facekit::InputError("unknown output format");
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

std::string index_list(const facekit::FaceId& f, const char* sep)
{
  std::string s;
  for (std::size_t i = 0; i < f.vertex_indices.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(f.vertex_indices[i]);
  }
  return s;
}

std::string render_faces(const facekit::VPolytope& P, fk_format fmt)
{
  const std::vector<facekit::FaceId> faces = facekit::enumerate_faces(P);
  if (fmt == FK_FORMAT_JSON) {
    json a = json::array();
    for (const auto& f : faces)
      a.push_back({{"vertices", f.vertex_indices}, {"dim", facekit::face_dimension(P, f)}});
    return a.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == FK_FORMAT_CSV)
    os << "vertices,dim\n";
  for (const auto& f : faces) {
    if (fmt == FK_FORMAT_CSV)
      os << index_list(f, " ") << ',' << facekit::face_dimension(P, f) << '\n';
    else
      os << '{' << index_list(f, ",") << "} dim " << facekit::face_dimension(P, f) << '\n';
  }
  if (fmt == FK_FORMAT_TEXT)
    os << faces.size() << " faces\n";
  return os.str();
}

std::string render_classify(const facekit::VPolytope& P, const facekit::RatVec& x, fk_format fmt, int* flags)
{
  if (!facekit::contains(P, x))
    throw facekit::PreconditionError("point " + facekit::to_string(x) + " is not in the polytope");
  const facekit::FaceId f = facekit::minimal_face(P, x);
  const facekit::InteriorVerdict v = facekit::interiors(P, x);
  if (flags)
    *flags = int(v.ri) | int(v.icr) << 1 | int(v.fri) << 2 | int(v.qri) << 3;
  if (fmt == FK_FORMAT_JSON) {
    json j{{"point", facekit::to_string(x)},
           {"face", f.vertex_indices},
           {"face_dim", facekit::face_dimension(P, f)},
           {"ri", v.ri},
           {"icr", v.icr},
           {"fri", v.fri},
           {"qri", v.qri}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == FK_FORMAT_CSV)
    os << "face,ri,icr,fri,qri\n"
       << index_list(f, " ") << ',' << v.ri << ',' << v.icr << ',' << v.fri << ',' << v.qri << '\n';
  else
    os << "face {" << index_list(f, ",") << "}; ri=" << v.ri << " icr=" << v.icr << " fri=" << v.fri
       << " qri=" << v.qri << '\n';
  return os.str();
}

std::string render_claims(const std::vector<facekit::Claim>& claims, fk_format fmt)
{
  if (fmt == FK_FORMAT_JSON)
    return facekit::to_json(claims).dump(2) + "\n";
  std::ostringstream os;
  if (fmt == FK_FORMAT_CSV) {
    os << "claim,verdict,checks,notes\n";
    for (const auto& c : claims) {
      std::string notes;
      for (const auto& n : c.notes)
        notes += (notes.empty() ? "" : "; ") + n;
      os << csv_field(c.name) << ',' << (c.pass ? "Pass" : "Fail") << ',' << c.cert.checks.size() << ','
         << csv_field(notes) << '\n';
    }
    return os.str();
  }
  const json records = facekit::to_json(claims);
  std::size_t passed = 0;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const auto& c = claims[i];
    passed += c.pass;
    os << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    for (const auto& n : c.notes)
      os << "  note: " << n << '\n';
    for (const auto& f : c.cert.facts)
      os << "  fact: " << f << '\n';
    for (const auto& k : records[i]["certificate"]["checks"]) {
      os << "  " << (k["holds"].get<bool>() ? "ok  " : "FAIL") << ' ' << k["what"].get<std::string>() << ": ";
      if (k.contains("lhs"))
        os << k["lhs"].get<std::string>() << ' ';
      os << k["rel"].get<std::string>() << ' ' << k["rhs"].get<std::string>() << '\n';
    }
  }
  os << passed << '/' << claims.size() << " claims pass\n";
  return os.str();
}

std::string render_reports(const std::vector<facekit::PropertyReport>& reps, fk_format fmt)
{
  if (fmt == FK_FORMAT_JSON)
    return facekit::to_json(reps).dump(2) + "\n";
  std::ostringstream os;
  if (fmt == FK_FORMAT_CSV) {
    os << "property_id,status,trials,seed,counterexample\n";
    for (const auto& r : reps)
      os << r.property_id << ',' << facekit::to_string(r.status) << ',' << r.trials << ',' << r.seed << ','
         << (r.counterexample ? csv_field(r.counterexample->dump()) : "") << '\n';
    return os.str();
  }
  for (const auto& r : reps) {
    os << r.property_id << ' ' << facekit::to_string(r.status) << " trials=" << r.trials << " seed=" << r.seed
       << '\n';
    for (const auto& n : r.notes)
      os << "  " << n << '\n';
    if (r.counterexample)
      os << "  counterexample: " << r.counterexample->dump() << '\n';
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* fk_version(void) { return "0.1.0"; }

const char* fk_last_error(void) { return g_error.c_str(); }

size_t fk_last_error_line(void) { return g_error_line; }

const char* fk_status_name(fk_status s)
{
  switch (s) {
    case FK_OK:
      return "ok";
    case FK_ERR_INPUT:
      return "input error";
    case FK_ERR_PARSE:
      return "parse error";
    case FK_ERR_RESOURCE:
      return "resource bound exceeded";
    case FK_ERR_PRECONDITION:
      return "precondition violated";
    case FK_ERR_UNSUPPORTED:
      return "unsupported";
    case FK_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void fk_string_free(char* s) { std::free(s); }

fk_status fk_polytope_parse(const char* text, fk_polytope** out)
{
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new fk_polytope{facekit::parse_polytope(text)};
  });
}

fk_status fk_polytope_load(const char* path, fk_polytope** out)
{
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new fk_polytope{facekit::load_polytope(path)};
  });
}

void fk_polytope_free(fk_polytope* p) { delete p; }

fk_status fk_polytope_dim(const fk_polytope* p, size_t* out)
{
  return guarded([&] {
    need(p, "polytope");
    need(out, "out");
    *out = p->poly.dim();
  });
}

fk_status fk_polytope_vertex_count(const fk_polytope* p, size_t* out)
{
  return guarded([&] {
    need(p, "polytope");
    need(out, "out");
    *out = p->poly.size();
  });
}

fk_status fk_polytope_format(const fk_polytope* p, char** out)
{
  return guarded([&] {
    need(p, "polytope");
    need(out, "out");
    *out = dup(facekit::format_polytope(p->poly));
  });
}

fk_status fk_faces(const fk_polytope* p, fk_format fmt, char** out)
{
  return guarded([&] {
    need(p, "polytope");
    need(out, "out");
    need_format(fmt);
    *out = dup(render_faces(p->poly, fmt));
  });
}

fk_status fk_classify(const fk_polytope* p, const char* point, fk_format fmt, char** out, int* flags)
{
  return guarded([&] {
    need(p, "polytope");
    need(point, "point");
    need(out, "out");
    need_format(fmt);
    const facekit::RatVec x = facekit::parse_point(point, p->poly.dim());
    *out = dup(render_classify(p->poly, x, fmt, flags));
  });
}

fk_status fk_models_list(char** out_json)
{
  return guarded([&] {
    need(out_json, "out");
    *out_json = dup(json(facekit::claim_set_names()).dump());
  });
}

fk_status fk_models_run(const char* name, fk_format fmt, char** out, int* all_pass)
{
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    need_format(fmt);
    const std::vector<facekit::Claim> claims = facekit::claims_for(name);
    bool ok = true;
    for (const auto& c : claims)
      ok = ok && c.pass;
    *out = dup(render_claims(claims, fmt));
    if (all_pass)
      *all_pass = ok;
  });
}

fk_status fk_check_list(char** out_json)
{
  return guarded([&] {
    need(out_json, "out");
    json a = json::array();
    for (const auto& p : facekit::property_registry())
      a.push_back({{"property_id", p.id}, {"statement", p.statement}});
    *out_json = dup(a.dump(2));
  });
}

fk_status fk_check_run(const char* filter, uint64_t seed, size_t trials, fk_format fmt, char** out, int* all_pass)
{
  return guarded([&] {
    need(out, "out");
    need_format(fmt);
    facekit::GenConfig cfg;
    cfg.seed = seed;
    if (trials)
      cfg.trials = trials;
    cfg.validate();
    const std::vector<std::string> ids = facekit::select_properties(filter ? filter : "");
    const std::vector<facekit::PropertyReport> reps = facekit::run_all(cfg, ids);
    bool ok = true;
    for (const auto& r : reps)
      ok = ok && r.status == facekit::Status::Pass;
    *out = dup(render_reports(reps, fmt));
    if (all_pass)
      *all_pass = ok;
  });
}

}  // extern "C"
