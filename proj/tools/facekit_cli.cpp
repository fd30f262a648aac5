// facekit command-line front end. Links only against the C API.
#include "facekit/facekit.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kResource = 3, kDomain = 4 };

int exit_for(fk_status s)
{
  switch (s) {
    case FK_OK:
      return kOk;
    case FK_ERR_INPUT:
    case FK_ERR_PARSE:
      return kUsage;
    case FK_ERR_RESOURCE:
      return kResource;
    case FK_ERR_PRECONDITION:
    case FK_ERR_UNSUPPORTED:
      return kDomain;
    case FK_ERR_INTERNAL:
      break;
  }
  return kPropertyFailure;
}

int report(fk_status s)
{
  std::cerr << "facekit: " << fk_status_name(s) << ": " << fk_last_error() << '\n';
  return exit_for(s);
}

struct Owned {
  char* s = nullptr;
  ~Owned() { fk_string_free(s); }
};

using PolyPtr = std::unique_ptr<fk_polytope, decltype(&fk_polytope_free)>;

struct Options {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string filter;
  std::string file;
  std::vector<std::string> point;
  std::string model;
  bool list = false;
};

fk_format to_format(const std::string& f)
{
  if (f == "json")
    return FK_FORMAT_JSON;
  if (f == "csv")
    return FK_FORMAT_CSV;
  return FK_FORMAT_TEXT;
}

int emit(const Options& o, const char* text)
{
  if (o.out.empty()) {
    std::fputs(text, stdout);
    return kOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "facekit: cannot write " << o.out << '\n';
    return kUsage;
  }
  return kOk;
}

int load(const Options& o, PolyPtr& p)
{
  fk_polytope* raw = nullptr;
  const fk_status s = fk_polytope_load(o.file.c_str(), &raw);
  if (s != FK_OK)
    return report(s);
  p.reset(raw);
  return kOk;
}

int cmd_faces(const Options& o)
{
  PolyPtr p(nullptr, fk_polytope_free);
  if (int rc = load(o, p))
    return rc;
  Owned out;
  if (fk_status s = fk_faces(p.get(), to_format(o.format), &out.s))
    return report(s);
  return emit(o, out.s);
}

int cmd_classify(const Options& o)
{
  PolyPtr p(nullptr, fk_polytope_free);
  if (int rc = load(o, p))
    return rc;
  std::string point;
  for (const std::string& c : o.point)
    point += (point.empty() ? "" : " ") + c;
  Owned out;
  if (fk_status s = fk_classify(p.get(), point.c_str(), to_format(o.format), &out.s, nullptr))
    return report(s);
  return emit(o, out.s);
}

int cmd_models(const Options& o)
{
  Owned out;
  if (o.list || o.model.empty()) {
    if (fk_status s = fk_models_list(&out.s))
      return report(s);
    int rc = emit(o, out.s);
    if (rc == kOk && o.out.empty())
      std::fputc('\n', stdout);
    return o.model.empty() && !o.list ? kUsage : rc;
  }
  int all_pass = 0;
  if (fk_status s = fk_models_run(o.model.c_str(), to_format(o.format), &out.s, &all_pass))
    return report(s);
  if (int rc = emit(o, out.s))
    return rc;
  return all_pass ? kOk : kPropertyFailure;
}

int cmd_check(const Options& o)
{
  Owned out;
  if (o.list) {
    if (fk_status s = fk_check_list(&out.s))
      return report(s);
    std::puts(out.s);
    return kOk;
  }
  int all_pass = 0;
  if (fk_status s = fk_check_run(o.filter.c_str(), o.seed, o.trials, to_format(o.format), &out.s, &all_pass))
    return report(s);
  if (int rc = emit(o, out.s))
    return rc;
  return all_pass ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Faces and interiors of convex sets, exactly."};
  app.require_subcommand(1);
  Options o;

  auto* fmt = app.add_option("--format", o.format, "Output format")
                  ->check(CLI::IsMember({"json", "csv", "text"}))
                  ->capture_default_str();
  app.add_option("--out", o.out, "Write output to this file instead of stdout");

  auto* faces = app.add_subcommand("faces", "List the face lattice of a polytope file");
  faces->add_option("file", o.file, "Polytope file")->required();

  auto* classify = app.add_subcommand("classify", "Minimal face and interior flags of a point");
  classify->add_option("file", o.file, "Polytope file")->required();
  classify->add_option("point", o.point, "Point coordinates, e.g. \"1/2 0\"")->required();

  auto* models = app.add_subcommand("models", "Run a sequence-space claim set");
  models->add_option("name", o.model, "Claim set name");
  models->add_flag("--list", o.list, "List claim set names");

  auto* check = app.add_subcommand("check", "Run property suites");
  check->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  check->add_option("--trials", o.trials, "Trials per suite (default 200)")->check(CLI::PositiveNumber);
  check->add_option("--filter", o.filter, "Comma-separated ids or globs");
  check->add_flag("--list", o.list, "List property ids");

  for (CLI::App* sub : {faces, classify, models, check})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  // The aggregate report written to a file is JSON unless asked otherwise.
  if (check->parsed() && !o.out.empty() && fmt->count() == 0)
    o.format = "json";

  if (faces->parsed())
    return cmd_faces(o);
  if (classify->parsed())
    return cmd_classify(o);
  if (models->parsed())
    return cmd_models(o);
  return cmd_check(o);
}
