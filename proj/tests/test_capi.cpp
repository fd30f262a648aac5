// Exercises the shared library through its C header only.
#include "doctest.h"

#include "facekit/facekit.h"
#include "json.hpp"

#include <string>

using nlohmann::json;

namespace {

const char* kSquare = "dim 2\n0 0\n1 0\n0 1\n1 1\n";

struct Text {
  char* s = nullptr;
  ~Text() { fk_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Poly {
  fk_polytope* p = nullptr;
  ~Poly() { fk_polytope_free(p); }
};

}  // namespace

TEST_CASE("polytope handles")
{
  Poly sq;
  REQUIRE(fk_polytope_parse(kSquare, &sq.p) == FK_OK);
  size_t dim = 0, n = 0;
  CHECK(fk_polytope_dim(sq.p, &dim) == FK_OK);
  CHECK(fk_polytope_vertex_count(sq.p, &n) == FK_OK);
  CHECK(dim == 2);
  CHECK(n == 4);

  Text t;
  REQUIRE(fk_polytope_format(sq.p, &t.s) == FK_OK);
  Poly again;
  REQUIRE(fk_polytope_parse(t.s, &again.p) == FK_OK);
  Text t2;
  REQUIRE(fk_polytope_format(again.p, &t2.s) == FK_OK);
  CHECK(t.str() == t2.str());

  // redundant generators are dropped
  Poly tri;
  REQUIRE(fk_polytope_parse("dim 2\n0 0\n2 0\n0 2\n1/2 1/2\n", &tri.p) == FK_OK);
  CHECK(fk_polytope_vertex_count(tri.p, &n) == FK_OK);
  CHECK(n == 3);
}

TEST_CASE("error codes and messages")
{
  Poly p;
  CHECK(fk_polytope_parse("dim 2\n0 0\n1/0 1\n", &p.p) == FK_ERR_PARSE);
  CHECK(p.p == nullptr);
  CHECK(fk_last_error_line() == 3);
  CHECK(std::string(fk_last_error()).find("line 3") != std::string::npos);

  CHECK(fk_polytope_load("/nonexistent/file.txt", &p.p) != FK_OK);
  CHECK(fk_polytope_parse(nullptr, &p.p) == FK_ERR_INPUT);
  CHECK(fk_polytope_dim(nullptr, nullptr) == FK_ERR_INPUT);

  Poly sq;
  REQUIRE(fk_polytope_parse(kSquare, &sq.p) == FK_OK);
  CHECK(std::string(fk_last_error()).empty());
  Text t;
  CHECK(fk_classify(sq.p, "3 3", FK_FORMAT_TEXT, &t.s, nullptr) == FK_ERR_PRECONDITION);
  CHECK(fk_classify(sq.p, "1 2 3", FK_FORMAT_TEXT, &t.s, nullptr) == FK_ERR_PARSE);
  CHECK(fk_classify(sq.p, "1/2 0", static_cast<fk_format>(9), &t.s, nullptr) == FK_ERR_INPUT);
  CHECK(t.s == nullptr);

  CHECK(std::string(fk_status_name(FK_ERR_RESOURCE)) == "resource bound exceeded");
  CHECK(std::string(fk_version()).size() > 0);
}

TEST_CASE("faces and classify")
{
  Poly sq;
  REQUIRE(fk_polytope_parse(kSquare, &sq.p) == FK_OK);
  Text faces;
  REQUIRE(fk_faces(sq.p, FK_FORMAT_JSON, &faces.s) == FK_OK);
  json f = json::parse(faces.str());
  REQUIRE(f.size() == 10);
  CHECK(f.front()["vertices"].empty());
  CHECK(f.front()["dim"] == -1);
  CHECK(f.back()["dim"] == 2);

  Text line;
  int flags = -1;
  REQUIRE(fk_classify(sq.p, "1/2 0", FK_FORMAT_TEXT, &line.s, &flags) == FK_OK);
  CHECK(line.str() == "face {0,1}; ri=0 icr=0 fri=0 qri=0\n");
  CHECK(flags == 0);
  Text centre;
  REQUIRE(fk_classify(sq.p, "1/2 1/2", FK_FORMAT_JSON, &centre.s, &flags) == FK_OK);
  CHECK(flags == 15);
  json c = json::parse(centre.str());
  CHECK(c["face"].size() == 4);
  CHECK(c["ri"] == true);
  CHECK(c["qri"] == true);
}

TEST_CASE("too many vertices for the face lattice")
{
  std::string text = "dim 2\n";
  // points on the parabola y = x^2 are all extreme
  for (int k = 0; k < 13; ++k)
    text += std::to_string(k) + " " + std::to_string(k * k) + "\n";
  Poly p;
  REQUIRE(fk_polytope_parse(text.c_str(), &p.p) == FK_OK);
  Text t;
  CHECK(fk_faces(p.p, FK_FORMAT_TEXT, &t.s) == FK_ERR_RESOURCE);
}

TEST_CASE("models")
{
  Text names;
  REQUIRE(fk_models_list(&names.s) == FK_OK);
  json n = json::parse(names.str());
  CHECK(n.size() == 10);

  Text report;
  int pass = 0;
  REQUIRE(fk_models_run("zalinescu", FK_FORMAT_JSON, &report.s, &pass) == FK_OK);
  CHECK(pass == 1);
  json r = json::parse(report.str());
  REQUIRE(r.is_array());
  bool flagged = false;
  for (const auto& rec : r) {
    CHECK(rec.contains("claim"));
    CHECK(rec["verdict"] == "Pass");
    CHECK(rec["certificate"].contains("checks"));
    if (rec.contains("notes"))
      for (const auto& note : rec["notes"])
        flagged = flagged || note.get<std::string>().find("discrepancy") != std::string::npos;
  }
  CHECK(flagged);

  Text chain;
  REQUIRE(fk_models_run("sigma-hull", FK_FORMAT_TEXT, &chain.s, &pass) == FK_OK);
  CHECK(chain.str().find("PASS x not in co A") != std::string::npos);
  CHECK(fk_models_run("nope", FK_FORMAT_TEXT, &chain.s, &pass) == FK_ERR_INPUT);
}

TEST_CASE("check runs")
{
  Text a, b;
  int pass = 0;
  REQUIRE(fk_check_run("P-ORACLE", 7, 8, FK_FORMAT_JSON, &a.s, &pass) == FK_OK);
  CHECK(pass == 1);
  REQUIRE(fk_check_run("P-ORACLE", 7, 8, FK_FORMAT_JSON, &b.s, &pass) == FK_OK);
  CHECK(a.str() == b.str());
  json j = json::parse(a.str());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["property_id"] == "P-ORACLE");
  CHECK(j[0]["status"] == "Pass");
  CHECK(j[0]["seed"] == 7);
  CHECK(j[0]["trials"] == 8);

  Text empty;
  REQUIRE(fk_check_run("Q-*", 7, 8, FK_FORMAT_JSON, &empty.s, &pass) == FK_OK);
  CHECK(json::parse(empty.str()).empty());
  CHECK(pass == 1);
  Text bad;
  CHECK(fk_check_run("P-NOPE", 7, 8, FK_FORMAT_JSON, &bad.s, &pass) == FK_ERR_INPUT);

  Text csv;
  REQUIRE(fk_check_run("P-SEQ-REGRESSION", 1, 0, FK_FORMAT_CSV, &csv.s, &pass) == FK_OK);
  CHECK(csv.str().rfind("property_id,status,trials,seed,counterexample\nP-SEQ-REGRESSION,Pass,", 0) == 0);

  Text list;
  REQUIRE(fk_check_list(&list.s) == FK_OK);
  CHECK(json::parse(list.str()).size() == 17);
}
