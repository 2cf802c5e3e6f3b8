#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qpas/analysis.hpp"
#include "qpas/families.hpp"
#include "qpas/io.hpp"
#include "qpas/report.hpp"
#include "test_util.hpp"

using qpas::Rat;
using testutil::R;

namespace {

std::string tmp_path(const std::string& name) { return "/tmp/qpas_test_" + name; }

int run_cli(const std::string& args, const std::string& stdout_path = "") {
  std::string cmd = std::string(QPAS_CLI_PATH) + " " + args;
  if (!stdout_path.empty()) cmd += " > " + stdout_path;
  cmd += " 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("JSON point-set round trip (exact)") {
  const auto ps = qpas::cross_polytope(4);
  const std::string text = qpas::point_set_to_json(ps);
  const auto back = qpas::parse_point_set_json(text, {});
  REQUIRE(back.backend == "rational");
  const auto& ps2 = std::get<qpas::point_set<Rat>>(back.data);
  REQUIRE(ps2.size() == ps.size());
  for (int i = 0; i < ps.size(); ++i)
    for (int k = 0; k < ps.dim(); ++k) CHECK(ps2.coord(i, k) == ps.coord(i, k));
}

TEST_CASE("JSON point-set round trip (float)") {
  const auto ps = qpas::icosahedron();
  const std::string text = qpas::point_set_to_json(ps);
  const auto back = qpas::parse_point_set_json(text, {});
  REQUIRE(back.backend == "float");
  const auto& ps2 = std::get<qpas::point_set<double>>(back.data);
  for (int i = 0; i < ps.size(); ++i)
    for (int k = 0; k < ps.dim(); ++k) CHECK(ps2.coord(i, k) == ps.coord(i, k));
}

TEST_CASE("CSV parsing and backend detection") {
  const auto rat = qpas::parse_point_set_csv("1/2, 1/2, 1/2, 1/2\n-1, 0, 0, 0\n", {});
  CHECK(rat.backend == "rational");
  CHECK(std::get<qpas::point_set<Rat>>(rat.data).coord(0, 0) == R(1, 2));

  const auto flt = qpas::parse_point_set_csv("0.6,0.8\n1,0\n", {});
  CHECK(flt.backend == "float");

  CHECK_THROWS_AS(qpas::parse_point_set_csv("1,0\n0\n", {}), qpas::parse_error);
  CHECK_THROWS_AS(qpas::parse_point_set_csv("", {}), qpas::parse_error);
  CHECK_THROWS_AS(qpas::parse_point_set_csv("abc,def\n", {}), qpas::parse_error);

  // Exact CSV round trip through the writer.
  const auto ps = qpas::cross_polytope(3);
  const auto back = qpas::parse_point_set_csv(qpas::point_set_to_csv(ps), {});
  CHECK(back.backend == "rational");
  CHECK(std::get<qpas::point_set<Rat>>(back.data).size() == 6);
}

TEST_CASE("point-set JSON validation errors") {
  CHECK_THROWS_AS(qpas::parse_point_set_json("{not json", {}), qpas::parse_error);
  CHECK_THROWS_AS(qpas::parse_point_set_json("{\"dimension\": 2}", {}), qpas::parse_error);
  CHECK_THROWS_AS(
      qpas::parse_point_set_json(
          "{\"dimension\": 2, \"scalar\": \"decimal\", \"points\": [[1, 0]]}", {}),
      qpas::parse_error);
  CHECK_THROWS_AS(qpas::parse_point_set_json(
                      "{\"dimension\": 2, \"scalar\": \"rational\", \"points\": [[\"1/2\", "
                      "\"1/2\"]]}",
                      {}),
                  qpas::invalid_point_set);
}

TEST_CASE("report rendering is backend-faithful") {
  const auto ar = qpas::analyze(qpas::cross_polytope(3));
  qpas::report_meta meta;
  meta.input = "cross3";
  meta.digest = "0";
  meta.backend = "rational";
  const auto rep = qpas::render_report(ar, meta);
  CHECK(rep.at("degree") == 2);
  CHECK(rep.at("strength") == 3);
  CHECK(rep.at("spectrum_canonical") ==
        nlohmann::ordered_json::array({"1", "-1", "0"}));
  CHECK(rep.at("theorem").at("all_pass") == true);
  CHECK(rep.contains("timing") == false);
  // CSV flattening keeps one value per row.
  const std::string csv = qpas::json_to_csv(rep);
  CHECK(csv.find("degree,2") != std::string::npos);
  CHECK(csv.find("P[0][0],1") != std::string::npos);
}

TEST_CASE("cli: generate and analyze round trip") {
  const std::string file = tmp_path("cross8.json");
  REQUIRE(run_cli("generate --family cross --n 8 -o " + file) == 0);
  const std::string rep = tmp_path("cross8_report.json");
  REQUIRE(run_cli("analyze " + file, rep) == 0);
  const auto j = nlohmann::ordered_json::parse(qpas::read_file(rep));
  CHECK(j.at("size") == 16);
  CHECK(j.at("degree") == 2);
  CHECK(j.at("strength") == 3);
  CHECK(j.at("theorem").at("all_pass") == true);
  CHECK(j.at("warnings").empty());
}

TEST_CASE("cli: analyze simplex exits zero with a warning") {
  const std::string file = tmp_path("simplex.json");
  REQUIRE(run_cli("generate --family simplex --n 4 -o " + file) == 0);
  const std::string rep = tmp_path("simplex_report.json");
  CHECK(run_cli("analyze " + file, rep) == 0);
  const auto j = nlohmann::ordered_json::parse(qpas::read_file(rep));
  CHECK(j.at("hypotheses").at("applicable") == false);
  CHECK_FALSE(j.at("warnings").empty());
  CHECK_FALSE(j.contains("P"));
}

TEST_CASE("cli: hard errors exit nonzero") {
  // Unreadable input.
  CHECK(run_cli("analyze /tmp/qpas_no_such_file.json") == 2);
  // Malformed file.
  qpas::write_file(tmp_path("bad.json"), "{\"dimension\": 2}");
  CHECK(run_cli("analyze " + tmp_path("bad.json")) == 2);
  // A tolerance too coarse for the icosahedron spectrum: representatives
  // collide inside the (eps, 2*eps] dead zone.
  const std::string ico = tmp_path("icosa.json");
  REQUIRE(run_cli("generate --family icosahedron -o " + ico) == 0);
  CHECK(run_cli("analyze --tolerance 0.3 " + ico) == 1);
}

TEST_CASE("cli: params appendix tables") {
  const std::string a1 = tmp_path("a1.json");
  const std::string a2 = tmp_path("a2.json");
  REQUIRE(run_cli("params --appendix 1 --n 4 --N 12", a1) == 0);
  REQUIRE(run_cli("params --appendix 2 --r 1", a2) == 0);
  const auto j1 = nlohmann::ordered_json::parse(qpas::read_file(a1));
  const auto j2 = nlohmann::ordered_json::parse(qpas::read_file(a2));
  for (const char* key : {"B0", "B1", "B2", "B3", "B4", "P", "Q", "B1_star"})
    CHECK(j1.at(key) == j2.at(key));
  CHECK(j1.at("alpha") == "1/2");
  // Out-of-range parameters are rejected.
  CHECK(run_cli("params --appendix 1 --n 4 --N 10") == 1);
}

TEST_CASE("cli: scan finds the known families") {
  const std::string out = tmp_path("scan.json");
  REQUIRE(run_cli("scan --m 4 --n-max 32", out) == 0);
  const auto j = nlohmann::ordered_json::parse(qpas::read_file(out));
  bool found = false;
  for (const auto& c : j.at("candidates"))
    if (c.at("n") == 16 && c.at("N") == 144) found = true;
  CHECK(found);
}

TEST_CASE("cli: csv output format") {
  const std::string file = tmp_path("cross4.csv");
  REQUIRE(run_cli("generate --family cross --n 4 --format csv -o " + file) == 0);
  const auto back = qpas::parse_point_set_csv(qpas::read_file(file), {});
  CHECK(back.backend == "rational");
  const std::string rep = tmp_path("cross4_report.csv");
  REQUIRE(run_cli("analyze --format csv " + file, rep) == 0);
  const std::string text = qpas::read_file(rep);
  CHECK(text.find("degree,2") != std::string::npos);
}

TEST_CASE("cli: byte-identical reports across runs and thread counts") {
  const std::string file = tmp_path("mub1.json");
  REQUIRE(run_cli("generate --family mub --r 1 -o " + file) == 0);
  const std::string r1 = tmp_path("rep1.json");
  const std::string r2 = tmp_path("rep2.json");
  const std::string r3 = tmp_path("rep3.json");
  REQUIRE(run_cli("analyze " + file, r1) == 0);
  REQUIRE(run_cli("analyze " + file, r2) == 0);
  REQUIRE(run_cli("analyze --threads 8 " + file, r3) == 0);
  const std::string a = qpas::read_file(r1);
  CHECK(a == qpas::read_file(r2));
  CHECK(a == qpas::read_file(r3));
  CHECK_FALSE(a.empty());
}

TEST_CASE("mub bases file escape hatch via cli") {
  // Build a bases file from the generator's own r = 1 bases.
  nlohmann::ordered_json bases = nlohmann::ordered_json::array();
  const long sgn1[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  const long sgn2[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
  nlohmann::ordered_json std4 = nlohmann::ordered_json::array();
  nlohmann::ordered_json h1 = nlohmann::ordered_json::array();
  nlohmann::ordered_json h2 = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::ordered_json e = nlohmann::ordered_json::array();
    nlohmann::ordered_json v1 = nlohmann::ordered_json::array();
    nlohmann::ordered_json v2 = nlohmann::ordered_json::array();
    for (int j = 0; j < 4; ++j) {
      e.push_back(i == j ? "1" : "0");
      v1.push_back(sgn1[i][j] > 0 ? "1/2" : "-1/2");
      v2.push_back(sgn2[i][j] > 0 ? "1/2" : "-1/2");
    }
    std4.push_back(e);
    h1.push_back(v1);
    h2.push_back(v2);
  }
  bases.push_back(std4);
  bases.push_back(h1);
  bases.push_back(h2);
  nlohmann::ordered_json file;
  file["dimension"] = 4;
  file["bases"] = bases;
  const std::string path = tmp_path("bases.json");
  qpas::write_file(path, file.dump(2));

  const std::string out = tmp_path("mub_from_bases.json");
  REQUIRE(run_cli("generate --family mub --from-bases " + path + " -o " + out) == 0);
  const auto back = qpas::read_point_set(out);
  CHECK(std::get<qpas::point_set<Rat>>(back.data).size() == 24);

  // Corrupt the file: no longer unbiased.
  file["bases"][1][0][0] = "1";
  qpas::write_file(path, file.dump(2));
  CHECK(run_cli("generate --family mub --from-bases " + path + " -o " + out) == 1);
}
