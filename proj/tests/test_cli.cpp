#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ffgeom/cli.hpp"

using nlohmann::json;
using ffgeom::cli::RunConfig;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome run(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = ffgeom::cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig base(const std::string& command, const std::string& field) {
  RunConfig c;
  c.command = command;
  c.field = field;
  return c;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("areas on the full plane") {
  auto c = base("areas", "3");
  c.random = "9";
  c.seed = 1;
  auto r = run(c);
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j["distinct"] == 2);
  CHECK(j["meta"]["seed"] == 1);
  CHECK(j["meta"]["field"] == "3");
  CHECK(j["meta"]["version"] == ffgeom::cli::kVersion);
  CHECK(j["pinned"].is_null());
}

TEST_CASE("vinh on all points and all lines") {
  auto c = base("vinh", "3");
  c.all_points = true;
  c.all_lines = true;
  auto r = run(c);
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j["incidences"] == 36);
  CHECK(j["vinh_bound"].get<double>() == doctest::Approx(54.0));
  CHECK(j["satisfied"] == true);
}

TEST_CASE("pinned, volumes, lines and csv") {
  auto p = base("pinned", "5");
  p.all_points = true;
  p.pin = "0,0";
  auto pj = run(p).report();
  CHECK(pj["distinct"] == 4);
  CHECK(pj["pinned"] == json::array({0, 0}));

  auto v = base("volumes", "3");
  v.all_points = true;
  v.d = 3;
  auto vr = run(v);
  CHECK(vr.code == 0);
  CHECK(vr.report()["distinct"] == 2);

  auto l = base("lines", "3");
  l.all_points = true;
  l.format = ffgeom::cli::OutputFormat::Csv;
  auto lr = run(l);
  CHECK(lr.code == 0);
  CHECK(lr.out.rfind("kind,slope,intercept,abscissa,richness\n", 0) == 0);
  CHECK(std::count(lr.out.begin(), lr.out.end(), '\n') == 13);

  auto lj = base("lines", "5");
  lj.in_path = write_temp("ffgeom_cli_lines.pts", "q=5 d=2\n1,3\n1,4\n").string();
  auto line = run(lj).report()["lines"][0];
  CHECK(line == json{{"kind", "v"}, {"slope", nullptr}, {"intercept", nullptr}, {"abscissa", 1}, {"richness", 2}});
}

TEST_CASE("beck refuses to claim verification below the hypothesis") {
  auto c = base("beck", "31");
  c.random = "200";
  c.seed = 1;
  c.hypothesis_check = true;
  auto r = run(c);
  CHECK(r.code == 1);
  CHECK(r.report()["status"] == "hypothesis_not_met");

  c.hypothesis_check = false;
  auto plain = run(c);
  CHECK(plain.code == 0);
  CHECK(plain.report()["status"] == "not_applicable");

  auto a = base("beck", "31");
  a.random = "auto";
  a.seed = 1;
  auto refused = run(a);
  CHECK(refused.code == 2);
  CHECK(refused.err.find("exceeds") != std::string::npos);
}

TEST_CASE("beck reports are identical across worker counts") {
  auto c = base("beck", "61");
  c.random = "1200";
  c.seed = 5;
  auto one = run(c);
  c.workers = 4;
  auto four = run(c);
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.report()["meta"]["thresholds"]["working_low"]["exact"] == "661/61");
}

TEST_CASE("l2 and theorem1") {
  auto l = base("l2", "3");
  l.in_path = write_temp("ffgeom_cli_l2.pts", "q=3 d=2\n1,0\n2,0\n0,1\n1,1\n2,1\n0,2\n1,2\n2,2\n").string();
  auto lr = run(l);
  REQUIRE(lr.code == 0);
  auto lj = lr.report();
  CHECK(lj["energy"] == 1408);
  CHECK(lj["max_punctured"] == 2);
  CHECK(lj["bound_main_exact"] == "4096/3");
  CHECK(lj["bound_error_term"] == 384);

  auto origin = base("l2", "3");
  origin.all_points = true;
  auto orr = run(origin);
  CHECK(orr.code == 2);
  CHECK(orr.err.find("OriginInF") != std::string::npos);

  auto t = base("theorem1", "5");
  t.random = "6";
  t.seed = 2;
  auto tr = run(t);
  CHECK(tr.code == 0);
  CHECK(tr.report()["part_i"]["status"] == "verified");
  CHECK(tr.report()["part_ii"]["status"] == "not_applicable");
}

TEST_CASE("sweep and corollary") {
  auto s = base("sweep", "3");
  s.n = 4;
  auto sr = run(s);
  REQUIRE(sr.code == 0);
  CHECK(sr.report()["subsets"] == 126);
  CHECK(sr.report()["failure_count"] == 0);

  auto below = base("sweep", "3");
  below.n = 3;
  below.property = "direction_coverage";
  auto br = run(below);
  CHECK(br.code == 0);
  CHECK(br.report()["hypothesis_met"] == false);
  CHECK(br.report()["failure_count"].get<int>() > 0);

  auto c = base("corollary", "3");
  c.d = 3;
  c.random = "18";
  c.seed = 3;
  auto cr = run(c);
  CHECK(cr.code == 0);
  CHECK(cr.report()["part_ii"]["holds"] == true);
}

TEST_CASE("input errors exit with 2") {
  auto no_seed = base("areas", "5");
  no_seed.random = "4";
  CHECK(run(no_seed).code == 2);

  auto two_sources = base("areas", "5");
  two_sources.random = "4";
  two_sources.seed = 1;
  two_sources.all_points = true;
  CHECK(run(two_sources).code == 2);

  auto no_source = base("areas", "5");
  CHECK(run(no_source).code == 2);

  auto bad_field = base("areas", "6");
  bad_field.all_points = true;
  CHECK(run(bad_field).code == 2);

  auto csv_beck = base("beck", "3");
  csv_beck.all_points = true;
  csv_beck.format = ffgeom::cli::OutputFormat::Csv;
  CHECK(run(csv_beck).code == 2);

  auto missing = base("areas", "5");
  missing.in_path = "/nonexistent.pts";
  CHECK(run(missing).code == 2);

  auto mismatch = base("areas", "7");
  mismatch.in_path = write_temp("ffgeom_cli_mismatch.pts", "q=5 d=2\n0,0\n").string();
  CHECK(run(mismatch).code == 2);

  auto pin_outside = base("pinned", "5");
  pin_outside.in_path = write_temp("ffgeom_cli_pin.pts", "q=5 d=2\n0,0\n1,1\n").string();
  pin_outside.pin = "2,2";
  CHECK(run(pin_outside).code == 2);

  auto unknown = base("frobnicate", "5");
  CHECK(run(unknown).code == 2);
}

TEST_CASE("--out writes the report to a file") {
  const fs::path out = fs::temp_directory_path() / "ffgeom_cli_out.json";
  fs::remove(out);
  auto c = base("areas", "3");
  c.all_points = true;
  c.out_path = out.string();
  auto r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  CHECK(json::parse(in)["distinct"] == 2);
}

TEST_CASE("executable: flags and exit codes") {
  const std::string exe = FFGEOM_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status(exe + " vinh --field 3 --all-points --all-lines") == 0);
  CHECK(status(exe + " areas --field 3 --random 9 --seed 1 --json") == 0);
  CHECK(status(exe + " areas --field 3 --bogus-flag") == 2);
  CHECK(status(exe + " areas --field 3 --all-points --json --csv") == 2);
  CHECK(status(exe + " beck --field 3 --all-points --hypothesis-check") == 1);
  CHECK(status(exe + " --version") == 0);
}
