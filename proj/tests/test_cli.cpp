#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "arnold/cli.hpp"
#include "arnold/errors.hpp"
#include "arnold/sweep.hpp"

using namespace arnold;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("arnold_cli_" + name);
}

}  // namespace

TEST_CASE("parse_real accepts decimals and fractions") {
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real("-1e-3") == -1e-3);
  CHECK(parse_real("1/4") == 0.25);
  CHECK(parse_real("-3/2") == -1.5);
  CHECK_THROWS_AS(parse_real("abc"), PreconditionError);
  CHECK_THROWS_AS(parse_real("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_real(""), PreconditionError);
}

TEST_CASE("every library operation is reachable from a subcommand") {
  const auto subs = cli_subcommands();
  const std::set<std::string> registered(subs.begin(), subs.end());
  CHECK(registered.size() == subs.size());

  std::set<std::string> ops;
  for (const auto& [op, sub] : cli_operation_map()) {
    CAPTURE(op);
    CHECK(registered.count(sub) == 1);
    ops.insert(op);
  }
  for (const char* op :
       {"eval", "deriv", "schwarzian", "critical_points", "envelope", "rho_monotone",
        "rho_exact_rational_test", "rotation_interval", "rho_bounds_bruteforce",
        "snap_rational", "find_periodic_orbits", "orbit_pair", "itinerary",
        "plateau_edges", "trace_curve", "region_boundary", "intersect_curves",
        "lipschitz_check", "boundary_condition_residuals", "raster", "render_ppm",
        "export_csv"}) {
    CAPTURE(op);
    CHECK(ops.count(op) == 1);
  }
  // Every registered subcommand answers --help.
  for (const auto& s : subs) CHECK(run({s, "--help"}).code == kExitOk);
}

TEST_CASE("interval of a rigid rotation") {
  const auto r = run({"interval", "--a", "0.25", "--b", "0", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["lo"]["value"].get<double>() == doctest::Approx(0.25));
  CHECK(j["hi"]["value"].get<double>() == doctest::Approx(0.25));
  CHECK(j["lo"]["exact_rational"] == "1/4");

  const auto text = run({"interval", "--a", "1/4", "--b", "0"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("0.25") != std::string::npos);
}

TEST_CASE("orbit outside the rotation interval exits 3") {
  const auto r = run({"orbit", "--a", "0.25", "--b", "0", "--rot", "0/1"});
  CHECK(r.code == kExitNumerical);
  CHECK_FALSE(r.err.empty());
  const auto j = run({"--json", "orbit", "--a", "0.25", "--b", "0", "--rot", "0/1"});
  CHECK(j.code == kExitNumerical);
  CHECK(json::parse(j.out).contains("error"));
}

TEST_CASE("edges of tongue 0") {
  const auto r = run({"edges", "--b", "0.5", "--rot", "0/1", "--envelope", "plus", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto e = json::parse(r.out)["edges"];
  const double w = 0.5 / (2.0 * std::numbers::pi);
  CHECK(std::abs(e[0].get<double>() + w) < 1e-6);
  CHECK(std::abs(e[1].get<double>() - w) < 1e-6);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"no-such-command"}).code == kExitUsage);
  CHECK(run({"interval", "--a", "0.25"}).code == kExitUsage);
  CHECK(run({"interval", "--a", "zero", "--b", "0"}).code == kExitUsage);
  CHECK(run({"eval", "--a", "0", "--b", "-1", "--x", "0"}).code == kExitUsage);
  CHECK(run({"edges", "--b", "1", "--rot", "0/1", "--envelope", "sideways"}).code ==
        kExitUsage);
  CHECK(run({"trace", "--kind", "Xl", "--rot", "0/1", "--b-min", "0.1", "--b-max", "1",
             "--step", "0.1"}).code == kExitUsage);
  CHECK(run({"intersect", "--left", "Br:1/1", "--right", "Bl:0/1", "--b-min", "1",
             "--b-max", "2"}).code == kExitUsage);
}

TEST_CASE("numerical failures exit 3") {
  CHECK(run({"schwarzian", "--a", "0", "--b", "1", "--x", "0.5"}).code == kExitNumerical);
  CHECK(run({"edges", "--b", "0.5", "--rot", "0/1", "--a-lo", "0.2", "--a-hi", "0.4"}).code ==
        kExitNumerical);
}

TEST_CASE("I/O failures exit 1") {
  CHECK(run({"audit-lipschitz", "--in", "/nonexistent-dir/c.csv"}).code == kExitIo);
  CHECK(run({"raster", "--a-min", "0", "--a-max", "1", "--b-min", "0", "--b-max", "1",
             "--na", "1", "--nb", "1", "--img", "/nonexistent-dir/x.ppm"}).code == kExitIo);
}

TEST_CASE("trace to CSV, then audit") {
  const auto csv = temp_path("curve.csv");
  const auto r = run({"trace", "--kind", "Bl", "--rot", "1/2", "--b-min", "1.05", "--b-max",
                      "1.6", "--step", "0.05", "--csv", csv.string()});
  REQUIRE(r.code == kExitOk);
  const auto audit = run({"audit-lipschitz", "--in", csv.string(), "--json"});
  REQUIRE(audit.code == kExitOk);
  const auto j = json::parse(audit.out);
  CHECK(j["ok"].get<bool>());
  CHECK(j["max_slope"].get<double>() <= 1.0 / (2.0 * std::numbers::pi) + j["slack"].get<double>());
  std::filesystem::remove(csv);
}

TEST_CASE("raster files") {
  const auto img = temp_path("r.ppm");
  const auto csv = temp_path("r.csv");
  const auto r = run({"raster", "--a-min", "0.2", "--a-max", "0.3", "--b-min", "0", "--b-max",
                      "0", "--na", "1", "--nb", "1", "--img", img.string(), "--csv",
                      csv.string()});
  REQUIRE(r.code == kExitOk);
  const auto ppm = read_file(img);
  CHECK(ppm.size() == 14);
  CHECK(ppm.rfind("P6\n1 1\n255\n", 0) == 0);
  const auto text = read_file(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  // Re-export of the parsed CSV is byte-identical.
  CHECK(to_csv(parse_raster_csv(text)) == text);
  std::filesystem::remove(img);
  std::filesystem::remove(csv);
}

TEST_CASE("worker count does not change raster bytes") {
  const auto a = temp_path("w1.ppm");
  const auto b = temp_path("w4.ppm");
  const std::vector<std::string> grid = {"raster", "--a-min", "0", "--a-max", "1", "--b-min",
                                         "0", "--b-max", "3", "--na", "12", "--nb", "9"};
  auto one = grid;
  one.insert(one.end(), {"--workers", "1", "--img", a.string()});
  auto four = grid;
  four.insert(four.end(), {"--workers", "4", "--img", b.string()});
  REQUIRE(run(one).code == kExitOk);
  REQUIRE(run(four).code == kExitOk);
  CHECK(read_file(a) == read_file(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("remaining subcommands produce JSON") {
  const std::vector<std::vector<std::string>> cmds = {
      {"eval", "--a", "0", "--b", "2", "--x", "0.25"},
      {"eval", "--a", "0", "--b", "2", "--x", "0.25", "--order", "2"},
      {"schwarzian", "--a", "0", "--b", "0.5", "--x", "0"},
      {"critical", "--b", "2"},
      {"envelope", "--a", "0", "--b", "2", "--envelope", "plus", "--x", "0.3"},
      {"rho", "--a", "0.3", "--b", "2", "--envelope", "minus"},
      {"certify", "--a", "0", "--b", "0.5", "--envelope", "plus", "--rot", "0/1"},
      {"bruteforce", "--a", "0.3", "--b", "2"},
      {"snap", "--value", "0.49999", "--tol", "1e-3", "--qmax", "10"},
      {"orbits", "--a", "0", "--b", "2", "--rot", "0/1"},
      {"orbit", "--a", "0", "--b", "2", "--rot", "0/1"},
      {"itinerary", "--a", "0", "--b", "2", "--x", "0", "--length", "4"},
      {"region", "--lo", "0/1", "--hi", "0/1", "--b-min", "0.5", "--b-max", "0.7", "--step",
       "0.1"},
      {"intersect", "--left", "Ar:0/1", "--right", "Al:1/1", "--b-min", "3", "--b-max", "3.3",
       "--step", "0.05"},
      {"residuals", "--a", "0.0795774715459", "--b", "0.5", "--rot", "0/1"},
  };
  for (auto c : cmds) {
    c.push_back("--json");
    const auto r = run(c);
    CAPTURE(c.front());
    CAPTURE(r.err);
    CHECK(r.code == kExitOk);
    CHECK(json::accept(r.out));
  }
  const auto it = json::parse(run({"itinerary", "--a", "0", "--b", "2", "--x", "0", "--length",
                                   "4", "--json"}).out);
  CHECK(it["itinerary"] == "LLLL");
}
