#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "orthocircles/cli.hpp"
#include "orthocircles/document.hpp"
#include "orthocircles/generators.hpp"

using namespace orthocircles;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "orthocircles");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "orthocircles_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& content) {
  const fs::path p = scratch(name);
  std::ofstream(p) << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gen") {
  Result r = run({"gen", "b", "--wheels", "3", "--satellites", "15"});
  CHECK(r.code == 0);
  CHECK(parse_arrangement(r.out).size() == 48);
  CHECK(run({"gen", "b", "--wheels", "3", "--satellites", "15"}).out == r.out);

  r = run({"gen", "nonnested", "--wheels", "2"});
  CHECK(r.code == 0);
  CHECK(parse_arrangement(r.out).size() == 11);

  CHECK(run({"gen", "b", "--satellites", "4"}).code == 2);
  CHECK(run({"gen", "hexagon"}).code == 2);
  CHECK(run({"gen", "random", "--n", "20", "--seed", "5"}).out == run({"gen", "random", "--n", "20", "--seed", "5"}).out);

  const fs::path out = scratch("gen_out.json");
  fs::remove(out);
  CHECK(run({"gen", "wheel", "--satellites", "6", "--out", out.string()}).code == 0);
  CHECK(parse_arrangement(slurp(out)).size() == 7);
  CHECK_FALSE(fs::exists(out.string() + ".tmp"));
}

TEST_CASE("verify") {
  const fs::path b = write("b.json", serialize_arrangement(make_B(2, 6)));
  Result r = run({"verify", b.string()});
  CHECK(r.code == 0);

  const fs::path acute = write("acute.json", serialize_arrangement(perturb_acute(make_nonnested_B(2), 1)));
  CHECK(run({"verify", "--acute", acute.string()}).code == 0);
  CHECK(run({"verify", acute.string()}).code == 1);

  const fs::path tangent = write("tangent.json", R"({"format_version": "1", "circles": [
    {"id": "left", "cx": 0, "cy": 0, "r": 1}, {"id": "right", "cx": 2, "cy": 0, "r": 1}]})");
  r = run({"verify", tangent.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("left") != std::string::npos);
  CHECK(r.out.find("right") != std::string::npos);

  CHECK(run({"verify", write("bad.json", "{not json").string()}).code == 2);
  CHECK(run({"verify", write("v2.json", R"({"format_version": "2", "circles": []})").string()}).code == 2);
  CHECK(run({"verify", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("analyze") {
  const fs::path b = write("b315.json", serialize_arrangement(make_B(3, 15)));
  Result r = run({"analyze", b.string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 48);
  CHECK(j["m"] == 150);
  CHECK(j["bounds"]["pass"] == true);
  CHECK(j["forbidden_subgraph"].is_null());
  CHECK(j["outer_face_size"].is_null());

  const fs::path nn = write("nn.json", serialize_arrangement(make_nonnested_B(3)));
  const auto k = nlohmann::json::parse(run({"analyze", nn.string()}).out);
  CHECK(k["crossing_count"] == 0);
  CHECK(k["outer_face_size"] == 5);
  CHECK(k["depth_histogram"]["0"] == 16);
}

TEST_CASE("cells, audit, oracle") {
  const fs::path pair = write("pair.json", R"({"format_version": "1", "circles": [
    {"id": "A", "cx": 0, "cy": 0, "r": 1}, {"id": "B", "cx": 1.4142135623730951, "cy": 0, "r": 1}]})");
  Result r = run({"cells", pair.string()});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["digon_count"] == 3);
  CHECK(j["triangle_count"] == 0);

  r = run({"audit", write("b25.json", serialize_arrangement(make_B(2, 5))).string()});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["classification"]["red"] == "H2");

  r = run({"oracle", "max-edges", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["max_edges"] == 8);
  CHECK(run({"oracle", "max-edges", "--n", "9"}).code == 2);
}

TEST_CASE("export-svg") {
  const fs::path b = write("svg_in.json", serialize_arrangement(make_B(2, 5)));
  const Result r = run({"export-svg", b.string()});
  CHECK(r.code == 0);
  std::size_t circles = 0;
  for (std::size_t pos = 0; (pos = r.out.find("<circle", pos)) != std::string::npos; ++pos) ++circles;
  CHECK(circles == 12);
  CHECK(r.out.find("#d62728") != std::string::npos);
  CHECK(run({"export-svg", b.string()}).out == r.out);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
}
