#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ringcover/coverbuilder.hpp"
#include "ringcover/json_io.hpp"

namespace fs = std::filesystem;
using ringcover::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_args(const fs::path& p) {
  std::vector<std::string> args;
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) args.push_back(line);
  }
  return args;
}

// RINGCOVER_UPDATE_GOLDEN=1 rewrites the expected files from current output.
bool updating() {
  const char* v = std::getenv("RINGCOVER_UPDATE_GOLDEN");
  return v && std::string(v) == "1";
}

struct EnvGuard {
  std::string name;
  EnvGuard(const char* n, const char* v) : name(n) { setenv(n, v, 1); }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

}  // namespace

TEST_CASE("golden files") {
  std::size_t cases = 0;
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(GOLDEN_DIR)) {
    if (e.path().extension() == ".args") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& args_path : paths) {
    auto base = args_path;
    base.replace_extension();
    const auto r = invoke(read_args(args_path));
    if (updating()) {
      std::ofstream(base.string() + ".out") << r.out;
      std::ofstream(base.string() + ".code") << r.code << '\n';
      if (!r.err.empty()) std::ofstream(base.string() + ".err") << r.err;
      continue;
    }
    CAPTURE(base.filename().string());
    CHECK(r.code == std::stoi(slurp(base.string() + ".code")));
    CHECK(r.out == slurp(base.string() + ".out"));
    if (fs::exists(base.string() + ".err")) CHECK(r.err == slurp(base.string() + ".err"));
    ++cases;
  }
  if (!updating()) CHECK(cases >= 15);
}

TEST_CASE("spec examples") {
  auto j = Json::parse(invoke({"eval", "M(3,2)"}).out);
  CHECK(j["sigma"] == 15);
  CHECK(j["elementary"] == true);
  CHECK(Json::parse(invoke({"member", "13"}).out)["member"] == false);
  CHECK(Json::parse(invoke({"oracle", "A(1,2,2)", "--unital"}).out)["sigma_u"] == 3);
  auto d = invoke({"density", "100000"});
  CHECK(d.code == 0);
  CHECK(Json::parse(d.out)["pass"] == true);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"eval"}).code == 1);
  CHECK(invoke({"eval", "M(3,"}).code == 1);
  CHECK(invoke({"eval", "A(1,2,6)"}).code == 1);
  CHECK(invoke({"cover", "1", "6", "2"}).code == 1);
  CHECK(invoke({"cover", "2", "2", "2"}).code == 1);
  CHECK(invoke({"density", "4"}).code == 1);
  CHECK(invoke({"oracle", "M(3,3)"}).code == 2);
  CHECK(invoke({"oracle", "F(2)^30"}).code == 2);
  CHECK(invoke({"cover", "3", "3", "3", "--verify", "raw", "--cap", "100"}).code == 2);
  CHECK(invoke({"enumerate", "100000000000"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"selftest", "--criterion", "2"}).code == 0);
  CHECK(invoke({"selftest", "--criterion", "9"}).code == 1);
}

TEST_CASE("structured errors") {
  auto r = invoke({"--json", "eval", "M(2,"});
  CHECK(r.code == 1);
  auto j = Json::parse(r.err);
  CHECK(j["exit_code"] == 1);
  CHECK(j.contains("offset"));
  r = invoke({"oracle", "M(3,3)", "--json"});
  j = Json::parse(r.err);
  CHECK(j["error"] == "ComplexityCap");
  CHECK(j["exit_code"] == 2);
  r = invoke({"--json", "bogus"});
  CHECK(Json::parse(r.err)["error"] == "Usage");
}

TEST_CASE("environment and flag precedence") {
  {
    EnvGuard cap("SIGMA_ORACLE_CAP", "2");
    CHECK(invoke({"oracle", "F(2)^2"}).code == 2);
    CHECK(invoke({"oracle", "F(2)^2", "--cap", "1000"}).code == 0);
  }
  const auto base = invoke({"enumerate", "2000"}).out;
  {
    EnvGuard threads("SIGMA_THREADS", "1");
    CHECK(invoke({"enumerate", "2000"}).out == base);
  }
  CHECK(invoke({"--threads", "3", "enumerate", "2000"}).out == base);
}

TEST_CASE("eval and oracle agree on the catalog") {
  for (const char* s : {"F(2)^2", "F(2)^3", "F(3)^3", "F(4)^2", "Id(2)", "Id(3)", "Id(4)", "M(2,2)", "M(2,3)",
                        "A(1,2,2)", "A(1,2,4)", "A(1,4,4)", "F(8)", "Z(2,2)", "Z(3,2)", "F(2)^2+M(2,2)", "Id(2)+F(4)"}) {
    const std::string spec = s;
    CAPTURE(spec);
    const auto e = Json::parse(invoke({"eval", s}).out);
    const auto o = invoke({"oracle", s});
    REQUIRE(o.code == 0);
    CHECK(Json::parse(o.out)["sigma"] == e["sigma"]);
    if (e["has_unity"] == true) {
      CHECK(Json::parse(invoke({"oracle", s, "--unital"}).out)["sigma_u"] == e["sigma_u"]);
    }
  }
}

TEST_CASE("certificate export and verification") {
  const auto dir = fs::temp_directory_path() / ("ringcover_cli_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const auto cert = (dir / "cert.json").string();
  REQUIRE(invoke({"oracle", "M(2,2)", "--export", cert}).code == 0);
  auto r = invoke({"oracle", "M(2,2)", "--verify", cert});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["certificate"]["size"] == 4);

  // dropping a member breaks the cover
  auto members = Json::parse(slurp(cert))["members"];
  members.erase(members.begin());
  std::ofstream(dir / "short.json") << members.dump();
  j = Json::parse(invoke({"oracle", "M(2,2)", "--verify", (dir / "short.json").string()}).out);
  CHECK(j["valid"] == false);

  std::ofstream(dir / "bad.json") << "[[[7,0,0,0]]]";
  CHECK(invoke({"oracle", "M(2,2)", "--verify", (dir / "bad.json").string()}).code == 1);
  std::ofstream(dir / "junk.json") << "{not json";
  CHECK(invoke({"oracle", "M(2,2)", "--verify", (dir / "junk.json").string()}).code == 1);

  const auto cover = (dir / "cover.json").string();
  REQUIRE(invoke({"cover", "3", "2", "2", "--export", cover}).code == 0);
  const auto c = ringcover::io::cover_from_json(Json::parse(slurp(cover)));
  CHECK(c.size() == 15);
  CHECK(ringcover::cover::verify_cover_raw(c).ok);
  fs::remove_all(dir);
}

TEST_CASE("enumerate formats are consistent") {
  const auto list = invoke({"enumerate", "500"}).out;
  std::set<std::uint64_t> from_list;
  std::istringstream ls(list);
  for (std::uint64_t m; ls >> m;) from_list.insert(m);

  std::set<std::uint64_t> from_intervals;
  std::istringstream is(invoke({"enumerate", "500", "--intervals"}).out);
  for (std::string line; std::getline(is, line);) {
    const auto dash = line.find('-');
    const auto lo = std::stoull(line.substr(0, dash));
    const auto hi = dash == std::string::npos ? lo : std::stoull(line.substr(dash + 1));
    for (auto m = lo; m <= hi; ++m) from_intervals.insert(m);
  }
  CHECK(from_list == from_intervals);

  const auto j = Json::parse(invoke({"enumerate", "500", "--json", "--gaps"}).out);
  CHECK(j["count"] == from_list.size());
  CHECK(j["gaps"].size() + from_list.size() == 498);
  for (const auto& g : j["gaps"]) CHECK(from_list.count(g.get<std::uint64_t>()) == 0);
  CHECK(Json::parse(invoke({"gaps", "500"}).out)["gaps"] == j["gaps"]);
}
