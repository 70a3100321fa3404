#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "fixtures.hpp"
#include "json.hpp"
#include "rees/cli/commands.hpp"
#include "rees/errors.hpp"
#include "rees/generators.hpp"

using namespace rees;
using nlohmann::json;

namespace {

const std::string kData = REES_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("info and sigmas") {
    auto r = run({"info", kData + "/ex2n.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("f1 = x0^4*x1") != std::string::npos);
    auto s = run({"--json", "sigmas", kData + "/ex2n.json", "-m", "1"});
    REQUIRE(s.code == 0);
    auto j = json::parse(s.out);
    CHECK(j[0]["sigma"] == std::vector<int>{1, 1});
    CHECK(j[0]["r"] == 2);
  }

  TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"info"}).code == 1);
    CHECK(run({"info", kData + "/ex2n.json", "--bogus"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"sigmas", kData + "/ex2n.json", "-m", "9"}).code == 1);
    CHECK(run({"--field", "12", "info", kData + "/ex2n.json"}).code == 1);
  }

  TEST_CASE("invalid instances exit 1") {
    auto path = temp_path("rees_height_one.json");
    std::ofstream(path) << R"({"n":3,"col_degrees":[1,1],"phi_rows":[["x0","x0"],["x1","0"],["0","x1"]]})";
    auto r = run({"info", path});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);
    std::ofstream(path) << R"({"n":3,"col_degrees":[1,1]})";
    CHECK(run({"info", path}).code == 1);
    std::remove(path.c_str());
    CHECK(run({"random", "--n", "3", "--degrees", "0,0", "--seed", "1"}).code == 1);
  }

  TEST_CASE("bidegrees renders table 1") {
    auto r = run({"bidegrees", kData + "/table1.json", "--rows", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("5 |          |     1") != std::string::npos);
    CHECK(r.out.find("1 |          |  1                                      1") != std::string::npos);
  }

  TEST_CASE("generators json round trip") {
    auto r = run({"--json", "generators", kData + "/ex2n.json", "-m", "1"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    auto in = fx::ex2n();
    auto recs = recursion_generators(build_level(in, 1), sym_equations(in)[1]);
    REQUIRE(j.size() == recs.size());
    for (std::size_t k = 0; k < recs.size(); ++k) {
      CHECK(j[k]["label"] == recs[k].label);
      CHECK(j[k]["alpha"].get<ExpVec>() == recs[k].alpha);
      CHECK(j[k]["certified"] == true);
      CHECK(j[k]["provenance"] == "recursion");
      CHECK(parse_poly(j[k]["poly"].get<std::string>(), in.s_ring) == recs[k].poly);
      CHECK(j[k]["bidegree"][0] == recs[k].bidegree.first);
    }
  }

  TEST_CASE("slice, scroll, oracle and check") {
    auto s = run({"--json", "slice", kData + "/final.json", "--xdeg", "3", "--trim"});
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out).size() == 7);
    auto sc = run({"--json", "scroll", kData + "/ex2n.json", "-m", "1"});
    REQUIRE(sc.code == 0);
    CHECK(json::parse(sc.out)["minors"].size() == 3);
    auto o = run({"--json", "oracle", kData + "/final.json", "--min-x", "3", "--max-x", "3",
                  "--max-t", "8", "--count", "slice"});
    REQUIRE(o.code == 0);
    CHECK(json::parse(o.out)["total"] == 7);
    auto h = run({"oracle", kData + "/ex2n.json", "--max-x", "2", "--max-t", "2", "--what",
                  "hilbert"});
    CHECK(h.code == 0);
    auto m = run({"oracle", kData + "/ex2n.json", "--max-x", "3", "--max-t", "3", "--what",
                  "membership", "--saturation", "rabinowitsch"});
    CHECK(m.code == 0);
    CHECK(m.out.find("NOT") == std::string::npos);
    auto c = run({"--json", "check", kData + "/ex2n.json", "--seeds", "1"});
    CHECK(c.code == 0);
    CHECK(json::parse(c.out)["ok"] == true);
  }

  TEST_CASE("random is deterministic and round trips") {
    std::vector<std::string> args{"random", "--n", "3", "--degrees", "2,5", "--seed", "42"};
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"random", "--n", "3", "--degrees", "2,5", "--seed", "43"});
    CHECK(c.out != a.out);
    auto path = temp_path("rees_random.json");
    args.insert(args.end(), {"--out", path});
    REQUIRE(run(args).code == 0);
    auto inst = cli::load_instance(path);
    CHECK(cli::instance_from_json(json::parse(a.out)) == inst);
    cli::save_instance(inst, path);
    CHECK(cli::load_instance(path) == inst);
    CHECK(run({"info", path}).code == 0);
    std::remove(path.c_str());
    CHECK(run({"--field", "QQ", "random", "--n", "4", "--degrees", "1,1,2", "--seed", "1"}).code == 0);
  }

  TEST_CASE("rational field") {
    auto r = run({"--field", "QQ", "--json", "generators", kData + "/ex2n.json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j[1]["poly"] == "-x1^2*T1^2 + x0^2*T2*T3 + x0*x1*T3^2");
  }
}
