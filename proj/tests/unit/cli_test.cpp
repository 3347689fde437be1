#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "ainf/cli.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/io.hpp"

using namespace ainf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ainf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ainf_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string put(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }
  std::string fixture(const std::string& name) const {
    return put(name + ".json", format_category(*make_fixture(name)));
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, Verify) {
  const auto q = fixture("quiver_massey");
  auto r = run({"verify", q});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "all relations hold up to arity 6\n");
  r = run({"verify", q, "--arity", "9"});
  EXPECT_EQ(r.code, 1);
  r = run({"--json", "verify", q});
  EXPECT_EQ(nlohmann::json::parse(r.out)["relations"]["verdict"], "pass");
}

TEST_F(Cli, VerifyReportsBrokenRelation) {
  FixtureParams params;
  params.d = 4;
  auto j = nlohmann::json::parse(format_category(*make_fixture("poly", params)));
  // m_2(t, t^2) = 2t^3 but m_2(t^2, t) = t^3 breaks associativity.
  for (auto& op : j["ops"]) {
    if (op["inputs"] == nlohmann::json::array({"t", "t^2"})) op["output"][0]["coeff"] = "2";
  }
  const auto p = put("bad.json", j.dump());
  auto r = run({"verify", p});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("relations: fail"), std::string::npos);
}

TEST_F(Cli, InputErrors) {
  auto r = run({"verify", path("missing.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
  const auto bad = put("bad.json", R"({"field": "Q", "objects": ["A"], "homs": {"A->A": [{"label": "1"}]}, "ops": [],
                                           "units": {"A": "1"}, "max_arity": 3})");
  r = run({"verify", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/homs/A->A/0"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(Cli, CohomologyAndDirected) {
  auto r = run({"cohomology", fixture("dg_pair")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("X->Y: H^0=1"), std::string::npos);
  r = run({"directed", fixture("poly")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness O->O:1*t"), std::string::npos);
  r = run({"--json", "directed", fixture("quiver_massey")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["length"], 3);
  r = run({"directed", fixture("dg_pair")});
  EXPECT_NE(r.out.find("cohomology category"), std::string::npos);
}

TEST_F(Cli, MasseyAndTriangles) {
  const auto q = fixture("quiver_massey");
  const auto tw = put("tw.json", R"({"objects": [{"name": "D-", "summands": [{"object": "D", "shift": -1}]}]})");
  for (bool tri : {false, true}) {
    std::vector<std::string> args{"--json", "massey", q, "--tw", tw, "--f", "A->B:f0", "--g", "B->C:g0", "--h",
                                  "C->D-:h0{-1}"};
    if (tri) args.push_back("--triangulated");
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["representative"], nlohmann::json::array({"-1"}));
    EXPECT_EQ(j["representative_cycle"], "A->D-:-1*c{-1}");
    EXPECT_TRUE(j["indeterminacy"].empty());
  }
  auto r = run({"triangle-check", q, "--f", "A->B:f0", "--standard"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("distinguished", 0), 0u);
  r = run({"triangle-check", q, "--f", "A->B:f0"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, ConeAndTruncate) {
  const auto q = fixture("quiver_massey");
  const auto map = put("f.json", R"({"src": "A", "dst": "B", "degree": 0,
                                     "entries": [{"row": 0, "col": 0, "terms": [{"label": "f0", "coeff": "1"}]}]})");
  auto r = run({"cone", q, "--map", map, "--name", "Cf"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string doc = r.out.substr(6, r.out.find("i:\n") - 6);
  auto base = load_category(q);
  const auto objs = parse_tw(*base, doc);
  ASSERT_EQ(objs.size(), 1u);
  EXPECT_EQ(objs[0].name, "Cf");
  EXPECT_EQ(objs[0].summands.size(), 2u);

  auto j = nlohmann::json::parse(doc);
  j["category"] = "quiver_massey.json";
  const auto tw = put("cone.json", j.dump());
  EXPECT_EQ(run({"truncate", tw, "--q", "0"}).code, 1);
  EXPECT_EQ(run({"truncate", tw, "--q", "1"}).code, 0);
  EXPECT_EQ(run({"truncate", tw, "--q", "-1"}).code, 2);
}

TEST_F(Cli, FixtureExportIsDeterministic) {
  auto a = run({"fixtures", "export", "random", "--seed", "3"});
  auto b = run({"fixtures", "export", "random", "--seed", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(format_category(*parse_category(a.out)), a.out);
  auto c = run({"fixtures", "export", "poly", "--N", "9", "--field", "F_5", "-o", path("p.json")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(load_category(path("p.json"))->field(), FieldSpec::prime(5));
  EXPECT_EQ(run({"fixtures", "export", "poly", "--N", "8"}).code, 2);
}
