#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = tstab::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args, int expected_code = 0, const std::string& stdin_text = "") {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args, stdin_text);
  EXPECT_EQ(r.code, expected_code) << r.out << r.err;
  return Json::parse(r.out);
}

// Minimal schema: required keys and their JSON types.
using Schema = std::map<std::string, Json::value_t>;

void expect_schema(const Json& j, const Schema& schema) {
  ASSERT_TRUE(j.is_object()) << j.dump();
  for (const auto& [key, type] : schema) {
    ASSERT_TRUE(j.contains(key)) << "missing " << key << " in " << j.dump();
    const auto actual = j.at(key).type();
    const bool number = type == Json::value_t::number_integer &&
                        (actual == Json::value_t::number_unsigned || actual == Json::value_t::number_integer);
    EXPECT_TRUE(actual == type || number) << key << " in " << j.dump();
  }
}

const Json::value_t kStr = Json::value_t::string;
const Json::value_t kInt = Json::value_t::number_integer;
const Json::value_t kBool = Json::value_t::boolean;
const Json::value_t kArr = Json::value_t::array;
const Json::value_t kObj = Json::value_t::object;

}  // namespace

TEST(Cli, Normalize) {
  const auto r = run({"normalize", "O(1)[0] + O(1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*O(1)[0]\n");
  expect_schema(run_json({"normalize", "O(3) + 2*O(-1)[2] + T(x,2)"}), {{"object", kStr}});
}

TEST(Cli, Hom) {
  const auto j = run_json({"hom", "O(0)", "O(2)"});
  expect_schema(j, {{"profile", kObj}});
  EXPECT_EQ(j["profile"]["0"], 3);
  EXPECT_EQ(run({"hom", "O(2)", "O(0)", "--degree", "1"}).out, "1\n");
}

TEST(Cli, HnExceptional) {
  const auto j = run_json({"hn", "O(3)", "--stability", "exc", "--k", "0", "--p", "0"});
  expect_schema(j, {{"family", kObj}, {"object", kStr}, {"quotients", kArr}, {"terms", kArr}});
  ASSERT_EQ(j["quotients"].size(), 2u);
  EXPECT_EQ(j["quotients"][0]["object"], "2*O(0)[1]");
  EXPECT_EQ(j["quotients"][1]["object"], "3*O(1)[0]");
  expect_schema(j["quotients"][0]["slope"], {{"shift", kInt}, {"column", kInt}});
}

TEST(Cli, HnPipesIntoCheck) {
  for (const std::vector<std::string>& fam :
       {std::vector<std::string>{"--stability", "std"}, {"--stability", "exc", "--k", "-1", "--p", "inf"},
        {"--stability", "coarse"}, {"--stability", "coarsened:exc:k=0,p=1"}}) {
    std::vector<std::string> args = {"hn", "O(4) + T(x,2)[1] + 2*O(-3)[-1]"};
    args.insert(args.end(), fam.begin(), fam.end());
    args.insert(args.end(), {"--format", "json"});
    const auto hn = run(args);
    ASSERT_EQ(hn.code, 0) << hn.err;
    const auto check = run({"check", "hn", "--format", "json"}, hn.out);
    EXPECT_EQ(check.code, 0) << check.out;
    const auto j = Json::parse(check.out);
    expect_schema(j, {{"ok", kBool}, {"ascending", kBool}, {"failures", kArr}});
    EXPECT_TRUE(j["ok"].get<bool>());
  }
  const auto ell = run({"hn", "S(1,0,a) + S(0,1,b)[1]", "--stability", "ell", "--format", "json"});
  ASSERT_EQ(ell.code, 0) << ell.err;
  EXPECT_EQ(run({"check", "hn"}, ell.out).code, 0);
}

TEST(Cli, CheckHnRejectsTampered) {
  const auto hn = run({"hn", "O(3)", "--stability", "exc", "--format", "json"});
  auto doc = Json::parse(hn.out);
  std::swap(doc["quotients"][0], doc["quotients"][1]);
  EXPECT_EQ(run({"check", "hn"}, doc.dump()).code, 1);
  EXPECT_EQ(run({"check", "hn"}, "not json").code, 1);
}

TEST(Cli, Truncate) {
  const auto j = run_json({"truncate", "O(3)", "--cut", "exc:a=2,b=0", "--p", "0"});
  expect_schema(j, {{"le0", kStr}, {"ge1", kStr}});
  EXPECT_EQ(j["le0"], "3*O(1)[0]");
  EXPECT_EQ(j["ge1"], "2*O(0)[1]");
  EXPECT_EQ(run({"truncate", "O(3)", "--cut", "exc:a=2,b=2"}).code, 1);
}

TEST(Cli, Heart) {
  const auto j = run_json({"heart", "--cut", "std:m=0,K=0,P=all", "--contains", "O(-1)[1]"});
  expect_schema(j, {{"cut", kStr}, {"heart", kArr}, {"bounded", kBool}, {"contains", kBool}});
  EXPECT_TRUE(j["contains"].get<bool>());
  EXPECT_FALSE(run_json({"heart", "--cut", "std:m=0,K=0", "--contains", "O(-1)"})["contains"].get<bool>());
}

TEST(Cli, CatalogAndClassify) {
  const auto e = run_json({"catalog", "E", "--params", "p=1"});
  expect_schema(e, {{"name", kStr}, {"params", kObj}, {"heart", kArr}, {"bounded", kBool}, {"cut", kStr},
                    {"family", kObj}, {"twist", kInt}, {"shift", kInt}});
  EXPECT_EQ(e["heart"], Json::parse(R"(["O[1]","O(1)[-2]"])"));
  EXPECT_EQ(e["params"]["p"], 1);

  const auto all = run_json({"catalog"});
  ASSERT_TRUE(all.is_array());
  EXPECT_EQ(all.size(), 9u);

  const auto c = run_json({"classify", "--cut", "exc:a=5,b=1", "--p", "2"});
  expect_schema(c, {{"name", kStr}, {"params", kObj}, {"twist", kInt}, {"shift", kInt}, {"heart", kArr},
                    {"bounded", kBool}});
  EXPECT_EQ(c["name"], "E");
  EXPECT_EQ(c["shift"], 3);

  const auto d = run({"catalog", "F", "--params", "p=0", "--diagram"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("O(1)[-1]"), std::string::npos);
  EXPECT_EQ(run({"classify", "--cut", "exc:a=0,b=-inf", "--p", "inf"}).code, 1);
  EXPECT_EQ(run({"catalog", "E"}).code, 1);
}

TEST(Cli, Checks) {
  const auto s = run_json({"check", "stability", "--stability", "exc", "--k", "0", "--p", "inf", "--window", "6"});
  expect_schema(s, {{"ok", kBool}, {"hom_vanishing", kBool}, {"pairs_checked", kInt}, {"witness", kStr}});
  EXPECT_TRUE(s["ok"].get<bool>());

  const auto cut = run_json({"check", "cut", "--cut", "exc:a=0,b=-2", "--p", "0"});
  expect_schema(cut, {{"valid", kBool}, {"failures", kArr}});
  EXPECT_TRUE(cut["valid"].get<bool>());
  EXPECT_FALSE(run_json({"check", "cut", "--cut", "exc:a=0,b=0", "--p", "0"}, 1)["valid"].get<bool>());

  const auto f = run_json({"check", "finest", "--stability", "coarse"}, 1);
  expect_schema(f, {{"finest", kBool}, {"witness", kStr}});
  EXPECT_EQ(f["witness"], "(O(0)[0], O(1)[0])");
  EXPECT_EQ(run({"check", "finest", "--stability", "std"}).code, 0);
}

TEST(Cli, Compare) {
  const auto j = run_json({"compare", "--fine", "std", "--weak", "coarse"});
  expect_schema(j, {{"finer", kBool}, {"witness", kStr}, {"reason", kStr}});
  EXPECT_TRUE(j["finer"].get<bool>());
  const auto n = run_json({"compare", "--fine", "std", "--weak", "exc:k=0,p=0"});
  EXPECT_FALSE(n["finer"].get<bool>());
  EXPECT_EQ(n["witness"], "O(2)[0]");
}

TEST(Cli, ErrorsAndExitCodes) {
  const auto j = run_json({"normalize", "T(x,0)"}, 1);
  expect_schema(j, {{"error", kStr}, {"code", kStr}});
  EXPECT_EQ(j["code"], "InvalidLength");
  EXPECT_EQ(run({"normalize", "O(1"}).code, 1);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"hn"}).code, 2);
  EXPECT_EQ(run({"normalize", "O(1)", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "tstab_cli_test.conf";
  {
    std::ofstream f(path);
    f << "points = y, x\nformat = json\n";
  }
  // With y below x, the torsion at y comes first.
  const auto r = run({"--config", path.string(), "hn", "T(x,1) + T(y,1)"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["quotients"][0]["object"], "T(y,1)[0]");
  const auto flipped = run({"--config", path.string(), "--points", "x,y", "hn", "T(x,1) + T(y,1)"});
  EXPECT_EQ(Json::parse(flipped.out)["quotients"][0]["object"], "T(x,1)[0]");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--config", path.string(), "normalize", "O(1)"}).code, 2);
}
