#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "arithlab");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = arithlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(ARITHLAB_DATA_DIR) + "/" + name; }

std::string last_line(const std::string &s) {
  auto body = s.substr(0, s.find_last_not_of('\n') + 1);
  return body.substr(body.find_last_of('\n') + 1);
}

} // namespace

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "--family", "path", "--n", "4"}).out, "5\n");
  EXPECT_EQ(run({"count", "--family", "cycle", "--n", "3"}).out, "10\n");
  EXPECT_EQ(run({"count", "--family", "star", "--n", "3"}).out, "14\n");
  auto j = nlohmann::json::parse(run({"count", "--family", "cycle", "--n", "4", "--json"}).out);
  EXPECT_EQ(j["count"], 35);
}

TEST(Cli, Verify) {
  auto ok = run({"verify", "-g", data("p3.graph"), "-d", "1,2,1", "-r", "1,1,1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "OK\n");
  auto bad = run({"verify", "-g", data("p3.graph"), "-d", "1,1,1", "-r", "1,1,1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.rfind("FAIL", 0), 0u);
  auto j = nlohmann::json::parse(run({"verify", "-g", data("p3.graph"), "-d", "2,1,2", "-r", "1,2,1", "--json"}).out);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, Classify) {
  auto res = run({"classify", "--matrix", data("fm.matrix")});
  EXPECT_EQ(res.code, 0);
  EXPECT_NE(res.out.find("class: "), std::string::npos);
  EXPECT_NE(res.out.find("det: 0"), std::string::npos);
  EXPECT_NE(res.out.find("f_M: "), std::string::npos);
  auto lap = run({"classify", "-g", data("k3.graph"), "-d", "2,2,2", "--json"});
  auto j = nlohmann::json::parse(lap.out);
  EXPECT_EQ(j["det"], 0);
  EXPECT_TRUE(j["positive_kernel"].get<bool>());
  EXPECT_EQ(j["class"], arithlab::to_string(arithlab::MatrixClass::AlmostNonsingularM));
}

TEST(Cli, EnumerateTextAndJsonAgree) {
  auto text = run({"enumerate", "--family", "cycle", "--n", "3", "--classes"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(last_line(text.out), "total: 10");
  EXPECT_NE(text.out.find("classes: 3"), std::string::npos);
  auto j = nlohmann::json::parse(run({"enumerate", "--family", "cycle", "--n", "3", "--json"}).out);
  EXPECT_EQ(j["total"], 10);
  std::size_t lines = 0;
  for (const auto &s : j["structures"]) {
    arithlab::Vec d, r;
    for (auto x : s["d"]) d.emplace_back(x.get<long long>());
    for (auto x : s["r"]) r.emplace_back(x.get<long long>());
    EXPECT_NE(text.out.find(arithlab::format_structure(d, r)), std::string::npos);
    ++lines;
  }
  EXPECT_EQ(lines, 10u);
}

TEST(Cli, EnumerateGeneral) {
  auto res = run({"enumerate", "--family", "general", "-g", data("c4.graph"), "--box", "12", "--count-only"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(last_line(res.out), "total: 35");
  EXPECT_EQ(run({"enumerate", "--family", "general", "-g", data("reducible.graph"), "--box", "5"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--family", "general", "-g", data("c4.graph")}).code, 2);
}

TEST(Cli, Transform) {
  auto res = run({"transform", "--op", "blowup", "--matrix", data("c2.graph"), "-d", "2,2", "-r", "1,1", "--p", "2,2",
                  "--q", "2,2", "--json"});
  ASSERT_EQ(res.code, 0) << res.err;
  auto j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j["structure"]["d"], nlohmann::json({2, 4, 4}));
  EXPECT_EQ(j["structure"]["r"], nlohmann::json({2, 1, 1}));

  auto pend = run({"transform", "--op", "pendant", "-g", data("p3.graph"), "-d", "1,2,1", "-r", "1,1,1", "--u", "2",
                   "--json"});
  ASSERT_EQ(pend.code, 0) << pend.err;
  EXPECT_EQ(nlohmann::json::parse(pend.out)["structure"]["d"], nlohmann::json({1, 3, 1, 1}));

  EXPECT_EQ(run({"transform", "--op", "nope", "-g", data("p3.graph"), "-d", "1,2,1", "-r", "1,1,1"}).code, 2);
  EXPECT_EQ(run({"transform", "--op", "merge", "-g", data("p3.graph"), "-d", "1,2,1", "-r", "1,1,1", "--u", "1",
                 "--v", "2"}).code, 1);
}

TEST(Cli, CriticalGroup) {
  auto res = run({"critgroup", "-g", data("k3.graph"), "-d", "2,2,2", "-r", "1,1,1"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "Z_3\norder: 3\n");
  auto j = nlohmann::json::parse(run({"critgroup", "-g", data("k3.graph"), "-d", "2,2,2", "-r", "1,1,1", "--json"}).out);
  EXPECT_EQ(j["order"], 3);
}

TEST(Cli, AAlpha) {
  auto res = run({"aalpha", "--matrix", data("ex.graph"), "--alpha", "6", "--floor", "2", "--box", "9"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(last_line(res.out), "total: 2");
  auto full = nlohmann::json::parse(run({"aalpha", "--matrix", data("ex.graph"), "--alpha", "6", "--box", "9", "--json"}).out);
  EXPECT_EQ(full["total"], 13);
}

TEST(Cli, Probe) {
  auto res = run({"probe", "-g", data("star3.graph")});
  EXPECT_EQ(res.code, 0);
  EXPECT_NE(res.out.find("star"), std::string::npos);
  EXPECT_EQ(run({"probe", "-g", data("sk4.graph")}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--family", "path"}).code, 2);
  EXPECT_EQ(run({"verify", "-g", data("p3.graph"), "-d", "1,x,1", "-r", "1,1,1"}).code, 2);
  EXPECT_EQ(run({"verify", "-g", data("missing.graph"), "-d", "1", "-r", "1"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
