#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "abgame/cli.hpp"
#include "abgame/io.hpp"
#include "support.hpp"

using namespace abgame;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("abgame_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string sig_text(const Strategy& s, const Code& secret) { return signature(s, secret).to_string(); }

}  // namespace

TEST_CASE("generate prints the table") {
  const auto r = run({"generate", "--pegs", "2", "--colors", "9", "--format", "table"});
  CHECK(r.code == 0);
  const auto s = read_strategy(r.out);
  CHECK(s.k() == 10);
  CHECK(s[9] == Code{9, 8});
  CHECK(r.out == write_strategy(build_strategy(ab_spec(2, 9)), Format::Table));
}

TEST_CASE("generate writes JSON to a file") {
  const auto path = (std::filesystem::temp_directory_path() / "abgame_test_gen.json").string();
  const auto r = run({"generate", "--pegs", "3", "--colors", "12", "--format", "json", "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::ostringstream text;
  text << f.rdbuf();
  CHECK(read_strategy(text.str()) == build_strategy(ab_spec(3, 12)));
}

TEST_CASE("generate then verify is feasible") {
  for (int p = 2; p <= 3; ++p)
    for (int c = p == 2 ? 2 : 3; c <= 14; ++c) {
      const auto gen = run({"generate", "--pegs", std::to_string(p), "--colors", std::to_string(c)});
      REQUIRE(gen.code == 0);
      const auto v = run({"verify", "-i", temp_file("roundtrip.txt", gen.out)});
      CHECK(v.code == 0);
      CHECK(v.out == "feasible\n");
    }
}

TEST_CASE("verify reports the collision") {
  const auto r = run({"verify", "-i", oracle::data_path("p3_c10_infeasible.json")});
  CHECK(r.code == 1);
  CHECK(r.out == "infeasible; collision (1|4|5) vs (2|3|5)\n");
  const auto j = run({"verify", "-i", oracle::data_path("p3_c10_infeasible.json"), "--format", "json"});
  CHECK(j.code == 1);
  CHECK(Json::parse(j.out)["collision"] == Json::parse("[[1,4,5],[2,3,5]]"));
}

TEST_CASE("decode") {
  const auto s = build_strategy(ab_spec(3, 12));
  const auto path = temp_file("p3_c12.json", write_strategy(s, Format::Json));
  auto r = run({"decode", "-i", path, "--answers", sig_text(s, Code{7, 9, 2})});
  CHECK(r.code == 0);
  CHECK(r.out == "(7|9|2)\n");

  r = run({"decode", "-i", path, "--answers", sig_text(s, Code{7, 9, 2}), "--explain"});
  CHECK(r.code == 0);
  CHECK(r.out.find(std::string(rule::kOneBlackNeighborEmpty)) != std::string::npos);
  CHECK(r.out.ends_with("(7|9|2)\n"));

  r = run({"decode", "-i", oracle::data_path("p3_c10_infeasible.json"), "--answers", "1,1,1,0,0,0,1,0,0,0,0,0,0"});
  CHECK(r.code == 1);
  CHECK(r.out == "ambiguous: 2 secrets fit: (1|4|5) (2|3|5)\n");

  r = run({"decode", "-i", path, "--answers", "1,2"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("audit") {
  const auto path = temp_file("audit.json", write_strategy(build_strategy(ab_spec(3, 10)), Format::Json));
  auto r = run({"audit", "-i", path});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["violations"].empty());
  const auto bad = temp_file("audit_bad.json", R"({"variant":"ab","pegs":2,"colors":5,"questions":[[1,2],[2,1],[3,4]]})");
  r = run({"audit", "-i", bad});
  CHECK(r.code == 1);
  CHECK_FALSE(Json::parse(r.out)["violations"].empty());
}

TEST_CASE("search") {
  auto r = run({"search", "--pegs", "3", "--colors", "4"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["min_k"] == 4);
  CHECK(j["infeasible_sizes_checked"] == Json::parse("[0,1,2,3]"));
  CHECK(j["budget_exhausted"] == false);

  r = run({"search", "--pegs", "2", "--colors", "3", "--variant", "mm"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["min_k"] == 3);

  r = run({"search", "--pegs", "3", "--colors", "5", "--budget", "10"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["budget_exhausted"] == true);
}

TEST_CASE("search budget from the environment") {
  ::setenv(cli::kBudgetEnv, "10", 1);
  const auto r = run({"search", "--pegs", "3", "--colors", "5"});
  ::unsetenv(cli::kBudgetEnv);
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["budget_exhausted"] == true);
}

TEST_CASE("play asks exactly k questions") {
  const auto s = build_strategy(ab_spec(2, 9));
  const auto r = run({"play", "--pegs", "2", "--colors", "9"}, sig_text(s, Code{4, 9}) + "\n");
  CHECK(r.code == 0);
  int prompts = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) prompts += line.starts_with("Q");
  CHECK(prompts == s.k());
  CHECK(r.out.find("Final guess: (4|9)") != std::string::npos);

  const auto bad = run({"play", "--pegs", "2", "--colors", "4"}, "0,0,0,0\n");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("Inconsistent") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"generate", "--pegs", "2"}).code == 2);
  CHECK(run({"generate", "--pegs", "4", "--colors", "8"}).code == 2);
  CHECK(run({"generate", "--pegs", "3", "--colors", "2"}).code == 2);
  CHECK(run({"generate", "--pegs", "2", "--colors", "4", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "-i", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"search", "--pegs", "2", "--colors", "3", "--workers", "0"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("generate") != std::string::npos);
}
