// Independent oracles and fixtures shared by the test binaries. Nothing here
// calls the library's enumeration, signature or feasibility code.

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abgame/game.hpp"
#include "abgame/strategy.hpp"

namespace oracle {

using Row = std::vector<int>;
using Rows = std::vector<Row>;

inline std::string data_path(const std::string& name) { return std::string(ABGAME_TEST_DATA_DIR) + "/" + name; }

inline nlohmann::json load_json(const std::string& name) {
  std::ifstream f(data_path(name));
  return nlohmann::json::parse(f);
}

inline std::string read_text(const std::string& name) {
  std::ifstream f(data_path(name));
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// All codes over 1..c of length p, lexicographic; distinct colors unless `repeats`.
inline Rows all_codes(int p, int c, bool repeats) {
  Rows out;
  Row cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int x = 1; x <= c; ++x) {
      if (!repeats && std::find(cur.begin(), cur.end(), x) != cur.end()) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline int blacks(const Row& q, const Row& s) {
  int b = 0;
  for (std::size_t i = 0; i < q.size(); ++i) b += q[i] == s[i];
  return b;
}

inline Row answers(const Rows& questions, const Row& secret) {
  Row a;
  for (const auto& q : questions) a.push_back(blacks(q, secret));
  return a;
}

inline bool feasible(const Rows& questions, int p, int c, bool repeats = false) {
  std::set<Row> seen;
  for (const auto& s : all_codes(p, c, repeats))
    if (!seen.insert(answers(questions, s)).second) return false;
  return true;
}

inline Rows rows_of(const abgame::Strategy& s) {
  Rows out;
  for (const auto& q : s.questions()) out.emplace_back(q.colors().begin(), q.colors().end());
  return out;
}

inline Row row_of(const abgame::Code& c) { return Row(c.colors().begin(), c.colors().end()); }

inline abgame::Code code_of(const Row& r) { return abgame::Code(std::span<const int>(r)); }

inline abgame::Strategy strategy_of(abgame::GameSpec spec, const Rows& rows) {
  std::vector<abgame::Question> qs;
  for (const auto& r : rows) qs.push_back(code_of(r));
  return abgame::Strategy(spec, std::move(qs));
}

/// ceil(4c/3) - 2 and floor((3c-1)/2) - 1, written with plain integer arithmetic.
inline int k_two_pegs(int c) { return (4 * c + 2) / 3 - 2; }
inline int k_three_pegs(int c) { return (3 * c - 1) / 2 - 1; }

/// Random set of k distinct AB questions.
inline Rows random_questions(std::mt19937_64& rng, int p, int c, int k) {
  std::set<Row> chosen;
  Row colors(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) colors[static_cast<std::size_t>(i)] = i + 1;
  while (static_cast<int>(chosen.size()) < k) {
    std::shuffle(colors.begin(), colors.end(), rng);
    chosen.insert(Row(colors.begin(), colors.begin() + p));
  }
  Rows out(chosen.begin(), chosen.end());
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace oracle
