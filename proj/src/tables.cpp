// Literal base tables and iterated blocks. These were found by brute-force
// search and are reproduced digit for digit; do not "tidy" them.

#include <array>
#include <string>

#include "abgame/strategy.hpp"

namespace abgame {

namespace {

using Row2 = std::array<int, 2>;
using Row3 = std::array<int, 3>;

template <std::size_t N, std::size_t P>
std::vector<Question> rows(const std::array<std::array<int, P>, N>& table) {
  std::vector<Question> out;
  out.reserve(N);
  for (const auto& r : table) out.emplace_back(std::span<const int>(r.data(), r.size()));
  return out;
}

// Two pegs.
constexpr std::array<Row2, 1> kP2T2{{{1, 2}}};
constexpr std::array<Row2, 2> kP2T3{{{1, 2}, {3, 1}}};
constexpr std::array<Row2, 4> kP2T4{{{1, 3}, {3, 1}, {2, 3}, {3, 2}}};

// Three pegs, c = 3 (four questions; no three-question strategy exists).
constexpr std::array<Row3, 4> kP3C3{{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}}};

constexpr std::array<Row3, 4> kP3T4{{{1, 2, 3}, {1, 3, 4}, {3, 2, 4}, {2, 4, 1}}};

constexpr std::array<Row3, 6> kP3T5{{{1, 3, 4}, {2, 3, 4}, {3, 1, 5}, {4, 2, 5}, {3, 5, 1}, {4, 5, 3}}};

constexpr std::array<Row3, 7> kP3T6{
    {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 4, 1}, {3, 5, 2}, {5, 4, 6}, {6, 5, 4}}};

constexpr std::array<Row3, 9> kP3T7{{{1, 2, 7},
                                     {4, 1, 7},
                                     {2, 7, 5},
                                     {5, 7, 4},
                                     {7, 3, 2},
                                     {7, 4, 3},
                                     {6, 5, 1},
                                     {3, 6, 1},
                                     {3, 5, 6}}};

constexpr std::array<Row3, 10> kP3T8{{{6, 5, 4},
                                      {3, 1, 5},
                                      {7, 6, 4},
                                      {8, 2, 6},
                                      {2, 4, 6},
                                      {2, 7, 5},
                                      {4, 1, 3},
                                      {8, 5, 2},
                                      {1, 6, 7},
                                      {4, 3, 8}}};

constexpr std::array<Row3, 12> kP3T9{{{3, 1, 4},
                                      {2, 1, 3},
                                      {4, 2, 3},
                                      {1, 2, 4},
                                      {5, 7, 8},
                                      {5, 6, 7},
                                      {6, 8, 7},
                                      {7, 5, 8},
                                      {7, 3, 1},
                                      {7, 3, 5},
                                      {8, 9, 2},
                                      {8, 4, 9}}};

// Iterated block for three pegs: three neighbor triples over colors 1..6.
constexpr std::array<Row3, 9> kP3Block{{{1, 5, 6},
                                        {4, 1, 6},
                                        {4, 5, 1},
                                        {2, 6, 4},
                                        {5, 2, 4},
                                        {5, 6, 2},
                                        {3, 4, 5},
                                        {6, 3, 5},
                                        {6, 4, 3}}};

}  // namespace

std::vector<Question> base_table(int pegs, int t) {
  if (pegs == 2) {
    switch (t) {
      case 2: return rows(kP2T2);
      case 3: return rows(kP2T3);
      case 4: return rows(kP2T4);
      default: break;
    }
    throw UnsupportedError("no base table for p=2, t=" + std::to_string(t) + " (supported: t in 2..4)");
  }
  if (pegs == 3) {
    switch (t) {
      case 3: return rows(kP3C3);
      case 4: return rows(kP3T4);
      case 5: return rows(kP3T5);
      case 6: return rows(kP3T6);
      case 7: return rows(kP3T7);
      case 8: return rows(kP3T8);
      case 9: return rows(kP3T9);
      default: break;
    }
    throw UnsupportedError("no base table for p=3, t=" + std::to_string(t) + " (supported: t in 3..9)");
  }
  throw UnsupportedError("base tables exist only for p in {2, 3}, got p=" + std::to_string(pegs));
}

std::vector<Question> iterated_block(int pegs) {
  // The two-peg block is the t = 4 base table itself.
  if (pegs == 2) return rows(kP2T4);
  if (pegs == 3) return rows(kP3Block);
  throw UnsupportedError("iterated blocks exist only for p in {2, 3}, got p=" + std::to_string(pegs));
}

}  // namespace abgame
