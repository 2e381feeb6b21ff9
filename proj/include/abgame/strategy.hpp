// strategy.hpp -- static strategies and the base-plus-shifted-blocks construction.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "abgame/game.hpp"

namespace abgame {

enum class Provenance : std::uint8_t { Generated, UserSupplied, SearchWitness };

std::string_view to_string(Provenance p);

/// A list of k distinct main questions for one game. The final guess is not
/// part of the list, so a strategy with k questions is a (k+1)-strategy.
class Strategy {
 public:
  /// Throws ContractError if a question is invalid for `spec` or repeated.
  Strategy(GameSpec spec, std::vector<Question> questions, Provenance provenance = Provenance::UserSupplied);

  const GameSpec& spec() const { return spec_; }
  std::span<const Question> questions() const { return questions_; }
  const Question& operator[](int index) const { return questions_[static_cast<std::size_t>(index)]; }
  int k() const { return static_cast<int>(questions_.size()); }
  Provenance provenance() const { return provenance_; }

  friend bool operator==(const Strategy& a, const Strategy& b) {
    return a.spec_ == b.spec_ && a.questions_ == b.questions_;
  }

 private:
  GameSpec spec_;
  std::vector<Question> questions_;
  Provenance provenance_;
};

/// Answers of every question of `strategy` for `secret`.
AnswerSignature signature(const Strategy& strategy, const Secret& secret);

// ============================================================================
// Construction
// ============================================================================

/// How a generated strategy for c colors decomposes: base questions for t
/// colors, then s copies of the iterated block, copy l shifted by
/// t + w(l-1) where w = 3 for two pegs and 6 for three pegs.
struct BlockPlan {
  int pegs = 0;
  int colors = 0;
  int s = 0;
  int t = 0;
  int h = -1;                ///< c mod 3 for two pegs, -1 otherwise.
  std::vector<int> shifts;   ///< Color offset of each iterated block.
  int base_size = 0;         ///< Number of base questions.
  int block_size = 0;        ///< Questions per iterated block (4 or 9).
  bool base_is_block = false;  ///< Two pegs, t = 4: the base has the block's shape.
};

/// Decomposition of c for p in {2, 3}. Three pegs with c = 3 yields the
/// special four-question table as base and no blocks.
BlockPlan plan_blocks(int pegs, int colors);

/// The base questions for (p, t): t in {2,3,4} for p = 2, t in {3,...,9} for p = 3.
std::vector<Question> base_table(int pegs, int t);

/// The unshifted iterated block: 4 questions over colors 1..3 for p = 2, the
/// 9 questions over colors 1..6 for p = 3.
std::vector<Question> iterated_block(int pegs);

/// Adds `offset` to every color. Throws ContractError if a resulting color
/// leaves 1..max_color.
std::vector<Question> shift_block(std::span<const Question> block, int offset, int max_color = kMaxColors);

/// The generated feasible strategy for the AB game with p in {1,2,3}.
Strategy build_strategy(const GameSpec& spec);

/// Number of main questions of the optimal strategy. Mastermind values are the
/// comparison counts of the known Mastermind constructions (p = 2, 3 only).
int expected_k(const GameSpec& spec);

/// True iff `strategy` is exactly what build_strategy produces for its spec.
bool matches_generated(const Strategy& strategy);

}  // namespace abgame
