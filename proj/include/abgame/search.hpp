// search.hpp -- exhaustive minimum-size search for feasible static strategies.
//
// Strategies are explored as ascending question sets. Colors are relabeled
// canonically: a set is only visited if reading its questions row-major
// introduces colors in the order 1, 2, 3, ... Every orbit of the color
// permutation group contains such a set, so refutations stay exhaustive.
// Partial strategies are pruned when a class of secrets that still share all
// answers is larger than (p+1)^r for r remaining questions.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "abgame/strategy.hpp"

namespace abgame {

struct SearchOptions {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::seconds max_time{300};
  bool symmetry_breaking = true;
  bool pruning = true;
  int workers = 1;

  /// Plain enumeration of all question subsets; used as an oracle.
  static SearchOptions paranoid();
};

enum class SizeOutcome : std::uint8_t { Found, Refuted, BudgetExhausted };

std::string_view to_string(SizeOutcome outcome);

struct SizeResult {
  SizeOutcome outcome = SizeOutcome::Refuted;
  std::optional<Strategy> witness;
  std::uint64_t nodes = 0;
};

/// Looks for a feasible strategy with exactly k questions. The witness is the
/// first one in search order, which is independent of the worker count.
SizeResult exists_strategy_of_size(const GameSpec& spec, int k, const SearchOptions& options = {});

struct SearchReport {
  GameSpec spec;
  int min_k = -1;  ///< -1 when no witness was found.
  std::optional<Strategy> witness;
  std::vector<int> infeasible_sizes_checked;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  bool budget_exhausted = false;
};

/// Tries k = 0, 1, 2, ... up to max_k and stops at the first feasible size.
SearchReport min_k(const GameSpec& spec, const SearchOptions& options = {}, int max_k = 64);

/// Metric dimension of the Hamming graph on [c]^p: the minimum static
/// black-peg Mastermind strategy size.
SearchReport metric_dimension_hamming(int pegs, int colors, const SearchOptions& options = {});

}  // namespace abgame
