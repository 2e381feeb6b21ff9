// verifier.hpp -- feasibility, collision witnesses, question relations and
// the lemma-derived necessary conditions used to audit strategies.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abgame/strategy.hpp"

namespace abgame {

/// True iff every secret of the strategy's game gets a distinct signature.
bool is_feasible(const Strategy& strategy);

/// The lexicographically smallest pair of secrets sharing a signature, or
/// nothing when the strategy is feasible.
std::optional<std::pair<Secret, Secret>> find_collision(const Strategy& strategy);

// ============================================================================
// Question classes and relations
// ============================================================================

/// (a_1, ..., a_p): a_i is how often the question's peg-i color occurs on
/// peg i across the whole strategy, the question itself included.
struct QuestionClass {
  std::vector<int> counts;

  std::string to_string() const;
  friend bool operator==(const QuestionClass&, const QuestionClass&) = default;
};

QuestionClass classify_question(const Strategy& strategy, int index);

enum class RelationKind : std::uint8_t { Disjoint, Neighboring, DoubleNeighboring, Neither };

std::string_view to_string(RelationKind kind);

struct Relation {
  RelationKind kind = RelationKind::Neither;
  std::vector<int> overlap;  ///< 1-based pegs where both questions agree.

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Neighboring / double neighboring when the questions agree on one / at least
/// two pegs; disjoint when no color of one occurs anywhere in the other
/// (across pegs); otherwise Neither.
Relation relation(const Question& a, const Question& b);

/// Disjointness restricted to the given 1-based pegs: the color sets of `a`
/// and `b` on those pegs do not intersect.
bool disjoint_in_pegs(const Question& a, const Question& b, std::span<const int> pegs);

/// Colors of 1..c never used on the given 1-based peg, ascending.
std::vector<Color> missing_colors(const Strategy& strategy, int peg);

// ============================================================================
// Audit
// ============================================================================

struct Violation {
  std::string rule;    ///< Short code such as "L1b" or "L3a".
  std::string detail;  ///< Human-readable description with the offending questions.
};

/// Census and lemma checks for one strategy. A violation is a necessary-
/// condition failure, so any violation proves infeasibility; an empty list
/// only means no known obstruction was found.
struct AuditReport {
  GameSpec spec;
  int k = 0;
  std::vector<int> l;                       ///< Per peg: colors occurring exactly once.
  std::vector<std::vector<Color>> missing;  ///< Per peg: colors never used.
  int m = 0;  ///< p = 2: number of (1,1)-questions.
  int e = 0;  ///< p = 3: number of (1,1,1)-questions.
  int f = 0;  ///< p = 3: number of questions with exactly two pegs of count 1.
  int lower_bound = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool has_violation(std::string_view rule) const;
};

AuditReport audit(const Strategy& strategy);

// ============================================================================
// Column removal
// ============================================================================

/// The two-peg strategy obtained by deleting one (1-based) peg from every
/// question of a three-peg strategy. Duplicate induced questions collapse to
/// their first occurrence.
Strategy remove_column(const Strategy& strategy, int removed_peg);

bool column_removal_feasible(const Strategy& strategy, int removed_peg);

}  // namespace abgame
