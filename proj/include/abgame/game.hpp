// game.hpp -- the game universe: specs, codes, black-peg answers and signatures.
//
// Colors are 1-based everywhere, matching the published tables. A Code is used
// both as a question and as a secret.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abgame {

// ============================================================================
// Errors
// ============================================================================

/// Raised when a caller breaks an operation's precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for a GameSpec that describes no playable game.
class InvalidSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for well-formed requests outside what is implemented (p >= 4, ...).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ============================================================================
// GameSpec
// ============================================================================

enum class Variant : std::uint8_t { AB, Mastermind };

/// Largest peg count representable in a Code.
inline constexpr int kMaxPegs = 8;

/// Largest color count. Colors are stored in 16 bits; this bound keeps secret
/// enumeration and shift arithmetic well inside range.
inline constexpr int kMaxColors = 4096;

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

struct GameSpec {
  Variant variant = Variant::AB;
  int pegs = 1;
  int colors = 1;

  /// Throws InvalidSpecError unless 1 <= pegs <= kMaxPegs, 1 <= colors and,
  /// for the AB variant, colors >= pegs.
  void validate() const;

  /// c(c-1)...(c-p+1) for AB, c^p for Mastermind.
  std::uint64_t secret_count() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

GameSpec ab_spec(int pegs, int colors);
GameSpec mastermind_spec(int pegs, int colors);

// ============================================================================
// Code
// ============================================================================

using Color = std::uint16_t;

/// An ordered tuple of p colors. Ordering is lexicographic (shorter codes sort
/// first), which is also the order in which secrets are enumerated.
class Code {
 public:
  Code() = default;
  Code(std::initializer_list<int> colors);
  explicit Code(std::span<const int> colors);

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Zero-based peg access.
  Color operator[](int peg) const { return colors_[static_cast<std::size_t>(peg)]; }
  Color& operator[](int peg) { return colors_[static_cast<std::size_t>(peg)]; }

  std::span<const Color> colors() const { return {colors_.data(), static_cast<std::size_t>(size_)}; }

  void push_back(Color c);

  bool has_distinct_colors() const;

  /// "(1|2|3)", the notation used by the tables.
  std::string to_string() const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.size_ == b.size_ &&
           std::equal(a.colors().begin(), a.colors().end(), b.colors().begin());
  }
  friend std::strong_ordering operator<=>(const Code& a, const Code& b);

 private:
  std::array<Color, kMaxPegs> colors_{};
  std::uint8_t size_ = 0;
};

using Question = Code;
using Secret = Code;

/// Parses "(1|2|3)", "1|2|3" or "1,2,3".
Code parse_code(std::string_view text);

/// True iff the code has spec.pegs colors in 1..spec.colors and, for AB,
/// pairwise-distinct colors.
bool is_valid_code(const GameSpec& spec, const Code& code);

/// Throws ContractError naming `what` unless is_valid_code holds.
void require_valid_code(const GameSpec& spec, const Code& code, std::string_view what);

/// Number of pegs where question and secret agree. Symmetric.
int black_pegs(const Code& question, const Code& secret);

/// Every valid secret of the spec in lexicographic order.
std::vector<Secret> enumerate_secrets(const GameSpec& spec);

// ============================================================================
// AnswerSignature
// ============================================================================

/// Per-question black-peg counts for one secret. Totally ordered
/// (lexicographically) so collision detection can sort and scan.
struct AnswerSignature {
  std::vector<std::uint8_t> answers;

  std::size_t size() const { return answers.size(); }
  std::string to_string() const;

  friend bool operator==(const AnswerSignature&, const AnswerSignature&) = default;
  friend auto operator<=>(const AnswerSignature&, const AnswerSignature&) = default;
};

/// Parses "1,0,2" into a signature. Throws ContractError on malformed input.
AnswerSignature parse_signature(std::string_view text);

/// Answers of each question against `secret`, in question order.
AnswerSignature signature_of(std::span<const Question> questions, const Secret& secret);

}  // namespace abgame
