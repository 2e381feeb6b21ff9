// decoder.hpp -- recover the secret from the answers to a static strategy.
//
// decode() filters the whole secret space and works for any strategy.
// structured_decode() replays the neighbor-question reasoning that proves the
// generated strategies feasible, and records each inference in a trace.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abgame/strategy.hpp"

namespace abgame {

enum class DecodeStatus : std::uint8_t { Unique, Inconsistent, Ambiguous };

std::string_view to_string(DecodeStatus status);

/// Ambiguous results list at most this many candidates.
inline constexpr std::size_t kMaxReportedCandidates = 32;

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Inconsistent;
  std::optional<Secret> secret;     ///< Set iff status == Unique.
  std::vector<Secret> candidates;   ///< Ambiguous only; first kMaxReportedCandidates.
  std::size_t candidate_count = 0;  ///< Total number of matching secrets.
};

/// Throws ContractError if the signature length differs from k or an answer
/// exceeds p.
DecodeResult decode(const Strategy& strategy, const AnswerSignature& sig);

// ============================================================================
// Structured decoding
// ============================================================================

/// Rule names used in traces.
namespace rule {
inline constexpr std::string_view kOneBlackNeighborEmpty = "1B + neighbor empty → non-overlapping peg";
inline constexpr std::string_view kOneBlackNeighborNonEmpty = "1B + neighbor non-empty → overlapping peg";
inline constexpr std::string_view kTwoBlackNeighborEmpty = "2B + neighbor empty → overlapping peg incorrect";
inline constexpr std::string_view kTwoBlackBothNonEmpty =
    "2B + both neighbors non-empty → both overlapping pegs correct";
inline constexpr std::string_view kFullAnswer = "all pegs black → every peg correct";
inline constexpr std::string_view kEndgame = "endgame enumeration";
inline constexpr std::string_view kMissingColor = "missing-color completion";
inline constexpr std::string_view kContradiction = "contradiction";
}  // namespace rule

struct TraceStep {
  int question = -1;  ///< 0-based question index, -1 for steps that use many questions.
  int answer = -1;
  std::string_view rule;
  std::string detail;
};

struct DecodeTrace {
  std::vector<TraceStep> steps;
  std::vector<std::optional<Color>> resolved;  ///< Per peg.

  /// One line per step, 1-based question numbers.
  std::string to_string() const;
};

struct StructuredDecode {
  DecodeStatus status = DecodeStatus::Inconsistent;  ///< Unique or Inconsistent.
  std::optional<Secret> secret;
  DecodeTrace trace;
};

/// Throws UnsupportedError unless the strategy is Generated with p in {2, 3},
/// and ContractError for a malformed signature. Never returns a secret whose
/// signature differs from `sig`.
StructuredDecode structured_decode(const Strategy& strategy, const AnswerSignature& sig);

}  // namespace abgame
