#include <doctest.h>

#include "abgame/decoder.hpp"
#include "abgame/io.hpp"
#include "support.hpp"

using namespace abgame;

namespace {

AnswerSignature sig_of(const Strategy& s, const oracle::Row& secret) {
  AnswerSignature sig;
  for (int a : oracle::answers(oracle::rows_of(s), secret)) sig.answers.push_back(static_cast<std::uint8_t>(a));
  return sig;
}

bool has_step(const DecodeTrace& trace, int question, std::string_view rule) {
  for (const auto& step : trace.steps)
    if (step.question == question && step.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("decode by filtering") {
  const auto s = build_strategy(ab_spec(2, 9));
  const auto r = decode(s, sig_of(s, {4, 9}));
  CHECK(r.status == DecodeStatus::Unique);
  REQUIRE(r.secret);
  CHECK(*r.secret == Code{4, 9});
  CHECK(r.candidate_count == 1);
}

TEST_CASE("decode of an infeasible strategy is ambiguous") {
  const auto s = read_strategy(oracle::read_text("p3_c10_infeasible.json"));
  const auto r = decode(s, sig_of(s, {1, 4, 5}));
  CHECK(r.status == DecodeStatus::Ambiguous);
  CHECK(r.candidates == std::vector<Secret>{Code{1, 4, 5}, Code{2, 3, 5}});
  CHECK(r.candidate_count == 2);
  CHECK_FALSE(r.secret);
}

TEST_CASE("ambiguous candidate lists are capped") {
  const Strategy empty(ab_spec(3, 6), {});
  const auto r = decode(empty, AnswerSignature{});
  CHECK(r.status == DecodeStatus::Ambiguous);
  CHECK(r.candidate_count == 120);
  CHECK(r.candidates.size() == kMaxReportedCandidates);
}

TEST_CASE("unreachable signatures are inconsistent") {
  const auto s = build_strategy(ab_spec(2, 4));
  CHECK(decode(s, parse_signature("2,2,0,0")).status == DecodeStatus::Inconsistent);
  // All-zero answers for h = 1 would need the secret (4|4).
  CHECK(decode(s, parse_signature("0,0,0,0")).status == DecodeStatus::Inconsistent);
  const auto sd = structured_decode(s, parse_signature("0,0,0,0"));
  CHECK(sd.status == DecodeStatus::Inconsistent);
  CHECK_FALSE(sd.secret);
}

TEST_CASE("malformed signatures") {
  const auto s = build_strategy(ab_spec(2, 4));
  CHECK_THROWS_AS(decode(s, parse_signature("0,0,0")), ContractError);
  CHECK_THROWS_AS(decode(s, parse_signature("0,0,0,3")), ContractError);
  CHECK_THROWS_AS(structured_decode(s, parse_signature("0,0")), ContractError);
}

TEST_CASE("structured decode needs a generated strategy") {
  auto rows = oracle::rows_of(build_strategy(ab_spec(3, 10)));
  std::swap(rows[0], rows[1]);
  const auto reordered = oracle::strategy_of(ab_spec(3, 10), rows);
  CHECK(reordered.provenance() == Provenance::UserSupplied);
  CHECK_THROWS_AS(structured_decode(reordered, sig_of(reordered, {1, 2, 3})), UnsupportedError);
  const auto one_peg = build_strategy(ab_spec(1, 4));
  CHECK_THROWS_AS(structured_decode(one_peg, parse_signature("0,0,0")), UnsupportedError);
}

TEST_CASE("neighbor inferences, three pegs") {
  const auto s = build_strategy(ab_spec(3, 12));
  // Q8..Q10 (0-based 7..9) form the first shifted group.
  auto r = structured_decode(s, sig_of(s, {7, 9, 2}));
  REQUIRE(r.secret);
  CHECK(*r.secret == Code{7, 9, 2});
  CHECK(sig_of(s, {7, 9, 2}).answers[7] == 1);
  CHECK(sig_of(s, {7, 9, 2}).answers[8] == 0);
  CHECK(sig_of(s, {7, 9, 2}).answers[9] == 0);
  CHECK(has_step(r.trace, 7, rule::kOneBlackNeighborEmpty));

  r = structured_decode(s, sig_of(s, {8, 11, 12}));
  REQUIRE(r.secret);
  CHECK(*r.secret == Code{8, 11, 12});
  CHECK(sig_of(s, {8, 11, 12}).answers[7] == 2);
  CHECK(has_step(r.trace, 7, rule::kTwoBlackBothNonEmpty));
}

TEST_CASE("neighbor inferences, two pegs") {
  const auto s = build_strategy(ab_spec(2, 9));
  auto r = structured_decode(s, sig_of(s, {3, 6}));
  REQUIRE(r.secret);
  CHECK(*r.secret == Code{3, 6});
  CHECK(has_step(r.trace, 2, rule::kOneBlackNeighborNonEmpty));
  CHECK(r.trace.resolved == std::vector<std::optional<Color>>{Color{3}, Color{6}});

  r = structured_decode(s, sig_of(s, {4, 9}));
  REQUIRE(r.secret);
  CHECK(*r.secret == Code{4, 9});
  CHECK(has_step(r.trace, 2, rule::kOneBlackNeighborEmpty));
}

TEST_CASE("structured decode agrees with filtering on every secret") {
  for (int p = 2; p <= 3; ++p)
    for (int c = p == 2 ? 2 : 3; c <= 13; ++c) {
      const auto s = build_strategy(ab_spec(p, c));
      for (const auto& secret : oracle::all_codes(p, c, false)) {
        const auto sig = sig_of(s, secret);
        const auto generic = decode(s, sig);
        const auto structured = structured_decode(s, sig);
        CAPTURE(c);
        CAPTURE(oracle::code_of(secret).to_string());
        REQUIRE(generic.status == DecodeStatus::Unique);
        REQUIRE(oracle::row_of(*generic.secret) == secret);
        REQUIRE(structured.status == DecodeStatus::Unique);
        REQUIRE(oracle::row_of(*structured.secret) == secret);
        for (int i = 0; i < p; ++i) REQUIRE(structured.trace.resolved[static_cast<std::size_t>(i)] == secret[static_cast<std::size_t>(i)]);
      }
    }
}

TEST_CASE("structured decode never returns a wrong secret") {
  const auto s = build_strategy(ab_spec(3, 7));
  // Every answer vector with entries 0..1 over the first few questions, rest zero.
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    AnswerSignature sig;
    for (int j = 0; j < s.k(); ++j) sig.answers.push_back(j < 9 ? static_cast<std::uint8_t>((mask >> j) & 1u) : 0);
    const auto generic = decode(s, sig);
    const auto structured = structured_decode(s, sig);
    if (structured.status == DecodeStatus::Unique) {
      REQUIRE(generic.status == DecodeStatus::Unique);
      REQUIRE(*structured.secret == *generic.secret);
    } else {
      REQUIRE(generic.status == DecodeStatus::Inconsistent);
    }
  }
}

TEST_CASE("trace rendering") {
  const auto s = build_strategy(ab_spec(2, 9));
  const auto r = structured_decode(s, sig_of(s, {3, 6}));
  const auto text = r.trace.to_string();
  CHECK(text.find("Q3") != std::string::npos);
  CHECK(text.find(std::string(rule::kOneBlackNeighborNonEmpty)) != std::string::npos);
}
