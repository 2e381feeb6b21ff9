#include <doctest.h>

#include "abgame/game.hpp"
#include "support.hpp"

using namespace abgame;

TEST_CASE("spec validation") {
  CHECK_NOTHROW(ab_spec(3, 3).validate());
  CHECK_THROWS_AS(ab_spec(3, 2).validate(), InvalidSpecError);
  CHECK_THROWS_AS(ab_spec(0, 4).validate(), InvalidSpecError);
  CHECK_THROWS_AS(ab_spec(2, 0).validate(), InvalidSpecError);
  CHECK_NOTHROW(mastermind_spec(3, 2).validate());
  CHECK(ab_spec(3, 5).secret_count() == 60);
  CHECK(mastermind_spec(2, 4).secret_count() == 16);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("ab") == Variant::AB);
  CHECK(parse_variant("mm") == Variant::Mastermind);
  CHECK(parse_variant("mastermind") == Variant::Mastermind);
  CHECK(to_string(Variant::AB) == "ab");
  CHECK_THROWS_AS(parse_variant("bulls"), ContractError);
}

TEST_CASE("code parsing and printing") {
  CHECK(parse_code("(1|4|5)") == Code{1, 4, 5});
  CHECK(parse_code("1|4|5") == Code{1, 4, 5});
  CHECK(parse_code(" 1, 4 ,5") == Code{1, 4, 5});
  CHECK(Code{7, 9, 2}.to_string() == "(7|9|2)");
  CHECK_THROWS_AS(parse_code("(1|x)"), ContractError);
  CHECK_THROWS_AS(parse_code(""), ContractError);
  CHECK(Code{1, 2} < Code{1, 3});
  CHECK(Code{2, 1} > Code{1, 9});
}

TEST_CASE("code validity") {
  CHECK(is_valid_code(ab_spec(3, 5), Code{1, 2, 5}));
  CHECK_FALSE(is_valid_code(ab_spec(3, 5), Code{1, 1, 5}));
  CHECK_FALSE(is_valid_code(ab_spec(3, 5), Code{1, 2, 6}));
  CHECK_FALSE(is_valid_code(ab_spec(3, 5), Code{1, 2}));
  CHECK(is_valid_code(mastermind_spec(3, 2), Code{1, 1, 2}));
  CHECK_THROWS_AS(require_valid_code(ab_spec(2, 3), Code{0, 1}, "question"), ContractError);
}

TEST_CASE("black pegs agree with the direct count") {
  const auto codes = oracle::all_codes(3, 5, true);
  for (const auto& q : codes)
    for (const auto& s : codes) REQUIRE(black_pegs(oracle::code_of(q), oracle::code_of(s)) == oracle::blacks(q, s));
  CHECK_THROWS_AS(black_pegs(Code{1, 2}, Code{1, 2, 3}), ContractError);
}

TEST_CASE("secret enumeration is complete and ordered") {
  for (int p = 1; p <= 3; ++p)
    for (int c = p; c <= 6; ++c) {
      for (const auto variant : {Variant::AB, Variant::Mastermind}) {
        const GameSpec spec{variant, p, c};
        const auto secrets = enumerate_secrets(spec);
        const auto expected = oracle::all_codes(p, c, variant == Variant::Mastermind);
        REQUIRE(secrets.size() == expected.size());
        REQUIRE(secrets.size() == spec.secret_count());
        for (std::size_t i = 0; i < secrets.size(); ++i) REQUIRE(oracle::row_of(secrets[i]) == expected[i]);
      }
    }
}

TEST_CASE("signatures") {
  const std::vector<Question> qs{{1, 3, 2}, {1, 3, 4}, {2, 4, 3}};
  const auto sig = signature_of(qs, Code{1, 4, 5});
  CHECK(sig.to_string() == "1,1,1");
  CHECK(parse_signature("1,1,1") == sig);
  CHECK(parse_signature(" 1 , 1,1 ") == sig);
  CHECK_THROWS_AS(parse_signature("1,,0"), ContractError);
  CHECK_THROWS_AS(parse_signature("1,-1"), ContractError);
  CHECK(parse_signature("").size() == 0);
}
