// io.hpp -- strategy files and report serialization.
//
// Strategy JSON: {"variant": "ab", "pegs": 2, "colors": 4, "questions": [[1,3],[3,1]]}
// with 1-based colors. The table format mirrors the printed tables:
//
//   Peg  ||  1 |  2
//   Q1   ||  1 |  3
//   Q2   ||  3 |  1
//
// preceded by a "# variant=ab pegs=2 colors=4" header line.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "abgame/decoder.hpp"
#include "abgame/search.hpp"
#include "abgame/verifier.hpp"

namespace abgame {

using Json = nlohmann::ordered_json;

enum class Format : std::uint8_t { Json, Table };

Format parse_format(std::string_view text);

Json strategy_to_json(const Strategy& strategy);

/// Loaded strategies are UserSupplied unless they equal the generated strategy
/// for their spec, in which case they are Generated.
Strategy strategy_from_json(const Json& json);

std::string strategy_to_table(const Strategy& strategy);
Strategy strategy_from_table(std::string_view text);

std::string write_strategy(const Strategy& strategy, Format format);

/// Accepts either format; JSON is recognized by a leading '{'.
Strategy read_strategy(std::string_view text);

Json audit_to_json(const AuditReport& report);
Json search_to_json(const SearchReport& report);
Json decode_to_json(const DecodeResult& result);
Json trace_to_json(const DecodeTrace& trace);

}  // namespace abgame
