#include "abgame/io.hpp"

#include <iomanip>
#include <sstream>

namespace abgame {

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "table") return Format::Table;
  throw ContractError("unknown format '" + std::string(text) + "' (expected json or table)");
}

namespace {

Json code_to_json(const Code& code) {
  Json arr = Json::array();
  for (Color c : code.colors()) arr.push_back(c);
  return arr;
}

Json spec_fields(const GameSpec& spec) {
  Json j;
  j["variant"] = std::string(to_string(spec.variant));
  j["pegs"] = spec.pegs;
  j["colors"] = spec.colors;
  return j;
}

Strategy with_detected_provenance(GameSpec spec, std::vector<Question> questions) {
  Strategy s(spec, std::move(questions), Provenance::UserSupplied);
  if (matches_generated(s)) return Strategy(spec, std::vector<Question>(s.questions().begin(), s.questions().end()),
                                            Provenance::Generated);
  return s;
}

}  // namespace

Json strategy_to_json(const Strategy& strategy) {
  Json j = spec_fields(strategy.spec());
  Json qs = Json::array();
  for (const auto& q : strategy.questions()) qs.push_back(code_to_json(q));
  j["questions"] = std::move(qs);
  return j;
}

Strategy strategy_from_json(const Json& json) {
  try {
    GameSpec spec;
    spec.variant = parse_variant(json.at("variant").get<std::string>());
    spec.pegs = json.at("pegs").get<int>();
    spec.colors = json.at("colors").get<int>();
    spec.validate();
    std::vector<Question> questions;
    for (const auto& row : json.at("questions")) {
      std::vector<int> colors = row.get<std::vector<int>>();
      questions.emplace_back(std::span<const int>(colors));
    }
    return with_detected_provenance(spec, std::move(questions));
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed strategy JSON: ") + e.what());
  }
}

std::string strategy_to_table(const Strategy& strategy) {
  const auto& spec = strategy.spec();
  std::ostringstream out;
  out << "# variant=" << to_string(spec.variant) << " pegs=" << spec.pegs << " colors=" << spec.colors << '\n';
  const int label = std::max(4, static_cast<int>(std::to_string(strategy.k()).size()) + 2);
  out << std::left << std::setw(label) << "Peg" << " ||";
  for (int i = 1; i <= spec.pegs; ++i) out << (i > 1 ? " |" : "") << std::right << std::setw(3) << i;
  out << '\n';
  for (int j = 0; j < strategy.k(); ++j) {
    out << std::left << std::setw(label) << ("Q" + std::to_string(j + 1)) << " ||";
    for (int i = 0; i < spec.pegs; ++i) out << (i > 0 ? " |" : "") << std::right << std::setw(3) << strategy[j][i];
    out << '\n';
  }
  return out.str();
}

Strategy strategy_from_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GameSpec spec;
  bool have_header = false;
  std::vector<Question> questions;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream fields(line.substr(1));
      std::string kv;
      while (fields >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        auto key = kv.substr(0, eq);
        auto value = kv.substr(eq + 1);
        if (key == "variant") spec.variant = parse_variant(value);
        else if (key == "pegs") spec.pegs = std::stoi(value);
        else if (key == "colors") spec.colors = std::stoi(value);
      }
      have_header = true;
      continue;
    }
    if (line.rfind("Peg", 0) == 0) continue;
    auto bars = line.find("||");
    if (bars == std::string::npos) throw ContractError("malformed table row: '" + line + "'");
    questions.push_back(parse_code(line.substr(bars + 2)));
  }
  if (!have_header) throw ContractError("table is missing its '# variant=... pegs=... colors=...' header");
  spec.validate();
  return with_detected_provenance(spec, std::move(questions));
}

std::string write_strategy(const Strategy& strategy, Format format) {
  if (format == Format::Table) return strategy_to_table(strategy);
  return strategy_to_json(strategy).dump(2) + "\n";
}

Strategy read_strategy(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ContractError(std::string("malformed strategy JSON: ") + e.what());
    }
    return strategy_from_json(j);
  }
  return strategy_from_table(text);
}

// ---------------------------------------------------------------------------

Json audit_to_json(const AuditReport& r) {
  Json j = spec_fields(r.spec);
  j["k"] = r.k;
  j["l"] = r.l;
  Json missing = Json::array();
  for (const auto& m : r.missing) missing.push_back(m);
  j["missing"] = std::move(missing);
  if (r.spec.pegs == 2) {
    j["m"] = r.m;
  } else {
    j["e"] = r.e;
    j["f"] = r.f;
  }
  j["lower_bound"] = r.lower_bound;
  Json v = Json::array();
  for (const auto& violation : r.violations) v.push_back(Json{{"rule", violation.rule}, {"detail", violation.detail}});
  j["violations"] = std::move(v);
  j["notes"] = r.notes;
  return j;
}

Json search_to_json(const SearchReport& r) {
  Json j = spec_fields(r.spec);
  j["min_k"] = r.min_k >= 0 ? Json(r.min_k) : Json(nullptr);
  if (r.witness) {
    Json qs = Json::array();
    for (const auto& q : r.witness->questions()) qs.push_back(code_to_json(q));
    j["witness"] = std::move(qs);
  } else {
    j["witness"] = nullptr;
  }
  j["infeasible_sizes_checked"] = r.infeasible_sizes_checked;
  j["nodes_explored"] = r.nodes_explored;
  j["elapsed_ms"] = r.elapsed.count();
  j["budget_exhausted"] = r.budget_exhausted;
  return j;
}

Json decode_to_json(const DecodeResult& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  j["secret"] = r.secret ? code_to_json(*r.secret) : Json(nullptr);
  if (r.status == DecodeStatus::Ambiguous) {
    Json c = Json::array();
    for (const auto& s : r.candidates) c.push_back(code_to_json(s));
    j["candidates"] = std::move(c);
    j["candidate_count"] = r.candidate_count;
  }
  return j;
}

Json trace_to_json(const DecodeTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["question"] = s.question >= 0 ? Json(s.question + 1) : Json(nullptr);
    step["answer"] = s.answer >= 0 ? Json(s.answer) : Json(nullptr);
    step["rule"] = std::string(s.rule);
    step["detail"] = s.detail;
    steps.push_back(std::move(step));
  }
  Json resolved = Json::array();
  for (const auto& c : trace.resolved) resolved.push_back(c ? Json(*c) : Json(nullptr));
  return Json{{"steps", std::move(steps)}, {"resolved", std::move(resolved)}};
}

}  // namespace abgame
