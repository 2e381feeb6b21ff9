#include "abgame/strategy.hpp"

#include <algorithm>
#include <string>

namespace abgame {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Generated: return "generated";
    case Provenance::UserSupplied: return "user-supplied";
    case Provenance::SearchWitness: return "search-witness";
  }
  return "unknown";
}

Strategy::Strategy(GameSpec spec, std::vector<Question> questions, Provenance provenance)
    : spec_(spec), questions_(std::move(questions)), provenance_(provenance) {
  spec_.validate();
  for (std::size_t i = 0; i < questions_.size(); ++i)
    require_valid_code(spec_, questions_[i], "question Q" + std::to_string(i + 1));
  std::vector<Question> sorted = questions_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    throw ContractError("strategy repeats question " + dup->to_string());
}

AnswerSignature signature(const Strategy& strategy, const Secret& secret) {
  require_valid_code(strategy.spec(), secret, "secret");
  return signature_of(strategy.questions(), secret);
}

// ---------------------------------------------------------------------------

BlockPlan plan_blocks(int pegs, int colors) {
  BlockPlan plan;
  plan.pegs = pegs;
  plan.colors = colors;
  if (pegs == 2) {
    if (colors < 2) throw InvalidSpecError("p=2 needs c >= 2");
    plan.s = (colors - 2) / 3;
    plan.t = colors - 3 * plan.s;
    plan.h = colors % 3;
    plan.block_size = 4;
    plan.base_is_block = plan.t == 4;
    for (int l = 1; l <= plan.s; ++l) plan.shifts.push_back(plan.t + 3 * (l - 1));
  } else if (pegs == 3) {
    if (colors < 3) throw InvalidSpecError("p=3 needs c >= 3");
    if (colors == 3) {
      plan.t = 3;
    } else {
      plan.s = (colors - 4) / 6;
      plan.t = colors - 6 * plan.s;
    }
    plan.block_size = 9;
    for (int l = 1; l <= plan.s; ++l) plan.shifts.push_back(plan.t + 6 * (l - 1));
  } else {
    throw UnsupportedError("block plans exist only for p in {2, 3}, got p=" + std::to_string(pegs));
  }
  plan.base_size = static_cast<int>(base_table(pegs, plan.t).size());
  return plan;
}

std::vector<Question> shift_block(std::span<const Question> block, int offset, int max_color) {
  if (offset < 0) throw ContractError("block offset must be non-negative, got " + std::to_string(offset));
  std::vector<Question> out;
  out.reserve(block.size());
  for (const auto& q : block) {
    Question shifted = q;
    for (int i = 0; i < q.size(); ++i) {
      int c = q[i] + offset;
      if (c < 1 || c > max_color)
        throw ContractError("shifting " + q.to_string() + " by " + std::to_string(offset) + " leaves colors 1.." +
                            std::to_string(max_color));
      shifted[i] = static_cast<Color>(c);
    }
    out.push_back(shifted);
  }
  return out;
}

Strategy build_strategy(const GameSpec& spec) {
  spec.validate();
  if (spec.variant != Variant::AB)
    throw UnsupportedError("strategy construction is implemented for the AB game only");
  if (spec.pegs > 3) throw UnsupportedError("strategy construction supports p <= 3, got p=" + std::to_string(spec.pegs));

  std::vector<Question> questions;
  if (spec.pegs == 1) {
    for (int c = 1; c < spec.colors; ++c) questions.push_back(Question{c});
    return Strategy(spec, std::move(questions), Provenance::Generated);
  }

  const BlockPlan plan = plan_blocks(spec.pegs, spec.colors);
  questions = base_table(spec.pegs, plan.t);
  const auto block = iterated_block(spec.pegs);
  for (int offset : plan.shifts) {
    auto shifted = shift_block(block, offset, spec.colors);
    questions.insert(questions.end(), shifted.begin(), shifted.end());
  }
  return Strategy(spec, std::move(questions), Provenance::Generated);
}

int expected_k(const GameSpec& spec) {
  spec.validate();
  const int c = spec.colors;
  if (spec.variant == Variant::AB) {
    switch (spec.pegs) {
      case 1: return c - 1;
      case 2: return (4 * c + 2) / 3 - 2;
      case 3: return c == 3 ? 4 : (3 * c - 1) / 2 - 1;
      default: break;
    }
  } else {
    switch (spec.pegs) {
      case 1: return c - 1;
      case 2: return (4 * c - 1 + 2) / 3 - 1;
      case 3: return 3 * c / 2;
      default: break;
    }
  }
  throw UnsupportedError("no question-count formula for p=" + std::to_string(spec.pegs));
}

bool matches_generated(const Strategy& strategy) {
  const auto& spec = strategy.spec();
  if (spec.variant != Variant::AB || spec.pegs > 3) return false;
  return build_strategy(spec) == strategy;
}

}  // namespace abgame
