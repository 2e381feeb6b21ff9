#include "abgame/decoder.hpp"

#include "abgame/verifier.hpp"

#include <algorithm>

namespace abgame {

std::string_view to_string(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::Unique: return "unique";
    case DecodeStatus::Inconsistent: return "inconsistent";
    case DecodeStatus::Ambiguous: return "ambiguous";
  }
  return "inconsistent";
}

namespace {

void require_signature(const Strategy& strategy, const AnswerSignature& sig) {
  if (static_cast<int>(sig.size()) != strategy.k())
    throw ContractError("signature has " + std::to_string(sig.size()) + " answers but the strategy has " +
                        std::to_string(strategy.k()) + " questions");
  for (auto a : sig.answers)
    if (a > strategy.spec().pegs)
      throw ContractError("answer " + std::to_string(a) + " exceeds the peg count " +
                          std::to_string(strategy.spec().pegs));
}

bool matches(const Strategy& strategy, const Secret& secret, const AnswerSignature& sig) {
  const auto qs = strategy.questions();
  for (std::size_t j = 0; j < qs.size(); ++j)
    if (black_pegs(qs[j], secret) != sig.answers[j]) return false;
  return true;
}

}  // namespace

DecodeResult decode(const Strategy& strategy, const AnswerSignature& sig) {
  require_signature(strategy, sig);
  DecodeResult r;
  for (const auto& s : enumerate_secrets(strategy.spec())) {
    if (!matches(strategy, s, sig)) continue;
    if (r.candidates.size() < kMaxReportedCandidates) r.candidates.push_back(s);
    ++r.candidate_count;
  }
  if (r.candidate_count == 0) {
    r.status = DecodeStatus::Inconsistent;
    r.candidates.clear();
  } else if (r.candidate_count == 1) {
    r.status = DecodeStatus::Unique;
    r.secret = r.candidates.front();
    r.candidates.clear();
  } else {
    r.status = DecodeStatus::Ambiguous;
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string DecodeTrace::to_string() const {
  std::string out;
  for (const auto& step : steps) {
    if (step.question >= 0)
      out += "Q" + std::to_string(step.question + 1) + " -> " + std::to_string(step.answer) + "B: ";
    out += std::string(step.rule);
    if (!step.detail.empty()) out += "; " + step.detail;
    out += '\n';
  }
  out += "resolved: (";
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    if (i) out += '|';
    out += resolved[i] ? std::to_string(*resolved[i]) : std::string("?");
  }
  out += ")\n";
  return out;
}

namespace {

// Decoding state for one structured decode.
class StructuredDecoder {
 public:
  StructuredDecoder(const Strategy& strategy, const AnswerSignature& sig)
      : strategy_(strategy), spec_(strategy.spec()), sig_(sig), plan_(plan_blocks(spec_.pegs, spec_.colors)) {
    trace_.resolved.assign(static_cast<std::size_t>(spec_.pegs), std::nullopt);
  }

  StructuredDecode run() {
    collect_blocks();
    if (!apply_block_rules()) return fail();

    const int unknown = static_cast<int>(
        std::count(trace_.resolved.begin(), trace_.resolved.end(), std::optional<Color>{}));
    bool ok = true;
    if (unknown == 1)
      ok = complete_missing_color();
    else if (unknown >= 2)
      ok = enumerate_endgame();
    if (!ok) return fail();

    Secret secret;
    for (const auto& c : trace_.resolved) secret.push_back(*c);
    if (!is_valid_code(spec_, secret) || !matches(strategy_, secret, sig_)) {
      trace_.steps.push_back({-1, -1, rule::kContradiction,
                              secret.to_string() + " does not reproduce the answers"});
      return fail();
    }
    StructuredDecode out;
    out.status = DecodeStatus::Unique;
    out.secret = secret;
    out.trace = std::move(trace_);
    return out;
  }

 private:
  // Indices of all questions in iterated blocks. Within these, each question
  // neighbors only the other members of its pair (two pegs) or triple.
  void collect_blocks() {
    std::vector<int> block_starts;
    if (plan_.base_is_block) block_starts.push_back(0);
    for (std::size_t l = 0; l < plan_.shifts.size(); ++l)
      block_starts.push_back(plan_.base_size + static_cast<int>(l) * plan_.block_size);
    for (int start : block_starts)
      for (int j = start; j < start + plan_.block_size; ++j) block_questions_.push_back(j);
  }

  std::vector<int> neighbors_of(int j) const {
    std::vector<int> out;
    for (int other : block_questions_)
      if (other != j && relation(strategy_[j], strategy_[other]).kind == RelationKind::Neighboring)
        out.push_back(other);
    return out;
  }

  int overlap_peg(int a, int b) const { return relation(strategy_[a], strategy_[b]).overlap.front() - 1; }

  int answer(int j) const { return sig_.answers[static_cast<std::size_t>(j)]; }

  bool pin(int peg, Color color, int question, std::string_view why, std::string detail) {
    auto& slot = trace_.resolved[static_cast<std::size_t>(peg)];
    if (slot && *slot != color) {
      trace_.steps.push_back({question, answer(question), rule::kContradiction,
                              "peg " + std::to_string(peg + 1) + " already " + std::to_string(*slot)});
      return false;
    }
    if (!slot) trace_.steps.push_back({question, answer(question), why, std::move(detail)});
    slot = color;
    return true;
  }

  bool pin_peg_of(int j, int peg, std::string_view why) {
    const Color color = strategy_[j][peg];
    return pin(peg, color, j, why,
               "color " + std::to_string(color) + " is correct on peg " + std::to_string(peg + 1));
  }

  bool apply_block_rules() {
    const int p = spec_.pegs;
    for (int j : block_questions_) {
      const int a = answer(j);
      if (a == 0) continue;
      if (a == p) {
        for (int peg = 0; peg < p; ++peg)
          if (!pin_peg_of(j, peg, rule::kFullAnswer)) return false;
        continue;
      }
      const auto nbrs = neighbors_of(j);
      if (static_cast<int>(nbrs.size()) != p - 1) {
        trace_.steps.push_back({j, a, rule::kContradiction, "block question without the expected neighbors"});
        return false;
      }

      if (a == 1) {
        // The neighbor whose answer is largest shares the correct peg; if all
        // neighbors are empty the correct peg is the one no neighbor covers.
        int best = -1;
        bool tie = false;
        for (int n : nbrs) {
          if (answer(n) == 0) continue;
          if (best < 0 || answer(n) > answer(best)) {
            best = n;
            tie = false;
          } else if (answer(n) == answer(best)) {
            tie = true;
          }
        }
        if (tie) {
          trace_.steps.push_back({j, a, rule::kContradiction, "neighbors tie on a 1B answer"});
          return false;
        }
        if (best < 0) {
          std::vector<bool> covered(static_cast<std::size_t>(p), false);
          for (int n : nbrs) covered[static_cast<std::size_t>(overlap_peg(j, n))] = true;
          const int peg = static_cast<int>(std::find(covered.begin(), covered.end(), false) - covered.begin());
          if (!pin_peg_of(j, peg, rule::kOneBlackNeighborEmpty)) return false;
        } else if (!pin_peg_of(j, overlap_peg(j, best), rule::kOneBlackNeighborNonEmpty)) {
          return false;
        }
        continue;
      }

      // a == 2 with three pegs: at least one neighbor must be non-empty.
      std::vector<int> empty;
      for (int n : nbrs)
        if (answer(n) == 0) empty.push_back(n);
      if (empty.size() == nbrs.size()) {
        trace_.steps.push_back({j, a, rule::kContradiction, "2B answer with both neighbors empty"});
        return false;
      }
      if (empty.empty()) {
        for (int n : nbrs)
          if (!pin_peg_of(j, overlap_peg(j, n), rule::kTwoBlackBothNonEmpty)) return false;
      } else {
        const int wrong = overlap_peg(j, empty.front());
        for (int peg = 0; peg < p; ++peg)
          if (peg != wrong && !pin_peg_of(j, peg, rule::kTwoBlackNeighborEmpty)) return false;
      }
    }
    return true;
  }

  // Exactly one peg is open. Subtracting the known pegs' contributions leaves
  // a 0/1 residual per question that marks where the open peg's color sits;
  // an all-zero residual means the peg holds its missing color.
  bool complete_missing_color() {
    int open = 0;
    while (trace_.resolved[static_cast<std::size_t>(open)]) ++open;

    std::optional<Color> color;
    for (int j = 0; j < strategy_.k(); ++j) {
      int residual = answer(j);
      for (int peg = 0; peg < spec_.pegs; ++peg)
        if (peg != open && strategy_[j][peg] == *trace_.resolved[static_cast<std::size_t>(peg)]) --residual;
      if (residual == 0) continue;
      const Color here = strategy_[j][open];
      if (residual != 1 || (color && *color != here)) {
        trace_.steps.push_back({j, answer(j), rule::kContradiction, "residual answer does not fit one color"});
        return false;
      }
      color = here;
    }
    std::string detail;
    if (!color) {
      const auto missing = missing_colors(strategy_, open + 1);
      if (missing.size() != 1) {
        trace_.steps.push_back({-1, -1, rule::kContradiction,
                                "peg " + std::to_string(open + 1) + " has no unique missing color"});
        return false;
      }
      color = missing.front();
      detail = "no question shows peg " + std::to_string(open + 1) + "'s color, so it is the missing color " +
               std::to_string(*color);
    } else {
      detail = "questions with color " + std::to_string(*color) + " on peg " + std::to_string(open + 1) +
               " account for the remaining blacks";
    }
    trace_.resolved[static_cast<std::size_t>(open)] = color;
    trace_.steps.push_back({-1, -1, rule::kMissingColor, std::move(detail)});
    return true;
  }

  // Two or more pegs are open. Their colors cannot occur on the same peg of
  // any block question (that would have produced a non-empty block answer),
  // so only the base colors remain; try them all against every answer.
  bool enumerate_endgame() {
    const int p = spec_.pegs;
    std::vector<std::vector<Color>> domain(static_cast<std::size_t>(p));
    for (int peg = 0; peg < p; ++peg) {
      if (trace_.resolved[static_cast<std::size_t>(peg)]) {
        domain[static_cast<std::size_t>(peg)] = {*trace_.resolved[static_cast<std::size_t>(peg)]};
        continue;
      }
      std::vector<bool> blocked(static_cast<std::size_t>(spec_.colors) + 1, false);
      for (int j : block_questions_) blocked[strategy_[j][peg]] = true;
      for (int c = 1; c <= spec_.colors; ++c)
        if (!blocked[static_cast<std::size_t>(c)]) domain[static_cast<std::size_t>(peg)].push_back(static_cast<Color>(c));
    }

    std::vector<Secret> found;
    std::size_t tried = 0;
    Secret cur;
    for (int i = 0; i < p; ++i) cur.push_back(0);
    auto rec = [&](auto&& self, int peg) -> void {
      if (peg == p) {
        if (!cur.has_distinct_colors()) return;
        ++tried;
        if (matches(strategy_, cur, sig_)) found.push_back(cur);
        return;
      }
      for (Color c : domain[static_cast<std::size_t>(peg)]) {
        cur[peg] = c;
        self(self, peg + 1);
      }
    };
    rec(rec, 0);

    if (found.size() != 1) {
      trace_.steps.push_back({-1, -1, rule::kContradiction,
                              std::to_string(found.size()) + " of " + std::to_string(tried) +
                                  " endgame candidates fit the answers"});
      return false;
    }
    for (int peg = 0; peg < p; ++peg) trace_.resolved[static_cast<std::size_t>(peg)] = found.front()[peg];
    trace_.steps.push_back({-1, -1, rule::kEndgame,
                            std::to_string(tried) + " candidates over the base colors; only " +
                                found.front().to_string() + " fits"});
    return true;
  }

  StructuredDecode fail() {
    StructuredDecode out;
    out.status = DecodeStatus::Inconsistent;
    out.trace = std::move(trace_);
    return out;
  }

  const Strategy& strategy_;
  const GameSpec& spec_;
  const AnswerSignature& sig_;
  BlockPlan plan_;
  std::vector<int> block_questions_;
  DecodeTrace trace_;
};

}  // namespace

StructuredDecode structured_decode(const Strategy& strategy, const AnswerSignature& sig) {
  const auto& spec = strategy.spec();
  if (strategy.provenance() != Provenance::Generated)
    throw UnsupportedError("structured decoding needs a generated strategy; use decode() instead");
  if (spec.variant != Variant::AB || (spec.pegs != 2 && spec.pegs != 3))
    throw UnsupportedError("structured decoding supports AB strategies with p in {2, 3}");
  require_signature(strategy, sig);
  return StructuredDecoder(strategy, sig).run();
}

}  // namespace abgame
