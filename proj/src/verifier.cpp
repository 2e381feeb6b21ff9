#include "abgame/verifier.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

namespace abgame {

namespace {

// Signatures of all secrets packed row-major, one byte per answer, plus the
// secret indices sorted by (signature, secret).
struct SignatureTable {
  std::vector<Secret> secrets;
  std::vector<std::uint8_t> bytes;
  std::vector<std::uint32_t> order;
  std::size_t k = 0;

  const std::uint8_t* row(std::uint32_t i) const { return bytes.data() + static_cast<std::size_t>(i) * k; }
  bool same(std::uint32_t a, std::uint32_t b) const { return k == 0 || std::memcmp(row(a), row(b), k) == 0; }
};

SignatureTable sorted_signatures(const Strategy& strategy) {
  SignatureTable t;
  t.secrets = enumerate_secrets(strategy.spec());
  t.k = static_cast<std::size_t>(strategy.k());
  t.bytes.resize(t.secrets.size() * t.k);
  const auto questions = strategy.questions();
  for (std::size_t s = 0; s < t.secrets.size(); ++s)
    for (std::size_t j = 0; j < t.k; ++j)
      t.bytes[s * t.k + j] = static_cast<std::uint8_t>(black_pegs(questions[j], t.secrets[s]));
  t.order.resize(t.secrets.size());
  std::iota(t.order.begin(), t.order.end(), 0u);
  std::sort(t.order.begin(), t.order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (t.k != 0) {
      int cmp = std::memcmp(t.row(a), t.row(b), t.k);
      if (cmp != 0) return cmp < 0;
    }
    return a < b;
  });
  return t;
}

// occurrences[peg][color] across the strategy.
std::vector<std::vector<int>> occurrence_table(const Strategy& strategy) {
  const auto& spec = strategy.spec();
  std::vector<std::vector<int>> occ(static_cast<std::size_t>(spec.pegs),
                                    std::vector<int>(static_cast<std::size_t>(spec.colors) + 1, 0));
  for (const auto& q : strategy.questions())
    for (int i = 0; i < spec.pegs; ++i) ++occ[static_cast<std::size_t>(i)][q[i]];
  return occ;
}

std::string question_label(const Strategy& s, int index) {
  return "Q" + std::to_string(index + 1) + "=" + s[index].to_string();
}

}  // namespace

bool is_feasible(const Strategy& strategy) {
  const auto t = sorted_signatures(strategy);
  for (std::size_t i = 1; i < t.order.size(); ++i)
    if (t.same(t.order[i - 1], t.order[i])) return false;
  return true;
}

std::optional<std::pair<Secret, Secret>> find_collision(const Strategy& strategy) {
  const auto t = sorted_signatures(strategy);
  std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
  // Within a run of equal signatures the indices are ascending, so the run's
  // first two entries form its smallest pair.
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    if (!t.same(t.order[i - 1], t.order[i])) continue;
    if (i >= 2 && t.same(t.order[i - 2], t.order[i - 1])) continue;
    std::pair<std::uint32_t, std::uint32_t> cand{t.order[i - 1], t.order[i]};
    if (!best || cand < *best) best = cand;
  }
  if (!best) return std::nullopt;
  return std::make_pair(t.secrets[best->first], t.secrets[best->second]);
}

// ---------------------------------------------------------------------------

std::string QuestionClass::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out + ")";
}

QuestionClass classify_question(const Strategy& strategy, int index) {
  if (index < 0 || index >= strategy.k())
    throw ContractError("question index " + std::to_string(index) + " out of range 0.." +
                        std::to_string(strategy.k() - 1));
  const Question& q = strategy[index];
  QuestionClass cls;
  cls.counts.assign(static_cast<std::size_t>(q.size()), 0);
  for (const auto& other : strategy.questions())
    for (int i = 0; i < q.size(); ++i) cls.counts[static_cast<std::size_t>(i)] += other[i] == q[i];
  return cls;
}

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Disjoint: return "disjoint";
    case RelationKind::Neighboring: return "neighboring";
    case RelationKind::DoubleNeighboring: return "double-neighboring";
    case RelationKind::Neither: return "neither";
  }
  return "neither";
}

Relation relation(const Question& a, const Question& b) {
  if (a.size() != b.size()) throw ContractError("relation between codes of different peg counts");
  Relation r;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) r.overlap.push_back(i + 1);
  if (r.overlap.size() >= 2) {
    r.kind = RelationKind::DoubleNeighboring;
  } else if (r.overlap.size() == 1) {
    r.kind = RelationKind::Neighboring;
  } else {
    bool shared = false;
    for (Color x : a.colors())
      for (Color y : b.colors()) shared |= x == y;
    r.kind = shared ? RelationKind::Neither : RelationKind::Disjoint;
  }
  return r;
}

bool disjoint_in_pegs(const Question& a, const Question& b, std::span<const int> pegs) {
  for (int i : pegs)
    for (int j : pegs) {
      if (i < 1 || i > a.size() || j < 1 || j > b.size()) throw ContractError("peg index out of range");
      if (a[i - 1] == b[j - 1]) return false;
    }
  return true;
}

std::vector<Color> missing_colors(const Strategy& strategy, int peg) {
  const auto& spec = strategy.spec();
  if (peg < 1 || peg > spec.pegs) throw ContractError("peg " + std::to_string(peg) + " out of range");
  std::vector<bool> seen(static_cast<std::size_t>(spec.colors) + 1, false);
  for (const auto& q : strategy.questions()) seen[q[peg - 1]] = true;
  std::vector<Color> out;
  for (int c = 1; c <= spec.colors; ++c)
    if (!seen[static_cast<std::size_t>(c)]) out.push_back(static_cast<Color>(c));
  return out;
}

// ---------------------------------------------------------------------------

bool AuditReport::has_violation(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

namespace {

void audit_two_pegs(const Strategy& s, const std::vector<QuestionClass>& classes, AuditReport& r) {
  std::vector<int> singles;  // (1,1)-questions
  for (int j = 0; j < s.k(); ++j)
    if (classes[static_cast<std::size_t>(j)].counts == std::vector<int>{1, 1}) singles.push_back(j);
  r.m = static_cast<int>(singles.size());
  r.lower_bound = r.l[0] + r.l[1] - r.m;

  const int c = s.spec().colors;
  if (c >= 3) {
    for (int peg = 0; peg < 2; ++peg)
      if (r.missing[static_cast<std::size_t>(peg)].size() >= 2)
        r.violations.push_back({"L1a", "peg " + std::to_string(peg + 1) + " misses " +
                                           std::to_string(r.missing[static_cast<std::size_t>(peg)].size()) +
                                           " colors (at most one allowed)"});
  } else {
    r.notes.push_back("L1a not applicable: needs c >= 3");
  }

  for (std::size_t a = 0; a < singles.size(); ++a)
    for (std::size_t b = a + 1; b < singles.size(); ++b)
      if (relation(s[singles[a]], s[singles[b]]).kind == RelationKind::Disjoint)
        r.violations.push_back({"L1b", "disjoint (1,1)-questions " + question_label(s, singles[a]) + " and " +
                                           question_label(s, singles[b])});

  if (r.m >= 3 && !r.missing[0].empty() && !r.missing[1].empty())
    r.violations.push_back({"L1d", std::to_string(r.m) + " (1,1)-questions while both pegs miss a color"});
  if (r.m >= 4) r.violations.push_back({"L1e", std::to_string(r.m) + " (1,1)-questions (at most three allowed)"});
}

void audit_three_pegs(const Strategy& s, const std::vector<QuestionClass>& classes, AuditReport& r) {
  int single_pairs_total = 0;  // questions with count 1 on at least two pegs
  for (const auto& cls : classes) {
    int ones = static_cast<int>(std::count(cls.counts.begin(), cls.counts.end(), 1));
    if (ones == 3) ++r.e;
    if (ones == 2) ++r.f;
    if (ones >= 2) ++single_pairs_total;
  }
  r.lower_bound = r.l[0] + r.l[1] + r.l[2] - 2 * r.e - r.f;

  if (s.spec().colors < 5) {
    r.notes.push_back("three-peg lemma checks not applicable: they need c >= 5");
    return;
  }

  int pegs_missing = 0;
  for (int peg = 0; peg < 3; ++peg) {
    const auto& miss = r.missing[static_cast<std::size_t>(peg)];
    if (!miss.empty()) ++pegs_missing;
    if (miss.size() >= 2)
      r.violations.push_back({"L2a", "peg " + std::to_string(peg + 1) + " misses " + std::to_string(miss.size()) +
                                         " colors (at most one allowed)"});
  }

  constexpr std::array<std::array<int, 2>, 3> kPairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& pair : kPairs) {
    const std::string tag = "pegs " + std::to_string(pair[0]) + "," + std::to_string(pair[1]);
    std::vector<int> members;  // (1,1,*)-questions with respect to this pair
    for (int j = 0; j < s.k(); ++j) {
      const auto& cnt = classes[static_cast<std::size_t>(j)].counts;
      if (cnt[static_cast<std::size_t>(pair[0] - 1)] == 1 && cnt[static_cast<std::size_t>(pair[1] - 1)] == 1)
        members.push_back(j);
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (disjoint_in_pegs(s[members[a]], s[members[b]], pair))
          r.violations.push_back({"L2b", "(1,1,*)-questions " + question_label(s, members[a]) + " and " +
                                             question_label(s, members[b]) + " are disjoint in " + tag});
    if (members.size() >= 3 && !r.missing[static_cast<std::size_t>(pair[0] - 1)].empty() &&
        !r.missing[static_cast<std::size_t>(pair[1] - 1)].empty())
      r.violations.push_back({"L2d", std::to_string(members.size()) + " (1,1,*)-questions on " + tag +
                                         " while both pegs miss a color"});
    if (members.size() >= 4)
      r.violations.push_back(
          {"L2e", std::to_string(members.size()) + " (1,1,*)-questions on " + tag + " (at most three allowed)"});
  }

  if (r.e >= 3) r.violations.push_back({"L3b", std::to_string(r.e) + " (1,1,1)-questions (at most two allowed)"});
  if (r.e >= 2 && single_pairs_total >= 3)
    r.violations.push_back({"L3a", "two (1,1,1)-questions plus another question with count 1 on two pegs"});
  if (pegs_missing == 3) {
    if (r.e >= 2)
      r.violations.push_back({"L3d", std::to_string(r.e) + " (1,1,1)-questions while every peg misses a color"});
    if (r.e >= 1 && single_pairs_total >= 2)
      r.violations.push_back(
          {"L3c", "a (1,1,1)-question plus another question with count 1 on two pegs while every peg misses a color"});
    if (r.f > 3)
      r.violations.push_back({"L4b", "f=" + std::to_string(r.f) + " > 3 while every peg misses a color"});
  }
  if (r.e >= 1 && r.f > 3)
    r.violations.push_back({"L4a", "f=" + std::to_string(r.f) + " > 3 with a (1,1,1)-question present"});
  if (r.e == 0 && r.f > 6)
    r.violations.push_back({"L5a", "f=" + std::to_string(r.f) + " > 6 without (1,1,1)-questions"});
  if (r.e == 0 && pegs_missing >= 2 && r.f > 5)
    r.violations.push_back(
        {"L5b", "f=" + std::to_string(r.f) + " > 5 without (1,1,1)-questions while two pegs miss a color"});
}

}  // namespace

AuditReport audit(const Strategy& strategy) {
  const auto& spec = strategy.spec();
  if (spec.pegs != 2 && spec.pegs != 3)
    throw UnsupportedError("audit supports p in {2, 3}, got p=" + std::to_string(spec.pegs));

  AuditReport r;
  r.spec = spec;
  r.k = strategy.k();
  const auto occ = occurrence_table(strategy);
  for (int peg = 0; peg < spec.pegs; ++peg) {
    const auto& row = occ[static_cast<std::size_t>(peg)];
    r.l.push_back(static_cast<int>(std::count(row.begin() + 1, row.end(), 1)));
    r.missing.push_back(missing_colors(strategy, peg + 1));
  }
  std::vector<QuestionClass> classes;
  classes.reserve(static_cast<std::size_t>(strategy.k()));
  for (int j = 0; j < strategy.k(); ++j) classes.push_back(classify_question(strategy, j));

  if (spec.variant != Variant::AB) {
    r.notes.push_back("lemma checks apply to the AB game only");
    if (spec.pegs == 2) {
      r.m = static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                           [](const auto& c) { return c.counts == std::vector<int>{1, 1}; }));
      r.lower_bound = r.l[0] + r.l[1] - r.m;
    } else {
      for (const auto& cls : classes) {
        int ones = static_cast<int>(std::count(cls.counts.begin(), cls.counts.end(), 1));
        r.e += ones == 3;
        r.f += ones == 2;
      }
      r.lower_bound = r.l[0] + r.l[1] + r.l[2] - 2 * r.e - r.f;
    }
    return r;
  }

  if (spec.pegs == 2)
    audit_two_pegs(strategy, classes, r);
  else
    audit_three_pegs(strategy, classes, r);
  return r;
}

// ---------------------------------------------------------------------------

Strategy remove_column(const Strategy& strategy, int removed_peg) {
  const auto& spec = strategy.spec();
  if (spec.pegs != 3) throw UnsupportedError("column removal is defined for p=3 strategies");
  if (removed_peg < 1 || removed_peg > 3) throw ContractError("removed peg must be 1, 2 or 3");
  std::vector<Question> induced;
  for (const auto& q : strategy.questions()) {
    Question r;
    for (int i = 0; i < 3; ++i)
      if (i != removed_peg - 1) r.push_back(q[i]);
    if (std::find(induced.begin(), induced.end(), r) == induced.end()) induced.push_back(r);
  }
  return Strategy(GameSpec{spec.variant, 2, spec.colors}, std::move(induced), Provenance::UserSupplied);
}

bool column_removal_feasible(const Strategy& strategy, int removed_peg) {
  return is_feasible(remove_column(strategy, removed_peg));
}

}  // namespace abgame
