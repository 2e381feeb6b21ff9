#include "abgame/game.hpp"

#include <charconv>
#include <limits>

namespace abgame {

namespace {

// Refuse to materialize secret spaces that would not fit comfortably in memory.
constexpr std::uint64_t kMaxEnumeratedSecrets = 50'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view context) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ContractError("malformed " + std::string(context) + ": '" + std::string(token) + "'");
  return value;
}

}  // namespace

std::string_view to_string(Variant v) {
  return v == Variant::AB ? "ab" : "mastermind";
}

Variant parse_variant(std::string_view text) {
  if (text == "ab" || text == "AB") return Variant::AB;
  if (text == "mm" || text == "mastermind" || text == "Mastermind") return Variant::Mastermind;
  throw ContractError("unknown variant '" + std::string(text) + "' (expected ab or mastermind)");
}

void GameSpec::validate() const {
  if (pegs < 1 || pegs > kMaxPegs)
    throw InvalidSpecError("peg count must be in 1.." + std::to_string(kMaxPegs) + ", got " +
                           std::to_string(pegs));
  if (colors < 1 || colors > kMaxColors)
    throw InvalidSpecError("color count must be in 1.." + std::to_string(kMaxColors) + ", got " +
                           std::to_string(colors));
  if (variant == Variant::AB && colors < pegs)
    throw InvalidSpecError("AB game needs at least as many colors as pegs (p=" + std::to_string(pegs) +
                           ", c=" + std::to_string(colors) + ")");
}

std::uint64_t GameSpec::secret_count() const {
  validate();
  std::uint64_t n = 1;
  for (int i = 0; i < pegs; ++i) {
    std::uint64_t factor = variant == Variant::AB ? static_cast<std::uint64_t>(colors - i)
                                                  : static_cast<std::uint64_t>(colors);
    if (n > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
    n *= factor;
  }
  return n;
}

GameSpec ab_spec(int pegs, int colors) {
  GameSpec s{Variant::AB, pegs, colors};
  s.validate();
  return s;
}

GameSpec mastermind_spec(int pegs, int colors) {
  GameSpec s{Variant::Mastermind, pegs, colors};
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------

Code::Code(std::initializer_list<int> colors) : Code(std::span<const int>(colors.begin(), colors.size())) {}

Code::Code(std::span<const int> colors) {
  if (colors.size() > static_cast<std::size_t>(kMaxPegs))
    throw ContractError("code has more than " + std::to_string(kMaxPegs) + " pegs");
  for (int c : colors) {
    if (c < 0 || c > std::numeric_limits<Color>::max()) throw ContractError("color out of range: " + std::to_string(c));
    push_back(static_cast<Color>(c));
  }
}

void Code::push_back(Color c) {
  if (size_ >= kMaxPegs) throw ContractError("code has more than " + std::to_string(kMaxPegs) + " pegs");
  colors_[size_++] = c;
}

bool Code::has_distinct_colors() const {
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (colors_[i] == colors_[j]) return false;
  return true;
}

std::string Code::to_string() const {
  std::string out = "(";
  for (int i = 0; i < size_; ++i) {
    if (i) out += '|';
    out += std::to_string(colors_[i]);
  }
  out += ')';
  return out;
}

std::strong_ordering operator<=>(const Code& a, const Code& b) {
  if (auto cmp = a.size_ <=> b.size_; cmp != 0) return cmp;
  for (int i = 0; i < a.size_; ++i)
    if (auto cmp = a.colors_[i] <=> b.colors_[i]; cmp != 0) return cmp;
  return std::strong_ordering::equal;
}

Code parse_code(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ContractError("malformed code: '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  char sep = text.find('|') != std::string_view::npos ? '|' : ',';
  Code code;
  while (true) {
    auto pos = text.find(sep);
    int v = parse_int(text.substr(0, pos), "code");
    if (v < 1 || v > kMaxColors) throw ContractError("color out of range in code: " + std::to_string(v));
    code.push_back(static_cast<Color>(v));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return code;
}

bool is_valid_code(const GameSpec& spec, const Code& code) {
  if (code.size() != spec.pegs) return false;
  for (Color c : code.colors())
    if (c < 1 || c > spec.colors) return false;
  return spec.variant != Variant::AB || code.has_distinct_colors();
}

void require_valid_code(const GameSpec& spec, const Code& code, std::string_view what) {
  if (!is_valid_code(spec, code))
    throw ContractError(std::string(what) + " " + code.to_string() + " is not valid for " +
                        std::string(to_string(spec.variant)) + " p=" + std::to_string(spec.pegs) +
                        " c=" + std::to_string(spec.colors));
}

int black_pegs(const Code& question, const Code& secret) {
  if (question.size() != secret.size())
    throw ContractError("peg count mismatch: " + question.to_string() + " vs " + secret.to_string());
  int n = 0;
  for (int i = 0; i < question.size(); ++i) n += question[i] == secret[i];
  return n;
}

std::vector<Secret> enumerate_secrets(const GameSpec& spec) {
  const std::uint64_t count = spec.secret_count();
  if (count > kMaxEnumeratedSecrets)
    throw ContractError("secret space too large to enumerate (" + std::to_string(count) + " secrets)");

  std::vector<Secret> out;
  out.reserve(static_cast<std::size_t>(count));
  const bool distinct = spec.variant == Variant::AB;
  Code cur;
  for (int i = 0; i < spec.pegs; ++i) cur.push_back(0);
  std::vector<bool> used(static_cast<std::size_t>(spec.colors) + 1, false);

  // Odometer in lexicographic order, skipping colors already used for AB.
  auto fill = [&](auto&& self, int peg) -> void {
    if (peg == spec.pegs) {
      out.push_back(cur);
      return;
    }
    for (int c = 1; c <= spec.colors; ++c) {
      if (distinct && used[static_cast<std::size_t>(c)]) continue;
      cur[peg] = static_cast<Color>(c);
      used[static_cast<std::size_t>(c)] = true;
      self(self, peg + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  fill(fill, 0);
  return out;
}

// ---------------------------------------------------------------------------

std::string AnswerSignature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(answers[i]);
  }
  return out;
}

AnswerSignature parse_signature(std::string_view text) {
  AnswerSignature sig;
  text = trim(text);
  if (text.empty()) return sig;
  while (true) {
    auto pos = text.find(',');
    int v = parse_int(text.substr(0, pos), "answer list");
    if (v < 0 || v > kMaxPegs) throw ContractError("answer out of range: " + std::to_string(v));
    sig.answers.push_back(static_cast<std::uint8_t>(v));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return sig;
}

AnswerSignature signature_of(std::span<const Question> questions, const Secret& secret) {
  AnswerSignature sig;
  sig.answers.reserve(questions.size());
  for (const auto& q : questions) sig.answers.push_back(static_cast<std::uint8_t>(black_pegs(q, secret)));
  return sig;
}

}  // namespace abgame
