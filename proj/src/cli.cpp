#include "abgame/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "abgame/io.hpp"

namespace abgame::cli {

namespace {

struct Options {
  int pegs = 0;
  int colors = 0;
  std::string variant = "ab";
  std::string format = "table";
  std::string input;
  std::string output;
  std::string answers;
  bool explain = false;
  int max_k = 64;
  std::uint64_t budget = 0;
  int workers = 1;
  bool paranoid = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ContractError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ContractError(std::string(kBudgetEnv) + " must be a non-negative integer, got '" + env + "'");
    }
  }
  return SearchOptions{}.max_nodes;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const GameSpec spec{parse_variant(o.variant), o.pegs, o.colors};
  const auto format = parse_format(o.format);
  spec.validate();
  const auto text = write_strategy(build_strategy(spec), format);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw ContractError("cannot write '" + o.output + "'");
    f << text;
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto strategy = read_strategy(read_file(o.input));
  const auto collision = find_collision(strategy);
  if (parse_format(o.format) == Format::Json) {
    Json j;
    j["feasible"] = !collision;
    j["k"] = strategy.k();
    if (collision)
      j["collision"] = Json::array({Json(std::vector<Color>(collision->first.colors().begin(), collision->first.colors().end())),
                                    Json(std::vector<Color>(collision->second.colors().begin(), collision->second.colors().end()))});
    out << j.dump(2) << '\n';
  } else if (collision) {
    out << "infeasible; collision " << collision->first.to_string() << " vs " << collision->second.to_string() << '\n';
  } else {
    out << "feasible\n";
  }
  return collision ? kDomainFailure : kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const auto strategy = read_strategy(read_file(o.input));
  const auto sig = parse_signature(o.answers);
  const auto result = decode(strategy, sig);
  const bool json = parse_format(o.format) == Format::Json;

  std::optional<StructuredDecode> structured;
  const bool structured_ok = strategy.provenance() == Provenance::Generated &&
                             strategy.spec().variant == Variant::AB &&
                             (strategy.spec().pegs == 2 || strategy.spec().pegs == 3);
  if (o.explain && structured_ok) structured = structured_decode(strategy, sig);

  if (json) {
    Json j = decode_to_json(result);
    if (structured) j["trace"] = trace_to_json(structured->trace);
    out << j.dump(2) << '\n';
  } else {
    if (o.explain) {
      if (structured)
        out << structured->trace.to_string();
      else
        out << "structured decoding needs a generated AB strategy with 2 or 3 pegs; filtered all secrets instead\n";
    }
    switch (result.status) {
      case DecodeStatus::Unique: out << result.secret->to_string() << '\n'; break;
      case DecodeStatus::Inconsistent: out << "inconsistent: no secret produces these answers\n"; break;
      case DecodeStatus::Ambiguous:
        out << "ambiguous: " << result.candidate_count << " secrets fit:";
        for (const auto& s : result.candidates) out << ' ' << s.to_string();
        if (result.candidate_count > result.candidates.size()) out << " ...";
        out << '\n';
        break;
    }
  }
  return result.status == DecodeStatus::Unique ? kOk : kDomainFailure;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const auto strategy = read_strategy(read_file(o.input));
  const auto report = audit(strategy);
  out << audit_to_json(report).dump(2) << '\n';
  return report.violations.empty() ? kOk : kDomainFailure;
}

int cmd_search(const Options& o, std::ostream& out) {
  const GameSpec spec{parse_variant(o.variant), o.pegs, o.colors};
  spec.validate();
  SearchOptions opts = o.paranoid ? SearchOptions::paranoid() : SearchOptions{};
  opts.max_nodes = o.budget ? o.budget : default_budget();
  opts.workers = o.workers;
  const auto report = min_k(spec, opts, o.max_k);
  out << search_to_json(report).dump(2) << '\n';
  return report.min_k >= 0 && !report.budget_exhausted ? kOk : kDomainFailure;
}

int cmd_play(const Options& o, std::istream& in, std::ostream& out) {
  const auto strategy = build_strategy(GameSpec{Variant::AB, o.pegs, o.colors});
  out << "Answer each question with its number of black pegs, all on one line, comma-separated.\n";
  for (int j = 0; j < strategy.k(); ++j) out << "Q" << j + 1 << ": " << strategy[j].to_string() << '\n';
  std::string line;
  if (!std::getline(in, line)) throw ContractError("no answers given");
  const auto result = decode(strategy, parse_signature(line));
  if (result.status == DecodeStatus::Unique) {
    out << "Final guess: " << result.secret->to_string() << '\n';
    return kOk;
  }
  out << "Inconsistent answers: no secret produces them\n";
  return kDomainFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Static black-peg AB game / Mastermind strategy toolkit", "abgame"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Print the generated strategy for p pegs and c colors");
  generate->add_option("--pegs", o.pegs, "Number of pegs (1-3)")->required();
  generate->add_option("--colors", o.colors, "Number of colors")->required();
  generate->add_option("--variant", o.variant, "Game variant")->check(CLI::IsMember({"ab"}));
  generate->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  generate->add_option("-o,--output", o.output, "Write to FILE instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check that a strategy identifies every secret");
  verify->add_option("-i,--input", o.input, "Strategy file (JSON or table)")->required();
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* dec = app.add_subcommand("decode", "Recover the secret from a list of answers");
  dec->add_option("-i,--input", o.input, "Strategy file (JSON or table)")->required();
  dec->add_option("--answers", o.answers, "Comma-separated black-peg counts in question order")->required();
  dec->add_flag("--explain", o.explain, "Print the neighbor-question reasoning");
  dec->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* aud = app.add_subcommand("audit", "Report question classes and necessary-condition violations");
  aud->add_option("-i,--input", o.input, "Strategy file (JSON or table)")->required();

  auto* search = app.add_subcommand("search", "Find the minimum number of questions by exhaustive search");
  search->add_option("--pegs", o.pegs, "Number of pegs")->required();
  search->add_option("--colors", o.colors, "Number of colors")->required();
  search->add_option("--variant", o.variant, "ab or mm (Mastermind)")->check(CLI::IsMember({"ab", "mm", "mastermind"}));
  search->add_option("--max-k", o.max_k, "Largest size to try")->check(CLI::NonNegativeNumber);
  search->add_option("--budget", o.budget, std::string("Node budget (default: $") + kBudgetEnv + " or 1e8)");
  search->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--paranoid", o.paranoid, "Disable symmetry breaking and pruning");

  auto* play = app.add_subcommand("play", "Ask every question, read all answers, print the final guess");
  play->add_option("--pegs", o.pegs, "Number of pegs (1-3)")->required();
  play->add_option("--colors", o.colors, "Number of colors")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (dec->parsed()) return cmd_decode(o, out);
    if (aud->parsed()) return cmd_audit(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (play->parsed()) return cmd_play(o, in, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace abgame::cli
