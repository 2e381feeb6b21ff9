#include "abgame/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace abgame {

SearchOptions SearchOptions::paranoid() {
  SearchOptions o;
  o.symmetry_breaking = false;
  o.pruning = false;
  return o;
}

std::string_view to_string(SizeOutcome outcome) {
  switch (outcome) {
    case SizeOutcome::Found: return "found";
    case SizeOutcome::Refuted: return "refuted";
    case SizeOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "refuted";
}

namespace {

using Clock = std::chrono::steady_clock;
using ClassId = std::uint32_t;

// Shared, read-only description of one search instance.
struct Instance {
  GameSpec spec;
  int k = 0;
  SearchOptions options;
  std::vector<Code> codes;                      // questions == secrets, lexicographic
  std::vector<std::vector<std::uint8_t>> answers;  // answers[q][s]
  std::vector<std::uint64_t> class_limit;       // (p+1)^r, saturating
  Clock::time_point deadline;

  std::size_t n() const { return codes.size(); }
};

// Budget shared by all workers of one size query.
struct Budget {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
};

// Partition of the secrets by their answers to the chosen questions.
struct Partition {
  std::vector<ClassId> cls;
  ClassId classes = 1;
  std::uint32_t largest = 0;
};

class Explorer {
 public:
  Explorer(const Instance& inst, Budget& budget, const std::atomic<std::size_t>* cancel_above, std::size_t task)
      : inst_(inst), budget_(budget), cancel_above_(cancel_above), task_(task) {
    levels_.resize(static_cast<std::size_t>(inst.k) + 1);
    for (auto& l : levels_) l.cls.resize(inst.n());
    remap_.assign(inst.n() * static_cast<std::size_t>(inst.spec.pegs + 1), kUnset);
    sizes_.assign(inst.n(), 0);
    chosen_.reserve(static_cast<std::size_t>(inst.k));
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& chosen() const { return chosen_; }

  // Whether `q` extends the color labeling in first-appearance order.
  static bool extends_labeling(const Code& q, int max_color, int* new_max) {
    int m = max_color;
    for (Color c : q.colors()) {
      if (c <= m) continue;
      if (c != m + 1) return false;
      m = c;
    }
    *new_max = m;
    return true;
  }

  // Refines levels_[depth] by question q into levels_[depth+1].
  void refine(int depth, int q) {
    const auto& from = levels_[static_cast<std::size_t>(depth)];
    auto& to = levels_[static_cast<std::size_t>(depth) + 1];
    const auto& row = inst_.answers[static_cast<std::size_t>(q)];
    const std::size_t width = static_cast<std::size_t>(inst_.spec.pegs) + 1;
    ClassId next = 0;
    std::uint32_t largest = 0;
    touched_.clear();
    for (std::size_t s = 0; s < inst_.n(); ++s) {
      const std::size_t key = from.cls[s] * width + row[s];
      ClassId& id = remap_[key];
      if (id == kUnset) {
        id = next++;
        touched_.push_back(key);
        sizes_[id] = 0;
      }
      to.cls[s] = id;
      largest = std::max(largest, ++sizes_[id]);
    }
    for (auto key : touched_) remap_[key] = kUnset;
    to.classes = next;
    to.largest = largest;
  }

  bool admissible(int depth) const {
    const auto& part = levels_[static_cast<std::size_t>(depth)];
    const int remaining = inst_.k - depth;
    if (inst_.options.pruning) return part.largest <= inst_.class_limit[static_cast<std::size_t>(remaining)];
    return true;
  }

  bool complete(int depth) const { return levels_[static_cast<std::size_t>(depth)].largest <= 1; }

  // Counts one node; false when the budget ran out or the task was cancelled.
  bool tick() {
    ++nodes_;
    const auto total = budget_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > inst_.options.max_nodes) budget_.exhausted = true;
    if ((nodes_ & 0xfff) == 0 && Clock::now() > inst_.deadline) budget_.exhausted = true;
    if (budget_.exhausted.load(std::memory_order_relaxed)) return false;
    if (cancel_above_ && cancel_above_->load(std::memory_order_relaxed) < task_) return false;
    return true;
  }

  void start(std::span<const int> prefix) {
    auto& root = levels_[0];
    std::fill(root.cls.begin(), root.cls.end(), 0);
    root.classes = 1;
    root.largest = static_cast<std::uint32_t>(inst_.n());
    chosen_.clear();
    max_color_ = 0;
    for (int q : prefix) {
      const int depth = static_cast<int>(chosen_.size());
      int m = max_color_;
      extends_labeling(inst_.codes[static_cast<std::size_t>(q)], max_color_, &m);
      max_color_ = m;
      refine(depth, q);
      chosen_.push_back(q);
    }
  }

  // Depth-first search below the current prefix. True iff a witness was found
  // (left in chosen_).
  bool dfs() {
    const int depth = static_cast<int>(chosen_.size());
    if (depth == inst_.k) return complete(depth);
    const int first = chosen_.empty() ? 0 : chosen_.back() + 1;
    const int last = static_cast<int>(inst_.n()) - (inst_.k - depth);  // leave room for the rest
    for (int q = first; q <= last; ++q) {
      int m = max_color_;
      if (inst_.options.symmetry_breaking &&
          !extends_labeling(inst_.codes[static_cast<std::size_t>(q)], max_color_, &m))
        continue;
      if (!tick()) {
        aborted_ = true;
        return false;
      }
      refine(depth, q);
      if (!admissible(depth + 1)) continue;
      const int saved = max_color_;
      max_color_ = m;
      chosen_.push_back(q);
      if (dfs()) return true;
      chosen_.pop_back();
      max_color_ = saved;
      if (aborted_) return false;
    }
    return false;
  }

  bool aborted() const { return aborted_; }

 private:
  static constexpr ClassId kUnset = std::numeric_limits<ClassId>::max();

  const Instance& inst_;
  Budget& budget_;
  const std::atomic<std::size_t>* cancel_above_;
  std::size_t task_;
  std::vector<Partition> levels_;
  std::vector<ClassId> remap_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::size_t> touched_;
  std::vector<int> chosen_;
  int max_color_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

Instance make_instance(const GameSpec& spec, int k, const SearchOptions& options) {
  Instance inst;
  inst.spec = spec;
  inst.k = k;
  inst.options = options;
  inst.codes = enumerate_secrets(spec);
  inst.answers.resize(inst.n(), std::vector<std::uint8_t>(inst.n()));
  for (std::size_t q = 0; q < inst.n(); ++q)
    for (std::size_t s = 0; s < inst.n(); ++s)
      inst.answers[q][s] = static_cast<std::uint8_t>(black_pegs(inst.codes[q], inst.codes[s]));
  const std::uint64_t base = static_cast<std::uint64_t>(spec.pegs) + 1;
  std::uint64_t limit = 1;
  for (int r = 0; r <= k; ++r) {
    inst.class_limit.push_back(limit);
    limit = limit > std::numeric_limits<std::uint64_t>::max() / base ? std::numeric_limits<std::uint64_t>::max()
                                                                       : limit * base;
  }
  inst.deadline = Clock::now() + options.max_time;
  return inst;
}

Strategy witness_from(const Instance& inst, const std::vector<int>& chosen) {
  std::vector<Question> qs;
  for (int q : chosen) qs.push_back(inst.codes[static_cast<std::size_t>(q)]);
  return Strategy(inst.spec, std::move(qs), Provenance::SearchWitness);
}

}  // namespace

SizeResult exists_strategy_of_size(const GameSpec& spec, int k, const SearchOptions& options) {
  spec.validate();
  if (k < 0) throw ContractError("strategy size must be non-negative");
  const Instance inst = make_instance(spec, k, options);
  SizeResult result;
  if (k > static_cast<int>(inst.n())) {
    result.outcome = SizeOutcome::Refuted;
    return result;
  }

  // Enumerate the prefixes at the split depth in search order. This happens
  // identically for any worker count, so node counts are reproducible.
  Budget budget;
  const int split = std::min(k, 2);
  std::vector<std::vector<int>> tasks;
  {
    Explorer gen(inst, budget, nullptr, 0);
    gen.start({});
    std::vector<int> prefix;
    auto collect = [&](auto&& self, int depth, int first, int max_color) -> bool {
      if (depth == split) {
        tasks.push_back(prefix);
        return true;
      }
      const int last = static_cast<int>(inst.n()) - (k - depth);
      for (int q = first; q <= last; ++q) {
        int m = max_color;
        if (options.symmetry_breaking && !Explorer::extends_labeling(inst.codes[static_cast<std::size_t>(q)], max_color, &m))
          continue;
        if (!gen.tick()) return false;
        gen.refine(depth, q);
        if (!gen.admissible(depth + 1)) continue;
        prefix.push_back(q);
        if (!self(self, depth + 1, q + 1, m)) return false;
        prefix.pop_back();
      }
      return true;
    };
    collect(collect, 0, 0, 0);
    result.nodes = gen.nodes();
  }
  if (budget.exhausted) {
    result.outcome = SizeOutcome::BudgetExhausted;
    return result;
  }

  struct TaskResult {
    bool done = false;
    bool found = false;
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || budget.exhausted) return;
      if (t > best.load()) return;
      Explorer ex(inst, budget, &best, t);
      ex.start(tasks[t]);
      const bool found = ex.dfs();
      auto& r = results[t];
      r.nodes = ex.nodes();
      r.found = found;
      r.done = !ex.aborted();
      if (found) {
        r.chosen = ex.chosen();
        std::size_t cur = best.load();
        while (t < cur && !best.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  const std::size_t winner = best.load();
  const std::size_t counted = winner == std::numeric_limits<std::size_t>::max() ? tasks.size() : winner + 1;
  bool all_done = true;
  for (std::size_t t = 0; t < counted; ++t) {
    result.nodes += results[t].nodes;
    all_done &= results[t].done || results[t].found;
  }
  if (winner != std::numeric_limits<std::size_t>::max() && all_done) {
    result.outcome = SizeOutcome::Found;
    result.witness = witness_from(inst, results[winner].chosen);
  } else if (all_done && !budget.exhausted) {
    result.outcome = SizeOutcome::Refuted;
  } else {
    result.outcome = SizeOutcome::BudgetExhausted;
  }
  return result;
}

SearchReport min_k(const GameSpec& spec, const SearchOptions& options, int max_k) {
  spec.validate();
  const auto started = Clock::now();
  SearchReport report;
  report.spec = spec;
  for (int k = 0; k <= max_k; ++k) {
    SearchOptions remaining = options;
    const auto spent = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - started);
    remaining.max_time = options.max_time > spent ? options.max_time - spent : std::chrono::seconds(0);
    remaining.max_nodes = options.max_nodes > report.nodes_explored ? options.max_nodes - report.nodes_explored : 0;

    auto r = exists_strategy_of_size(spec, k, remaining);
    report.nodes_explored += r.nodes;
    if (r.outcome == SizeOutcome::Found) {
      report.min_k = k;
      report.witness = std::move(r.witness);
      break;
    }
    if (r.outcome == SizeOutcome::BudgetExhausted) {
      report.budget_exhausted = true;
      break;
    }
    report.infeasible_sizes_checked.push_back(k);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
  return report;
}

SearchReport metric_dimension_hamming(int pegs, int colors, const SearchOptions& options) {
  return min_k(mastermind_spec(pegs, colors), options);
}

}  // namespace abgame
