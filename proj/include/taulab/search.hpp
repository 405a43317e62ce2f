#pragma once

// Shared search plumbing: error types, evaluation budgets, and the canonical
// candidate orderings used by every complete witness search in this project.
// All searches enumerate candidates in a fixed order and return the first
// success, so "lexicographically least witness" is a property of these
// orderings.

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taulab {

// Raised for malformed inputs and violated operation preconditions.
// Distinct from "search completed, no witness" (reported via empty optional).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchCapExceeded : std::runtime_error {
  std::uint64_t evaluated;
  explicit SearchCapExceeded(std::uint64_t n)
      : std::runtime_error("search cap exceeded after " + std::to_string(n) +
                           " candidate evaluations"),
        evaluated(n) {}
};

// Raised by the diagram engine when a cell is derived both ways.
struct EngineContradiction : std::runtime_error {
  std::string implies_trace;
  std::string not_implies_trace;
  EngineContradiction(const std::string& what, std::string imp, std::string nimp)
      : std::runtime_error(what),
        implies_trace(std::move(imp)),
        not_implies_trace(std::move(nimp)) {}
};

// Counts candidate evaluations across a (possibly parallel) search and aborts
// once the cap is exceeded. Thread-safe.
class SearchBudget {
 public:
  static constexpr std::uint64_t kDefaultCap = 10'000'000;

  explicit SearchBudget(std::uint64_t cap = kDefaultCap) : cap_(cap) {}
  SearchBudget(const SearchBudget&) = delete;
  SearchBudget& operator=(const SearchBudget&) = delete;

  void tick(std::uint64_t n = 1) {
    const std::uint64_t now = used_.fetch_add(n, std::memory_order_relaxed) + n;
    if (now > cap_) throw SearchCapExceeded(now);
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

template <typename T>
struct SearchOutcome {
  std::optional<T> witness;
  bool space_warning = false;   // theoretical candidate space exceeded the cap
  std::uint64_t evaluated = 0;  // candidate evaluations actually performed
};

// All subsets of {0,..,n-1} with at most w elements, ordered by size and then
// lexicographically by elements. This is the canonical window / index-set
// order: {}, {0}, {1}, .., {n-1}, {0,1}, {0,2}, ..
std::vector<std::vector<int>> bounded_subsets(int n, int w);

// Worker count for partitioned searches; reads TAULAB_WORKERS, defaults to 1.
int worker_count();

}  // namespace taulab
