#pragma once

// Decision procedures and complete witness searches for the four
// diagonalizability notions on finite binary-array families, plus the
// interval-window builder.
//
// Row quantifiers are finitized by budgets: "infinitely many rows" means at
// least q rows, "all but finitely many rows" means all but at most e rows.
// Column quantifiers come in two modes:
//   tail-exact     — "all but finitely many / infinitely many columns" read
//                    the tail bit (exact under the eventually-constant-row
//                    representation). Pairwise eventual column comparability
//                    is then decided by tails alone, which provably
//                    trivializes the tau-family pair condition.
//   prefix-budget  — conditions are re-read over the bit prefix with a
//                    column exception budget, restoring a nontrivial finite
//                    analogue.

#include <optional>
#include <vector>

#include "taulab/arrays.hpp"
#include "taulab/search.hpp"

namespace taulab {

enum class ColumnMode { TailExact, PrefixBudget };

struct QuantMode {
  int q = 1;       // rows needed for "infinitely many rows"
  int e = 0;       // row exceptions allowed for "all but finitely many rows"
  ColumnMode col_mode = ColumnMode::TailExact;
  int col_exceptions = 0;  // column budget e_m, used by PrefixBudget only

  void validate() const;
};

// Column choice per row. Values range over 0..cols-1 plus the tail column
// (encoded as cols, ordered after the real columns); kUnassigned marks rows
// outside the domain of a partial diagonalizer.
constexpr int kUnassignedRow = -1;

struct Diagonalizer {
  std::vector<int> choice;
  bool total = true;

  std::vector<int> domain() const;
  void validate(int rows, int cols) const;
};

// Per-row finite column windows; entries may include the tail column.
struct WindowSystem {
  std::vector<std::vector<int>> windows;

  void validate(int rows, int cols) const;
};

bool is_gamma_family(const ArrayFamily& fam);

bool is_tau_family(const ArrayFamily& fam, const QuantMode& mode);

// Rows n with "A(n,.) <= B(n,.) for all but finitely many columns" under the
// chosen column mode.
std::vector<int> comparability_set(const BinaryArray& a, const BinaryArray& b,
                                   const QuantMode& mode);

bool is_tau_diagonalized_by(const ArrayFamily& fam, const Diagonalizer& g,
                            const QuantMode& mode);

// Complete search over all total column choices (cols+1 values per row);
// returns the lexicographically least witness. May be partitioned across
// workers; the merged result does not depend on the worker count.
SearchOutcome<Diagonalizer> find_tau_diagonalizer(const ArrayFamily& fam,
                                                  const QuantMode& mode,
                                                  SearchBudget& budget);

bool is_finitely_tau_diagonalized_by(const ArrayFamily& fam, const WindowSystem& win,
                                     const QuantMode& mode);

// Complete search over all window systems with |F_n| <= w. Searched windows
// range over real columns only; tail-column windows are accepted by the
// predicate above but are never proposed by the search, otherwise every
// family of all-tail-1 arrays would admit the trivial all-tails system.
SearchOutcome<WindowSystem> find_finite_tau_diagonalizer(const ArrayFamily& fam,
                                                         const QuantMode& mode, int w,
                                                         SearchBudget& budget);

// Partial variant: the search additionally chooses the domain; quantifiers
// are relativized to it.
SearchOutcome<Diagonalizer> find_semi_tau_diagonalizer(const ArrayFamily& fam,
                                                       const QuantMode& mode,
                                                       SearchBudget& budget);

enum class ODiagVariant {
  Basic,     // every member hits the choice in at least one row
  Infinite,  // ... in at least q rows
  Centered,  // the members' hit-row sets have the finite intersection property
};

bool is_o_diagonalized_by(const ArrayFamily& fam, const Diagonalizer& g,
                          ODiagVariant variant = ODiagVariant::Basic, int q = 1);

SearchOutcome<Diagonalizer> find_o_diagonalizer(const ArrayFamily& fam,
                                                ODiagVariant variant, int q,
                                                SearchBudget& budget);

// F_n = [g0(n), g1(n)] for rows in s, empty elsewhere. Requires
// g0(n) <= g1(n) < cols on s.
WindowSystem windows_from_bounds(const ArrayFamily& fam, const std::vector<int>& s,
                                 const GrowthFunction& g0, const GrowthFunction& g1);

// Singleton windows {g(n)} per assigned row (the specialization bridge
// between the windowed and the plain diagonalizer predicates).
WindowSystem singleton_windows(const Diagonalizer& g);

std::string windows_to_json(const WindowSystem& win);
WindowSystem windows_from_json(const std::string& text);
std::string diagonalizer_to_json(const Diagonalizer& g);

}  // namespace taulab
