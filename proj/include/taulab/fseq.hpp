#pragma once

// f-sequences: slot families below a bound f with f(n) >= 2, their
// o-diagonalization search, the finite everywhere-different covering number,
// the block norm `nor`, the slalom-avoiding chain construction, and the two
// constructive bridges to binary-array families (block embedding and window
// reduction).

#include <optional>
#include <string>
#include <vector>

#include "taulab/arrays.hpp"
#include "taulab/diag.hpp"
#include "taulab/search.hpp"

namespace taulab {

struct FSequence {
  std::vector<int> f;                   // alphabet sizes, each >= 2
  std::vector<std::vector<int>> slots;  // slots[n] subset of {0..f(n)-1}, sorted

  void validate() const;
};

struct FSeqFamily {
  std::vector<int> f;            // shared bound
  std::vector<FSequence> members;

  void validate() const;  // members carry exactly this f
};

struct BlockSpec {
  std::vector<int> bounds;     // t_0 = 0 < t_1 < ...
  std::vector<int> alphabets;  // one size per coordinate, length = bounds.back()

  void validate() const;
  int block_count() const { return static_cast<int>(bounds.size()) - 1; }
  int block_begin(int i) const { return bounds[i]; }
  int block_end(int i) const { return bounds[i + 1]; }
};

// Least g (lexicographically, g(n) < f(n)) such that every member's slot set
// is hit at some index, or nullopt after complete search.
std::optional<std::vector<int>> find_fseq_o_diag(const FSeqFamily& fam, SearchBudget& budget);

// The three conditions a family must satisfy to witness the f-sequence
// characteristic: nonempty slots at all but <= e indices; pairwise eventual
// slot containment (one direction, <= e exceptions); no o-diagonalization.
struct ThetaReport {
  bool eventually_nonempty = false;
  bool pairwise_comparable = false;
  bool not_o_diagonalizable = false;
  std::optional<std::vector<int>> diag_witness;  // set when condition 3 fails

  bool all() const {
    return eventually_nonempty && pairwise_comparable && not_o_diagonalizable;
  }
};
ThetaReport check_theta_witness(const FSeqFamily& fam, int e, SearchBudget& budget);

// Exact minimum size of a family F below f such that every g in prod f(n) is
// everywhere-different from some member of F. Complete search (iterative
// deepening on |F|).
int finite_E(const std::vector<int>& f, SearchBudget& budget);

// nor(Y) over block i: least |Z|, Z inside the block product, such that every
// tuple in Y differs everywhere from some member of Z. nor(empty) = 0.
int compute_nor(const std::vector<std::vector<int>>& Y, const BlockSpec& block,
                int block_index, SearchBudget& budget);

// sigma_0(n) = alphabet(n) \ S_0(n), sigma_{i+1}(n) = sigma_i(n) \ S_{i+1}(n).
// Requires |alphabet(n)| > sum_i |S_i(n)| for every n, which keeps the whole
// chain nonempty; the offending coordinate is named otherwise.
// Slaloms are given as slot lists over the same alphabets.
std::vector<std::vector<std::vector<int>>> avoid_slaloms(
    const std::vector<std::vector<std::vector<int>>>& slaloms,
    const std::vector<int>& alphabets);

// Block embedding of an f-sequence family into a binary-array family:
// row n shows the slots of the blocks in partition[n], laid out in the column
// ranges [fstar(k), fstar(k+1)) with fstar(k) = sum_{j<k} f(j). Embedded rows
// get tail 0: the formula places ones in finitely many columns only, so the
// finite model verifies diagonalization transfer rather than tau-family-hood.
struct EmbedResult {
  ArrayFamily family;                       // one array per member, same order
  std::vector<int> fstar;                   // size N+1 prefix sums
  std::vector<std::vector<int>> partition;  // row -> slot indices
  std::vector<int> f;

  // Witness transfer, array row choice -> slot choice (clipped into range).
  std::vector<int> to_slot_choice(const Diagonalizer& g) const;
  // Slot choice -> array row choice; exact inverse when every partition
  // block is a singleton.
  Diagonalizer to_row_choice(const std::vector<int>& h) const;
};
EmbedResult embed_fseq_as_tau_family(const FSeqFamily& fam,
                                     const std::vector<std::vector<int>>& partition,
                                     int cols = -1);

// Window reduction of an array family to an f-sequence family: nonempty
// windows enumerate as rows k_0 < k_1 < ..., f(n) = |F_{k_n}|, and member A
// maps to sigma_A(n) = positions within the window whose column carries a 1.
// Every nonempty window must have at least two elements (the f-sequence bound
// requires f(n) >= 2); smaller windows are rejected.
struct ReduceResult {
  GrowthFunction f;
  FSeqFamily family;                          // one member per input array
  std::vector<int> selected_rows;             // k_n
  std::vector<std::vector<int>> window_elems; // sorted columns per k_n
  int array_rows = 0;
  int array_cols = 0;

  // Lift an f-sequence o-diagonalization to an array diagonalizer
  // h(k_n) = F_{k_n}(g(n)); unassigned rows default to column 0.
  Diagonalizer lift(const std::vector<int>& g) const;
};
ReduceResult reduce_tau_to_fseq(const ArrayFamily& fam, const WindowSystem& win);

std::string fseq_family_to_json(const FSeqFamily& fam);
FSeqFamily fseq_family_from_json(const std::string& text);

}  // namespace taulab
