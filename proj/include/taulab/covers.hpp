#pragma once

// Finite-scale taxonomy of covers over a finite ground set, the Marczewski
// characteristic function, the point-to-array transform, and exhaustive
// selection-hypothesis checking (S1 / Sfin / Ufin) over finite cover
// sequences.
//
// Infinitary cover notions are finitized by a budget: "infinitely many
// members" means at least q, "all but finitely many" means all but at most e,
// and the omega-cover clause "every finite subset lies in one member" becomes
// "every subset of size at most k lies in one member" (a k-cover).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taulab/arrays.hpp"
#include "taulab/search.hpp"

namespace taulab {

struct CoverSystem {
  int ground_size = 0;                 // points are 0..ground_size-1
  std::vector<std::vector<int>> sets;  // enumeration order is significant

  void validate() const;  // ground_size >= 1, elements in range
  bool set_contains(int index, int point) const;
};

struct FiniteBudget {
  int q = 1;  // "infinitely many" threshold
  int e = 0;  // "all but finitely many" exception budget
  int k = 1;  // k-cover arity

  void validate() const;
};

struct CoverKindSet {
  bool is_cover = false;
  bool is_large = false;
  bool is_k_cover = false;
  bool is_tau = false;
  bool is_gamma = false;
};

enum class CoverKind { Cover, Large, KCover, Tau, Gamma };

CoverKindSet classify_cover(const CoverSystem& cs, const FiniteBudget& b);
bool has_kind(const CoverKindSet& kinds, CoverKind kind);
const char* kind_name(CoverKind kind);

// Membership bit sequence of one point through the enumerated sets.
std::vector<std::uint8_t> marczewski(const CoverSystem& cs, int point);

// One binary array per ground point: bits(n,m) = 1 iff the point lies in the
// m-th set of the n-th cover. Shorter covers are padded with empty sets (the
// padding is recorded); tails are 0 since a finite enumeration has no tail.
struct PsiImage {
  ArrayFamily family;                        // indexed by ground point
  std::vector<std::size_t> original_lengths; // per cover, before padding
  std::size_t padded_to = 0;
};
PsiImage psi_image(int ground_size, const std::vector<CoverSystem>& covers);

// Switch a psi image to gamma-cover semantics: set every tail bit to 1, and
// fail if some (point, cover) row would then have more than e zero bits,
// i.e. the cover was not a gamma-cover for that point at this budget.
void assert_gamma_tails(ArrayFamily& fam, int e);

enum class Principle { S1, Sfin, Ufin };

struct SelectionWitness {
  Principle principle = Principle::S1;
  // S1: one set index per cover.
  std::vector<int> picks;
  // Sfin / Ufin: one index set (size <= w) per cover.
  std::vector<std::vector<int>> finite_picks;
};

// The cover system a witness selects: for S1 the chosen sets, for Sfin the
// concatenation of the chosen subsets (cover order, ascending indices), for
// Ufin one union per cover.
CoverSystem selected_family(const SelectionWitness& w, const std::vector<CoverSystem>& covers);

// Complete, deterministic witness search.
//
// Preconditions (violations raise InputError, distinct from "no witness"):
// every cover classifies as source_kind under b; for Ufin additionally no
// cover contains a subcover of size <= w.
//
// Returns the lexicographically least witness whose selected family
// classifies as target_kind under b, or nullopt after a complete search.
std::optional<SelectionWitness> check_selection(Principle principle, CoverKind source_kind,
                                                CoverKind target_kind,
                                                const std::vector<CoverSystem>& covers,
                                                const FiniteBudget& b, int w,
                                                SearchBudget& budget);

std::string cover_to_json(const CoverSystem& cs);
CoverSystem cover_from_json(const std::string& text);
std::vector<CoverSystem> covers_from_json(const std::string& text, int* ground_out);
std::string selection_to_json(const SelectionWitness& w);

}  // namespace taulab
